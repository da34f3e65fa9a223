#pragma once

#include "hyperboloid/eigen/geometry.hpp"

namespace hyperboloid::eigen {

/// Zonal spherical harmonic of degree j on S^(n-1) as a function of s = cos(theta):
/// h_j(s) = P_j^(nu,nu)(s) / P_j^(nu,nu)(1), nu = (n-3)/2.
class ZonalHarmonic {
public:
  ZonalHarmonic(const Geometry& g, int j);

  const Geometry& geometry() const { return geometry_; }
  int degree() const { return j_; }

  /// Throws DomainError for |s| > 1.
  double operator()(double s) const;
  /// d/ds and d^2/ds^2.
  double derivative(double s) const;
  double second_derivative(double s) const;
  /// -j(j+n-2).
  int eigenvalue() const { return -j_ * (j_ + geometry_.n() - 2); }

private:
  Geometry geometry_;
  int j_;
  double nu_;
  double norm_;
};

double zonal_harmonic(const Geometry& g, int j, double s);

/// f'' + (n-2) cot(theta) f' for f(theta) = h_j(cos theta), by central differences of step h.
double angular_laplacian(const ZonalHarmonic& h, double theta, double step = 1e-4);

}  // namespace hyperboloid::eigen
