#include "hyperboloid/eigen/zonal.hpp"

#include <cmath>

#include "hyperboloid/specfun/errors.hpp"
#include "hyperboloid/specfun/jacobi.hpp"

namespace hyperboloid::eigen {

ZonalHarmonic::ZonalHarmonic(const Geometry& g, int j)
    : geometry_(g), j_(j), nu_(0.5 * (g.n() - 3)) {
  if (j < 0) throw DomainError("zonal harmonic degree must be non-negative");
  norm_ = specfun::jacobi_poly(static_cast<unsigned>(j), nu_, 1.0);
}

namespace {
void check_range(double s) {
  if (!(std::abs(s) <= 1.0)) throw DomainError("zonal harmonic argument outside [-1, 1]");
}
}  // namespace

double ZonalHarmonic::operator()(double s) const {
  check_range(s);
  return specfun::jacobi_poly(static_cast<unsigned>(j_), nu_, s) / norm_;
}

double ZonalHarmonic::derivative(double s) const {
  check_range(s);
  return specfun::jacobi_poly_jet(static_cast<unsigned>(j_), nu_, s).d1 / norm_;
}

double ZonalHarmonic::second_derivative(double s) const {
  check_range(s);
  return specfun::jacobi_poly_jet(static_cast<unsigned>(j_), nu_, s).d2 / norm_;
}

double zonal_harmonic(const Geometry& g, int j, double s) { return ZonalHarmonic(g, j)(s); }

double angular_laplacian(const ZonalHarmonic& h, double theta, double step) {
  auto f = [&](double u) { return h(std::cos(u)); };
  const double fm2 = f(theta - 2 * step), fm1 = f(theta - step), f0 = f(theta);
  const double fp1 = f(theta + step), fp2 = f(theta + 2 * step);
  const double d1 = (fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * step);
  const double d2 = (-fm2 + 16 * fm1 - 30 * f0 + 16 * fp1 - fp2) / (12 * step * step);
  return d2 + (h.geometry().n() - 2) * d1 / std::tan(theta);
}

}  // namespace hyperboloid::eigen
