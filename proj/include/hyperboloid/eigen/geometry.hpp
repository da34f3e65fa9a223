#pragma once

#include <optional>
#include <string>
#include <variant>

#include "hyperboloid/specfun/exact.hpp"

namespace hyperboloid::eigen {

using specfun::Complex;
using specfun::Rational;

/// The hyperboloid of dimension n >= 3 and its half-sum rho = (n-1)/2.
class Geometry {
public:
  /// Throws DomainError for n < 3.
  explicit Geometry(int n);

  int n() const { return n_; }
  const Rational& rho() const { return rho_; }
  double rho_value() const { return rho_.get_d(); }

  friend bool operator==(const Geometry& x, const Geometry& y) { return x.n_ == y.n_; }

private:
  int n_;
  Rational rho_;
};

/// Eigenvalue parameter lambda of Delta f = (lambda^2 - rho^2) f.
///
/// Rational values are kept exact; everything else is a complex double.
/// integer_offset() is present exactly when lambda - rho is an integer.
class SpectralParam {
public:
  /// lambda = rho + offset.
  static SpectralParam from_offset(const Geometry& g, const Rational& offset);
  static SpectralParam exact(const Geometry& g, const Rational& lambda);
  /// Purely floating parameter; never reports an integer offset.
  static SpectralParam floating(const Geometry& g, Complex lambda);

  const Geometry& geometry() const { return geometry_; }
  bool is_exact() const { return std::holds_alternative<Rational>(lambda_); }
  /// Throws DomainError when the parameter is not exact.
  const Rational& exact_lambda() const;
  Complex lambda() const;
  std::optional<long> integer_offset() const { return offset_; }
  /// lambda in {1, 2, 3, ...}, decided exactly or from an exactly integral double.
  bool is_positive_integer() const;

  std::string to_string() const;

private:
  SpectralParam(Geometry g, std::variant<Rational, Complex> lambda);

  Geometry geometry_;
  std::variant<Rational, Complex> lambda_;
  std::optional<long> offset_;
};

}  // namespace hyperboloid::eigen
