#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "hyperboloid/specfun/exact.hpp"

namespace hyperboloid::specfun {

/// Dense univariate polynomial with rational coefficients, lowest degree first.
/// Trailing zero coefficients are trimmed, so the zero polynomial is empty.
class RationalPolynomial {
public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs);
  RationalPolynomial(std::initializer_list<Rational> coeffs);

  static RationalPolynomial constant(const Rational& c);
  /// The monomial z.
  static RationalPolynomial identity();

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of z^k, zero beyond the degree.
  Rational coefficient(std::size_t k) const;
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Rational operator()(const Rational& z) const;
  double evaluate(double z) const;

  RationalPolynomial derivative() const;
  /// p(-z).
  RationalPolynomial reflected() const;

  RationalPolynomial& operator+=(const RationalPolynomial& other);
  RationalPolynomial& operator-=(const RationalPolynomial& other);
  RationalPolynomial& operator*=(const Rational& c);

  friend RationalPolynomial operator+(RationalPolynomial x, const RationalPolynomial& y) {
    return x += y;
  }
  friend RationalPolynomial operator-(RationalPolynomial x, const RationalPolynomial& y) {
    return x -= y;
  }
  friend RationalPolynomial operator*(RationalPolynomial x, const Rational& c) { return x *= c; }
  friend RationalPolynomial operator*(const Rational& c, RationalPolynomial x) { return x *= c; }
  friend RationalPolynomial operator*(const RationalPolynomial& x, const RationalPolynomial& y);
  friend bool operator==(const RationalPolynomial& x, const RationalPolynomial& y) {
    return x.coeffs_ == y.coeffs_;
  }

  std::string to_string() const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace hyperboloid::specfun
