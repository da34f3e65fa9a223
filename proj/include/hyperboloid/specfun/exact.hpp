#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hyperboloid::specfun {

using Rational = mpq_class;
using Complex = std::complex<double>;

bool is_integer(const Rational& q);
/// True for q in 1/2 + Z.
bool is_half_odd(const Rational& q);
/// True when 2q is an integer.
bool is_half_integer(const Rational& q);
/// Integer value of q; throws DomainError if q is not an integer or does not fit.
long to_long(const Rational& q);

/// Parses "p", "p/q", or a terminating decimal such as "-2.25" into lowest terms.
Rational parse_rational(std::string_view text);
/// "p/q" with q > 0, or "p" when q == 1.
std::string to_string(const Rational& q);

/// The number value * pi^(sqrt_pi_power / 2).
///
/// Gamma at half-odd integers carries one factor of sqrt(pi); products and
/// quotients of such values accumulate the power, so it is kept as an
/// integer rather than folded into an irrational coefficient.
struct ExactScalar {
  Rational value{0};
  int sqrt_pi_power = 0;

  ExactScalar() = default;
  ExactScalar(Rational q, int power = 0);

  bool is_zero() const { return sgn(value) == 0; }
  double to_double() const;
  std::string to_string() const;

  friend ExactScalar operator*(const ExactScalar& x, const ExactScalar& y);
  /// Throws DomainError when y is zero.
  friend ExactScalar operator/(const ExactScalar& x, const ExactScalar& y);
  friend bool operator==(const ExactScalar& x, const ExactScalar& y);
};

/// Gamma(z) for 2z in Z. Returns nullopt at the poles z in {0, -1, -2, ...}.
std::optional<ExactScalar> gamma_exact(const Rational& z);

}  // namespace hyperboloid::specfun
