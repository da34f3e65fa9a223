#include "hyperboloid/specfun/exact.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "hyperboloid/specfun/errors.hpp"

namespace hyperboloid::specfun {

bool is_integer(const Rational& q) {
  return mpz_divisible_p(q.get_num_mpz_t(), q.get_den_mpz_t()) != 0;
}

bool is_half_odd(const Rational& q) { return !is_integer(q) && is_integer(2 * q); }

bool is_half_integer(const Rational& q) { return is_integer(q) || is_half_odd(q); }

long to_long(const Rational& q) {
  if (!is_integer(q)) throw DomainError("expected an integer, got " + to_string(q));
  const mpz_class v = q.get_num() / q.get_den();
  if (!v.fits_slong_p()) throw DomainError("integer out of range: " + to_string(q));
  return v.get_si();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw DomainError("empty rational literal");
  try {
    const auto dot = s.find('.');
    if (dot != std::string::npos) {
      if (s.find_first_of("/eE") != std::string::npos) {
        throw DomainError("unsupported rational literal '" + s + "'");
      }
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      const auto frac_len = s.size() - dot - 1;
      if (digits.empty() || digits == "-" || digits == "+") {
        throw DomainError("malformed decimal '" + s + "'");
      }
      if (digits.front() == '+') digits.erase(0, 1);
      mpz_class num(digits, 10);
      mpz_class den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    if (s.front() == '+') s.erase(0, 1);
    Rational q(s, 10);
    if (q.get_den() == 0) throw DomainError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw DomainError("malformed rational literal '" + std::string(text) + "'");
  }
}

std::string to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_str(10);
}

ExactScalar::ExactScalar(Rational q, int power) : value(std::move(q)), sqrt_pi_power(power) {
  value.canonicalize();
  if (sgn(value) == 0) sqrt_pi_power = 0;
}

double ExactScalar::to_double() const {
  return value.get_d() * std::pow(std::numbers::pi, 0.5 * sqrt_pi_power);
}

std::string ExactScalar::to_string() const {
  const std::string q = specfun::to_string(value);
  if (sqrt_pi_power == 0) return q;
  return q + "*pi^(" + std::to_string(sqrt_pi_power) + "/2)";
}

ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
  return {x.value * y.value, x.sqrt_pi_power + y.sqrt_pi_power};
}

ExactScalar operator/(const ExactScalar& x, const ExactScalar& y) {
  if (y.is_zero()) throw DomainError("division by an exact zero");
  return {x.value / y.value, x.sqrt_pi_power - y.sqrt_pi_power};
}

bool operator==(const ExactScalar& x, const ExactScalar& y) {
  if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
  return x.value == y.value && x.sqrt_pi_power == y.sqrt_pi_power;
}

std::optional<ExactScalar> gamma_exact(const Rational& z_in) {
  Rational z(z_in);
  z.canonicalize();
  if (!is_half_integer(z)) {
    throw DomainError("gamma_exact needs 2z integral, got " + to_string(z));
  }
  if (is_integer(z) && sgn(z) <= 0) return std::nullopt;

  // Start from Gamma(1) = 1 or Gamma(1/2) = sqrt(pi) and walk with
  // Gamma(w + 1) = w Gamma(w) in either direction.
  Rational base = is_integer(z) ? Rational(1) : Rational(1, 2);
  const int power = is_integer(z) ? 0 : 1;
  Rational acc(1);
  if (z >= base) {
    for (Rational w = base; w < z; w += 1) acc *= w;
  } else {
    for (Rational w = z; w < base; w += 1) acc /= w;
  }
  return ExactScalar(acc, power);
}

}  // namespace hyperboloid::specfun
