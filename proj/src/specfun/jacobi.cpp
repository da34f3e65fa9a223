#include "hyperboloid/specfun/jacobi.hpp"

#include "hyperboloid/specfun/errors.hpp"
#include "hyperboloid/specfun/gamma.hpp"
#include "hyperboloid/specfun/hypergeometric.hpp"

namespace hyperboloid::specfun {

RationalPolynomial jacobi_polynomial(unsigned l, const Rational& alpha) {
  const long ll = static_cast<long>(l);
  const ExactHypergeometricParams p{ll + 2 * alpha + 1, Rational(-ll), alpha + 1};
  if (is_integer(p.c) && sgn(p.c) <= 0 && ll >= -to_long(p.c)) {
    throw DomainError("jacobi_polynomial: alpha+1 in -N0 hits a pole before termination");
  }
  // (1-z)/2 as a polynomial in z.
  const RationalPolynomial u{Rational(1, 2), Rational(-1, 2)};
  RationalPolynomial power = RationalPolynomial::constant(1);
  RationalPolynomial sum;
  Rational term(1);
  for (long m = 0; m <= ll; ++m) {
    sum += term * power;
    term *= (p.a + m) * (p.b + m) / ((p.c + m) * (m + 1));
    power = power * u;
  }
  Rational norm(1);
  for (long k = 1; k <= ll; ++k) norm *= (alpha + k) / k;
  return sum * norm;
}

Rational jacobi_poly(unsigned l, const Rational& alpha, const Rational& z) {
  return jacobi_polynomial(l, alpha)(z);
}

double jacobi_poly(unsigned l, double alpha, double z) {
  if (l == 0) return 1.0;
  double prev = 1.0;
  double cur = (alpha + 1.0) * z;
  for (unsigned k = 1; k < l; ++k) {
    const double kd = k;
    const double denom = (kd + 1.0) * (kd + 2.0 * alpha + 1.0);
    if (denom == 0.0) {
      // Degenerate recurrence; fall back to the terminating Gauss series.
      const HypergeometricParams p{Complex(l + 2.0 * alpha + 1.0), Complex(-static_cast<double>(l)),
                                   Complex(alpha + 1.0)};
      return (pochhammer(alpha + 1.0, l) / pochhammer(1.0, l)) *
             hyp2f1(p, 0.5 * (1.0 - z)).value.real();
    }
    const double next = ((kd + alpha + 1.0) * (2.0 * kd + 2.0 * alpha + 1.0) * z * cur -
                         (kd + alpha) * (kd + alpha + 1.0) * prev) /
                        denom;
    prev = cur;
    cur = next;
  }
  return cur;
}

JacobiJet jacobi_poly_jet(unsigned l, double alpha, double z) {
  JacobiJet out{jacobi_poly(l, alpha, z), 0.0, 0.0};
  if (l >= 1) out.d1 = 0.5 * (l + 2.0 * alpha + 1.0) * jacobi_poly(l - 1, alpha + 1.0, z);
  if (l >= 2) {
    out.d2 = 0.25 * (l + 2.0 * alpha + 1.0) * (l + 2.0 * alpha + 2.0) *
             jacobi_poly(l - 2, alpha + 2.0, z);
  }
  return out;
}

DerivativeIdentity jacobi_derivative_identity(unsigned l, const Rational& alpha) {
  const long ll = static_cast<long>(l);
  return {ll + 2 * alpha + 1, Rational((ll + 1) * (ll + 2 * alpha + 1) / (ll + alpha + 1))};
}

ThreeTermRecurrence jacobi_three_term_recurrence(unsigned l, const Rational& alpha) {
  const long ll = static_cast<long>(l);
  return {Rational((ll + alpha + 1) * (2 * ll + 2 * alpha + 1)),
          Rational((ll + alpha) * (ll + alpha + 1)), Rational((ll + 1) * (ll + 2 * alpha + 1))};
}

}  // namespace hyperboloid::specfun
