#pragma once

#include "hyperboloid/specfun/exact.hpp"
#include "hyperboloid/specfun/polynomial.hpp"

namespace hyperboloid::specfun {

/// Equal-index Jacobi polynomial P_l^(alpha,alpha) in the monomial basis,
/// built from ((alpha+1)_l / l!) F(l+2alpha+1, -l; alpha+1; (1-z)/2).
/// Throws DomainError when alpha+1 is a non-positive integer that the
/// terminating series does not avoid.
RationalPolynomial jacobi_polynomial(unsigned l, const Rational& alpha);

/// Exact value P_l^(alpha,alpha)(z).
Rational jacobi_poly(unsigned l, const Rational& alpha, const Rational& z);

/// P_l^(alpha,alpha)(z) and its first two derivatives in double precision.
struct JacobiJet {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

/// Floating-point value via the three-term recurrence.
double jacobi_poly(unsigned l, double alpha, double z);
/// Value and derivatives using d/dz P_l^(a,a) = ((l+2a+1)/2) P_(l-1)^(a+1,a+1).
JacobiJet jacobi_poly_jet(unsigned l, double alpha, double z);

/// Coefficients of (1-z^2) P_l' = c_x z P_l - c_next P_(l+1).
struct DerivativeIdentity {
  Rational c_x;
  Rational c_next;
};
DerivativeIdentity jacobi_derivative_identity(unsigned l, const Rational& alpha);

/// Coefficients of c_x z P_l = c_prev P_(l-1) + c_next P_(l+1).
struct ThreeTermRecurrence {
  Rational c_x;
  Rational c_prev;
  Rational c_next;
};
ThreeTermRecurrence jacobi_three_term_recurrence(unsigned l, const Rational& alpha);

}  // namespace hyperboloid::specfun
