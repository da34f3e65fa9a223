#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hyperboloid/specfun/errors.hpp"
#include "hyperboloid/specfun/exact.hpp"
#include "hyperboloid/specfun/gamma.hpp"
#include "hyperboloid/specfun/polynomial.hpp"

using namespace hyperboloid;
using namespace hyperboloid::specfun;

TEST_CASE("parse_rational accepts fractions, integers and decimals") {
  CHECK(parse_rational("5/2") == Rational(5, 2));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("-2.25") == Rational(-9, 4));
  CHECK(parse_rational("+0.5") == Rational(1, 2));
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK_THROWS_AS(parse_rational("abc"), DomainError);
  CHECK_THROWS_AS(parse_rational(""), DomainError);
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(Rational(3, 7), 0) == Rational(1));
  CHECK(pochhammer(Rational(1), 4) == Rational(24));
  CHECK(pochhammer(Rational(1, 2), 2) == Rational(3, 4));
  CHECK(pochhammer(Rational(-2), 3) == Rational(0));
  CHECK(std::abs(pochhammer(Complex(1.0), 4) - Complex(24.0)) == 0.0);
}

TEST_CASE("gamma_exact at integers and half-integers") {
  CHECK(*gamma_exact(Rational(4)) == ExactScalar(6));
  CHECK(*gamma_exact(Rational(1, 2)) == ExactScalar(1, 1));
  CHECK_FALSE(gamma_exact(Rational(0)).has_value());
  CHECK_FALSE(gamma_exact(Rational(-3)).has_value());
  CHECK(*gamma_exact(Rational(5, 2)) == ExactScalar(Rational(3, 4), 1));
  CHECK(*gamma_exact(Rational(-1, 2)) == ExactScalar(Rational(-2), 1));
  CHECK(*gamma_exact(Rational(-3, 2)) == ExactScalar(Rational(4, 3), 1));
  CHECK_THROWS_AS(gamma_exact(Rational(1, 3)), DomainError);

  // Agreement with the floating-point Gamma on a half-integer grid.
  for (int twice = -9; twice <= 40; ++twice) {
    const Rational z(twice, 2);
    const auto g = gamma_exact(z);
    if (!g) {
      CHECK(gamma_float(Complex(z.get_d())).pole());
      continue;
    }
    CHECK(g->to_double() == doctest::Approx(std::tgamma(z.get_d())).epsilon(1e-13));
  }
}

TEST_CASE("ExactScalar arithmetic tracks powers of sqrt(pi)") {
  const ExactScalar half = *gamma_exact(Rational(1, 2));
  const ExactScalar pi = half * half;
  CHECK(pi.sqrt_pi_power == 2);
  CHECK(pi.to_double() == doctest::Approx(std::numbers::pi).epsilon(1e-15));
  const ExactScalar ratio = *gamma_exact(Rational(5, 2)) / half;
  CHECK(ratio == ExactScalar(Rational(3, 4)));
  CHECK(ExactScalar(0, 1) == ExactScalar(0));
  CHECK_THROWS_AS(half / ExactScalar(0), DomainError);
  CHECK(ExactScalar(Rational(4, 3), -2).to_string() == "4/3*pi^(-2/2)");
}

TEST_CASE("gamma_float") {
  CHECK(gamma_float(Complex(4.0)).value.real() == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(gamma_float(Complex(0.5)).value.real() ==
        doctest::Approx(1.7724538509055160273).epsilon(1e-14));
  CHECK(gamma_float(Complex(-3.0)).pole());
  CHECK(gamma_float(Complex(0.0)).pole());
  CHECK(gamma_float(Complex(171.0)).status == GammaResult::Status::overflow);
  CHECK(gamma_float(Complex(170.0)).ok());

  // Recurrence Gamma(z+1) = z Gamma(z) and the reflection formula off the real axis.
  for (double re = -4.3; re < 30.0; re += 1.7) {
    for (double im : {0.3, -1.1, 2.5}) {
      const Complex z(re, im);
      const Complex lhs = gamma_float(z + 1.0).value;
      const Complex rhs = z * gamma_float(z).value;
      CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(lhs));
      const Complex refl = gamma_float(z).value * gamma_float(1.0 - z).value *
                           std::sin(std::numbers::pi * z);
      CHECK(std::abs(refl - std::numbers::pi) <= 1e-12 * std::numbers::pi);
    }
  }
  // Known complex value: |Gamma(1/2 + iy)|^2 = pi / cosh(pi y).
  for (double y : {0.5, 1.0, 3.0}) {
    const double mod2 = std::norm(gamma_float(Complex(0.5, y)).value);
    CHECK(mod2 == doctest::Approx(std::numbers::pi / std::cosh(std::numbers::pi * y)).epsilon(1e-12));
  }
}

TEST_CASE("RationalPolynomial algebra") {
  const RationalPolynomial p{Rational(1), Rational(2), Rational(3)};
  const RationalPolynomial q{Rational(-1), Rational(1)};
  CHECK((p * q) == RationalPolynomial{Rational(-1), Rational(-1), Rational(-1), Rational(3)});
  CHECK(p.derivative() == RationalPolynomial{Rational(2), Rational(6)});
  CHECK(p.reflected() == RationalPolynomial{Rational(1), Rational(-2), Rational(3)});
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
  CHECK(p(Rational(1, 2)) == Rational(11, 4));
  CHECK(p.evaluate(0.5) == doctest::Approx(2.75));
}
