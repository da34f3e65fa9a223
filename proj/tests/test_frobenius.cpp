#include <cmath>

#include "doctest.h"
#include "hyperboloid/specfun/errors.hpp"
#include "hyperboloid/specfun/frobenius.hpp"
#include "hyperboloid/specfun/hypergeometric.hpp"

using namespace hyperboloid;
using namespace hyperboloid::specfun;

namespace {

// Parameters of the radial problem: a = lam+rho+j, b = lam-rho+1-j, c = 1+lam.
HypergeometricParams radial_params(double lam, double rho, int j) {
  return {lam + rho + j, lam - rho + 1.0 - j, 1.0 + lam};
}

double residual_scale(const HypergeometricParams& p, double x, const SeriesJet& w) {
  return std::abs(x * (1.0 - x) * w.d2) + std::abs((p.c - (p.a + p.b + 1.0) * x) * w.d1) +
         std::abs(p.a * p.b * w.value);
}

}  // namespace

TEST_CASE("Frobenius coefficients are normalized with a log term in the square-integrable regime") {
  // n = 5 (rho = 2) and n = 7 (rho = 3); j in D_lambda means j >= lam - rho + 1.
  for (auto [lam, rho] : {std::pair{1.0, 2.0}, std::pair{3.0, 2.0}, std::pair{2.0, 3.0}, std::pair{5.0, 3.0}}) {
    for (int j = std::max(0, static_cast<int>(lam - rho + 1.0)); j <= 6; ++j) {
      const auto sol = frobenius_second_solution(radial_params(lam, rho, j), 60);
      CHECK(sol.a_coeffs.front() == Complex(1.0));
      CHECK(sol.b_coeffs.front() != Complex(0.0));
      CHECK(sol.has_log_term());
      CHECK(sol.lambda_int == static_cast<long>(lam));
    }
  }
}

TEST_CASE("Frobenius b_0 matches the closed form (a-lam)_lam (b-lam)_lam (-1)^(lam-1) / (lam! (lam-1)!)") {
  const auto p = radial_params(3.0, 2.0, 4);
  const auto sol = frobenius_second_solution(p, 10);
  const double lam = 3.0;
  auto poch = [](double a, int m) {
    double acc = 1.0;
    for (int k = 0; k < m; ++k) acc *= a + k;
    return acc;
  };
  const double expected = poch(p.a.real() - lam, 3) * poch(p.b.real() - lam, 3) * 1.0 / (6.0 * 2.0);
  CHECK(sol.b_coeffs.front().real() == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("Frobenius solution satisfies the Euler equation") {
  for (auto [lam, rho] : {std::pair{1.0, 2.0}, std::pair{3.0, 2.0}, std::pair{2.0, 3.0}, std::pair{4.0, 1.0}}) {
    for (int j = 0; j <= 5; ++j) {
      const auto p = radial_params(lam, rho, j);
      const auto sol = frobenius_second_solution(p, 60);
      const auto w = sol.jet(0.25);
      const Complex res = hypergeometric_residual(p, 0.25, w);
      CHECK(std::abs(res) < 1e-8 * residual_scale(p, 0.25, w));

      // Linear independence from F: nonzero Wronskian.
      const auto f = hyp2f1_jet(p, 0.25);
      const Complex wronskian = f.value * w.d1 - f.d1 * w.value;
      CHECK(std::abs(wronskian) > 1e-8);
    }
  }
}

TEST_CASE("Frobenius residual tightens with truncation order at x = 1/2") {
  const auto p = radial_params(2.0, 3.0, 3);
  double previous = 1e300;
  for (int order : {20, 40, 80, 160}) {
    const auto sol = frobenius_second_solution(p, order);
    const auto w = sol.jet(0.5);
    const double rel = std::abs(hypergeometric_residual(p, 0.5, w)) / residual_scale(p, 0.5, w);
    CHECK(rel <= previous);
    previous = rel;
  }
  CHECK(previous < 1e-13);
}

TEST_CASE("Frobenius without log term when the Laurent part is a solution") {
  // n = 5, lam = 3: j = 1 is outside D_lambda and b_0 vanishes.
  const auto p = radial_params(3.0, 2.0, 1);
  const auto sol = frobenius_second_solution(p, 40);
  CHECK_FALSE(sol.has_log_term());
  const auto w = sol.jet(0.3);
  CHECK(std::abs(hypergeometric_residual(p, 0.3, w)) < 1e-12 * residual_scale(p, 0.3, w));
}

TEST_CASE("Frobenius domain errors") {
  CHECK_THROWS_AS(frobenius_second_solution(radial_params(1.0, 2.0, 0), 0), DomainError);
  CHECK_THROWS_AS(frobenius_second_solution({1.0, 2.0, Complex(2.5)}, 10), DomainError);
  CHECK_THROWS_AS(frobenius_second_solution({1.0, 2.0, Complex(1.0)}, 10), DomainError);
  const auto sol = frobenius_second_solution(radial_params(1.0, 2.0, 0), 10);
  CHECK_THROWS_AS(sol.evaluate(0.0), DomainError);
  CHECK_THROWS_AS(sol.evaluate(1.0), DomainError);
}
