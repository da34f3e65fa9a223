#include <array>
#include <cmath>
#include <numbers>

#include <boost/numeric/odeint.hpp>

#include "doctest.h"
#include "hyperboloid/eigen/radial.hpp"
#include "hyperboloid/specfun/errors.hpp"

using namespace hyperboloid;
using namespace hyperboloid::eigen;

namespace {

SpectralParam exact_lambda(int n, const char* lam) {
  return SpectralParam::exact(Geometry(n), specfun::parse_rational(lam));
}

double max_relative_residual(const RadialSolution& f, double lo, double hi, int points) {
  const auto& s = f.spectral();
  double worst = 0.0;
  auto eval = [&](double t) { return f(t); };
  for (int i = 0; i <= points; ++i) {
    const double t = lo + (hi - lo) * i / points;
    worst = std::max(worst, radial_ode_residual(s, f.j(), eval, t).relative());
  }
  return worst;
}

}  // namespace

TEST_CASE("x_of_t and log_cosh") {
  CHECK(x_of_t(0.0) == 0.5);
  CHECK(x_of_t(std::log(3.0) / 2) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(x_of_t(400.0) >= 0.0);
  CHECK(x_of_t(400.0) < 1e-300);
  CHECK(x_of_t(-400.0) == 1.0);
  CHECK(x_of_t(-1.3) + x_of_t(1.3) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(log_cosh(0.0) == doctest::Approx(0.0));
  CHECK(log_cosh(1.7) == doctest::Approx(std::log(std::cosh(1.7))).epsilon(1e-14));
  CHECK(log_cosh(800.0) == doctest::Approx(800.0 - std::numbers::ln2).epsilon(1e-15));
}

TEST_CASE("casimir eigenvalue") {
  CHECK(casimir_eigenvalue_exact(SpectralParam::from_offset(Geometry(6), 0)) == 0);
  CHECK(casimir_eigenvalue_exact(exact_lambda(5, "1")) == -3);
  const auto s = SpectralParam::floating(Geometry(4), Complex(0.0, 2.0));
  const Complex e = casimir_eigenvalue(s);
  CHECK(e.real() == doctest::Approx(-4.0 - 2.25));
  CHECK(e.imag() == 0.0);
}

TEST_CASE("phi_radial spot values") {
  const auto s = exact_lambda(5, "1");
  CHECK(std::abs(phi_radial(s, 1, 0.0)) < 1e-15);
  for (double t : {0.0, 1.0, 2.0}) {
    CHECK(std::abs(phi_radial(s, 0, t) - std::pow(std::cosh(t), -3.0)) < 1e-15);
  }
  for (int j : {0, 1, 3}) {
    const double t = 12.0;
    const Complex v = phi_radial(s, j, t) * std::pow(std::cosh(t), 3.0);
    CHECK(std::abs(v - 1.0) < 1e-8);
  }
  CHECK_THROWS_AS(phi_radial(exact_lambda(5, "-2"), 0, 0.3), DomainError);
}

TEST_CASE("closed form and series route agree") {
  for (int n : {3, 4, 5, 6, 8}) {
    const Geometry g(n);
    for (long k : {-1L, 0L, 1L, 2L}) {
      if (g.rho() + k <= 0) continue;
      const auto s = SpectralParam::from_offset(g, k);
      for (int j = 0; j <= 6; ++j) {
        const auto l = closed_form_degree(s, j);
        if (!l) continue;
        const auto closed = RadialSolution::make(s, j, Branch::PhiPlus);
        REQUIRE(closed.closed_form());
        const auto series = RadialSolution::make(s, j, Branch::PhiPlus, RadialSolution::Route::series);
        double scale = 0.0, diff = 0.0;
        for (double t = -6.0; t <= 6.0; t += 0.25) {
          scale = std::max(scale, std::abs(closed(t)));
          diff = std::max(diff, std::abs(closed(t) - series(t)));
        }
        INFO("n=" << n << " k=" << k << " j=" << j);
        CHECK(diff <= 1e-12 * scale);
      }
    }
  }
}

TEST_CASE("parity of closed-form solutions") {
  for (int n : {3, 4, 5, 7}) {
    const Geometry g(n);
    for (long k : {0L, 1L, 2L}) {
      const auto s = SpectralParam::from_offset(g, k);
      for (int j = 0; j <= 6; ++j) {
        const auto l = closed_form_degree(s, j);
        if (!l) continue;
        const double sign = *l % 2 == 0 ? 1.0 : -1.0;
        double scale = 0.0, diff = 0.0;
        for (double t = 0.0; t <= 8.0; t += 0.125) {
          scale = std::max(scale, std::abs(phi_radial(s, j, t)));
          diff = std::max(diff, std::abs(phi_radial(s, j, -t) - sign * phi_radial(s, j, t)));
        }
        CHECK(diff <= 1e-10 * scale);
        // The series route reaches negative t through the basis reflection.
        const auto series = RadialSolution::make(s, j, Branch::PhiPlus, RadialSolution::Route::series);
        CHECK(std::abs(series(-2.5) - sign * series(2.5)) <= 1e-10 * scale);
      }
    }
  }
}

TEST_CASE("ODE residual sweep over branches") {
  SUBCASE("constant at lambda = rho") {
    const auto s = SpectralParam::from_offset(Geometry(4), 0);
    CHECK(std::abs(radial_ode_residual(s, 0, [](double) { return Complex(1.0); }, 0.7).residual) < 1e-12);
  }
  SUBCASE("n=5 lambda=1 j=3") {
    const auto s = exact_lambda(5, "1");
    const auto f = RadialSolution::make(s, 3, Branch::PhiPlus);
    CHECK(max_relative_residual(f, -10.0, 10.0, 80) < 1e-8);
    auto eval = [&](double t) { return f(t); };
    for (double t = -10.0; t <= 10.0; t += 0.25) {
      CHECK(std::abs(radial_ode_residual(s, 3, eval, t).residual) < 1e-8 * std::max(std::abs(f(t)), 1.0));
    }
  }
  SUBCASE("exact and non-integer parameters") {
    for (int n : {3, 4, 5, 6}) {
      for (const char* lam : {"1/4", "1/2", "17/10", "1", "2", "5/2"}) {
        const auto s = exact_lambda(n, lam);
        for (int j : {0, 1, 2, 4}) {
          for (Branch b : {Branch::PhiPlus, Branch::PhiReflected}) {
            const auto f = RadialSolution::make(s, j, b);
            INFO("n=" << n << " lambda=" << lam << " j=" << j << " branch=" << to_string(b));
            CHECK(max_relative_residual(f, -10.0, 10.0, 40) < 1e-8);
          }
          if (!s.is_positive_integer()) {
            const auto f = RadialSolution::make(s, j, Branch::PhiNegLambda);
            CHECK(max_relative_residual(f, -10.0, 10.0, 40) < 1e-8);
          } else {
            const auto f = RadialSolution::make(s, j, Branch::SecondKindLog);
            CHECK(max_relative_residual(f, 0.5, 10.0, 40) < 1e-8);
          }
        }
      }
    }
  }
  SUBCASE("complex lambda") {
    const auto s = SpectralParam::floating(Geometry(5), Complex(0.8, 1.3));
    for (int j : {0, 2}) {
      for (Branch b : {Branch::PhiPlus, Branch::PhiReflected, Branch::PhiNegLambda}) {
        CHECK(max_relative_residual(RadialSolution::make(s, j, b), -8.0, 8.0, 32) < 1e-8);
      }
    }
  }
  SUBCASE("exact jets agree with differences") {
    const auto s = exact_lambda(6, "3/2");
    const auto f = RadialSolution::make(s, 1, Branch::PhiReflected);
    for (double t : {-3.0, -0.2, 0.0, 1.1, 4.0}) {
      CHECK(radial_ode_residual(s, 1, f.jet(t), t).relative() < 1e-12);
    }
  }
  SUBCASE("branch preconditions") {
    CHECK_THROWS_AS(RadialSolution::make(exact_lambda(5, "2"), 0, Branch::PhiNegLambda), DomainError);
    CHECK_THROWS_AS(RadialSolution::make(exact_lambda(5, "3/2"), 0, Branch::SecondKindLog), DomainError);
    CHECK_THROWS_AS(RadialSolution::make(exact_lambda(5, "1"), -1, Branch::PhiPlus), DomainError);
  }
}

TEST_CASE("transformed equation") {
  for (const char* lam : {"1/2", "2", "7/3"}) {
    const auto s = exact_lambda(5, lam);
    for (int j : {0, 3}) {
      auto phi = [&](double t) { return phi_radial(s, j, t); };
      for (double t = -5.0; t <= 5.0; t += 0.5) {
        CHECK(transformed_ode_residual(s, j, phi, t).relative() < 1e-8);
      }
    }
  }
}

TEST_CASE("phi and its reflection are independent off the degenerate set") {
  for (int n : {3, 4, 5}) {
    for (const char* lam : {"1/4", "1", "5/2"}) {
      const auto s = exact_lambda(n, lam);
      for (int j = 0; j <= 4; ++j) {
        const auto k = s.integer_offset();
        const bool degenerate = k && j - *k >= 1;
        const auto f = RadialSolution::make(s, j, Branch::PhiPlus);
        const auto g = RadialSolution::make(s, j, Branch::PhiReflected);
        const double w = std::abs(wronskian(f.jet(0.0), g.jet(0.0)));
        INFO("n=" << n << " lambda=" << lam << " j=" << j);
        if (degenerate) {
          CHECK(w < 1e-12);
        } else {
          CHECK(w > 1e-6);
        }
      }
    }
  }
}

TEST_CASE("asymptotic constant") {
  SUBCASE("exact half-integer value") {
    const auto a = asymptotic_constant_estimate(exact_lambda(4, "1"), 0, 12.0);
    REQUIRE(a.exact_value);
    CHECK(a.exact_value->value == specfun::Rational(4, 3));
    CHECK(a.exact_value->sqrt_pi_power == -2);
    CHECK(a.exact.real() == doctest::Approx(4.0 / (3.0 * std::numbers::pi)).epsilon(1e-14));
    CHECK(std::abs(a.estimate - a.exact) < 1e-5 * std::abs(a.exact));
  }
  SUBCASE("vanishes on the degenerate set") {
    const auto s = exact_lambda(5, "1");
    for (int j : {1, 2, 3}) {
      const auto a = asymptotic_constant_estimate(s, j, 12.0);
      CHECK(a.exact == Complex(0.0));
      CHECK(std::abs(a.estimate) < 1e-5);
    }
  }
  SUBCASE("sweep") {
    for (int n : {3, 4, 5, 6, 7}) {
      for (const char* lam : {"1", "3/2", "2", "13/5", "3"}) {
        for (int j : {0, 1, 2, 3}) {
          const auto a = asymptotic_constant_estimate(exact_lambda(n, lam), j, 12.0);
          INFO("n=" << n << " lambda=" << lam << " j=" << j);
          CHECK(std::abs(a.estimate - a.exact) < 1e-5 * std::max(std::abs(a.exact), 1e-30) + 1e-9);
        }
      }
    }
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(asymptotic_constant_estimate(exact_lambda(5, "1"), 0, 5.0), DomainError);
    CHECK_THROWS_AS(asymptotic_constant_estimate(exact_lambda(5, "-1/2"), 0, 12.0), DomainError);
  }
}

TEST_CASE("second solutions") {
  SUBCASE("n even approaches cosh^(rho-lambda)") {
    for (int n : {4, 6}) {
      for (long k : {0L, 1L, 2L}) {
        const auto s = SpectralParam::from_offset(Geometry(n), k);
        for (int j : {0, 1, 3}) {
          const Complex v = second_solution_radial(s, j, 12.0) *
                            std::exp((s.geometry().rho_value() - s.lambda()) * log_cosh(12.0));
          CHECK(std::abs(v - 1.0) < 1e-8);
        }
      }
    }
  }
  SUBCASE("n odd log-type growth") {
    for (int n : {3, 5, 7}) {
      for (long k : {-1L, 0L, 1L}) {
        const auto s = SpectralParam::from_offset(Geometry(n), k);
        if (!(s.lambda().real() > 0.0)) continue;
        const double lam = s.lambda().real();
        const double mu = lam + s.geometry().rho_value();
        for (int j : {0, 2}) {
          double lo = 1e300, hi = 0.0;
          for (double t = 5.0; t <= 12.0; t += 0.5) {
            const double log_growth = mu * log_cosh(t) - lam * (2.0 * t + std::log1p(std::exp(-2.0 * t)));
            const double v = std::abs(second_solution_radial(s, j, t)) * std::exp(log_growth);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
          }
          CHECK(lo > 1e-3);
          CHECK(hi < 1e3);
        }
      }
    }
  }
  SUBCASE("Wronskian against phi") {
    for (int n : {4, 5, 6, 7}) {
      const auto s = SpectralParam::from_offset(Geometry(n), 0);
      for (int j = 0; j <= 4; ++j) {
        const auto f = RadialSolution::make(s, j, Branch::PhiPlus);
        const auto g = second_solution(s, j);
        CHECK(std::abs(wronskian(f.jet(1.0), g.jet(1.0))) > 1e-12);
      }
    }
  }
  SUBCASE("n=5 lambda=1 j=2 residual") {
    const auto g = second_solution(exact_lambda(5, "1"), 2);
    CHECK(max_relative_residual(g, 0.5, 5.0, 45) < 1e-8);
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(second_solution(exact_lambda(5, "3/2"), 0), DomainError);
    CHECK_THROWS_AS(second_solution(exact_lambda(6, "-1/2"), 0), DomainError);
  }
}

TEST_CASE("initial-value solutions follow an independent integrator") {
  using State = std::array<double, 2>;
  const auto s = exact_lambda(5, "3/2");
  const int j = 2;
  const double rho = 2.0, e = casimir_eigenvalue(s).real();
  const auto sol = RadialSolution::from_initial_values(s, j, 0.3, -0.7);
  auto rhs = [&](const State& y, State& dy, double t) {
    const double c = std::cosh(t);
    dy[0] = y[1];
    dy[1] = e * y[0] - 2.0 * rho * std::tanh(t) * y[1] - j * (j + 3.0) / (c * c) * y[0];
  };
  namespace ode = boost::numeric::odeint;
  for (double sign : {1.0, -1.0}) {
    State y{0.3, -0.7};
    const double t_end = 3.0 * sign;
    ode::integrate_adaptive(ode::make_controlled<ode::runge_kutta_fehlberg78<State>>(1e-13, 1e-13),
                            rhs, y, 0.0, t_end, 0.01 * sign);
    const Jet v = sol.jet(t_end);
    CHECK(std::abs(v.value - y[0]) < 1e-9 * std::max(1.0, std::abs(y[0])));
    CHECK(std::abs(v.d1 - y[1]) < 1e-9 * std::max(1.0, std::abs(y[1])));
  }
  const Jet at0 = sol.jet(0.0);
  CHECK(std::abs(at0.value - 0.3) < 1e-13);
  CHECK(std::abs(at0.d1 + 0.7) < 1e-13);
}
