#include "hyperboloid/specfun/hypergeometric.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "hyperboloid/specfun/errors.hpp"
#include "hyperboloid/specfun/gamma.hpp"

namespace hyperboloid::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

std::optional<std::size_t> nonpositive_degree(Complex z) {
  if (!is_nonpositive_integer(z)) return std::nullopt;
  return static_cast<std::size_t>(-z.real());
}

std::string describe(const HypergeometricParams& p) {
  auto f = [](Complex z) {
    return z.imag() == 0.0 ? std::to_string(z.real())
                           : "(" + std::to_string(z.real()) + "," + std::to_string(z.imag()) + ")";
  };
  return "a=" + f(p.a) + " b=" + f(p.b) + " c=" + f(p.c);
}

/// Validates c and returns the termination degree, if any.
std::optional<std::size_t> check_parameters(const HypergeometricParams& p) {
  const auto degree = is_terminating(p);
  if (const auto pole = nonpositive_degree(p.c)) {
    // (c)_m vanishes from m = -c + 1 on; termination must come first.
    if (!degree || *degree >= *pole) {
      throw DomainError("hyp2f1: c in -N0 without earlier termination (" + describe(p) + ")");
    }
  }
  return degree;
}

/// Sums F and, when requested, its first two x-derivatives.
SeriesJet sum_series(const HypergeometricParams& p, double x, double tol, bool derivatives) {
  const auto degree = check_parameters(p);
  if (!degree && !(std::abs(x) < 1.0)) {
    throw DomainError("hyp2f1: non-terminating series needs |x| < 1, got x=" + std::to_string(x));
  }

  const double ax = std::abs(x);
  const double param_max = std::max({std::abs(p.a), std::abs(p.b), std::abs(p.c)});
  const auto transient = static_cast<std::size_t>(std::ceil(param_max)) + 2;

  // Terms are accumulated in extended precision: with large parameters the
  // series cancels heavily near x = 1/2.
  using Wide = std::complex<long double>;
  const Wide a(p.a), b(p.b), c(p.c);
  const long double xw = x;

  // coeff = (a)_m (b)_m / ((c)_m m!); xm, xm1, xm2 hold x^m, x^(m-1), x^(m-2).
  Wide coeff = 1.0L;
  Wide s0 = 0.0L, s1 = 0.0L, s2 = 0.0L;
  double abs_sum = 0.0, rounding = 0.0;
  long double xm = 1.0L, xm1 = 0.0L, xm2 = 0.0L;
  const std::size_t last = degree ? *degree : kSeriesIterationCap;
  auto result = [&](double tail) {
    const Complex v(s0), d1(s1), d2(s2);
    return SeriesJet{v, d1, d2, tail + rounding + kEps * std::abs(v)};
  };

  for (std::size_t m = 0; m <= last; ++m) {
    const long double md = static_cast<long double>(m);
    const Wide t0 = coeff * xm;
    s0 += t0;
    abs_sum += static_cast<double>(std::abs(t0));
    // Bounds double-precision parameter representation as well as summation.
    rounding += (4.0 * static_cast<double>(m) + 2.0) * kEps * static_cast<double>(std::abs(t0));
    if (derivatives) {
      if (m >= 1) s1 += md * coeff * xm1;
      if (m >= 2) s2 += md * (md - 1.0L) * coeff * xm2;
    }

    if (m == last) break;
    const Wide next = coeff * (a + md) * (b + md) / ((c + md) * (md + 1.0L));

    if (!degree && m >= transient && static_cast<double>(m + 1) > std::abs(p.c)) {
      // For k >= m+1 every term ratio is at most q (see the factorization
      // (a+k)/(k+1) * (b+k)/(c+k)), so the tail is geometric-bounded.
      const double mdd = static_cast<double>(m);
      double q = ax * (1.0 + std::abs(p.a - 1.0) / (mdd + 2.0)) *
                 (1.0 + std::abs(p.b - p.c) / (mdd + 1.0 - std::abs(p.c)));
      if (derivatives) q *= 1.0 + 2.0 / mdd;
      if (q < 1.0) {
        const double t_next = static_cast<double>(std::abs(next)) * std::pow(ax, mdd + 1.0);
        const double tail0 = t_next / (1.0 - q);
        const double floor = kEps * abs_sum;
        double worst = tail0 / std::max(static_cast<double>(std::abs(s0)), floor);
        if (derivatives && ax > 0.0) {
          const double tail1 = (mdd + 1.0) * t_next / ax / (1.0 - q);
          const double tail2 = (mdd + 1.0) * mdd * t_next / (ax * ax) / (1.0 - q);
          worst = std::max({worst, tail1 / std::max(static_cast<double>(std::abs(s1)), floor),
                            tail2 / std::max(static_cast<double>(std::abs(s2)), floor)});
        }
        if (worst <= tol) return result(tail0);
      }
    }
    coeff = next;
    xm2 = xm1;
    xm1 = xm;
    xm *= xw;
  }
  if (!degree) {
    throw ConvergenceError("hyp2f1: no convergence after " + std::to_string(kSeriesIterationCap) +
                           " terms at x=" + std::to_string(x) + " (" + describe(p) + ")");
  }
  return result(0.0);
}

}  // namespace

std::optional<std::size_t> is_terminating(const HypergeometricParams& p) {
  const auto da = nonpositive_degree(p.a);
  const auto db = nonpositive_degree(p.b);
  if (da && db) return std::min(*da, *db);
  return da ? da : db;
}

std::optional<std::size_t> is_terminating(const ExactHypergeometricParams& p) {
  std::optional<std::size_t> out;
  for (const Rational* z : {&p.a, &p.b}) {
    if (is_integer(*z) && sgn(*z) <= 0) {
      const auto d = static_cast<std::size_t>(-to_long(*z));
      out = out ? std::min(*out, d) : d;
    }
  }
  return out;
}

SeriesValue hyp2f1(const HypergeometricParams& p, double x, double tol) {
  if (!(tol > 0.0)) throw DomainError("hyp2f1: tolerance must be positive");
  if (!is_terminating(p) && x < -0.5 && x > -1.0) {
    // Pfaff: F(a,b;c;x) = (1-x)^(-a) F(a, c-b; c; x/(x-1)), argument in (1/3, 1/2).
    const HypergeometricParams q{p.a, p.c - p.b, p.c};
    const auto inner = sum_series(q, x / (x - 1.0), tol, false);
    const Complex scale = std::pow(Complex(1.0 - x), -p.a);
    return {scale * inner.value, std::abs(scale) * inner.error, 0};
  }
  const auto jet = sum_series(p, x, tol, false);
  return {jet.value, jet.error, 0};
}

SeriesJet hyp2f1_jet(const HypergeometricParams& p, double x, double tol) {
  if (!(tol > 0.0)) throw DomainError("hyp2f1: tolerance must be positive");
  return sum_series(p, x, tol, true);
}

Rational hyp2f1_exact(const ExactHypergeometricParams& p, const Rational& x) {
  const auto degree = is_terminating(p);
  if (!degree) throw DomainError("hyp2f1_exact: series does not terminate");
  if (is_integer(p.c) && sgn(p.c) <= 0 && static_cast<long>(*degree) >= -to_long(p.c)) {
    throw DomainError("hyp2f1_exact: c in -N0 without earlier termination");
  }
  Rational term(1), sum(1);
  for (std::size_t m = 0; m < *degree; ++m) {
    const long ml = static_cast<long>(m);
    term *= (p.a + ml) * (p.b + ml) / ((p.c + ml) * (ml + 1)) * x;
    sum += term;
  }
  return sum;
}

Complex gauss_limit_constant(const HypergeometricParams& p) {
  const Complex excess = p.a + p.b - p.c;
  if (!(excess.real() > 0.0)) throw DomainError("gauss_limit_constant: needs Re(a+b-c) > 0");
  if (is_nonpositive_integer(p.c)) throw DomainError("gauss_limit_constant: c in -N0");
  if (is_nonpositive_integer(p.a) || is_nonpositive_integer(p.b)) return 0.0;
  const auto gc = gamma_float(p.c);
  const auto ge = gamma_float(excess);
  const auto ga = gamma_float(p.a);
  const auto gb = gamma_float(p.b);
  for (const auto* g : {&gc, &ge, &ga, &gb}) {
    if (!g->ok()) throw DomainError("gauss_limit_constant: Gamma overflow");
  }
  return gc.value * ge.value / (ga.value * gb.value);
}

ExactScalar gauss_limit_constant_exact(const ExactHypergeometricParams& p) {
  const Rational excess = p.a + p.b - p.c;
  if (sgn(excess) <= 0) throw DomainError("gauss_limit_constant: needs a+b-c > 0");
  const auto gc = gamma_exact(p.c);
  if (!gc) throw DomainError("gauss_limit_constant: c in -N0");
  const auto ga = gamma_exact(p.a);
  const auto gb = gamma_exact(p.b);
  if (!ga || !gb) return ExactScalar(0);
  return *gc * *gamma_exact(excess) / (*ga * *gb);
}

}  // namespace hyperboloid::specfun
