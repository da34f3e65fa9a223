#include "hyperboloid/spectrum/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "hyperboloid/specfun/errors.hpp"

namespace hyperboloid::spectrum {

namespace {

double panel_integral(const std::function<double(double)>& g, double a, double b, double rel_tol) {
  double error = 0.0, l1 = 0.0;
  const double v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(g, a, b, 15, rel_tol,
                                                                                   &error, &l1);
  if (!std::isfinite(v) || error > 100.0 * rel_tol * l1 + 1e-300) {
    throw ConvergenceError("weighted_lp_integral: panel [" + std::to_string(a) + ", " +
                           std::to_string(b) + "] error " + std::to_string(error));
  }
  return v;
}

}  // namespace

double weighted_lp_integral(const std::function<Complex(double)>& f, double rho, double p, double T,
                            double rel_tol) {
  if (!(p >= 1.0)) throw DomainError("weighted_lp_integral: needs p >= 1");
  if (!(T > 0.0)) throw DomainError("weighted_lp_integral: needs T > 0");
  auto g = [&](double t) {
    const double a = std::abs(f(t));
    if (a == 0.0) return 0.0;
    return std::exp(p * std::log(a) + 2.0 * rho * eigen::log_cosh(t));
  };
  const int panels = static_cast<int>(std::ceil(T));
  const double width = T / panels;
  double total = 0.0;
  // Symmetric panels, summed from the outside in so that small contributions come first
  // for decaying integrands.
  for (int i = panels - 1; i >= 0; --i) {
    const double lo = i * width, hi = (i + 1) * width;
    total += panel_integral(g, lo, hi, rel_tol) + panel_integral(g, -hi, -lo, rel_tol);
  }
  return total;
}

NormDiagnostic weighted_lp_norm(const SpectralParam& s, int j, Branch b, double p, double T) {
  if (!(T > 5.0)) throw DomainError("weighted_lp_norm: needs T > 5");
  const auto f = eigen::RadialSolution::make(s, j, b);
  const double rho = s.geometry().rho_value();
  auto eval = [&](double t) { return f(t); };
  NormDiagnostic d;
  d.value = weighted_lp_integral(eval, rho, p, T);
  d.value_inner = weighted_lp_integral(eval, rho, p, T - 5.0);
  d.relative_change = std::abs(d.value - d.value_inner) / std::abs(d.value);
  d.measured_rate = std::log(d.value / d.value_inner) / 5.0;
  const auto e = lp_exponents(s, j, b, p);
  d.predicted_rate = std::max({e.plus, e.minus, 0.0});
  for (auto [kappa, t] : {std::pair{e.plus, T}, std::pair{e.minus, -T}}) {
    if (kappa < 0.0) {
      d.tail_estimate += std::pow(std::abs(f(t)), p) * std::exp(2.0 * rho * eigen::log_cosh(t)) / -kappa;
    }
  }
  d.converging = d.relative_change < kConvergenceThreshold;
  return d;
}

}  // namespace hyperboloid::spectrum
