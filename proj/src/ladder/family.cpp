#include "hyperboloid/ladder/family.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <Eigen/Dense>
#include <boost/numeric/odeint.hpp>

#include "hyperboloid/specfun/errors.hpp"

namespace hyperboloid::ladder {

LadderFamily::LadderFamily(SpectralParam s, Kind kind, Parity parity, long j_min, double rtol)
    : spectral_(std::move(s)), kind_(kind), parity_(parity), j_min_(j_min), rtol_(rtol) {}

LadderFamily LadderFamily::u_family(const SpectralParam& s) {
  if (!s.is_exact()) throw DomainError("u_family: needs exact lambda");
  const auto d = spectrum::discrete_ktype_set(s);
  if (d.empty) throw DomainError("u_family: D_lambda is empty for lambda = " + s.to_string());
  return LadderFamily(s, Kind::u_lambda, spectrum::parity_of_U(s), *d.j_min, 0.0);
}

LadderFamily LadderFamily::complementary(const SpectralParam& s, double rtol) {
  if (s.lambda().imag() != 0.0) throw DomainError("complementary family: needs real lambda");
  const Parity u = spectrum::parity_of_U(s);
  if (u == Parity::none) throw DomainError("complementary family: needs lambda - rho in Z, lambda > 0");
  if (!(rtol > 0.0)) throw DomainError("complementary family: tolerance must be positive");
  return LadderFamily(s, Kind::complementary, u == Parity::even ? Parity::odd : Parity::even, 0, rtol);
}

void LadderFamily::rescale(long j, double c) {
  auto [it, inserted] = scale_.try_emplace(j, 1.0);
  it->second *= c;
}

std::vector<Jet> LadderFamily::sample(long j, const std::vector<double>& grid) const {
  if (j < j_min_) throw DomainError("LadderFamily: K-type below the bottom of the family");
  if (!difference_step_) return sample_exact(j, grid);
  const double h = *difference_step_;
  std::vector<double> shifted;
  shifted.reserve(2 * grid.size());
  for (double t : grid) {
    shifted.push_back(t - h);
    shifted.push_back(t + h);
  }
  const auto centre = sample_exact(j, grid);
  const auto sides = sample_exact(j, shifted);
  std::vector<Jet> out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out[i].value = centre[i].value;
    out[i].d1 = (sides[2 * i + 1].value - sides[2 * i].value) / (2.0 * h);
  }
  return out;
}

std::vector<Jet> LadderFamily::sample_exact(long j, const std::vector<double>& grid) const {
  const auto it = scale_.find(j);
  const double c = it == scale_.end() ? 1.0 : it->second;
  std::vector<Jet> out(grid.size());

  if (kind_ == Kind::u_lambda) {
    const auto f = eigen::RadialSolution::make(spectral_, static_cast<int>(j), eigen::Branch::PhiPlus);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const auto v = f.jet(grid[i]);
      out[i] = {c * v.value.real(), c * v.d1.real(), c * v.d2.real()};
    }
    return out;
  }

  // Radial parity is the class parity times (-1)^j.
  const bool even = (parity_ == Parity::even) == (j % 2 == 0);
  const double rho = spectral_.geometry().rho_value();
  const double lam = spectral_.lambda().real();
  const double energy = lam * lam - rho * rho;
  const double potential = static_cast<double>(j) * (j + spectral_.geometry().n() - 2.0);
  using State = std::array<double, 2>;
  auto rhs = [&](const State& y, State& dy, double t) {
    const double ch = std::cosh(t);
    dy[0] = y[1];
    dy[1] = energy * y[0] - 2.0 * rho * std::tanh(t) * y[1] - potential / (ch * ch) * y[0];
  };

  std::vector<double> times{0.0};
  for (double t : grid) times.push_back(std::abs(t));
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  std::vector<State> states;
  State y = even ? State{1.0, 0.0} : State{0.0, 1.0};
  namespace ode = boost::numeric::odeint;
  if (times.size() == 1) {
    states.push_back(y);
  } else {
    ode::integrate_times(ode::make_controlled<ode::runge_kutta_fehlberg78<State>>(1e-2 * rtol_, rtol_),
                         rhs, y, times.begin(), times.end(), 1e-3,
                         [&](const State& s, double) { states.push_back(s); });
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid[i];
    const auto pos = std::lower_bound(times.begin(), times.end(), std::abs(t)) - times.begin();
    const State& s = states[static_cast<std::size_t>(pos)];
    State ds;
    rhs(s, ds, std::abs(t));
    // psi(-t) = ±psi(t); the derivative picks up the opposite sign.
    const double sv = (t < 0.0 && !even) ? -1.0 : 1.0;
    const double sd = (t < 0.0 && even) ? -1.0 : 1.0;
    out[i] = {c * sv * s[0], c * sd * s[1], c * sv * ds[1]};
  }
  return out;
}

DerivativeFit fit_derivative_expansion(const LadderFamily& fam, long j, const std::vector<double>& grid) {
  if (grid.size() < 20) throw DomainError("fit_derivative_expansion: needs at least 20 grid points");
  if (j < fam.j_min()) throw DomainError("fit_derivative_expansion: K-type below the family bottom");
  const bool bottom = j == fam.j_min();
  const auto self = fam.sample(j, grid);
  const auto up = fam.sample(j + 1, grid);
  std::vector<Jet> down;
  if (!bottom) down = fam.sample(j - 1, grid);

  const auto m = static_cast<Eigen::Index>(grid.size());
  Eigen::MatrixXd a(m, bottom ? 1 : 2);
  Eigen::VectorXd rhs(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto k = static_cast<std::size_t>(i);
    a(i, 0) = up[k].value.real();
    if (!bottom) a(i, 1) = down[k].value.real();
    rhs(i) = self[k].d1.real();
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  DerivativeFit fit;
  fit.condition = sv(sv.size() - 1) > 0.0 ? sv(0) / sv(sv.size() - 1) : INFINITY;
  if (!(fit.condition <= kFitConditionCap)) {
    throw ConditioningError("fit_derivative_expansion: condition number " + std::to_string(fit.condition) +
                            " at j = " + std::to_string(j));
  }
  const Eigen::VectorXd x = svd.solve(rhs);
  fit.raising = x(0);
  if (!bottom) fit.lowering = x(1);
  const double norm = rhs.norm();
  fit.fit_residual = norm > 0.0 ? (a * x - rhs).norm() / norm : (a * x - rhs).norm();
  return fit;
}

std::vector<double> uniform_grid(double lo, double hi, int n) {
  if (n < 2 || !(hi > lo)) throw DomainError("uniform_grid: needs n >= 2 and hi > lo");
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  return g;
}

}  // namespace hyperboloid::ladder
