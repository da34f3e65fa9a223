#include "hyperboloid/eigen/radial.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "hyperboloid/specfun/errors.hpp"
#include "hyperboloid/specfun/frobenius.hpp"
#include "hyperboloid/specfun/gamma.hpp"
#include "hyperboloid/specfun/jacobi.hpp"

namespace hyperboloid::eigen {

using specfun::FrobeniusSolution;
using specfun::HypergeometricParams;
using specfun::SeriesJet;

namespace {

// The series are summed to round-off so that neighbouring stencil points in
// finite-difference checks see the same truncation.
constexpr double kBasisSeriesTol = 1e-16;
constexpr int kFrobeniusOrder = 320;

double sech2(double t) { return 4.0 * x_of_t(t) * x_of_t(-t); }

// Exponents are formed in extended precision: a rounding of order eps |L| in
// the exponent is otherwise visible as noise in finite-difference checks.
using Wide = std::complex<long double>;

long double log_cosh_wide(double t) {
  const long double a = std::abs(static_cast<long double>(t));
  return a + std::log1p(std::exp(-2.0L * a)) - std::numbers::ln2_v<long double>;
}

/// u = e^L H(y(t)) and its t-derivatives, given L, L', L'' and H, dH/dy, d2H/dy2, y', y''.
Jet compose(Wide L, Complex L1, Complex L2, const SeriesJet& h, double y1, double y2) {
  const Complex e(std::exp(L));
  const Complex ht = h.d1 * y1;
  const Complex htt = h.d2 * y1 * y1 + h.d1 * y2;
  return {e * h.value, e * (L1 * h.value + ht), e * ((L2 + L1 * L1) * h.value + 2.0 * L1 * ht + htt)};
}

Jet scaled(const Jet& f, Complex c) { return {c * f.value, c * f.d1, c * f.d2}; }
Jet add(const Jet& f, const Jet& g) { return {f.value + g.value, f.d1 + g.d1, f.d2 + g.d2}; }
Jet reflect_jet(const Jet& f) { return {f.value, -f.d1, f.d2}; }

/// Jacobi closed form (l!/(lambda+1)_l) cosh^(-lambda-rho) P_l^(lambda,lambda)(tanh t).
Jet closed_form_jet(double lambda, double rho, unsigned l, double t) {
  const double mu = lambda + rho;
  const double norm = specfun::pochhammer(1.0, l) / specfun::pochhammer(lambda + 1.0, l);
  const double th = std::tanh(t);
  const double s2 = sech2(t);
  const auto p = specfun::jacobi_poly_jet(l, lambda, th);
  const SeriesJet h{norm * p.value, norm * p.d1, norm * p.d2, 0.0};
  return compose(-static_cast<long double>(mu) * log_cosh_wide(t), -mu * th, -mu * s2, h, s2,
                 -2.0 * th * s2);
}

}  // namespace

class RadialBasis {
public:
  RadialBasis(const SpectralParam& s, int j, double tol)
      : spectral(s), j(j), tol(std::min(tol, kBasisSeriesTol)), p1(radial_params(s, j)) {
    const Complex lam = s.lambda();
    const double rho = s.geometry().rho_value();
    if (s.is_positive_integer()) {
      frobenius = specfun::frobenius_second_solution(p1, kFrobeniusOrder);
    } else if (specfun::is_nonpositive_integer(lam)) {
      throw DomainError("no series basis at lambda = " + s.to_string());
    } else {
      p2 = HypergeometricParams{-lam + rho + static_cast<double>(j),
                                -lam - rho + 1.0 - static_cast<double>(j), 1.0 - lam};
    }
    const Jet a = u1(0.0), b = u2(0.0);
    m = {a.value, b.value, a.d1, b.d1};
    det = m[0] * m[3] - m[1] * m[2];
    if (det == Complex(0.0)) throw DomainError("degenerate radial basis");
  }

  /// phi_{lambda,j} on t >= 0.
  Jet u1(double t) const {
    const double x = x_of_t(t);
    const Complex mu = spectral.lambda() + spectral.geometry().rho_value();
    const auto h = specfun::hyp2f1_jet(p1, x, tol);
    const double s2 = sech2(t);
    const double xx = 0.25 * s2;  // x(1-x)
    return compose(-Wide(mu) * log_cosh_wide(t), -mu * std::tanh(t), -mu * s2, h, -2.0 * xx,
                   4.0 * xx * std::tanh(t));
  }

  /// phi_{-lambda,j} or the Frobenius solution on t >= 0.
  Jet u2(double t) const {
    const double x = x_of_t(t);
    const double s2 = sech2(t);
    const double xx = 0.25 * s2;
    const double th = std::tanh(t);
    const Complex lam = spectral.lambda();
    const double rho = spectral.geometry().rho_value();
    if (frobenius) {
      const Complex mu = lam + rho;
      const auto h = frobenius->scaled_jet(x);
      // cosh^(-mu) x^(-lambda); log(1/x) = log(1 + e^(2t)).
      const long double tw = t;
      const long double log_inv_x = t > 0.0 ? 2.0L * tw + std::log1p(std::exp(-2.0L * tw))
                                            : std::log1p(std::exp(2.0L * tw));
      const Wide L = -Wide(mu) * log_cosh_wide(t) + Wide(lam) * log_inv_x;
      const Complex L1 = -mu * th + 2.0 * lam * x_of_t(-t);
      const Complex L2 = -mu * s2 + 4.0 * lam * xx;
      return compose(L, L1, L2, h, -2.0 * xx, 4.0 * xx * th);
    }
    const Complex nu = -lam + rho;
    const auto h = specfun::hyp2f1_jet(*p2, x, tol);
    return compose(-Wide(nu) * log_cosh_wide(t), -nu * th, -nu * s2, h, -2.0 * xx, 4.0 * xx * th);
  }

  /// Coefficients (c1, c2) with c1 u1 + c2 u2 having value v and derivative d at t = 0.
  std::array<Complex, 2> solve(Complex v, Complex d) const {
    return {(m[3] * v - m[1] * d) / det, (m[0] * d - m[2] * v) / det};
  }

  std::array<Complex, 2> reflect(const Complex c[2]) const {
    const Complex v = c[0] * m[0] + c[1] * m[1];
    const Complex d = c[0] * m[2] + c[1] * m[3];
    return solve(v, -d);
  }

  Jet combination(const Complex c[2], double t) const {
    Jet out;
    if (c[0] != Complex(0.0)) out = add(out, scaled(u1(t), c[0]));
    if (c[1] != Complex(0.0)) out = add(out, scaled(u2(t), c[1]));
    return out;
  }

  SpectralParam spectral;
  int j;
  double tol;
  HypergeometricParams p1;
  std::optional<HypergeometricParams> p2;
  std::optional<FrobeniusSolution> frobenius;
  std::array<Complex, 4> m{};
  Complex det{};
};

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::PhiPlus: return "phi_plus";
    case Branch::PhiReflected: return "phi_reflected";
    case Branch::PhiNegLambda: return "phi_neg_lambda";
    case Branch::SecondKindLog: return "second_kind_log";
  }
  return "unknown";
}

std::optional<Branch> parse_branch(std::string_view name) {
  for (Branch b : {Branch::PhiPlus, Branch::PhiReflected, Branch::PhiNegLambda, Branch::SecondKindLog}) {
    if (to_string(b) == name) return b;
  }
  return std::nullopt;
}

Complex wronskian(const Jet& f, const Jet& g) { return f.value * g.d1 - f.d1 * g.value; }

double x_of_t(double t) {
  if (t > 0.0) {
    const double e = std::exp(-2.0 * t);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(2.0 * t));
}

double log_cosh(double t) {
  const double a = std::abs(t);
  return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

HypergeometricParams radial_params(const SpectralParam& s, int j) {
  const Complex lam = s.lambda();
  const double rho = s.geometry().rho_value();
  return {lam + rho + static_cast<double>(j), lam - rho + 1.0 - static_cast<double>(j), 1.0 + lam};
}

std::optional<specfun::ExactHypergeometricParams> radial_params_exact(const SpectralParam& s, int j) {
  if (!s.is_exact()) return std::nullopt;
  const Rational& lam = s.exact_lambda();
  const Rational& rho = s.geometry().rho();
  return specfun::ExactHypergeometricParams{lam + rho + j, lam - rho + 1 - j, lam + 1};
}

std::optional<unsigned> closed_form_degree(const SpectralParam& s, int j) {
  const auto k = s.integer_offset();
  if (!k) return std::nullopt;
  const long l = static_cast<long>(j) - *k - 1;
  if (l < 0) return std::nullopt;
  return static_cast<unsigned>(l);
}

Complex casimir_eigenvalue(const SpectralParam& s) {
  if (s.is_exact()) return casimir_eigenvalue_exact(s).get_d();
  const double rho = s.geometry().rho_value();
  return s.lambda() * s.lambda() - rho * rho;
}

Rational casimir_eigenvalue_exact(const SpectralParam& s) {
  const Rational& lam = s.exact_lambda();
  const Rational& rho = s.geometry().rho();
  return lam * lam - rho * rho;
}

RadialSolution RadialSolution::make(const SpectralParam& s, int j, Branch branch, Route route,
                                    double tol) {
  if (j < 0) throw DomainError("K-type index must be non-negative");
  if (specfun::is_nonpositive_integer(1.0 + s.lambda())) {
    throw DomainError("phi_{lambda,j} undefined for lambda in -N");
  }
  RadialSolution out;
  out.spectral_ = s;
  out.j_ = j;
  out.branch_ = branch;

  const auto degree = closed_form_degree(s, j);
  if (degree && route == Route::automatic &&
      (branch == Branch::PhiPlus || branch == Branch::PhiReflected)) {
    out.closed_degree_ = degree;
    const double sign = (branch == Branch::PhiReflected && *degree % 2 == 1) ? -1.0 : 1.0;
    out.pos_[0] = sign;
    out.neg_[0] = sign;
    return out;
  }

  out.basis_ = std::make_shared<const RadialBasis>(s, j, tol);
  const Complex first[2] = {1.0, 0.0};
  const Complex second[2] = {0.0, 1.0};
  auto assign = [&](const Complex c[2]) {
    out.pos_[0] = c[0];
    out.pos_[1] = c[1];
    const auto r = out.basis_->reflect(c);
    out.neg_[0] = r[0];
    out.neg_[1] = r[1];
  };
  switch (branch) {
    case Branch::PhiPlus: assign(first); break;
    case Branch::PhiReflected: {
      assign(first);
      std::swap(out.pos_, out.neg_);
      break;
    }
    case Branch::PhiNegLambda:
      if (out.basis_->frobenius) throw DomainError("phi_{-lambda,j} needs lambda not in N");
      assign(second);
      break;
    case Branch::SecondKindLog:
      if (!out.basis_->frobenius) throw DomainError("log-type solution needs lambda in N");
      assign(second);
      break;
  }
  return out;
}

RadialSolution RadialSolution::from_initial_values(const SpectralParam& s, int j, Complex value0,
                                                   Complex deriv0, double tol) {
  RadialSolution out;
  out.spectral_ = s;
  out.j_ = j;
  out.basis_ = std::make_shared<const RadialBasis>(s, j, tol);
  const auto p = out.basis_->solve(value0, deriv0);
  const auto n = out.basis_->solve(value0, -deriv0);
  out.pos_[0] = p[0];
  out.pos_[1] = p[1];
  out.neg_[0] = n[0];
  out.neg_[1] = n[1];
  return out;
}

const SpectralParam& RadialSolution::spectral() const { return *spectral_; }

Jet RadialSolution::jet(double t) const {
  if (closed_degree_) {
    const double lam = spectral_->lambda().real();
    const double rho = spectral_->geometry().rho_value();
    const Jet f = closed_form_jet(lam, rho, *closed_degree_, t);
    return scaled(f, pos_[0]);
  }
  if (t >= 0.0) return basis_->combination(pos_, t);
  return reflect_jet(basis_->combination(neg_, -t));
}

Complex phi_radial(const SpectralParam& s, int j, double t, double tol) {
  return RadialSolution::make(s, j, Branch::PhiPlus, RadialSolution::Route::automatic, tol)(t);
}

RadialSolution second_solution(const SpectralParam& s, int j) {
  if (!(s.lambda().real() > 0.0)) throw DomainError("second solution needs Re lambda > 0");
  if (!s.integer_offset()) throw DomainError("second solution needs lambda - rho in Z");
  const Branch b = s.geometry().n() % 2 == 0 ? Branch::PhiNegLambda : Branch::SecondKindLog;
  return RadialSolution::make(s, j, b);
}

Complex second_solution_radial(const SpectralParam& s, int j, double t) {
  return second_solution(s, j)(t);
}

namespace {

OdeResidual residual_from(const SpectralParam& s, int j, Complex f, Complex d1, Complex d2, double t) {
  const double rho = s.geometry().rho_value();
  const double n = s.geometry().n();
  const Complex drift = 2.0 * rho * std::tanh(t) * d1;
  const Complex potential = static_cast<double>(j) * (j + n - 2.0) * sech2(t) * f;
  const Complex eigen = casimir_eigenvalue(s) * f;
  OdeResidual out;
  out.residual = d2 + drift + potential - eigen;
  out.scale = std::max({std::abs(f), std::abs(d1), std::abs(d2), std::abs(drift),
                        std::abs(potential), std::abs(eigen)});
  return out;
}

struct Stencil {
  Complex value, d1, d2;
};

Stencil five_point(const std::function<Complex(double)>& f, double t, double h) {
  const Complex fm2 = f(t - 2.0 * h), fm1 = f(t - h), f0 = f(t), fp1 = f(t + h), fp2 = f(t + 2.0 * h);
  return {f0, (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h),
          (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h)};
}

}  // namespace

OdeResidual radial_ode_residual(const SpectralParam& s, int j, const std::function<Complex(double)>& f,
                                double t, double h) {
  if (!(h > 0.0)) throw DomainError("finite-difference step must be positive");
  const auto st = five_point(f, t, h);
  return residual_from(s, j, st.value, st.d1, st.d2, t);
}

OdeResidual radial_ode_residual(const SpectralParam& s, int j, const Jet& f, double t) {
  return residual_from(s, j, f.value, f.d1, f.d2, t);
}

OdeResidual transformed_ode_residual(const SpectralParam& s, int j,
                                     const std::function<Complex(double)>& phi, double t, double h) {
  if (!(h > 0.0)) throw DomainError("finite-difference step must be positive");
  const Complex mu = s.lambda() + s.geometry().rho_value();
  auto big_phi = [&](double u) { return Complex(std::exp(Wide(mu) * log_cosh_wide(u))) * phi(u); };
  const auto st = five_point(big_phi, t, h);
  const auto p = radial_params(s, j);
  const Complex drift = -2.0 * s.lambda() * std::tanh(t) * st.d1;
  const Complex potential = -p.a * p.b * sech2(t) * st.value;
  OdeResidual out;
  out.residual = st.d2 + drift + potential;
  out.scale = std::max({std::abs(st.value), std::abs(st.d1), std::abs(st.d2), std::abs(drift),
                        std::abs(potential)});
  return out;
}

AsymptoticConstant asymptotic_constant_estimate(const SpectralParam& s, int j, double t_probe) {
  if (!(s.lambda().real() > 0.0)) throw DomainError("asymptotic constant needs Re lambda > 0");
  if (!(t_probe >= 8.0)) throw DomainError("asymptotic probe needs t >= 8");
  const auto phi = RadialSolution::make(s, j, Branch::PhiPlus);
  const Complex lam = s.lambda();
  const double rho = s.geometry().rho_value();
  AsymptoticConstant out;
  out.estimate = std::exp(-2.0 * lam * t_probe + (lam + rho) * log_cosh(t_probe)) * phi(-t_probe);
  out.exact = specfun::gauss_limit_constant(radial_params(s, j));
  if (const auto ep = radial_params_exact(s, j)) {
    const Rational excess = ep->a + ep->b - ep->c;
    if (specfun::is_half_integer(ep->a) && specfun::is_half_integer(ep->b) &&
        specfun::is_half_integer(ep->c) && specfun::is_half_integer(excess)) {
      out.exact_value = specfun::gauss_limit_constant_exact(*ep);
      out.exact = out.exact_value->to_double();
    }
  }
  return out;
}

}  // namespace hyperboloid::eigen
