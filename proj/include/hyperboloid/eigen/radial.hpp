#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string_view>

#include "hyperboloid/eigen/geometry.hpp"
#include "hyperboloid/specfun/hypergeometric.hpp"

namespace hyperboloid::eigen {

/// Default step for five-point central differences in residual checks.
inline constexpr double kDefaultResidualStep = 1e-3;

/// Solution branches of the radial equation
///   f'' + 2 rho tanh(t) f' + j(j+n-2)/cosh^2(t) f = (lambda^2 - rho^2) f.
enum class Branch {
  PhiPlus,        ///< phi_{lambda,j}, decaying like cosh^(-lambda-rho) as t -> +inf
  PhiReflected,   ///< t -> phi_{lambda,j}(-t)
  PhiNegLambda,   ///< phi_{-lambda,j}, needs lambda not in N
  SecondKindLog,  ///< Frobenius log-type solution, needs lambda in N
};

std::string_view to_string(Branch b);
std::optional<Branch> parse_branch(std::string_view name);

/// Value and first two t-derivatives.
struct Jet {
  Complex value{};
  Complex d1{};
  Complex d2{};
};

/// f g' - f' g.
Complex wronskian(const Jet& f, const Jet& g);

/// x = (1 + e^(2t))^(-1), evaluated without overflow for large |t|.
double x_of_t(double t);
/// log cosh t, stable for large |t|.
double log_cosh(double t);

/// (a, b, c) = (lambda+rho+j, lambda-rho+1-j, 1+lambda).
specfun::HypergeometricParams radial_params(const SpectralParam& s, int j);
/// Exact triple, or nullopt when lambda is not exact.
std::optional<specfun::ExactHypergeometricParams> radial_params_exact(const SpectralParam& s, int j);

/// l >= 0 with j = lambda - rho + 1 + l, when lambda - rho is an integer and such l exists.
std::optional<unsigned> closed_form_degree(const SpectralParam& s, int j);

/// lambda^2 - rho^2.
Complex casimir_eigenvalue(const SpectralParam& s);
/// Exact lambda^2 - rho^2; throws DomainError for non-exact parameters.
Rational casimir_eigenvalue_exact(const SpectralParam& s);

class RadialBasis;

/// A solution of the radial equation for fixed (lambda, j), evaluable on all of R.
///
/// Closed-form solutions (phi_{lambda,j} with j = lambda-rho+1+l) use the
/// Jacobi representation everywhere. Every other solution is stored as a
/// combination of two series solutions valid on t >= 0; values at t < 0 come
/// from the reflection symmetry of the equation, matched at t = 0.
class RadialSolution {
public:
  enum class Route { automatic, series };

  /// Throws DomainError if the branch does not exist for the parameters.
  static RadialSolution make(const SpectralParam& s, int j, Branch branch,
                             Route route = Route::automatic,
                             double tol = specfun::kDefaultSeriesTol);
  /// The solution with f(0) = value0, f'(0) = deriv0.
  static RadialSolution from_initial_values(const SpectralParam& s, int j, Complex value0,
                                            Complex deriv0, double tol = specfun::kDefaultSeriesTol);

  Complex operator()(double t) const { return jet(t).value; }
  Jet jet(double t) const;

  const SpectralParam& spectral() const;
  int j() const { return j_; }
  std::optional<Branch> branch() const { return branch_; }
  /// True when evaluated through the Jacobi closed form.
  bool closed_form() const { return closed_degree_.has_value(); }
  std::optional<unsigned> degree() const { return closed_degree_; }

private:
  RadialSolution() = default;

  std::shared_ptr<const RadialBasis> basis_;
  std::optional<SpectralParam> spectral_;
  int j_ = 0;
  std::optional<Branch> branch_;
  std::optional<unsigned> closed_degree_;
  // Coefficients on the basis at |t| for t >= 0 and t < 0 respectively.
  Complex pos_[2]{};
  Complex neg_[2]{};
};

/// phi_{lambda,j}(t); the reflection is phi_radial at -t. Requires lambda not in -N.
Complex phi_radial(const SpectralParam& s, int j, double t, double tol = specfun::kDefaultSeriesTol);

/// Second solution independent of phi_{lambda,j} in the regime lambda - rho in Z, Re lambda > 0:
/// phi_{-lambda,j} for n even, the Frobenius log solution for n odd.
RadialSolution second_solution(const SpectralParam& s, int j);
Complex second_solution_radial(const SpectralParam& s, int j, double t);

struct OdeResidual {
  Complex residual{};
  /// Largest magnitude among f, f', and the four terms of the equation.
  double scale = 0.0;
  double relative() const { return scale > 0.0 ? std::abs(residual) / scale : std::abs(residual); }
};

/// Residual f'' + 2 rho tanh t f' + j(j+n-2)/cosh^2 t f - (lambda^2-rho^2) f with
/// five-point central differences of step h.
OdeResidual radial_ode_residual(const SpectralParam& s, int j,
                                const std::function<Complex(double)>& f, double t,
                                double h = kDefaultResidualStep);
/// Same residual from exact derivatives.
OdeResidual radial_ode_residual(const SpectralParam& s, int j, const Jet& f, double t);

/// Residual of Phi'' - 2 lambda tanh t Phi' - ab (1 - tanh^2 t) Phi for Phi = cosh^(lambda+rho) phi.
OdeResidual transformed_ode_residual(const SpectralParam& s, int j,
                                     const std::function<Complex(double)>& phi, double t,
                                     double h = kDefaultResidualStep);

struct AsymptoticConstant {
  /// e^(-2 lambda t) cosh(t)^(lambda+rho) phi_{lambda,j}(-t) at the probe.
  Complex estimate{};
  /// Gamma(1+lambda) Gamma(lambda) / (Gamma(lambda+rho+j) Gamma(lambda-rho+1-j)).
  Complex exact{};
  /// Exact form when lambda is rational with 2 lambda integral.
  std::optional<specfun::ExactScalar> exact_value;
};

/// Requires Re lambda > 0 and t_probe >= 8.
AsymptoticConstant asymptotic_constant_estimate(const SpectralParam& s, int j, double t_probe);

}  // namespace hyperboloid::eigen
