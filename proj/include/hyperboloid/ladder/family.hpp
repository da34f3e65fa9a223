#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hyperboloid/eigen/radial.hpp"
#include "hyperboloid/spectrum/spectrum.hpp"

namespace hyperboloid::ladder {

using eigen::Jet;
using eigen::SpectralParam;
using spectrum::Parity;

inline constexpr double kOdeRelTol = 1e-12;
inline constexpr double kFitConditionCap = 1e10;

/// Radial parts psi_j, j >= j_min, of one parity class of K-finite eigenfunctions.
///
/// The U_lambda family uses phi_{lambda,j} in closed form. The complementary
/// family uses the solution of the radial equation with parity (-1)^j times the
/// class parity, normalized at t = 0 (value 1 for even, derivative 1 for odd) and
/// integrated with an adaptive Runge-Kutta-Fehlberg 7(8) stepper.
class LadderFamily {
public:
  enum class Kind { u_lambda, complementary };

  /// Requires exact lambda > 0 with lambda - rho in Z.
  static LadderFamily u_family(const SpectralParam& s);
  /// Requires real lambda with lambda - rho in Z; class parity opposite to U_lambda.
  static LadderFamily complementary(const SpectralParam& s, double rtol = kOdeRelTol);

  Kind kind() const { return kind_; }
  Parity parity() const { return parity_; }
  long j_min() const { return j_min_; }
  const SpectralParam& spectral() const { return spectral_; }

  /// Values and t-derivatives of psi_j on the grid.
  std::vector<Jet> sample(long j, const std::vector<double>& grid) const;

  /// Multiplies psi_j by c.
  void rescale(long j, double c);
  /// Replaces exact derivatives by central differences of step h.
  void use_difference_derivative(double h) { difference_step_ = h; }

private:
  LadderFamily(SpectralParam s, Kind kind, Parity parity, long j_min, double rtol);
  std::vector<Jet> sample_exact(long j, const std::vector<double>& grid) const;

  SpectralParam spectral_;
  Kind kind_;
  Parity parity_;
  long j_min_;
  double rtol_;
  std::map<long, double> scale_;
  std::optional<double> difference_step_;
};

struct DerivativeFit {
  double raising = 0.0;
  /// Absent at the bottom K-type.
  std::optional<double> lowering;
  /// ||fit - psi'|| / ||psi'|| over the grid.
  double fit_residual = 0.0;
  double condition = 0.0;
};

/// Least-squares fit psi'_j = a psi_(j+1) + b psi_(j-1). Needs at least 20 grid
/// points; throws ConditioningError above kFitConditionCap.
DerivativeFit fit_derivative_expansion(const LadderFamily& fam, long j, const std::vector<double>& grid);

/// n equispaced points on [lo, hi].
std::vector<double> uniform_grid(double lo, double hi, int n);

}  // namespace hyperboloid::ladder
