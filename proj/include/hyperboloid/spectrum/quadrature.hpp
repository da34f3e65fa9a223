#pragma once

#include <functional>

#include "hyperboloid/spectrum/spectrum.hpp"

namespace hyperboloid::spectrum {

inline constexpr double kDefaultTruncation = 25.0;
/// Relative change between T - 5 and T below which an integral counts as converged.
inline constexpr double kConvergenceThreshold = 1e-6;

/// int_{-T}^{T} |f(t)|^p cosh^(2 rho) t dt by adaptive Gauss-Kronrod on unit panels.
/// Throws ConvergenceError when a panel fails to reach the requested accuracy.
double weighted_lp_integral(const std::function<Complex(double)>& f, double rho, double p, double T,
                            double rel_tol = 1e-12);

struct NormDiagnostic {
  double value = 0.0;          ///< integral up to T
  double value_inner = 0.0;    ///< integral up to T - 5
  double relative_change = 0.0;
  double measured_rate = 0.0;  ///< log(value / value_inner) / 5
  double predicted_rate = 0.0; ///< max(kappa_plus, kappa_minus, 0)
  double tail_estimate = 0.0;  ///< |f|^p cosh^(2 rho) at +-T over |kappa|, for decaying sides
  bool converging = false;     ///< relative_change < kConvergenceThreshold
};

/// Requires p >= 1 and T > 5.
NormDiagnostic weighted_lp_norm(const SpectralParam& s, int j, Branch b, double p,
                                double T = kDefaultTruncation);

}  // namespace hyperboloid::spectrum
