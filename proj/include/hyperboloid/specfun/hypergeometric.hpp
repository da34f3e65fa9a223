#pragma once

#include <cstddef>
#include <optional>

#include "hyperboloid/specfun/exact.hpp"

namespace hyperboloid::specfun {

inline constexpr std::size_t kSeriesIterationCap = 100000;
inline constexpr double kDefaultSeriesTol = 1e-12;

struct HypergeometricParams {
  Complex a;
  Complex b;
  Complex c;
};

/// Exact parameter triple, used by the terminating and Gamma-ratio paths.
struct ExactHypergeometricParams {
  Rational a;
  Rational b;
  Rational c;

  HypergeometricParams to_float() const {
    return {Complex(a.get_d()), Complex(b.get_d()), Complex(c.get_d())};
  }
};

struct SeriesValue {
  Complex value;
  /// Bound on the truncated tail plus an estimate of accumulated rounding.
  double error = 0.0;
  std::size_t terms = 0;
};

/// F together with dF/dx and d2F/dx2.
struct SeriesJet {
  Complex value;
  Complex d1;
  Complex d2;
  double error = 0.0;
};

/// Degree min{-a, -b} over the parameters in -N0, or nullopt if the series does not terminate.
std::optional<std::size_t> is_terminating(const HypergeometricParams& p);
std::optional<std::size_t> is_terminating(const ExactHypergeometricParams& p);

/// Gauss series F(a, b; c; x).
///
/// Terminating series are summed in full for any real x. Otherwise |x| < 1 is
/// required; x < -1/2 is mapped through the Pfaff transformation and the
/// remaining range is summed directly until the tail bound drops below
/// tol * |partial sum|. Throws DomainError for x outside the domain or
/// c in -N0 not shielded by earlier termination, ConvergenceError past
/// kSeriesIterationCap terms.
SeriesValue hyp2f1(const HypergeometricParams& p, double x, double tol = kDefaultSeriesTol);

/// F, F' and F'' summed termwise. Same domain rules as hyp2f1 except that the
/// Pfaff mapping is not applied (callers keep x in [0, 1/2]).
SeriesJet hyp2f1_jet(const HypergeometricParams& p, double x, double tol = kDefaultSeriesTol);

/// Exact value of a terminating series; throws DomainError when it does not terminate.
Rational hyp2f1_exact(const ExactHypergeometricParams& p, const Rational& x);

/// A = Gamma(c) Gamma(a+b-c) / (Gamma(a) Gamma(b)), the limit of
/// (1-x)^(a+b-c) F(a,b;c;x) as x -> 1-. Requires Re(a+b-c) > 0.
/// Returns exactly zero when Gamma(a) or Gamma(b) has a pole.
Complex gauss_limit_constant(const HypergeometricParams& p);

/// Exact form of gauss_limit_constant; all four Gamma arguments must lie in Z/2.
ExactScalar gauss_limit_constant_exact(const ExactHypergeometricParams& p);

}  // namespace hyperboloid::specfun
