#pragma once

#include <optional>
#include <string_view>

#include "hyperboloid/eigen/radial.hpp"

namespace hyperboloid::spectrum {

using eigen::Branch;
using eigen::Geometry;
using eigen::SpectralParam;
using specfun::Complex;
using specfun::Rational;

enum class Parity { even, odd, none };
std::string_view to_string(Parity p);

/// D_lambda = N0 ∩ (lambda - rho + N): empty, or {j_min, j_min+1, ...}.
struct DiscreteKTypeSet {
  bool empty = true;
  std::optional<long> j_min;

  bool contains(long j) const { return j_min && j >= *j_min; }
};

/// Requires Re lambda >= 0.
DiscreteKTypeSet discrete_ktype_set(const SpectralParam& s);

/// even when lambda - rho is odd, odd when it is even, none when D_lambda is empty.
Parity parity_of_U(const SpectralParam& s);

struct DiscreteSeriesVerdict {
  bool even_discrete = false;
  bool odd_discrete = false;
  bool even_in_L2 = false;
  bool odd_in_L2 = false;
  /// Whether the parity class contains nonzero tempered eigenfunctions.
  bool even_tempered = false;
  bool odd_tempered = false;
  int multiplicity_full = 0;
  int multiplicity_temp = 0;
};

/// Discrete series by parity. Throws DomainError for Re lambda <= 0.
DiscreteSeriesVerdict classify_discrete_series(const SpectralParam& s);

/// Small-lambda regime lambda in rho - N, 0 < lambda < rho; nullopt outside it.
std::optional<DiscreteSeriesVerdict> classify_small_lambda(const SpectralParam& s);

struct MembershipVerdict {
  bool in_L2 = false;
  bool tempered = false;
  /// Member of L^p exactly for p > lp_threshold; set only when not in L^2 but in some L^p.
  std::optional<double> lp_threshold;
  Parity parity_class = Parity::none;
};

/// Growth exponents kappa at t -> +inf and t -> -inf of |f|^p cosh^(2 rho) t, as
/// functions e^(kappa |t|); the integral over R is finite iff both are negative.
struct AsymptoticExponents {
  double plus = 0.0;
  double minus = 0.0;
};

/// Requires Re lambda > 0 and p >= 1.
AsymptoticExponents lp_exponents(const SpectralParam& s, int j, Branch b, double p);

/// Decision from asymptotic exponents. Requires Re lambda > 0.
MembershipVerdict lp_membership_analytic(const SpectralParam& s, int j, Branch b);

}  // namespace hyperboloid::spectrum
