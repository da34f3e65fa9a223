#pragma once

#include <vector>

#include "hyperboloid/ladder/family.hpp"
#include "hyperboloid/ladder/ladder.hpp"

namespace hyperboloid::ladder {

/// Ladder invariants of U_lambda and of the complementary parity class.
/// p_j = (raising at j)(lowering at j+1) does not depend on how each psi_j is normalized.
struct EquivalenceReport {
  std::vector<Rational> products_exact;
  std::vector<double> products_fitted;
  std::vector<double> fit_residuals;
  double max_rel_deviation = 0.0;
  double max_fit_residual = 0.0;
  bool casimir_match = false;
  /// No lowering column at j = 0 in either family.
  bool bottoms_match = false;
};

/// Fit grid used by the equivalence check.
std::vector<double> default_fit_grid();

/// Requires lambda in rho - N with 0 < lambda < rho and j_max >= 0. Products are
/// reported for j = 0..j_max.
EquivalenceReport equivalence_invariants(const SpectralParam& s, long j_max);
/// Same with a caller-supplied complementary family (e.g. rescaled).
EquivalenceReport equivalence_invariants(const SpectralParam& s, long j_max,
                                         const LadderFamily& complementary,
                                         const std::vector<double>& grid);

}  // namespace hyperboloid::ladder
