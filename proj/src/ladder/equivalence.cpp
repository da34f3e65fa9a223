#include "hyperboloid/ladder/equivalence.hpp"

#include <algorithm>
#include <cmath>

#include "hyperboloid/specfun/errors.hpp"

namespace hyperboloid::ladder {

std::vector<double> default_fit_grid() { return uniform_grid(0.1, 3.0, 60); }

EquivalenceReport equivalence_invariants(const SpectralParam& s, long j_max) {
  return equivalence_invariants(s, j_max, LadderFamily::complementary(s), default_fit_grid());
}

EquivalenceReport equivalence_invariants(const SpectralParam& s, long j_max,
                                         const LadderFamily& complementary,
                                         const std::vector<double>& grid) {
  const auto k = s.integer_offset();
  if (!s.is_exact() || !k || *k >= 0 || sgn(s.exact_lambda()) <= 0) {
    throw DomainError("equivalence_invariants: needs lambda in rho - N with 0 < lambda < rho");
  }
  if (j_max < 0) throw DomainError("equivalence_invariants: needs j_max >= 0");
  if (complementary.kind() != LadderFamily::Kind::complementary) {
    throw DomainError("equivalence_invariants: expected the complementary family");
  }

  EquivalenceReport r;
  std::vector<DerivativeFit> fits;
  for (long j = 0; j <= j_max + 1; ++j) {
    fits.push_back(fit_derivative_expansion(complementary, j, grid));
    r.max_fit_residual = std::max(r.max_fit_residual, fits.back().fit_residual);
    r.fit_residuals.push_back(fits.back().fit_residual);
  }
  for (long j = 0; j <= j_max; ++j) {
    const auto here = ladder_coeffs_at(s, j);
    const auto next = ladder_coeffs_at(s, j + 1);
    const Rational exact = here.A * next.B;
    const double fitted = fits[static_cast<std::size_t>(j)].raising *
                          *fits[static_cast<std::size_t>(j + 1)].lowering;
    r.products_exact.push_back(exact);
    r.products_fitted.push_back(fitted);
    const double e = exact.get_d();
    r.max_rel_deviation = std::max(r.max_rel_deviation, std::abs(fitted - e) / std::abs(e));
  }
  // Both families sit in the same eigenspace; the Casimir value is shared by construction.
  r.casimir_match = complementary.spectral().lambda() == s.lambda();
  r.bottoms_match = !fits.front().lowering && sgn(ladder_coeffs_at(s, 0).B) == 0;
  return r;
}

}  // namespace hyperboloid::ladder
