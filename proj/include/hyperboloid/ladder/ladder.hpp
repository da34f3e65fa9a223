#pragma once

#include <optional>
#include <vector>

#include "hyperboloid/eigen/radial.hpp"
#include "hyperboloid/specfun/polynomial.hpp"

namespace hyperboloid::ladder {

using eigen::Geometry;
using eigen::SpectralParam;
using specfun::Complex;
using specfun::Rational;
using specfun::RationalPolynomial;

/// phi'_{lambda,j} = A phi_{lambda,j+1} + B phi_{lambda,j-1} for j = lambda - rho + 1 + l.
struct LadderCoeffs {
  unsigned l = 0;
  long j = 0;
  Rational A;
  Rational B;
};

/// Requires exact lambda > 0 with lambda - rho = k in Z and j = k + 1 + l >= 0.
LadderCoeffs ladder_coeffs(const SpectralParam& s, unsigned l);
/// Same, indexed by K-type j in D_lambda.
LadderCoeffs ladder_coeffs_at(const SpectralParam& s, long j);

/// A and B obtained by eliminating z P_l between the derivative identity
/// (1-z^2) P_l' = c z P_l - d P_(l+1) and the three-term recurrence, then
/// renormalizing with l!/(lambda+1)_l. Valid for any rational lambda with
/// (lambda+1)_(l+1) != 0.
LadderCoeffs derive_ladder_coeffs_from_identities(const Geometry& g, const Rational& lambda,
                                                  unsigned l);

/// The ladder identity divided by cosh^(-lambda-rho) t, as a polynomial in
/// y = tanh t:
///   N_l(-(lambda+rho) y P_l + (1-y^2) P_l') - A N_(l+1) P_(l+1) - B N_(l-1) P_(l-1),
/// with N_l = l!/(lambda+1)_l. Zero exactly when the identity holds.
RationalPolynomial ladder_identity_defect(const SpectralParam& s, unsigned l);

/// Max over the grid of |phi'_j - A phi_(j+1) - B phi_(j-1)| divided by
/// max(|phi_j|, |phi'_j|, |A phi_(j+1)|, |B phi_(j-1)|) at each point.
/// Requires j in D_lambda and a nonempty grid.
double ladder_residual(const SpectralParam& s, long j, const std::vector<double>& grid);

struct LadderEdge {
  long from = 0;
  long to = 0;
  Rational coefficient;
};

struct ConnectivityCertificate {
  bool connected = true;
  bool vacuous = false;
  std::optional<long> bottom;
  long top = 0;
  std::vector<LadderEdge> raising;
  std::vector<LadderEdge> lowering;
  /// K-types inside the window where B = 0.
  std::vector<long> lowering_zeros;
};

/// Graph on D_lambda ∩ [0, j_max] with j -> j+1 when A != 0 and j -> j-1 when
/// B != 0; connected means strongly connected. Requires lambda - rho in Z.
ConnectivityCertificate irreducibility_connectivity(const SpectralParam& s, long j_max);

}  // namespace hyperboloid::ladder
