#include "hyperboloid/spectrum/spectrum.hpp"

#include <algorithm>

#include "hyperboloid/specfun/errors.hpp"
#include "hyperboloid/specfun/gamma.hpp"

namespace hyperboloid::spectrum {

std::string_view to_string(Parity p) {
  switch (p) {
    case Parity::even: return "even";
    case Parity::odd: return "odd";
    case Parity::none: return "none";
  }
  return "none";
}

namespace {

bool positive_lambda(const SpectralParam& s) {
  return s.is_exact() ? sgn(s.exact_lambda()) > 0 : s.lambda().real() > 0.0 && s.lambda().imag() == 0.0;
}

void require_positive_real_part(const SpectralParam& s, const char* what) {
  if (!(s.lambda().real() > 0.0)) throw DomainError(std::string(what) + ": needs Re lambda > 0");
}

}  // namespace

DiscreteKTypeSet discrete_ktype_set(const SpectralParam& s) {
  if (s.lambda().real() < 0.0) throw DomainError("discrete_ktype_set: needs Re lambda >= 0");
  DiscreteKTypeSet out;
  const auto k = s.integer_offset();
  if (!k || !positive_lambda(s)) return out;
  out.empty = false;
  out.j_min = std::max(0L, *k + 1);
  return out;
}

Parity parity_of_U(const SpectralParam& s) {
  if (s.lambda().real() < 0.0) return Parity::none;
  if (discrete_ktype_set(s).empty) return Parity::none;
  return *s.integer_offset() % 2 == 0 ? Parity::odd : Parity::even;
}

DiscreteSeriesVerdict classify_discrete_series(const SpectralParam& s) {
  require_positive_real_part(s, "classify_discrete_series");
  DiscreteSeriesVerdict v;
  // E_lambda ∩ L^2 = E_lambda ∩ C_temp = U_lambda, which is nonzero iff lambda - rho in Z.
  if (const auto k = s.integer_offset()) {
    v.even_discrete = *k % 2 != 0;
    v.odd_discrete = *k % 2 == 0;
  }
  v.even_in_L2 = v.even_tempered = v.even_discrete;
  v.odd_in_L2 = v.odd_tempered = v.odd_discrete;
  v.multiplicity_temp = v.multiplicity_full = (v.even_discrete || v.odd_discrete) ? 1 : 0;
  return v;
}

std::optional<DiscreteSeriesVerdict> classify_small_lambda(const SpectralParam& s) {
  const auto k = s.integer_offset();
  if (!k || *k >= 0 || !positive_lambda(s)) return std::nullopt;
  DiscreteSeriesVerdict v = classify_discrete_series(s);
  // The other parity class is irreducible, equivalent to U_lambda and non-tempered.
  v.multiplicity_full = 2;
  v.multiplicity_temp = 1;
  return v;
}

AsymptoticExponents lp_exponents(const SpectralParam& s, int j, Branch b, double p) {
  require_positive_real_part(s, "lp_exponents");
  if (!(p >= 1.0)) throw DomainError("lp_exponents: needs p >= 1");
  const double re = s.lambda().real();
  const double rho = s.geometry().rho_value();
  const double decaying = -p * (re + rho) + 2.0 * rho;
  const double growing = p * (re - rho) + 2.0 * rho;
  AsymptoticExponents e;
  switch (b) {
    case Branch::PhiPlus:
    case Branch::PhiReflected: {
      // The growing part at -inf carries the Gauss constant, which vanishes
      // exactly through the pole of Gamma(lambda - rho + 1 - j).
      const auto deg = eigen::closed_form_degree(s, j);
      const bool pole = deg.has_value() ||
                        specfun::is_nonpositive_integer(eigen::radial_params(s, j).b);
      e.plus = decaying;
      e.minus = pole ? decaying : growing;
      if (b == Branch::PhiReflected) std::swap(e.plus, e.minus);
      break;
    }
    case Branch::PhiNegLambda: {
      // Reflected phi_{-lambda} = A1' phi_{-lambda} + c phi_lambda with
      // A1' ∝ 1/Gamma(1-rho-j), which vanishes for integral rho.
      const bool rho_integral = s.geometry().n() % 2 == 1;
      e.plus = growing;
      e.minus = rho_integral ? decaying : growing;
      break;
    }
    case Branch::SecondKindLog:
      e.plus = growing;
      e.minus = growing;
      break;
  }
  return e;
}

MembershipVerdict lp_membership_analytic(const SpectralParam& s, int j, Branch b) {
  // kappa(p) = alpha p + 2 rho on each side; L^p iff both are negative.
  const double rho = s.geometry().rho_value();
  const auto e = lp_exponents(s, j, b, 1.0);
  double threshold = 0.0;
  bool some_p = true;
  for (double kappa1 : {e.plus, e.minus}) {
    const double alpha = kappa1 - 2.0 * rho;
    if (alpha >= 0.0) {
      some_p = false;
    } else {
      threshold = std::max(threshold, 2.0 * rho / -alpha);
    }
  }
  MembershipVerdict v;
  v.in_L2 = some_p && threshold < 2.0;
  v.tempered = some_p && threshold <= 2.0;
  if (some_p && !v.in_L2) v.lp_threshold = threshold;
  if (v.in_L2 && (b == Branch::PhiPlus || b == Branch::PhiReflected)) {
    if (const auto l = eigen::closed_form_degree(s, j)) {
      v.parity_class = (*l + static_cast<unsigned>(j)) % 2 == 0 ? Parity::even : Parity::odd;
    }
  }
  return v;
}

}  // namespace hyperboloid::spectrum
