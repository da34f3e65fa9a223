#include "hyperboloid/ladder/ladder.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

#include "hyperboloid/specfun/errors.hpp"
#include "hyperboloid/specfun/gamma.hpp"
#include "hyperboloid/specfun/jacobi.hpp"
#include "hyperboloid/spectrum/spectrum.hpp"

namespace hyperboloid::ladder {

namespace {

long require_offset(const SpectralParam& s, const char* what) {
  const auto k = s.integer_offset();
  if (!s.is_exact() || !k || sgn(s.exact_lambda()) <= 0) {
    throw DomainError(std::string(what) + ": needs exact lambda > 0 with lambda - rho in Z");
  }
  return *k;
}

Rational normalization(const Rational& lambda, unsigned l) {
  return specfun::pochhammer(Rational(1), l) / specfun::pochhammer(Rational(lambda + 1), l);
}

}  // namespace

LadderCoeffs ladder_coeffs(const SpectralParam& s, unsigned l) {
  const long k = require_offset(s, "ladder_coeffs");
  const long j = k + 1 + static_cast<long>(l);
  if (j < 0) throw DomainError("ladder_coeffs: j = lambda - rho + 1 + l is negative");
  const Rational& lam = s.exact_lambda();
  const Rational& rho = s.geometry().rho();
  const Rational den = 2 * lam + 2 * l + 1;
  LadderCoeffs c;
  c.l = l;
  c.j = j;
  c.A = -(lam + rho + l) * (2 * lam + l + 1) / den;
  c.B = l * (lam - rho + l + 1) / den;
  return c;
}

LadderCoeffs ladder_coeffs_at(const SpectralParam& s, long j) {
  const long k = require_offset(s, "ladder_coeffs");
  const long l = j - k - 1;
  if (j < 0 || l < 0) throw DomainError("ladder_coeffs: j is not in D_lambda");
  return ladder_coeffs(s, static_cast<unsigned>(l));
}

LadderCoeffs derive_ladder_coeffs_from_identities(const Geometry& g, const Rational& lambda_in, unsigned l) {
  Rational lambda = lambda_in;
  lambda.canonicalize();
  const Rational mu = lambda + g.rho();
  const auto d = specfun::jacobi_derivative_identity(l, lambda);
  const auto r = specfun::jacobi_three_term_recurrence(l, lambda);
  if (sgn(r.c_x) == 0) throw DomainError("derive_ladder_coeffs: degenerate recurrence");
  // N_l (-mu z P_l + (1-z^2) P_l') = N_l ((c - mu) z P_l - d P_(l+1)); then replace z P_l.
  const Rational zp = d.c_x - mu;
  const Rational next = zp * r.c_next / r.c_x - d.c_next;
  const Rational prev = l == 0 ? Rational(0) : Rational(zp * r.c_prev / r.c_x);
  LadderCoeffs c;
  c.l = l;
  c.j = 0;
  const Rational k = lambda - g.rho();
  if (specfun::is_integer(k)) c.j = specfun::to_long(k) + 1 + static_cast<long>(l);
  c.A = next * normalization(lambda, l) / normalization(lambda, l + 1);
  if (l > 0) c.B = prev * normalization(lambda, l) / normalization(lambda, l - 1);
  return c;
}

RationalPolynomial ladder_identity_defect(const SpectralParam& s, unsigned l) {
  const auto c = ladder_coeffs(s, l);
  const Rational& lam = s.exact_lambda();
  const Rational mu = lam + s.geometry().rho();
  const auto y = RationalPolynomial::identity();
  const auto one_minus_y2 = RationalPolynomial::constant(1) - y * y;
  const auto p = specfun::jacobi_polynomial(l, lam);
  auto defect = normalization(lam, l) * ((Rational(-mu) * y) * p + one_minus_y2 * p.derivative());
  defect -= (c.A * normalization(lam, l + 1)) * specfun::jacobi_polynomial(l + 1, lam);
  if (l > 0) defect -= (c.B * normalization(lam, l - 1)) * specfun::jacobi_polynomial(l - 1, lam);
  return defect;
}

double ladder_residual(const SpectralParam& s, long j, const std::vector<double>& grid) {
  if (grid.empty()) throw DomainError("ladder_residual: empty grid");
  const auto c = ladder_coeffs_at(s, j);
  using eigen::Branch;
  using eigen::RadialSolution;
  const auto f = RadialSolution::make(s, static_cast<int>(j), Branch::PhiPlus);
  const auto up = RadialSolution::make(s, static_cast<int>(j + 1), Branch::PhiPlus);
  std::optional<RadialSolution> down;
  if (sgn(c.B) != 0) down = RadialSolution::make(s, static_cast<int>(j - 1), Branch::PhiPlus);
  const double a = c.A.get_d(), b = c.B.get_d();
  double worst = 0.0;
  for (double t : grid) {
    const auto fj = f.jet(t);
    const Complex raised = a * up(t);
    const Complex lowered = down ? b * (*down)(t) : Complex(0.0);
    const double scale =
        std::max({std::abs(fj.value), std::abs(fj.d1), std::abs(raised), std::abs(lowered)});
    const double r = std::abs(fj.d1 - raised - lowered);
    worst = std::max(worst, scale > 0.0 ? r / scale : r);
  }
  return worst;
}

ConnectivityCertificate irreducibility_connectivity(const SpectralParam& s, long j_max) {
  if (!s.integer_offset()) throw DomainError("irreducibility_connectivity: needs lambda - rho in Z");
  ConnectivityCertificate cert;
  const auto d = spectrum::discrete_ktype_set(s);
  cert.top = j_max;
  if (d.empty || *d.j_min > j_max) {
    cert.vacuous = true;
    return cert;
  }
  const long lo = *d.j_min;
  cert.bottom = lo;
  for (long j = lo; j <= j_max; ++j) {
    const auto c = ladder_coeffs_at(s, j);
    if (j < j_max && sgn(c.A) != 0) cert.raising.push_back({j, j + 1, c.A});
    if (sgn(c.B) == 0) {
      cert.lowering_zeros.push_back(j);
    } else if (j > lo) {
      cert.lowering.push_back({j, j - 1, c.B});
    }
  }
  // Strong connectivity: everything reachable from the bottom, forwards and backwards.
  auto reach = [&](bool reverse) {
    std::set<long> seen{lo};
    std::deque<long> queue{lo};
    while (!queue.empty()) {
      const long v = queue.front();
      queue.pop_front();
      for (const auto* edges : {&cert.raising, &cert.lowering}) {
        for (const auto& e : *edges) {
          const long from = reverse ? e.to : e.from, to = reverse ? e.from : e.to;
          if (from == v && seen.insert(to).second) queue.push_back(to);
        }
      }
    }
    return static_cast<long>(seen.size()) == j_max - lo + 1;
  };
  cert.connected = reach(false) && reach(true);
  return cert;
}

}  // namespace hyperboloid::ladder
