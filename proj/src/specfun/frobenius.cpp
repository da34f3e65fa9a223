#include "hyperboloid/specfun/frobenius.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "hyperboloid/specfun/errors.hpp"
#include "hyperboloid/specfun/gamma.hpp"

namespace hyperboloid::specfun {

FrobeniusSolution frobenius_second_solution(const HypergeometricParams& p, int order) {
  if (order < 1) throw DomainError("frobenius_second_solution: order must be >= 1");
  const Complex lam_c = p.c - 1.0;
  if (lam_c.imag() != 0.0 || lam_c.real() < 1.0 || std::floor(lam_c.real()) != lam_c.real()) {
    throw DomainError("frobenius_second_solution: needs c = 1 + lambda with lambda in N");
  }
  const long lam = static_cast<long>(lam_c.real());
  const Complex a = p.a, b = p.b;

  // Substituting the ansatz into x(1-x)w'' + (c-(a+b+1)x)w' - ab w = 0 and
  // collecting x^(k-lambda-1) gives, with b_i = 0 for i < 0,
  //   k(k-lambda) a_k = (k-1-lambda+a)(k-1-lambda+b) a_(k-1)
  //                     - (2k-lambda) b_(k-lambda) + (2k-2lambda-2+a+b) b_(k-lambda-1).
  // At k = lambda the left side vanishes and the equation fixes b_0;
  // the log series itself must solve the equation, so b_v = b_0 (a)_v (b)_v / ((c)_v v!).
  FrobeniusSolution sol;
  sol.lambda_int = lam;
  sol.truncation_order = order;
  sol.a_coeffs.assign(static_cast<std::size_t>(order) + 1, 0.0);
  sol.b_coeffs.assign(static_cast<std::size_t>(order) + 1, 0.0);
  auto& A = sol.a_coeffs;
  auto& B = sol.b_coeffs;
  A[0] = 1.0;

  const long kmax = std::max<long>(order, lam);
  std::vector<Complex> a_full(static_cast<std::size_t>(kmax) + 1, 0.0);
  a_full[0] = 1.0;
  for (long k = 1; k < lam; ++k) {
    const double kd = static_cast<double>(k);
    a_full[k] = (kd - 1.0 - lam + a) * (kd - 1.0 - lam + b) / (kd * (kd - lam)) * a_full[k - 1];
  }
  const Complex b0 = (a - 1.0) * (b - 1.0) * a_full[lam - 1] / static_cast<double>(lam);

  std::vector<Complex> b_full(static_cast<std::size_t>(kmax) + 1, 0.0);
  b_full[0] = b0;
  for (long v = 1; v <= kmax; ++v) {
    const double vd = static_cast<double>(v - 1);
    b_full[v] = b_full[v - 1] * (a + vd) * (b + vd) / ((p.c + vd) * (vd + 1.0));
  }
  auto bsafe = [&](long i) { return i < 0 ? Complex(0.0) : b_full[i]; };

  a_full[lam] = 0.0;
  for (long k = lam + 1; k <= kmax; ++k) {
    const double kd = static_cast<double>(k);
    const Complex rhs = (kd - 1.0 - lam + a) * (kd - 1.0 - lam + b) * a_full[k - 1] -
                        (2.0 * kd - lam) * bsafe(k - lam) +
                        (2.0 * kd - 2.0 * lam - 2.0 + a + b) * bsafe(k - lam - 1);
    a_full[k] = rhs / (kd * (kd - lam));
  }
  for (int v = 0; v <= order; ++v) {
    A[v] = a_full[v];
    B[v] = b_full[v];
  }
  return sol;
}

SeriesJet FrobeniusSolution::scaled_jet(double x) const {
  if (!(x > 0.0 && x < 1.0)) {
    throw DomainError("FrobeniusSolution: evaluation needs 0 < x < 1, got " + std::to_string(x));
  }
  // H(x) = x^lambda G(x) = sum a_v x^v + x^lambda log(x) sum b_v x^v.
  // Extended precision keeps the evaluation smooth enough for finite differences.
  using Wide = std::complex<long double>;
  const long double xw = x;
  Wide sa = 0.0L, sa1 = 0.0L, sa2 = 0.0L, sb = 0.0L, sb1 = 0.0L, sb2 = 0.0L;
  for (int v = truncation_order; v >= 0; --v) {
    sa2 = sa2 * xw + 2.0L * sa1;
    sa1 = sa1 * xw + sa;
    sa = sa * xw + Wide(a_coeffs[v]);
    sb2 = sb2 * xw + 2.0L * sb1;
    sb1 = sb1 * xw + sb;
    sb = sb * xw + Wide(b_coeffs[v]);
  }
  const long double lam = static_cast<long double>(lambda_int);
  const long double lx = std::log(xw);
  const long double w0 = std::pow(xw, lam) * lx;  // x^l log x
  const long double w1 = std::pow(xw, lam - 1.0L) * (lam * lx + 1.0L);
  const long double w2 = std::pow(xw, lam - 2.0L) * (lam * (lam - 1.0L) * lx + 2.0L * lam - 1.0L);
  SeriesJet out;
  out.value = Complex(sa + w0 * sb);
  out.d1 = Complex(sa1 + w1 * sb + w0 * sb1);
  out.d2 = Complex(sa2 + w2 * sb + 2.0L * w1 * sb1 + w0 * sb2);
  return out;
}

SeriesJet FrobeniusSolution::jet(double x) const {
  const SeriesJet h = scaled_jet(x);
  const double lam = static_cast<double>(lambda_int);
  const double p0 = std::pow(x, -lam);
  const double p1 = -lam * std::pow(x, -lam - 1.0);
  const double p2 = lam * (lam + 1.0) * std::pow(x, -lam - 2.0);
  return {p0 * h.value, p1 * h.value + p0 * h.d1, p2 * h.value + 2.0 * p1 * h.d1 + p0 * h.d2, 0.0};
}

Complex FrobeniusSolution::evaluate(double x) const { return jet(x).value; }

Complex hypergeometric_residual(const HypergeometricParams& p, double x, const SeriesJet& w) {
  return x * (1.0 - x) * w.d2 + (p.c - (p.a + p.b + 1.0) * x) * w.d1 - p.a * p.b * w.value;
}

}  // namespace hyperboloid::specfun
