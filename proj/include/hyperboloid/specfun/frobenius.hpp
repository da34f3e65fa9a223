#pragma once

#include <vector>

#include "hyperboloid/specfun/hypergeometric.hpp"

namespace hyperboloid::specfun {

/// Second solution of the hypergeometric equation at c = 1 + lambda, lambda in N:
///
///   G(x) = x^(-lambda) sum_v a_v x^v + log(x) sum_v b_v x^v,   a_0 = 1.
///
/// The log series is b_0 F(a, b; c; x). The free coefficient a_lambda is
/// fixed to zero. b_0 vanishes exactly when the Laurent part alone already
/// solves the equation (then no log term is present).
struct FrobeniusSolution {
  long lambda_int = 0;
  std::vector<Complex> a_coeffs;
  std::vector<Complex> b_coeffs;
  int truncation_order = 0;

  bool has_log_term() const { return !b_coeffs.empty() && b_coeffs.front() != Complex(0.0); }

  /// G(x) for 0 < x < 1.
  Complex evaluate(double x) const;
  /// x^lambda G(x) and its first two x-derivatives; this bounded form is what
  /// radial evaluators compose with their own prefactor.
  SeriesJet scaled_jet(double x) const;
  /// G, G', G''.
  SeriesJet jet(double x) const;
};

/// Builds the Frobenius solution up to x^order in both series.
/// Throws DomainError unless c = 1 + lambda with lambda a positive integer and order >= 1.
FrobeniusSolution frobenius_second_solution(const HypergeometricParams& p, int order);

/// Residual x(1-x)w'' + (c-(a+b+1)x)w' - ab w of a jet.
Complex hypergeometric_residual(const HypergeometricParams& p, double x, const SeriesJet& w);

}  // namespace hyperboloid::specfun
