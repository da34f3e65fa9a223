#pragma once

#include <concepts>

#include "hyperboloid/specfun/exact.hpp"

namespace hyperboloid::specfun {

template <typename T>
concept FloatScalar = std::floating_point<T> || std::same_as<T, Complex>;

/// Rising factorial (a)_m = a (a+1) ... (a+m-1).
template <FloatScalar T>
T pochhammer(const T& a, unsigned m) {
  T acc(1);
  for (unsigned k = 0; k < m; ++k) acc *= a + T(k);
  return acc;
}

/// Exact rising factorial.
inline Rational pochhammer(const Rational& a, unsigned m) {
  Rational acc(1);
  for (unsigned k = 0; k < m; ++k) acc *= a + static_cast<unsigned long>(k);
  return acc;
}

/// Overflow threshold on Re z for gamma_float.
inline constexpr double kGammaOverflowThreshold = 170.0;

struct GammaResult {
  enum class Status { ok, pole, overflow };
  Status status = Status::ok;
  Complex value{};

  bool ok() const { return status == Status::ok; }
  bool pole() const { return status == Status::pole; }
};

/// Gamma(z) by the Lanczos approximation with reflection for Re z < 1/2.
GammaResult gamma_float(Complex z);

/// True when z is exactly a non-positive integer.
bool is_nonpositive_integer(Complex z);

}  // namespace hyperboloid::specfun
