#include "hyperboloid/specfun/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace hyperboloid::specfun {

namespace {

// Lanczos coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

Complex lanczos(Complex z) {
  z -= 1.0;
  Complex x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  const Complex t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

}  // namespace

bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && std::floor(z.real()) == z.real();
}

GammaResult gamma_float(Complex z) {
  if (is_nonpositive_integer(z)) return {GammaResult::Status::pole, {}};
  if (z.real() > kGammaOverflowThreshold) return {GammaResult::Status::overflow, {}};

  if (z.imag() == 0.0) {
    return {GammaResult::Status::ok, Complex(std::tgamma(z.real()), 0.0)};
  }
  if (z.real() < 0.5) {
    const Complex s = std::sin(std::numbers::pi * z);
    return {GammaResult::Status::ok, std::numbers::pi / (s * lanczos(1.0 - z))};
  }
  return {GammaResult::Status::ok, lanczos(z)};
}

}  // namespace hyperboloid::specfun
