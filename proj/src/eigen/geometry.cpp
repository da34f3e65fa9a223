#include "hyperboloid/eigen/geometry.hpp"

#include <cmath>
#include <sstream>

#include "hyperboloid/specfun/errors.hpp"

namespace hyperboloid::eigen {

Geometry::Geometry(int n) : n_(n), rho_(n - 1, 2) {
  if (n < 3) throw DomainError("geometry needs n >= 3, got " + std::to_string(n));
  rho_.canonicalize();
}

SpectralParam::SpectralParam(Geometry g, std::variant<Rational, Complex> lambda)
    : geometry_(std::move(g)), lambda_(std::move(lambda)) {
  if (auto* v_ptr = std::get_if<Rational>(&lambda_)) {
    Rational& v = *v_ptr;
    v.canonicalize();
    const Rational k = v - geometry_.rho();
    if (specfun::is_integer(k)) offset_ = specfun::to_long(k);
  }
}

SpectralParam SpectralParam::from_offset(const Geometry& g, const Rational& offset) {
  return SpectralParam(g, Rational(g.rho() + offset));
}

SpectralParam SpectralParam::exact(const Geometry& g, const Rational& lambda) {
  return SpectralParam(g, lambda);
}

SpectralParam SpectralParam::floating(const Geometry& g, Complex lambda) {
  return SpectralParam(g, lambda);
}

const Rational& SpectralParam::exact_lambda() const {
  if (const auto* q = std::get_if<Rational>(&lambda_)) return *q;
  throw DomainError("spectral parameter " + to_string() + " is not exact");
}

Complex SpectralParam::lambda() const {
  if (const auto* q = std::get_if<Rational>(&lambda_)) return {q->get_d(), 0.0};
  return std::get<Complex>(lambda_);
}

bool SpectralParam::is_positive_integer() const {
  if (const auto* q = std::get_if<Rational>(&lambda_)) return specfun::is_integer(*q) && sgn(*q) > 0;
  const Complex z = std::get<Complex>(lambda_);
  return z.imag() == 0.0 && z.real() >= 1.0 && std::floor(z.real()) == z.real();
}

std::string SpectralParam::to_string() const {
  if (const auto* q = std::get_if<Rational>(&lambda_)) return specfun::to_string(*q);
  const Complex z = std::get<Complex>(lambda_);
  std::ostringstream os;
  os.precision(17);
  os << z.real();
  if (z.imag() != 0.0) os << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

}  // namespace hyperboloid::eigen
