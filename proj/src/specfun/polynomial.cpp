#include "hyperboloid/specfun/polynomial.hpp"

#include <algorithm>

namespace hyperboloid::specfun {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

RationalPolynomial::RationalPolynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {
  trim();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) { return RationalPolynomial{c}; }

RationalPolynomial RationalPolynomial::identity() {
  return RationalPolynomial{Rational(0), Rational(1)};
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational RationalPolynomial::operator()(const Rational& z) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double RationalPolynomial::evaluate(double z) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + it->get_d();
  return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return RationalPolynomial(std::move(d));
}

RationalPolynomial RationalPolynomial::reflected() const {
  std::vector<Rational> r(coeffs_);
  for (std::size_t k = 1; k < r.size(); k += 2) r[k] = -r[k];
  return RationalPolynomial(std::move(r));
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& c) {
  for (auto& q : coeffs_) q *= c;
  trim();
  return *this;
}

RationalPolynomial operator*(const RationalPolynomial& x, const RationalPolynomial& y) {
  if (x.is_zero() || y.is_zero()) return {};
  std::vector<Rational> out(x.coeffs_.size() + y.coeffs_.size() - 1);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    for (std::size_t k = 0; k < y.coeffs_.size(); ++k) out[i + k] += x.coeffs_[i] * y.coeffs_[k];
  }
  return RationalPolynomial(std::move(out));
}

std::string RationalPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) == 0) continue;
    if (!s.empty()) s += " + ";
    s += "(" + specfun::to_string(coeffs_[k]) + ")";
    if (k >= 1) s += "*z";
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s;
}

}  // namespace hyperboloid::specfun
