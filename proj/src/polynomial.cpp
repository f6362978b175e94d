#include "ptqao/polynomial.hpp"

#include <algorithm>

#include "ptqao/errors.hpp"

namespace ptqao {

Polynomial::Polynomial(std::vector<GaussianRational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(GaussianRational constant) : coeffs_{std::move(constant)} { trim(); }

Polynomial Polynomial::monomial(int power, GaussianRational c) {
  std::vector<GaussianRational> v(static_cast<std::size_t>(power) + 1);
  v.back() = std::move(c);
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GaussianRational Polynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return {};
  return coeffs_[static_cast<std::size_t>(power)];
}

Polynomial Polynomial::derivative(int order) const {
  Polynomial out = *this;
  for (int n = 0; n < order && !out.is_zero(); ++n) {
    std::vector<GaussianRational> d;
    for (std::size_t k = 1; k < out.coeffs_.size(); ++k) {
      d.push_back(out.coeffs_[k] * GaussianRational(static_cast<long>(k)));
    }
    out = Polynomial(std::move(d));
  }
  return out;
}

bool Polynomial::has_parity(int parity) const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (static_cast<int>(k % 2) != parity && !coeffs_[k].is_zero()) return false;
  }
  return true;
}

GaussianRational Polynomial::evaluate(const GaussianRational& t) const {
  GaussianRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  const GaussianRational inv = GaussianRational(1) / leading();
  return *this * inv;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const GaussianRational& c) {
  for (auto& v : coeffs_) v *= c;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

PolynomialDivision divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  Polynomial remainder = a;
  std::vector<GaussianRational> q(static_cast<std::size_t>(std::max(0, a.degree() - b.degree() + 1)));
  while (!remainder.is_zero() && remainder.degree() >= b.degree()) {
    const int shift = remainder.degree() - b.degree();
    const GaussianRational factor = remainder.leading() / b.leading();
    q[static_cast<std::size_t>(shift)] += factor;
    remainder -= Polynomial::monomial(shift, factor) * b;
  }
  return {Polynomial(std::move(q)), remainder};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divide(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string to_string(const Polynomial& a, char variable) {
  if (a.is_zero()) return "0";
  std::string out;
  for (int k = a.degree(); k >= 0; --k) {
    const GaussianRational c = a.coefficient(k);
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += '(' + to_string(c) + ")*";
    out += variable;
    out += '^' + std::to_string(k);
  }
  return out;
}

}  // namespace ptqao
