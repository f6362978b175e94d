#include "ptqao/lambda_coefficient.hpp"

#include <cstdlib>

#include "ptqao/errors.hpp"

namespace ptqao {

LambdaCoefficient::LambdaCoefficient(GaussianRational constant) { add_term(0, constant); }

LambdaCoefficient LambdaCoefficient::monomial(int power, GaussianRational c) {
  LambdaCoefficient out;
  out.add_term(power, c);
  return out;
}

void LambdaCoefficient::add_term(int power, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(power, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<int> LambdaCoefficient::min_power() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<int> LambdaCoefficient::max_power() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

bool LambdaCoefficient::is_lambda_free() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

GaussianRational LambdaCoefficient::coefficient(int power) const {
  auto it = terms_.find(power);
  return it == terms_.end() ? GaussianRational() : it->second;
}

LambdaCoefficient LambdaCoefficient::conj() const {
  LambdaCoefficient out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, c.conj());
  return out;
}

GaussianRational LambdaCoefficient::evaluate(const Rational& v) const {
  GaussianRational sum;
  for (const auto& [k, c] : terms_) {
    if (k < 0 && sgn(v) == 0) {
      throw DivisionByZero("λ = 0 substituted into a λ^" + std::to_string(k) + " term");
    }
    Rational factor = 1;
    for (int n = 0; n < std::abs(k); ++n) factor *= v;
    if (k < 0) factor = 1 / factor;
    sum += c * GaussianRational(factor);
  }
  return sum;
}

LambdaCoefficient& LambdaCoefficient::operator+=(const LambdaCoefficient& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

LambdaCoefficient& LambdaCoefficient::operator-=(const LambdaCoefficient& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

LambdaCoefficient& LambdaCoefficient::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

LambdaCoefficient operator*(const LambdaCoefficient& a, const LambdaCoefficient& b) {
  LambdaCoefficient out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) out.add_term(ka + kb, ca * cb);
  }
  return out;
}

}  // namespace ptqao
