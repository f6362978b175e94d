#include "ptqao/lambda_fraction.hpp"

#include "ptqao/errors.hpp"

namespace ptqao {

LambdaFraction::LambdaFraction(const LambdaCoefficient& laurent) {
  const int shift = laurent.is_zero() ? 0 : -std::min(0, *laurent.min_power());
  for (const auto& [k, c] : laurent.terms()) num_ += Polynomial::monomial(k + shift, c);
  den_ = Polynomial::monomial(shift);
}

LambdaFraction::LambdaFraction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Polynomial(GaussianRational(1));
    return;
  }
  const Polynomial g = gcd(num, den);
  num = divide(num, g).quotient;
  den = divide(den, g).quotient;
  const GaussianRational lead = den.leading();
  num_ = num * (GaussianRational(1) / lead);
  den_ = den.monic();
}

std::optional<LambdaCoefficient> LambdaFraction::to_laurent() const {
  const int shift = den_.degree();
  if (!(den_ == Polynomial::monomial(shift))) return std::nullopt;
  LambdaCoefficient out;
  const auto& c = num_.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    out += LambdaCoefficient::monomial(static_cast<int>(k) - shift, c[k]);
  }
  return out;
}

LambdaFraction operator+(const LambdaFraction& a, const LambdaFraction& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

LambdaFraction operator-(const LambdaFraction& a, const LambdaFraction& b) { return a + (-b); }

LambdaFraction operator*(const LambdaFraction& a, const LambdaFraction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

LambdaFraction operator/(const LambdaFraction& a, const LambdaFraction& b) {
  if (b.is_zero()) throw DivisionByZero("division by zero rational function");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

}  // namespace ptqao
