#pragma once

#include <optional>

#include "ptqao/lambda_coefficient.hpp"
#include "ptqao/polynomial.hpp"

namespace ptqao {

/// Element of Q(i)(λ): numerator / denominator with the denominator monic and
/// the pair reduced by their gcd. The field the homological solver runs in.
class LambdaFraction {
 public:
  LambdaFraction() : den_(GaussianRational(1)) {}
  LambdaFraction(const LambdaCoefficient& laurent);  // NOLINT
  LambdaFraction(Polynomial num, Polynomial den);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Converts back to a Laurent polynomial; empty when the reduced
  /// denominator is not a power of λ.
  std::optional<LambdaCoefficient> to_laurent() const;

  friend LambdaFraction operator+(const LambdaFraction& a, const LambdaFraction& b);
  friend LambdaFraction operator-(const LambdaFraction& a, const LambdaFraction& b);
  friend LambdaFraction operator*(const LambdaFraction& a, const LambdaFraction& b);
  friend LambdaFraction operator/(const LambdaFraction& a, const LambdaFraction& b);
  friend LambdaFraction operator-(const LambdaFraction& a) { return {-a.num_, a.den_}; }
  friend bool operator==(const LambdaFraction& a, const LambdaFraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Polynomial num_;
  Polynomial den_;
};

}  // namespace ptqao
