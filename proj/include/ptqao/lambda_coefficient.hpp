#pragma once

#include <map>
#include <optional>

#include "ptqao/gaussian_rational.hpp"

namespace ptqao {

/// Laurent polynomial in the commutator parameter λ with Gaussian-rational
/// coefficients. Zero coefficients are never stored; the empty map is zero.
class LambdaCoefficient {
 public:
  using Terms = std::map<int, GaussianRational>;

  LambdaCoefficient() = default;
  LambdaCoefficient(GaussianRational constant);  // NOLINT: scalars embed as λ^0
  LambdaCoefficient(long constant) : LambdaCoefficient(GaussianRational(constant)) {}  // NOLINT

  /// c·λ^power
  static LambdaCoefficient monomial(int power, GaussianRational c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::optional<int> min_power() const;
  std::optional<int> max_power() const;
  /// True when the only λ-power present is 0 (or the value is zero).
  bool is_lambda_free() const;
  GaussianRational coefficient(int power) const;

  LambdaCoefficient conj() const;
  /// Value at λ = v. Throws DivisionByZero for v = 0 with a negative power.
  GaussianRational evaluate(const Rational& v) const;
  /// Drops every power except 0; the λ→0 limit when no negative powers exist.
  GaussianRational constant_term() const { return coefficient(0); }

  LambdaCoefficient& operator+=(const LambdaCoefficient& o);
  LambdaCoefficient& operator-=(const LambdaCoefficient& o);
  LambdaCoefficient& operator*=(const GaussianRational& c);

  friend LambdaCoefficient operator+(LambdaCoefficient a, const LambdaCoefficient& b) { return a += b; }
  friend LambdaCoefficient operator-(LambdaCoefficient a, const LambdaCoefficient& b) { return a -= b; }
  friend LambdaCoefficient operator-(LambdaCoefficient a) { return a *= GaussianRational(-1); }
  friend LambdaCoefficient operator*(const LambdaCoefficient& a, const LambdaCoefficient& b);
  friend LambdaCoefficient operator*(LambdaCoefficient a, const GaussianRational& c) { return a *= c; }
  friend LambdaCoefficient operator*(const GaussianRational& c, LambdaCoefficient a) { return a *= c; }
  friend bool operator==(const LambdaCoefficient& a, const LambdaCoefficient& b) {
    return a.terms_ == b.terms_;
  }

 private:
  void add_term(int power, const GaussianRational& c);

  Terms terms_;
};

}  // namespace ptqao
