#pragma once

#include <string>
#include <vector>

#include "ptqao/gaussian_rational.hpp"

namespace ptqao {

/// Dense univariate polynomial over Q(i); coefficient k multiplies t^k.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<GaussianRational> coefficients);
  Polynomial(GaussianRational constant);  // NOLINT

  static Polynomial monomial(int power, GaussianRational c = GaussianRational(1));

  const std::vector<GaussianRational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  GaussianRational coefficient(int power) const;
  const GaussianRational& leading() const { return coeffs_.back(); }

  Polynomial derivative(int order = 1) const;
  /// Every nonzero coefficient sits at an even (parity = 0) or odd (parity = 1) power.
  bool has_parity(int parity) const;
  GaussianRational evaluate(const GaussianRational& t) const;
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const GaussianRational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= GaussianRational(-1); }
  friend Polynomial operator*(Polynomial a, const GaussianRational& c) { return a *= c; }
  friend Polynomial operator*(const GaussianRational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();

  std::vector<GaussianRational> coeffs_;
};

struct PolynomialDivision {
  Polynomial quotient;
  Polynomial remainder;
};

/// Euclidean division. Throws DivisionByZero for a zero divisor.
PolynomialDivision divide(const Polynomial& a, const Polynomial& b);
/// Monic greatest common divisor (zero if both inputs are zero).
Polynomial gcd(Polynomial a, Polynomial b);

std::string to_string(const Polynomial& a, char variable = 'X');

}  // namespace ptqao
