#pragma once

#include <compare>
#include <map>
#include <string>

#include "ptqao/lambda_coefficient.hpp"

namespace ptqao {

/// The normal-ordered word X^x_pow P^p_pow (all X left of all P). Also used
/// as the key x^x_pow p^p_pow of commuting phase-space polynomials.
struct Monomial {
  int x_pow = 0;
  int p_pow = 0;

  int degree() const { return x_pow + p_pow; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Noncommutative polynomial in X, P with [X, P] = iλ, stored in normal order
/// with exact λ-Laurent coefficients. Zero coefficients are never stored, so
/// equality is structural.
class WeylOperator {
 public:
  using Terms = std::map<Monomial, LambdaCoefficient>;

  WeylOperator() = default;
  WeylOperator(const LambdaCoefficient& scalar);  // NOLINT: scalars embed as multiples of 1

  static WeylOperator term(int x_pow, int p_pow, const LambdaCoefficient& c = LambdaCoefficient(1));
  static WeylOperator identity() { return term(0, 0); }
  static WeylOperator x() { return term(1, 0); }
  static WeylOperator p() { return term(0, 1); }
  static WeylOperator lambda() { return term(0, 0, LambdaCoefficient::monomial(1, 1)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  LambdaCoefficient coefficient(int x_pow, int p_pow) const;

  int max_p_power() const;
  int max_x_power() const;
  int degree() const;
  bool has_negative_lambda() const;
  bool is_lambda_free() const;

  void add_term(const Monomial& m, const LambdaCoefficient& c);

  WeylOperator& operator+=(const WeylOperator& o);
  WeylOperator& operator-=(const WeylOperator& o);
  WeylOperator& operator*=(const LambdaCoefficient& c);

  friend WeylOperator operator+(WeylOperator a, const WeylOperator& b) { return a += b; }
  friend WeylOperator operator-(WeylOperator a, const WeylOperator& b) { return a -= b; }
  friend WeylOperator operator-(WeylOperator a) { return a *= LambdaCoefficient(-1); }
  friend WeylOperator operator*(WeylOperator a, const LambdaCoefficient& c) { return a *= c; }
  friend WeylOperator operator*(const LambdaCoefficient& c, WeylOperator a) { return a *= c; }
  friend WeylOperator operator*(const WeylOperator& a, const WeylOperator& b);
  friend bool operator==(const WeylOperator& a, const WeylOperator& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// Commuting polynomial in x, p with λ-Laurent coefficients: a Weyl symbol or
/// (with λ dropped) a classical Hamiltonian.
class PhaseSpacePolynomial {
 public:
  using Terms = std::map<Monomial, LambdaCoefficient>;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LambdaCoefficient coefficient(int x_pow, int p_pow) const;
  void add_term(const Monomial& m, const LambdaCoefficient& c);

  PhaseSpacePolynomial conj() const;
  /// Image under x → x_sign·x, p → p_sign·p.
  PhaseSpacePolynomial reflect(int x_sign, int p_sign) const;
  /// Keeps only the λ^0 part of every coefficient.
  PhaseSpacePolynomial lambda_constant_part() const;

  PhaseSpacePolynomial& operator+=(const PhaseSpacePolynomial& o);
  PhaseSpacePolynomial& operator-=(const PhaseSpacePolynomial& o);
  friend PhaseSpacePolynomial operator+(PhaseSpacePolynomial a, const PhaseSpacePolynomial& b) { return a += b; }
  friend PhaseSpacePolynomial operator-(PhaseSpacePolynomial a, const PhaseSpacePolynomial& b) { return a -= b; }
  friend bool operator==(const PhaseSpacePolynomial& a, const PhaseSpacePolynomial& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Terms terms_;
};

mpz_class binomial(unsigned long n, unsigned long k);
mpz_class factorial(unsigned long n);

/// Normal-ordered expansion of P^p_pow X^x_pow:
///   Σ_k k!·C(m,k)·C(n,k)·(−iλ)^k X^{n−k} P^{m−k}.
WeylOperator reorder(int p_pow, int x_pow);

WeylOperator pow(const WeylOperator& a, unsigned n);
WeylOperator commutator(const WeylOperator& a, const WeylOperator& b);
WeylOperator anticommutator(const WeylOperator& a, const WeylOperator& b);

/// Hermitian conjugate; λ is real.
WeylOperator adjoint(const WeylOperator& a);
bool is_hermitian(const WeylOperator& a);

/// Parity combined with antilinear time reversal: c·X^a P^b → conj(c)·(−1)^a·X^a P^b.
WeylOperator pt_transform(const WeylOperator& a);
bool is_pt_symmetric(const WeylOperator& a);

/// symbol(X^a P^b) = Σ_k C(a,k) C(b,k) k! (iλ/2)^k x^{a−k} p^{b−k}
PhaseSpacePolynomial weyl_symbol(const WeylOperator& a);
/// Inverse of weyl_symbol (symmetric quantization).
WeylOperator weyl_quantize(const PhaseSpacePolynomial& symbol);
WeylOperator weyl_quantize(int x_pow, int p_pow);

/// Collapses every coefficient to its value at λ = v. Throws DivisionByZero
/// if v = 0 meets a negative λ-power.
WeylOperator substitute_lambda(const WeylOperator& a, const Rational& v);

enum class LambdaDisplay {
  always,        // every term carries "*l^k", including k = 0
  when_nonzero,  // "*l^k" only for k != 0 (λ-substituted output)
};

/// Canonical text form:
///   term := "(" coef ")" ["*l^" k] "*X^" a "*P^" b, joined by " + ", or "0".
/// Terms are ordered by total degree desc, then x power desc, then λ power asc.
std::string to_string(const WeylOperator& a, LambdaDisplay display = LambdaDisplay::always);
std::string to_string(const PhaseSpacePolynomial& a, LambdaDisplay display = LambdaDisplay::always);

}  // namespace ptqao
