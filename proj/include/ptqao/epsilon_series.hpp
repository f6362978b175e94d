#pragma once

#include <map>

#include "ptqao/weyl_operator.hpp"

namespace ptqao {

/// Perturbation series Σ_k ε^k A_k, truncated at ε^truncation_order. Powers
/// above the truncation order are discarded on insertion and by arithmetic.
class EpsilonSeries {
 public:
  using Orders = std::map<int, WeylOperator>;

  explicit EpsilonSeries(int truncation_order = 0) : truncation_order_(truncation_order) {}

  int truncation_order() const { return truncation_order_; }
  const Orders& orders() const { return orders_; }
  /// The ε^power component (zero when absent).
  WeylOperator at(int power) const;
  void add(int power, const WeylOperator& a);

  EpsilonSeries truncated(int order) const;

  EpsilonSeries& operator+=(const EpsilonSeries& o);
  EpsilonSeries& operator-=(const EpsilonSeries& o);
  EpsilonSeries& operator*=(const LambdaCoefficient& c);
  friend EpsilonSeries operator+(EpsilonSeries a, const EpsilonSeries& b) { return a += b; }
  friend EpsilonSeries operator-(EpsilonSeries a, const EpsilonSeries& b) { return a -= b; }
  friend EpsilonSeries operator-(EpsilonSeries a) { return a *= LambdaCoefficient(-1); }
  friend EpsilonSeries operator*(EpsilonSeries a, const LambdaCoefficient& c) { return a *= c; }
  /// Cauchy product truncated at min of the two truncation orders.
  friend EpsilonSeries operator*(const EpsilonSeries& a, const EpsilonSeries& b);
  friend bool operator==(const EpsilonSeries& a, const EpsilonSeries& b) {
    return a.truncation_order_ == b.truncation_order_ && a.orders_ == b.orders_;
  }

 private:
  int truncation_order_;
  Orders orders_;
};

EpsilonSeries commutator(const EpsilonSeries& a, const EpsilonSeries& b);
EpsilonSeries adjoint(const EpsilonSeries& a);

/// e^{sQ} H e^{−sQ} = Σ_n (s^n / n!) ad_Q^n(H), truncated at ε^order.
///
/// Q must contain only odd ε-powers, so ad_Q^n(H) starts at ε^n and the sum
/// terminates after at most `order` nested commutators. The result carries
/// truncation order `order`. Throws TruncationMismatch when `order` exceeds
/// either input's truncation order, std::invalid_argument for an even power in Q.
EpsilonSeries bch_conjugate(const EpsilonSeries& h, const EpsilonSeries& q, const Rational& s, int order);

std::string to_string(const EpsilonSeries& a, LambdaDisplay display = LambdaDisplay::always);

}  // namespace ptqao
