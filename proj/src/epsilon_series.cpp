#include "ptqao/epsilon_series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ptqao/errors.hpp"

namespace ptqao {

WeylOperator EpsilonSeries::at(int power) const {
  auto it = orders_.find(power);
  return it == orders_.end() ? WeylOperator() : it->second;
}

void EpsilonSeries::add(int power, const WeylOperator& a) {
  if (power < 0) throw std::invalid_argument("negative ε-power");
  if (power > truncation_order_ || a.is_zero()) return;
  auto [it, inserted] = orders_.try_emplace(power, a);
  if (!inserted) {
    it->second += a;
    if (it->second.is_zero()) orders_.erase(it);
  }
}

EpsilonSeries EpsilonSeries::truncated(int order) const {
  EpsilonSeries out(order);
  for (const auto& [k, a] : orders_) out.add(k, a);
  return out;
}

EpsilonSeries& EpsilonSeries::operator+=(const EpsilonSeries& o) {
  truncation_order_ = std::min(truncation_order_, o.truncation_order_);
  *this = truncated(truncation_order_);
  for (const auto& [k, a] : o.orders_) add(k, a);
  return *this;
}

EpsilonSeries& EpsilonSeries::operator-=(const EpsilonSeries& o) { return *this += -o; }

EpsilonSeries& EpsilonSeries::operator*=(const LambdaCoefficient& c) {
  Orders scaled;
  for (auto& [k, a] : orders_) {
    WeylOperator t = a * c;
    if (!t.is_zero()) scaled.emplace(k, std::move(t));
  }
  orders_ = std::move(scaled);
  return *this;
}

EpsilonSeries operator*(const EpsilonSeries& a, const EpsilonSeries& b) {
  EpsilonSeries out(std::min(a.truncation_order_, b.truncation_order_));
  for (const auto& [ka, va] : a.orders_) {
    for (const auto& [kb, vb] : b.orders_) {
      if (ka + kb <= out.truncation_order_) out.add(ka + kb, va * vb);
    }
  }
  return out;
}

EpsilonSeries commutator(const EpsilonSeries& a, const EpsilonSeries& b) { return a * b - b * a; }

EpsilonSeries adjoint(const EpsilonSeries& a) {
  EpsilonSeries out(a.truncation_order());
  for (const auto& [k, v] : a.orders()) out.add(k, adjoint(v));
  return out;
}

EpsilonSeries bch_conjugate(const EpsilonSeries& h, const EpsilonSeries& q, const Rational& s, int order) {
  if (order > h.truncation_order() || order > q.truncation_order()) {
    throw TruncationMismatch("bch order " + std::to_string(order) + " exceeds truncation order of H (" +
                             std::to_string(h.truncation_order()) + ") or Q (" +
                             std::to_string(q.truncation_order()) + ")");
  }
  for (const auto& [k, v] : q.orders()) {
    if (k % 2 == 0) throw std::invalid_argument("generator has even ε-power " + std::to_string(k));
  }
  const EpsilonSeries gen = q.truncated(order);
  EpsilonSeries result = h.truncated(order);
  EpsilonSeries nested = result;
  Rational weight = 1;
  for (int n = 1; n <= order && !nested.orders().empty(); ++n) {
    nested = commutator(gen, nested);
    weight *= s / n;
    result += nested * LambdaCoefficient(GaussianRational(weight));
  }
  return result;
}

std::string to_string(const EpsilonSeries& a, LambdaDisplay display) {
  if (a.orders().empty()) return "0";
  std::string out;
  for (const auto& [k, v] : a.orders()) {
    if (!out.empty()) out += '\n';
    out += "eps^" + std::to_string(k) + ": " + to_string(v, display);
  }
  return out;
}

}  // namespace ptqao
