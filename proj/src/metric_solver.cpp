#include "ptqao/metric_solver.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "ptqao/errors.hpp"
#include "ptqao/lambda_fraction.hpp"

namespace ptqao {

void ProblemParams::validate() const {
  if (sgn(alpha) <= 0) throw InvalidParams("alpha must be positive, got " + alpha.get_str());
  if (sgn(beta) == 0) throw InvalidParams("beta must be nonzero");
  if (sgn(gamma) < 0) throw InvalidParams("gamma must be non-negative, got " + gamma.get_str());
}

namespace {

LambdaCoefficient scalar(const Rational& q) { return LambdaCoefficient(GaussianRational(q)); }

LambdaCoefficient imaginary(const Rational& q) { return LambdaCoefficient(GaussianRational(Rational(0), q)); }

std::string describe(const Monomial& m) {
  return "x^" + std::to_string(m.x_pow) + " p^" + std::to_string(m.p_pow);
}

// Row-reduces [A | b] in place and returns the solution vector.
std::vector<LambdaFraction> solve_linear(std::vector<std::vector<LambdaFraction>> rows, std::size_t unknowns) {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < unknowns && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const LambdaFraction inv = LambdaFraction(LambdaCoefficient(1)) / rows[rank][col];
    for (std::size_t c = col; c <= unknowns; ++c) rows[rank][c] = rows[rank][c] * inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      const LambdaFraction f = rows[r][col];
      for (std::size_t c = col; c <= unknowns; ++c) rows[r][c] = rows[r][c] - f * rows[rank][c];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (!rows[r][unknowns].is_zero()) {
      throw InconsistentSystem("right-hand side is not in the image of the constrained commutator map");
    }
  }
  if (rank < unknowns) {
    throw AmbiguousSolution("commutator map has a " + std::to_string(unknowns - rank) +
                            "-dimensional kernel on the constrained basis");
  }
  std::vector<LambdaFraction> x(unknowns);
  for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = rows[r][unknowns];
  return x;
}

}  // namespace

WeylOperator unperturbed_hamiltonian(const ProblemParams& params) {
  return WeylOperator::term(0, 2, scalar(Rational(1, 2))) + WeylOperator::term(2, 0, scalar(params.alpha));
}

EpsilonSeries build_hamiltonian(const ProblemParams& params, int truncation_order) {
  params.validate();
  EpsilonSeries h(truncation_order);
  h.add(0, unperturbed_hamiltonian(params));
  h.add(1, WeylOperator::term(3, 0, imaginary(params.beta)));
  h.add(2, WeylOperator::term(4, 0, scalar(-params.gamma)));
  return h;
}

std::vector<Monomial> constrained_basis(int degree_bound) {
  std::vector<Monomial> basis;
  for (int d = 1; d <= degree_bound; ++d) {
    for (int a = 0; a <= d; a += 2) {
      if ((d - a) % 2 == 1) basis.push_back({a, d - a});
    }
  }
  return basis;
}

WeylOperator solve_homological(const HomologicalProblem& problem, std::span<const Monomial> basis_order) {
  if (problem.rhs.degree() > problem.degree_bound) {
    throw std::invalid_argument("degree bound " + std::to_string(problem.degree_bound) +
                                " is below the right-hand side degree " + std::to_string(problem.rhs.degree()));
  }
  std::vector<Monomial> basis = constrained_basis(problem.degree_bound);
  if (!basis_order.empty()) {
    std::vector<Monomial> given(basis_order.begin(), basis_order.end());
    std::vector<Monomial> a = given;
    std::vector<Monomial> b = basis;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw std::invalid_argument("basis_order is not a permutation of the constrained basis");
    basis = std::move(given);
  }

  std::vector<WeylOperator> quantized;
  std::vector<WeylOperator> columns;
  std::set<Monomial> row_keys;
  for (const Monomial& m : basis) {
    quantized.push_back(weyl_quantize(m.x_pow, m.p_pow));
    columns.push_back(commutator(problem.h0, quantized.back()));
    for (const auto& [key, c] : columns.back().terms()) row_keys.insert(key);
  }
  for (const auto& [key, c] : problem.rhs.terms()) row_keys.insert(key);

  std::vector<std::vector<LambdaFraction>> rows;
  for (const Monomial& key : row_keys) {
    std::vector<LambdaFraction> row;
    row.reserve(basis.size() + 1);
    for (const WeylOperator& col : columns) row.emplace_back(col.coefficient(key.x_pow, key.p_pow));
    row.emplace_back(problem.rhs.coefficient(key.x_pow, key.p_pow));
    rows.push_back(std::move(row));
  }
  const std::vector<LambdaFraction> x = solve_linear(std::move(rows), basis.size());

  WeylOperator q;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto c = x[j].to_laurent();
    if (!c) throw std::domain_error("coefficient of " + describe(basis[j]) + " is not a Laurent polynomial in λ");
    q += quantized[j] * *c;
  }
  if (!is_hermitian(q)) throw InconsistentSystem("the unique constrained solution is not Hermitian");
  return q;
}

HomologicalProblem q1_problem(const ProblemParams& params) {
  return {unperturbed_hamiltonian(params), WeylOperator::term(3, 0, imaginary(-2 * params.beta)), 3};
}

HomologicalProblem q3_problem(const ProblemParams& params, const WeylOperator& q1) {
  const WeylOperator cubic = WeylOperator::term(3, 0, imaginary(params.beta));
  const WeylOperator quartic = WeylOperator::term(4, 0, scalar(params.gamma));
  WeylOperator rhs = commutator(q1, commutator(q1, cubic)) * scalar(Rational(-1, 6)) - commutator(q1, quartic);
  return {unperturbed_hamiltonian(params), std::move(rhs), 5};
}

WeylOperator solve_q1(const ProblemParams& params) {
  params.validate();
  WeylOperator q1 = solve_homological(q1_problem(params));
  if (q1.max_p_power() > 3) throw DegreeError("Q1 contains a power of P above 3");
  return q1;
}

WeylOperator solve_q3(const ProblemParams& params, const WeylOperator& q1) {
  params.validate();
  WeylOperator q3 = solve_homological(q3_problem(params, q1));
  if (q3.max_p_power() > 5) throw DegreeError("Q3 contains a power of P above 5");
  return q3;
}

EpsilonSeries metric_generator(const WeylOperator& q1, const WeylOperator& q3, bool with_q3) {
  EpsilonSeries q(4);
  q.add(1, q1);
  if (with_q3) q.add(3, q3);
  return q;
}

// coefficient of X^a P^k in Q₁ is −i·i^k·[S_k]_a
namespace {
GaussianRational s_to_operator_factor(int k) { return GaussianRational(Rational(0), Rational(-1)) * pow(GaussianRational::i(), k); }
}  // namespace

WeylOperator SDecomposition::to_operator() const {
  WeylOperator out;
  for (int k = 0; k < 4; ++k) {
    const GaussianRational f = s_to_operator_factor(k);
    for (int a = 0; a <= s[k].degree(); ++a) {
      out.add_term({a, k}, LambdaCoefficient(s[k].coefficient(a) * f));
    }
  }
  return out;
}

SDecomposition s_decomposition(const WeylOperator& q1) {
  if (!q1.is_lambda_free()) throw std::invalid_argument("S decomposition needs λ substituted (λ = 1)");
  if (q1.max_p_power() > 3) throw DegreeError("normal form with S_0..S_3 needs pPow <= 3");
  std::array<std::vector<GaussianRational>, 4> coeffs;
  for (const auto& [m, c] : q1.terms()) {
    auto& v = coeffs[static_cast<std::size_t>(m.p_pow)];
    if (v.size() <= static_cast<std::size_t>(m.x_pow)) v.resize(static_cast<std::size_t>(m.x_pow) + 1);
    v[static_cast<std::size_t>(m.x_pow)] = c.constant_term() / s_to_operator_factor(m.p_pow);
  }
  SDecomposition out;
  for (std::size_t k = 0; k < 4; ++k) out.s[k] = Polynomial(std::move(coeffs[k]));
  return out;
}

Polynomial harmonic_potential(const ProblemParams& params) { return Polynomial::monomial(2, params.alpha); }
Polynomial cubic_potential(const ProblemParams& params) { return Polynomial::monomial(3, params.beta); }
Polynomial quartic_potential(const ProblemParams& params) { return Polynomial::monomial(4, params.gamma); }

bool SRecursionReport::all_zero() const {
  return std::all_of(residuals.begin(), residuals.end(), [](const Polynomial& r) { return r.is_zero(); });
}

SRecursionReport verify_s_recursion(const SDecomposition& s, const ProblemParams& params) {
  const Polynomial v1 = harmonic_potential(params);
  auto s_at = [&](int j) { return j < 4 ? s.s[static_cast<std::size_t>(j)] : Polynomial(); };
  constexpr int kLast = 4;
  SRecursionReport report;
  for (int k = 0; k <= kLast; ++k) {
    Polynomial r = s_at(k).derivative(2) * GaussianRational(Rational(1, 2));
    if (k == 0) {
      for (int j = 1; j < 4; ++j) r += s_at(j) * v1.derivative(j);
      r += cubic_potential(params) * GaussianRational(2);
    } else {
      r += s_at(k - 1).derivative();
      for (int j = k + 1; j < 4; ++j) {
        r += s_at(j) * v1.derivative(j - k) * GaussianRational(Rational(binomial(j, k)));
      }
    }
    report.residuals.push_back(std::move(r));
  }
  return report;
}

}  // namespace ptqao
