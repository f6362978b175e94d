#pragma once

#include <array>
#include <span>
#include <vector>

#include "ptqao/epsilon_series.hpp"
#include "ptqao/polynomial.hpp"

namespace ptqao {

/// Dimensionless couplings of H = P²/2 + αX² + iεβX³ − ε²γX⁴.
/// With μ₀ = ℓ = 1 these are the dimensionful a, b, c and ħ maps to λ.
struct ProblemParams {
  Rational alpha = 1;
  Rational beta = 1;
  Rational gamma = 1;

  /// Throws InvalidParams unless α > 0, β ≠ 0, γ ≥ 0.
  void validate() const;
};

/// [h0, Q] = rhs with Q restricted to degree ≤ degree_bound, Hermitian, and
/// Weyl symbol even in x and odd in p.
struct HomologicalProblem {
  WeylOperator h0;
  WeylOperator rhs;
  int degree_bound = 0;
};

WeylOperator unperturbed_hamiltonian(const ProblemParams& params);

/// ε⁰: P²/2 + αX², ε¹: iβX³, ε²: −γX⁴.
EpsilonSeries build_hamiltonian(const ProblemParams& params, int truncation_order = 4);

/// Symbol monomials x^a p^b with a even, b odd, a + b ≤ degree_bound, in
/// (degree, x power) order. These span the gauge-fixed unknowns.
std::vector<Monomial> constrained_basis(int degree_bound);

/// Solves the problem as one exact linear system over Q(i)(λ) in the basis of
/// Weyl-quantized constrained monomials.
///
/// `basis_order`, when given, must be a permutation of constrained_basis(); it
/// changes only the column order of the linear system, never the result.
///
/// Throws InconsistentSystem when rhs is outside the image of the constrained
/// commutator map (or admits no Hermitian solution) and AmbiguousSolution when
/// a kernel survives the constraints.
WeylOperator solve_homological(const HomologicalProblem& problem, std::span<const Monomial> basis_order = {});

/// [H₀, Q₁] = −2iβX³, degree bound 3.
HomologicalProblem q1_problem(const ProblemParams& params);
/// [H₀, Q₃] = −(1/6)[Q₁,[Q₁,iβX³]] − [Q₁, γX⁴], degree bound 5.
HomologicalProblem q3_problem(const ProblemParams& params, const WeylOperator& q1);

WeylOperator solve_q1(const ProblemParams& params);
WeylOperator solve_q3(const ProblemParams& params, const WeylOperator& q1);

/// εQ₁ + ε³Q₃ (Q₃ omitted when `with_q3` is false), truncation order 4.
EpsilonSeries metric_generator(const WeylOperator& q1, const WeylOperator& q3, bool with_q3 = true);

/// Q₁ = −i Σ_k S_k(X) d^k/dX^k with d/dX ↔ iP at λ = 1.
struct SDecomposition {
  std::array<Polynomial, 4> s;

  /// Normal-ordered operator at λ = 1.
  WeylOperator to_operator() const;
  friend bool operator==(const SDecomposition&, const SDecomposition&) = default;
};

/// Throws std::invalid_argument if q1 still depends on λ, DegreeError if pPow > 3.
SDecomposition s_decomposition(const WeylOperator& q1);

/// αX², βX³ and γX⁴ as polynomials in X.
Polynomial harmonic_potential(const ProblemParams& params);
Polynomial cubic_potential(const ProblemParams& params);
Polynomial quartic_potential(const ProblemParams& params);

/// Residuals of the S_k relations obtained by inserting the normal form into
/// [H₀, Q₁] = −2iV:
///   k = 0: ½S₀'' + Σ_{j≥1} S_j V₁^{(j)} + 2V
///   k ≥ 1: ½S_k'' + S'_{k−1} + Σ_{j≥k+1} C(j,k) S_j V₁^{(j−k)}
/// for k = 0..4. All vanish for a genuine solution.
struct SRecursionReport {
  std::vector<Polynomial> residuals;

  bool all_zero() const;
};

SRecursionReport verify_s_recursion(const SDecomposition& s, const ProblemParams& params);

}  // namespace ptqao
