#pragma once

#include <string>
#include <vector>

#include "ptqao/metric_solver.hpp"

namespace ptqao {

/// h⁽²⁾ = ½·P·M⁽²⁾(X)·P + V_eff⁽²⁾(X).
struct PdmDecomposition {
  WeylOperator mass_correction;
  WeylOperator effective_potential;

  /// ½·P·M·P + V, normal-ordered.
  WeylOperator reassemble() const;
  bool mass_is_even() const;
};

enum class QuarticKind { attractive, null, repulsive };

struct QuarticClassification {
  QuarticKind kind;
  Rational discriminant;  // 3β² − 4αγ
};

QuarticClassification classify_quartic(const ProblemParams& params);
std::string to_string(QuarticKind kind);

/// H₂ + ¼[H₁, Q₁]
WeylOperator h_order2(const ProblemParams& params, const WeylOperator& q1);
/// ¼[H₁, Q₃] − (1/192)[[[H₁, Q₁], Q₁], Q₁]
WeylOperator h_order4(const ProblemParams& params, const WeylOperator& q1, const WeylOperator& q3);

/// Splits h2 into mass correction (twice the P² coefficient) and a P-free
/// remainder. Throws DegreeError if pPow > 2, ResidualError if the remainder
/// still contains P. Evenness of the mass is reported, not enforced.
PdmDecomposition extract_pdm(const WeylOperator& h2);

/// A P-free, λ-free operator as a polynomial in X. Throws std::invalid_argument otherwise.
Polynomial as_x_polynomial(const WeylOperator& a);

/// W_k = Σ_{j≥k+1} C(j,k) S_j · d^{j−k}V/dX^{j−k} for k = 0..4, V = βX³.
std::vector<Polynomial> w_functions(const SDecomposition& s, const ProblemParams& params);

/// Residuals of W₀ = −4(V_eff⁽²⁾ + γX⁴), W₁ = 2M⁽²⁾', W₂ = 2M⁽²⁾, W_k = 0 (k ≥ 3).
/// `pdm` must be evaluated at λ = 1.
std::vector<Polynomial> w_relation_residuals(const std::vector<Polynomial>& w, const PdmDecomposition& pdm,
                                             const ProblemParams& params);

/// ρ⁻¹ X ρ and ρ⁻¹ P ρ with ρ = e^{−Q/2}, through ε^order (order ≤ 3).
EpsilonSeries physical_position(const EpsilonSeries& q, int order = 3);
EpsilonSeries physical_momentum(const EpsilonSeries& q, int order = 3);

/// H† − e^{−Q} H e^{Q} order by order (order ≤ 4).
EpsilonSeries pseudo_hermiticity_residual(const EpsilonSeries& h, const EpsilonSeries& q, int order);

/// Everything the pipeline derives for one parameter set.
struct EquivalenceResult {
  WeylOperator q1;
  WeylOperator q3;     // zero when max_order == 2
  EpsilonSeries h;     // ρ H ρ⁻¹ through ε^max_order
};

/// h = ρ H ρ⁻¹ through ε^max_order (2 or 4). Asserts the odd orders vanish,
/// every order is Hermitian, and no negative λ-power survives.
EquivalenceResult assemble_h(const ProblemParams& params, int max_order = 4);

}  // namespace ptqao
