#pragma once

#include "ptqao/classical_limit.hpp"

namespace ptqao::closed_forms {

// Reference closed-form results with μ₀ = ℓ = 1 and ħ → λ, expanded from their
// anticommutator presentation into canonical normal order. Golden references
// for the computed pipeline; nothing here is derived from the solver.

/// i(β/α)X − (β/(λα))X²P − (β/(3λα²))P³
WeylOperator q1(const ProblemParams& params);

/// S₀ = −(β/α)X, S₁ = −(β/α)X², S₂ = 0, S₃ = β/(3α²)
SDecomposition s_values(const ProblemParams& params);

/// M⁽²⁾ = (3β²/(2α²))X², V_eff⁽²⁾ = ((3β² − 4αγ)/(4α))X⁴ − λ²β²/(2α²)
PdmDecomposition pdm_order2(const ProblemParams& params);

/// ½P·M⁽²⁾·P + V_eff⁽²⁾
WeylOperator h_order2(const ProblemParams& params);

/// The ε⁴ correction written with anticommutators {x², p⁴}, {x⁴, p²}.
WeylOperator h_order4(const ProblemParams& params);

/// x_phys and p_phys through ε³.
EpsilonSeries physical_position(const ProblemParams& params);
EpsilonSeries physical_momentum(const ProblemParams& params);

/// H_c through ε⁴.
ClassicalHamiltonian classical(const ProblemParams& params);

}  // namespace ptqao::closed_forms
