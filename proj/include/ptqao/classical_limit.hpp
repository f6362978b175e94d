#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ptqao/equivalence_map.hpp"
#include "ptqao/errors.hpp"

namespace ptqao {

/// λ-free phase-space polynomial per ε-order: H_c = Σ_k ε^k H_k(x, p).
struct ClassicalHamiltonian {
  std::map<int, PhaseSpacePolynomial> orders;

  PhaseSpacePolynomial at(int power) const;
  double value(double epsilon, double x, double p) const;
  double d_dx(double epsilon, double x, double p) const;
  double d_dp(double epsilon, double x, double p) const;
  bool is_time_reversal_even() const;
  friend bool operator==(const ClassicalHamiltonian&, const ClassicalHamiltonian&) = default;
};

/// λ → 0 of the Weyl symbol of every ε-order. Throws NegativeLambdaError when a
/// negative λ-power means the limit does not exist.
ClassicalHamiltonian classical_hamiltonian(const EpsilonSeries& h);

struct PdmMassProfile {
  double stiffness = 0;  // 3ε²β²/(2α²)
  QuarticClassification classification;

  /// 1 / (1 + stiffness·x²)
  double mass(double x) const { return 1.0 / (1.0 + stiffness * x * x); }
  /// 1 − stiffness·x²
  double quadratic_approx(double x) const { return 1.0 - stiffness * x * x; }
};

PdmMassProfile pdm_mass_profile(const ProblemParams& params, double epsilon);

struct PhaseState {
  double x = 0;
  double p = 0;
};

struct TrajectoryPoint {
  double t;
  double x;
  double p;
  double energy;
};

struct TrajectoryRecord {
  std::vector<TrajectoryPoint> points;
  double step_size = 0;
  std::string method;

  /// max_n |H_n − H_0| / |H_0|
  double relative_energy_drift() const;
};

class IntegratorNonConvergence : public NonConvergence {
 public:
  IntegratorNonConvergence(std::size_t step, const std::string& what) : NonConvergence(what), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

struct MidpointOptions {
  double tolerance = 1e-13;
  int max_iterations = 50;
};

/// Implicit-midpoint integration of ẋ = ∂H/∂p, ṗ = −∂H/∂x with the fixed-point
/// corrector iterated to `tolerance`. A negative dt integrates backwards.
/// Throws IntegratorNonConvergence naming the failing step.
TrajectoryRecord hamiltonian_flow(const ClassicalHamiltonian& hc, double epsilon, PhaseState start, double dt,
                                  std::size_t steps, const MidpointOptions& options = {});

}  // namespace ptqao
