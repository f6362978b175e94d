#include "ptqao/classical_limit.hpp"

#include <algorithm>
#include <cmath>

#include "ptqao/errors.hpp"

namespace ptqao {

namespace {

double to_double(const GaussianRational& c) { return c.re.get_d(); }

double ipow(double base, int n) {
  double r = 1.0;
  for (int k = 0; k < n; ++k) r *= base;
  return r;
}

// Σ_k ε^k Σ c·∂x^dx ∂p^dp (x^a p^b), with dx, dp ∈ {0, 1}.
double evaluate(const ClassicalHamiltonian& hc, double epsilon, double x, double p, int dx, int dp) {
  double total = 0;
  for (const auto& [k, poly] : hc.orders) {
    double order_sum = 0;
    for (const auto& [m, c] : poly.terms()) {
      int a = m.x_pow;
      int b = m.p_pow;
      double factor = to_double(c.constant_term());
      if (dx == 1) {
        if (a == 0) continue;
        factor *= a--;
      }
      if (dp == 1) {
        if (b == 0) continue;
        factor *= b--;
      }
      order_sum += factor * ipow(x, a) * ipow(p, b);
    }
    total += ipow(epsilon, k) * order_sum;
  }
  return total;
}

}  // namespace

PhaseSpacePolynomial ClassicalHamiltonian::at(int power) const {
  auto it = orders.find(power);
  return it == orders.end() ? PhaseSpacePolynomial() : it->second;
}

double ClassicalHamiltonian::value(double epsilon, double x, double p) const { return evaluate(*this, epsilon, x, p, 0, 0); }
double ClassicalHamiltonian::d_dx(double epsilon, double x, double p) const { return evaluate(*this, epsilon, x, p, 1, 0); }
double ClassicalHamiltonian::d_dp(double epsilon, double x, double p) const { return evaluate(*this, epsilon, x, p, 0, 1); }

bool ClassicalHamiltonian::is_time_reversal_even() const {
  return std::all_of(orders.begin(), orders.end(), [](const auto& kv) { return kv.second.reflect(-1, -1) == kv.second; });
}

ClassicalHamiltonian classical_hamiltonian(const EpsilonSeries& h) {
  ClassicalHamiltonian out;
  for (const auto& [k, a] : h.orders()) {
    if (a.has_negative_lambda()) {
      throw NegativeLambdaError("ε^" + std::to_string(k) + " order has a negative λ-power; the λ → 0 limit does not exist");
    }
    PhaseSpacePolynomial classical = weyl_symbol(a).lambda_constant_part();
    for (const auto& [m, c] : classical.terms()) {
      if (!c.constant_term().is_real()) {
        throw std::domain_error("classical Hamiltonian has a complex coefficient at ε^" + std::to_string(k));
      }
    }
    if (!classical.is_zero()) out.orders.emplace(k, std::move(classical));
  }
  return out;
}

PdmMassProfile pdm_mass_profile(const ProblemParams& params, double epsilon) {
  if (epsilon < 0) throw std::invalid_argument("epsilon must be non-negative");
  const Rational k = 3 * params.beta * params.beta / (2 * params.alpha * params.alpha);
  return {epsilon * epsilon * k.get_d(), classify_quartic(params)};
}

double TrajectoryRecord::relative_energy_drift() const {
  if (points.empty()) return 0;
  const double e0 = points.front().energy;
  double worst = 0;
  for (const auto& pt : points) worst = std::max(worst, std::abs(pt.energy - e0));
  return e0 == 0 ? worst : worst / std::abs(e0);
}

TrajectoryRecord hamiltonian_flow(const ClassicalHamiltonian& hc, double epsilon, PhaseState start, double dt,
                                  std::size_t steps, const MidpointOptions& options) {
  if (dt == 0 || !std::isfinite(dt)) throw std::invalid_argument("time step must be finite and nonzero");
  if (steps == 0) throw std::invalid_argument("at least one step is required");
  TrajectoryRecord rec;
  rec.step_size = dt;
  rec.method = "implicit_midpoint";
  rec.points.reserve(steps + 1);
  rec.points.push_back({0.0, start.x, start.p, hc.value(epsilon, start.x, start.p)});

  PhaseState z = start;
  for (std::size_t n = 1; n <= steps; ++n) {
    auto flow_at_midpoint = [&](const PhaseState& next) {
      const double xm = 0.5 * (z.x + next.x);
      const double pm = 0.5 * (z.p + next.p);
      return PhaseState{z.x + dt * hc.d_dp(epsilon, xm, pm), z.p - dt * hc.d_dx(epsilon, xm, pm)};
    };
    PhaseState next{z.x + dt * hc.d_dp(epsilon, z.x, z.p), z.p - dt * hc.d_dx(epsilon, z.x, z.p)};
    bool converged = false;
    for (int it = 0; it < options.max_iterations; ++it) {
      const PhaseState trial = flow_at_midpoint(next);
      const double change = std::max(std::abs(trial.x - next.x), std::abs(trial.p - next.p));
      const double scale = std::max({1.0, std::abs(trial.x), std::abs(trial.p)});
      next = trial;
      if (!std::isfinite(change)) break;
      if (change <= options.tolerance * scale) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      throw IntegratorNonConvergence(n, "implicit midpoint fixed point did not converge at step " + std::to_string(n));
    }
    z = next;
    rec.points.push_back({static_cast<double>(n) * dt, z.x, z.p, hc.value(epsilon, z.x, z.p)});
  }
  return rec;
}

}  // namespace ptqao
