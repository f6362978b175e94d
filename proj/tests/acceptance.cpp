#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ptqao/classical_limit.hpp"
#include "ptqao/equivalence_map.hpp"
#include "ptqao/spectral_check.hpp"
#include "support/generators.hpp"
#include "support/reference_forms.hpp"

using namespace ptqao;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) detail = what;
    passed = passed && ok;
  }
};

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;  // 0 when unbounded
  std::function<Outcome()> run;
};

ProblemParams params(long a, long b, long c) {
  ProblemParams p;
  p.alpha = a;
  p.beta = b;
  p.gamma = c;
  return p;
}

std::vector<ProblemParams> random_params(unsigned seed, int count) {
  std::mt19937 rng(seed);
  std::vector<ProblemParams> out;
  for (int k = 0; k < count; ++k) out.push_back(testing::random_params(rng));
  return out;
}

std::string describe(const ProblemParams& p) {
  return "(" + p.alpha.get_str() + ", " + p.beta.get_str() + ", " + p.gamma.get_str() + ")";
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

Outcome exact_s_values() {
  Outcome o;
  for (const ProblemParams& p : random_params(101, 20)) {
    const SDecomposition s = s_decomposition(substitute_lambda(solve_q1(p), 1));
    const GaussianRational r(Rational(-p.beta / p.alpha));
    o.require(s.s[0] == Polynomial::monomial(1, r) && s.s[1] == Polynomial::monomial(2, r) && s.s[2].is_zero() &&
                  s.s[3] == Polynomial(GaussianRational(Rational(p.beta / (3 * p.alpha * p.alpha)))),
              "S-values differ at " + describe(p));
  }
  return o;
}

Outcome exact_pdm_order2() {
  Outcome o;
  for (const ProblemParams& p : random_params(102, 20)) {
    const PdmDecomposition d = extract_pdm(h_order2(p, solve_q1(p)));
    const Rational& a = p.alpha;
    const Rational& b = p.beta;
    const WeylOperator mass = WeylOperator::term(2, 0, GaussianRational(Rational(3 * b * b / (2 * a * a))));
    const WeylOperator veff =
        WeylOperator::term(4, 0, GaussianRational(Rational((3 * b * b - 4 * a * p.gamma) / (4 * a)))) +
        WeylOperator::term(0, 0, LambdaCoefficient::monomial(2, GaussianRational(Rational(-b * b / (2 * a * a)))));
    o.require(d.mass_correction == mass, "M2 differs at " + describe(p));
    o.require(d.effective_potential == veff, "Veff2 differs at " + describe(p));
  }
  return o;
}

Outcome exact_order4() {
  Outcome o;
  for (const ProblemParams& p : random_params(103, 8)) {
    const WeylOperator q1 = solve_q1(p);
    o.require(h_order4(p, q1, solve_q3(p, q1)) == testing::ReferenceForms(p).h4(), "h4 differs at " + describe(p));
  }
  return o;
}

Outcome physical_operators() {
  Outcome o;
  for (const ProblemParams& p : random_params(104, 8)) {
    const WeylOperator q1 = solve_q1(p);
    const EpsilonSeries q = metric_generator(q1, solve_q3(p, q1));
    const testing::ReferenceForms pub(p);
    o.require(physical_position(q, 3) == pub.x_phys(), "x_phys differs at " + describe(p));
    o.require(physical_momentum(q, 3) == pub.p_phys(), "p_phys differs at " + describe(p));
  }
  return o;
}

Outcome classical_limit() {
  Outcome o;
  for (const ProblemParams& p : random_params(105, 8)) {
    const EquivalenceResult r = assemble_h(p, 4);
    const ClassicalHamiltonian hc = classical_hamiltonian(r.h);
    const testing::ReferenceForms pub(p);
    for (int k : {0, 2, 4}) o.require(hc.at(k) == pub.hc(k), "Hc order " + std::to_string(k) + " differs at " + describe(p));
    const LambdaCoefficient constant = r.h.at(2).coefficient(0, 0);
    const LambdaCoefficient expected =
        LambdaCoefficient::monomial(2, GaussianRational(Rational(-p.beta * p.beta / (2 * p.alpha * p.alpha))));
    o.require(constant == expected, "lambda^2 constant missing from h2 at " + describe(p));
    o.require(hc.at(2).coefficient(0, 0).is_zero(), "constant survives in Hc at " + describe(p));
  }
  return o;
}

Outcome pseudo_hermiticity() {
  Outcome o;
  for (const ProblemParams& p : random_params(106, 6)) {
    const WeylOperator q1 = solve_q1(p);
    const EpsilonSeries residual =
        pseudo_hermiticity_residual(build_hamiltonian(p), metric_generator(q1, solve_q3(p, q1)), 4);
    for (int k = 0; k <= 4; ++k) o.require(residual.at(k).is_zero(), "order " + std::to_string(k) + " nonzero at " + describe(p));
  }
  return o;
}

Outcome w_relations() {
  Outcome o;
  for (const ProblemParams& p : random_params(107, 20)) {
    const WeylOperator q1 = solve_q1(p);
    const SDecomposition s = s_decomposition(substitute_lambda(q1, 1));
    const PdmDecomposition d = extract_pdm(h_order2(p, q1));
    const PdmDecomposition at_one{substitute_lambda(d.mass_correction, 1), substitute_lambda(d.effective_potential, 1)};
    const std::vector<Polynomial> res = w_relation_residuals(w_functions(s, p), at_one, p);
    for (std::size_t k = 0; k < res.size(); ++k) {
      o.require(res[k].is_zero(), "W" + std::to_string(k) + " relation fails at " + describe(p));
    }
  }
  return o;
}

Outcome matrix_oracle() {
  Outcome o;
  const BasisSpec basis{1.0, 40, 16};
  MatrixRepresentation rep(basis);
  std::vector<Monomial> monomials;
  for (int d = 0; d <= 8; ++d) {
    for (int a = 0; a <= d; ++a) monomials.push_back({a, d - a});
  }
  double worst = 0;
  int pairs = 0;
  for (const Monomial& u : monomials) {
    for (const Monomial& v : monomials) {
      if (u.x_pow + u.p_pow + v.x_pow + v.p_pow > 8) continue;
      const WeylOperator a = WeylOperator::term(u.x_pow, u.p_pow);
      const WeylOperator b = WeylOperator::term(v.x_pow, v.p_pow);
      const DenseMatrix direct = (rep.full(a) * rep.full(b)).topLeftCorner(basis.n, basis.n);
      const DenseMatrix symbolic = rep.truncated(substitute_lambda(a * b, 1));
      const double scale = direct.cwiseAbs().maxCoeff();
      const double err = (symbolic - direct).cwiseAbs().maxCoeff() / (scale == 0 ? 1.0 : scale);
      worst = std::max(worst, err);
      ++pairs;
    }
  }
  o.require(worst <= 1e-10, "relative error " + num(worst));
  o.detail = o.passed ? std::to_string(pairs) + " pairs, max relative error " + num(worst) : o.detail;
  return o;
}

Outcome spectral_scaling() {
  Outcome o;
  const ProblemParams p = params(1, 1, 1);
  const std::vector<double> grid{0.005, 0.01, 0.02, 0.04};
  const BasisSpec basis{1.0, 80, 24};
  const SpectralReport r = spectrum_comparison(p, grid, 8, basis);
  double max_imag = 0;
  for (const SpectralRow& row : r.rows) max_imag = std::max(max_imag, row.max_imag);
  const double shift = truncation_shift(p, grid.back(), 8, basis, BasisSpec{1.0, 120, 36});
  o.require(shift < 1e-8, "truncation gate shift " + num(shift));
  o.require(max_imag < 1e-7, "maxImag " + num(max_imag));
  o.require(r.slope2 && *r.slope2 >= 3.6 && *r.slope2 <= 4.4, "slope2 " + (r.slope2 ? num(*r.slope2) : "n/a"));
  o.require(r.slope4 && *r.slope4 >= 5.4 && *r.slope4 <= 6.6, "slope4 " + (r.slope4 ? num(*r.slope4) : "n/a"));
  if (o.passed) {
    o.detail = "slope2 " + num(*r.slope2) + ", slope4 " + num(*r.slope4) + ", maxImag " + num(max_imag) + ", shift " +
               num(shift);
  }
  return o;
}

Outcome metric_scaling() {
  Outcome o;
  const std::vector<double> eps{0.01, 0.02, 0.04};
  std::vector<double> norms;
  for (double e : eps) {
    const MetricResidual m = metric_residual_matrix(params(1, 1, 1), e, BasisSpec{1.0, 8, 24});
    o.require(m.min_metric_eigenvalue > 0, "metric not positive definite at eps " + num(e));
    norms.push_back(m.frobenius);
  }
  const std::optional<double> slope = fit_loglog_slope(eps, norms);
  o.require(slope && *slope >= 4.5 && *slope <= 5.5, "slope " + (slope ? num(*slope) : "n/a"));
  if (o.passed) o.detail = "slope " + num(*slope);
  return o;
}

Outcome quartic_trichotomy() {
  Outcome o;
  const struct {
    ProblemParams p;
    QuarticKind kind;
  } cases[] = {{params(1, 1, 1), QuarticKind::repulsive},
               {params(1, 2, 3), QuarticKind::null},
               {params(1, 2, 1), QuarticKind::attractive}};
  for (const auto& c : cases) {
    const QuarticClassification q = classify_quartic(c.p);
    o.require(q.kind == c.kind, describe(c.p) + " classified " + to_string(q.kind));
    o.require(q.discriminant == 3 * c.p.beta * c.p.beta - 4 * c.p.alpha * c.p.gamma, "discriminant at " + describe(c.p));
  }
  return o;
}

Outcome classical_integration() {
  Outcome o;
  const ProblemParams harmonic_params = [] {
    ProblemParams p = params(1, 1, 1);
    p.alpha = Rational(1, 2);
    return p;
  }();
  const ClassicalHamiltonian harmonic = classical_hamiltonian(assemble_h(harmonic_params, 4).h);
  const TrajectoryRecord h = hamiltonian_flow(harmonic, 0.0, {1.0, 0.0}, 1e-3, 10000);
  double err = 0;
  for (const TrajectoryPoint& pt : h.points) err = std::max(err, std::abs(pt.x - std::cos(pt.t)));
  o.require(err <= 1e-6, "harmonic error " + num(err));

  const ClassicalHamiltonian hc = classical_hamiltonian(assemble_h(params(1, 1, 1), 4).h);
  const double drift = hamiltonian_flow(hc, 0.02, {1.0, 0.0}, 1e-3, 10000).relative_energy_drift();
  o.require(drift <= 1e-8, "energy drift " + num(drift));

  const TrajectoryRecord fwd = hamiltonian_flow(hc, 0.02, {1.0, 0.0}, 1e-3, 1000);
  const TrajectoryRecord back = hamiltonian_flow(hc, 0.02, {fwd.points.back().x, fwd.points.back().p}, -1e-3, 1000);
  const double rev = std::max(std::abs(back.points.back().x - 1.0), std::abs(back.points.back().p));
  o.require(rev <= 1e-10, "reversibility error " + num(rev));
  if (o.passed) o.detail = "harmonic " + num(err) + ", drift " + num(drift) + ", reversibility " + num(rev);
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "exact S-values", 1.0, exact_s_values},
      {2, "exact PDM order 2", 0, exact_pdm_order2},
      {3, "exact order 4", 0, exact_order4},
      {4, "physical operators", 0, physical_operators},
      {5, "classical limit", 0, classical_limit},
      {6, "pseudo-Hermiticity", 0, pseudo_hermiticity},
      {7, "W relations", 0, w_relations},
      {8, "matrix oracle", 10.0, matrix_oracle},
      {9, "spectral order scaling", 60.0, spectral_scaling},
      {10, "metric residual scaling", 30.0, metric_scaling},
      {11, "quartic trichotomy", 0, quartic_trichotomy},
      {12, "classical integration", 0, classical_integration},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && seconds >= c.time_limit_s) {
      o.passed = false;
      o.detail = "took " + num(seconds) + " s, limit " + num(c.time_limit_s) + " s";
    }
    if (!o.passed) ++failures;
    std::printf("%s criterion %d: %s (%.3f s)%s%s\n", o.passed ? "PASS" : "FAIL", c.id, c.name.c_str(), seconds,
                o.detail.empty() ? "" : " - ", o.detail.c_str());
  }
  std::printf("%s: %d/%zu criteria passed\n", failures == 0 ? "PASS" : "FAIL",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
