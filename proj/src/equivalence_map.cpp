#include "ptqao/equivalence_map.hpp"

#include <stdexcept>

#include "ptqao/errors.hpp"

namespace ptqao {

namespace {

LambdaCoefficient scalar(const Rational& q) { return LambdaCoefficient(GaussianRational(q)); }

WeylOperator cubic_perturbation(const ProblemParams& params) {
  return WeylOperator::term(3, 0, LambdaCoefficient(GaussianRational(Rational(0), params.beta)));
}

}  // namespace

WeylOperator PdmDecomposition::reassemble() const {
  const WeylOperator p = WeylOperator::p();
  return p * mass_correction * p * scalar(Rational(1, 2)) + effective_potential;
}

bool PdmDecomposition::mass_is_even() const {
  for (const auto& [m, c] : mass_correction.terms()) {
    if (m.x_pow % 2 != 0) return false;
  }
  return true;
}

QuarticClassification classify_quartic(const ProblemParams& params) {
  Rational d = 3 * params.beta * params.beta - 4 * params.alpha * params.gamma;
  const int s = sgn(d);
  return {s > 0 ? QuarticKind::attractive : (s == 0 ? QuarticKind::null : QuarticKind::repulsive), std::move(d)};
}

std::string to_string(QuarticKind kind) {
  switch (kind) {
    case QuarticKind::attractive: return "attractive";
    case QuarticKind::null: return "null";
    case QuarticKind::repulsive: return "repulsive";
  }
  return "?";
}

WeylOperator h_order2(const ProblemParams& params, const WeylOperator& q1) {
  const WeylOperator h2 = WeylOperator::term(4, 0, scalar(-params.gamma));
  return h2 + commutator(cubic_perturbation(params), q1) * scalar(Rational(1, 4));
}

WeylOperator h_order4(const ProblemParams& params, const WeylOperator& q1, const WeylOperator& q3) {
  const WeylOperator h1 = cubic_perturbation(params);
  const WeylOperator nested = commutator(commutator(commutator(h1, q1), q1), q1);
  return commutator(h1, q3) * scalar(Rational(1, 4)) - nested * scalar(Rational(1, 192));
}

PdmDecomposition extract_pdm(const WeylOperator& h2) {
  if (h2.max_p_power() > 2) throw DegreeError("PDM split needs pPow <= 2");
  PdmDecomposition out;
  for (const auto& [m, c] : h2.terms()) {
    if (m.p_pow == 2) out.mass_correction.add_term({m.x_pow, 0}, c * GaussianRational(2));
  }
  const WeylOperator p = WeylOperator::p();
  out.effective_potential = h2 - p * out.mass_correction * p * scalar(Rational(1, 2));
  if (out.effective_potential.max_p_power() > 0) {
    throw ResidualError("h2 minus the kinetic PDM term still contains P: " + to_string(out.effective_potential));
  }
  return out;
}

Polynomial as_x_polynomial(const WeylOperator& a) {
  if (a.max_p_power() > 0 || !a.is_lambda_free()) {
    throw std::invalid_argument("operator is not a λ-free polynomial in X: " + to_string(a));
  }
  Polynomial out;
  for (const auto& [m, c] : a.terms()) out += Polynomial::monomial(m.x_pow, c.constant_term());
  return out;
}

std::vector<Polynomial> w_functions(const SDecomposition& s, const ProblemParams& params) {
  const Polynomial v = cubic_potential(params);
  std::vector<Polynomial> w;
  for (int k = 0; k <= 4; ++k) {
    Polynomial wk;
    for (int j = k + 1; j < 4; ++j) {
      wk += s.s[static_cast<std::size_t>(j)] * v.derivative(j - k) * GaussianRational(Rational(binomial(j, k)));
    }
    w.push_back(std::move(wk));
  }
  return w;
}

std::vector<Polynomial> w_relation_residuals(const std::vector<Polynomial>& w, const PdmDecomposition& pdm,
                                             const ProblemParams& params) {
  const Polynomial mass = as_x_polynomial(pdm.mass_correction);
  const Polynomial veff = as_x_polynomial(pdm.effective_potential);
  std::vector<Polynomial> r;
  for (std::size_t k = 0; k < w.size(); ++k) {
    Polynomial expected;
    if (k == 0) expected = (veff + quartic_potential(params)) * GaussianRational(-4);
    if (k == 1) expected = mass.derivative() * GaussianRational(2);
    if (k == 2) expected = mass * GaussianRational(2);
    r.push_back(w[k] - expected);
  }
  return r;
}

namespace {

EpsilonSeries observable(const WeylOperator& o, const EpsilonSeries& q, int order) {
  if (order > 3) throw std::invalid_argument("physical operators beyond ε^3 need Q5, which is not computed");
  EpsilonSeries base(order);
  base.add(0, o);
  return bch_conjugate(base, q, Rational(1, 2), order);
}

}  // namespace

EpsilonSeries physical_position(const EpsilonSeries& q, int order) { return observable(WeylOperator::x(), q, order); }

EpsilonSeries physical_momentum(const EpsilonSeries& q, int order) { return observable(WeylOperator::p(), q, order); }

EpsilonSeries pseudo_hermiticity_residual(const EpsilonSeries& h, const EpsilonSeries& q, int order) {
  if (order > 4) throw std::invalid_argument("pseudo-Hermiticity residual is only defined through ε^4");
  return adjoint(h.truncated(order)) - bch_conjugate(h, -q, Rational(1), order);
}

EquivalenceResult assemble_h(const ProblemParams& params, int max_order) {
  if (max_order != 2 && max_order != 4) throw std::invalid_argument("max order must be 2 or 4");
  EquivalenceResult out;
  out.q1 = solve_q1(params);
  if (max_order == 4) out.q3 = solve_q3(params, out.q1);
  const EpsilonSeries q = metric_generator(out.q1, out.q3, max_order == 4).truncated(max_order);
  out.h = bch_conjugate(build_hamiltonian(params, max_order), q, Rational(-1, 2), max_order);
  for (const auto& [k, a] : out.h.orders()) {
    if (k % 2 != 0) throw std::logic_error("odd ε-order " + std::to_string(k) + " survived in h");
    if (!is_hermitian(a)) throw std::logic_error("h at ε^" + std::to_string(k) + " is not Hermitian");
    if (a.has_negative_lambda()) throw std::logic_error("h at ε^" + std::to_string(k) + " has negative λ-powers");
  }
  return out;
}

}  // namespace ptqao
