#include <doctest.h>

#include <random>

#include "ptqao/closed_forms.hpp"
#include "ptqao/equivalence_map.hpp"
#include "ptqao/errors.hpp"
#include "support/generators.hpp"

using namespace ptqao;

namespace {

PdmDecomposition at_lambda_one(const PdmDecomposition& d) {
  return {substitute_lambda(d.mass_correction, 1), substitute_lambda(d.effective_potential, 1)};
}

const GaussianRational I = GaussianRational::i();

LambdaCoefficient lam(int k, GaussianRational c = 1) { return LambdaCoefficient::monomial(k, c); }
WeylOperator XP(int a, int b, LambdaCoefficient c = 1) { return WeylOperator::term(a, b, c); }
GaussianRational re(const Rational& r) { return GaussianRational(r); }
GaussianRational im(const Rational& r) { return GaussianRational(Rational(0), r); }

ProblemParams params(long a, long b, long c) {
  ProblemParams p;
  p.alpha = a;
  p.beta = b;
  p.gamma = c;
  return p;
}

Rational pw(const Rational& q, int n) {
  Rational r = 1;
  for (int k = 0; k < n; ++k) r *= q;
  return r;
}

bool jointly_even(const WeylOperator& a) {
  for (const auto& [m, c] : a.terms()) {
    if ((m.x_pow + m.p_pow) % 2 != 0) return false;
  }
  return true;
}

struct Solved {
  ProblemParams p;
  WeylOperator q1;
  WeylOperator q3;
  EpsilonSeries q;
};

Solved solve_all(const ProblemParams& p) {
  const WeylOperator q1 = solve_q1(p);
  const WeylOperator q3 = solve_q3(p, q1);
  return {p, q1, q3, metric_generator(q1, q3)};
}

}  // namespace

TEST_CASE("h_order2 examples") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const ProblemParams p = testing::random_params(rng);
    const WeylOperator h2 = h_order2(p, solve_q1(p));
    // ½P·(3β²/(2α²))X²·P + ((3β²−4αγ)/(4α))X⁴ − λ²β²/(2α²), expanded by hand
    const Rational m = 3 * p.beta * p.beta / (2 * p.alpha * p.alpha);
    const WeylOperator mass = XP(0, 1) * XP(2, 0, re(m)) * XP(0, 1) * LambdaCoefficient(re(make_rational(1, 2)));
    const WeylOperator expected = mass + XP(4, 0, re((3 * p.beta * p.beta - 4 * p.alpha * p.gamma) / (4 * p.alpha))) +
                                  XP(0, 0, lam(2, re(-p.beta * p.beta / (2 * p.alpha * p.alpha))));
    CHECK(h2 == expected);
    CHECK(h2 == closed_forms::h_order2(p));
    CHECK(is_hermitian(h2));
    CHECK(is_pt_symmetric(h2));
    CHECK_FALSE(h2.has_negative_lambda());

    ProblemParams flipped = p;
    flipped.beta = -p.beta;
    CHECK(h_order2(flipped, solve_q1(flipped)) == h2);
  }
  const ProblemParams null = params(1, 2, 3);
  CHECK(h_order2(null, solve_q1(null)).coefficient(4, 0).is_zero());
}

TEST_CASE("h_order4 examples") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const Solved s = solve_all(testing::random_params(rng));
    const Rational& a = s.p.alpha;
    const Rational& b = s.p.beta;
    const Rational& c = s.p.gamma;
    const WeylOperator h4 = h_order4(s.p, s.q1, s.q3);
    CHECK(is_hermitian(h4));
    CHECK(h4 == closed_forms::h_order4(s.p));
    CHECK(h4.coefficient(0, 6) == LambdaCoefficient(re(pw(b, 4) / (32 * pw(a, 6)))));
    CHECK(h4.coefficient(6, 0) ==
          LambdaCoefficient(re(-14 * pw(a, 3) * pw(b, 4) / (32 * pw(a, 6)) + a * a * 3 * b * b * c / (2 * pw(a, 4)))));
  }
  // γ = 0: only the β⁴ family remains, i.e. h⁽⁴⁾ scales as β⁴
  const Solved one = solve_all(params(1, 1, 0));
  const Solved two = solve_all(params(1, 2, 0));
  CHECK(h_order4(two.p, two.q1, two.q3) == h_order4(one.p, one.q1, one.q3) * LambdaCoefficient(re(16)));
  CHECK(h_order4(one.p, one.q1, one.q3) == closed_forms::h_order4(one.p));
}

TEST_CASE("extract_pdm examples") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const ProblemParams p = testing::random_params(rng);
    const PdmDecomposition d = extract_pdm(h_order2(p, solve_q1(p)));
    const PdmDecomposition golden = closed_forms::pdm_order2(p);
    CHECK(d.mass_correction == golden.mass_correction);
    CHECK(d.effective_potential == golden.effective_potential);
    CHECK(d.mass_is_even());
    CHECK(d.reassemble() == h_order2(p, solve_q1(p)));
  }

  const PdmDecomposition pure = extract_pdm(XP(4, 0));
  CHECK(pure.mass_correction.is_zero());
  CHECK(pure.effective_potential == XP(4, 0));

  const WeylOperator odd = anticommutator(XP(1, 0), XP(0, 2)) * LambdaCoefficient(re(make_rational(1, 2)));
  PdmDecomposition flagged;
  REQUIRE_NOTHROW(flagged = extract_pdm(odd));
  CHECK_FALSE(flagged.mass_is_even());
  CHECK(flagged.reassemble() == odd);

  CHECK_THROWS_AS(extract_pdm(XP(0, 3)), DegreeError);
  CHECK_THROWS_AS(extract_pdm(XP(2, 1)), ResidualError);
}

TEST_CASE("quartic classification") {
  CHECK(classify_quartic(params(1, 1, 1)).kind == QuarticKind::repulsive);
  CHECK(classify_quartic(params(1, 2, 3)).kind == QuarticKind::null);
  CHECK(classify_quartic(params(1, 2, 1)).kind == QuarticKind::attractive);
  CHECK(classify_quartic(params(1, 2, 3)).discriminant == 0);
  CHECK(to_string(QuarticKind::null) == "null");

  std::mt19937 rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const ProblemParams p = testing::random_params(rng);
    const QuarticClassification c = classify_quartic(p);
    CHECK(c.discriminant == 3 * p.beta * p.beta - 4 * p.alpha * p.gamma);
    const LambdaCoefficient x4 = extract_pdm(h_order2(p, solve_q1(p))).effective_potential.coefficient(4, 0);
    const int sign = sgn(x4.constant_term().re * 4 * p.alpha);
    CHECK(sign == sgn(c.discriminant));
    CHECK((c.kind == QuarticKind::attractive) == (sign > 0));
    CHECK((c.kind == QuarticKind::null) == (sign == 0));
    CHECK((c.kind == QuarticKind::repulsive) == (sign < 0));
  }
}

TEST_CASE("w_functions examples") {
  const ProblemParams p = params(1, 1, 1);
  const SDecomposition s = closed_forms::s_values(p);
  const std::vector<Polynomial> w = w_functions(s, p);
  REQUIRE(w.size() == 5);
  CHECK(w[2] == Polynomial::monomial(2, 3));
  CHECK(w[3].is_zero());
  CHECK(w[4].is_zero());

  const PdmDecomposition pdm = at_lambda_one(extract_pdm(closed_forms::h_order2(p)));
  Polynomial check = w[0];
  Polynomial v = as_x_polynomial(pdm.effective_potential) + Polynomial::monomial(4, re(p.gamma));
  v *= GaussianRational(4);
  check += v;
  CHECK(check.is_zero());

  std::mt19937 rng(15);
  for (int trial = 0; trial < 10; ++trial) {
    const ProblemParams q = testing::random_params(rng);
    const SDecomposition sq = s_decomposition(substitute_lambda(solve_q1(q), 1));
    const PdmDecomposition d = at_lambda_one(extract_pdm(h_order2(q, solve_q1(q))));
    for (const Polynomial& r : w_relation_residuals(w_functions(sq, q), d, q)) CHECK(r.is_zero());
  }
}

TEST_CASE("physical operators examples") {
  std::mt19937 rng(16);
  for (int trial = 0; trial < 6; ++trial) {
    const Solved s = solve_all(testing::random_params(rng));
    const Rational& a = s.p.alpha;
    const Rational& b = s.p.beta;
    const EpsilonSeries x = physical_position(s.q);
    const EpsilonSeries p = physical_momentum(s.q);
    CHECK(x.at(0) == XP(1, 0));
    CHECK(p.at(0) == XP(0, 1));
    CHECK(x.at(1) == (XP(0, 2) + XP(2, 0, re(a))) * LambdaCoefficient(im(b / (2 * a * a))));
    CHECK(p.at(1) == anticommutator(XP(1, 0), XP(0, 1)) * LambdaCoefficient(im(-b / (2 * a))));
    CHECK(x == closed_forms::physical_position(s.p));
    CHECK(p == closed_forms::physical_momentum(s.p));
  }
  const Solved s = solve_all(params(1, 1, 1));
  CHECK_THROWS(physical_position(s.q, 4));
}

TEST_CASE("physical operators are pseudo-Hermitian and canonical") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 4; ++trial) {
    const Solved s = solve_all(testing::random_params(rng));
    for (const EpsilonSeries& o : {physical_position(s.q), physical_momentum(s.q)}) {
      CHECK(adjoint(o) == bch_conjugate(o, -s.q, 1, 3));
    }
    EpsilonSeries x = physical_position(s.q);
    EpsilonSeries p = physical_momentum(s.q);
    const EpsilonSeries bracket = commutator(x, p);
    CHECK(bracket.at(0) == WeylOperator::lambda() * LambdaCoefficient(I));
    for (int k = 1; k <= 3; ++k) CHECK(bracket.at(k).is_zero());
  }
}

TEST_CASE("pseudo_hermiticity_residual examples") {
  const Solved s = solve_all(params(1, 1, 1));
  const EpsilonSeries h = build_hamiltonian(s.p);
  const EpsilonSeries full = pseudo_hermiticity_residual(h, s.q, 4);
  for (int k = 0; k <= 4; ++k) CHECK(full.at(k).is_zero());

  const EpsilonSeries partial = pseudo_hermiticity_residual(h, metric_generator(s.q1, s.q3, false), 3);
  CHECK_FALSE(partial.at(3).is_zero());

  EpsilonSeries hermitian(4);
  hermitian.add(0, unperturbed_hamiltonian(s.p));
  hermitian.add(2, XP(4, 0));
  const EpsilonSeries trivial = pseudo_hermiticity_residual(hermitian, EpsilonSeries(4), 4);
  for (int k = 0; k <= 4; ++k) CHECK(trivial.at(k).is_zero());
}

TEST_CASE("assemble_h examples and invariants") {
  std::mt19937 rng(18);
  for (int trial = 0; trial < 6; ++trial) {
    const ProblemParams p = testing::random_params(rng);
    const EquivalenceResult r = assemble_h(p, 4);
    CHECK(r.h.at(1).is_zero());
    CHECK(r.h.at(3).is_zero());
    CHECK(r.h.at(0) == unperturbed_hamiltonian(p));
    CHECK(r.h.at(2) == h_order2(p, r.q1));
    CHECK(r.h.at(4) == h_order4(p, r.q1, r.q3));
    for (int k = 0; k <= 4; ++k) {
      CHECK(adjoint(r.h.at(k)) == r.h.at(k));
      CHECK(jointly_even(r.h.at(k)));
      CHECK_FALSE(r.h.at(k).has_negative_lambda());
    }
    CHECK(substitute_lambda(r.h.at(2), 1) == substitute_lambda(closed_forms::h_order2(p), 1));
    CHECK(substitute_lambda(r.h.at(4), 1) == substitute_lambda(closed_forms::h_order4(p), 1));
  }
  const EquivalenceResult second = assemble_h(params(1, 1, 1), 2);
  CHECK(second.q3.is_zero());
  CHECK(second.h.at(2) == closed_forms::h_order2(params(1, 1, 1)));
}
