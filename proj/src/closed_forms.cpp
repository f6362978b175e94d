#include "ptqao/closed_forms.hpp"

namespace ptqao::closed_forms {

namespace {

LambdaCoefficient real(const Rational& q) { return LambdaCoefficient(GaussianRational(q)); }
LambdaCoefficient imag(const Rational& q) { return LambdaCoefficient(GaussianRational(Rational(0), q)); }
LambdaCoefficient lambda_pow(int k, const Rational& q = 1) { return LambdaCoefficient::monomial(k, GaussianRational(q)); }

WeylOperator X(int n) { return WeylOperator::term(n, 0); }
WeylOperator P(int n) { return WeylOperator::term(0, n); }
WeylOperator one() { return WeylOperator::identity(); }

WeylOperator anti(const WeylOperator& a, const WeylOperator& b) { return anticommutator(a, b); }

Rational pow(const Rational& q, int n) {
  Rational r = 1;
  for (int k = 0; k < n; ++k) r *= q;
  return r;
}

void add_phase_term(PhaseSpacePolynomial& poly, int a, int b, const Rational& c) {
  poly.add_term({a, b}, real(c));
}

}  // namespace

WeylOperator q1(const ProblemParams& prm) {
  const Rational& a = prm.alpha;
  const Rational& b = prm.beta;
  return X(1) * imag(b / a) + X(2) * P(1) * lambda_pow(-1, -b / a) + P(3) * lambda_pow(-1, -b / (3 * a * a));
}

SDecomposition s_values(const ProblemParams& prm) {
  const Rational& a = prm.alpha;
  const Rational& b = prm.beta;
  SDecomposition s;
  s.s[0] = Polynomial::monomial(1, Rational(-b / a));
  s.s[1] = Polynomial::monomial(2, Rational(-b / a));
  s.s[3] = Polynomial(GaussianRational(Rational(b / (3 * a * a))));
  return s;
}

PdmDecomposition pdm_order2(const ProblemParams& prm) {
  const Rational& a = prm.alpha;
  const Rational& b = prm.beta;
  const Rational& c = prm.gamma;
  PdmDecomposition out;
  out.mass_correction = X(2) * real(3 * b * b / (2 * a * a));
  out.effective_potential = X(4) * real((3 * b * b - 4 * a * c) / (4 * a)) + one() * lambda_pow(2, -b * b / (2 * a * a));
  return out;
}

WeylOperator h_order2(const ProblemParams& params) { return pdm_order2(params).reassemble(); }

WeylOperator h_order4(const ProblemParams& prm) {
  const Rational& a = prm.alpha;
  const Rational& b = prm.beta;
  const Rational& c = prm.gamma;
  const WeylOperator quartic_family =
      P(6) - anti(X(2), P(4)) * real(18 * a) - anti(X(4), P(2)) * real(Rational(51, 2) * a * a) -
      X(6) * real(14 * pow(a, 3)) - P(2) * lambda_pow(2, 81 * a) - X(2) * lambda_pow(2, 138 * a * a);
  const WeylOperator coupling_family = anti(X(2), P(4)) * real(Rational(1, 2)) +
                                       anti(X(4), P(2)) * real(Rational(3, 2) * a) + X(6) * real(a * a) +
                                       P(2) * lambda_pow(2, 2) + X(2) * lambda_pow(2, 8 * a);
  return quartic_family * real(pow(b, 4) / (32 * pow(a, 6))) + coupling_family * real(3 * b * b * c / (2 * pow(a, 4)));
}

EpsilonSeries physical_position(const ProblemParams& prm) {
  const Rational& a = prm.alpha;
  const Rational& b = prm.beta;
  const Rational& c = prm.gamma;
  EpsilonSeries x(3);
  x.add(0, X(1));
  x.add(1, (P(2) + X(2) * real(a)) * imag(b / (2 * a * a)));
  x.add(2, (anti(X(1), P(2)) - X(3) * real(2 * a)) * real(b * b / (8 * pow(a, 3))));
  const WeylOperator cubic_group =
      P(4) * real(5) + anti(X(2), P(2)) * real(6 * a) + (X(4) * real(5 * a) + one() * lambda_pow(2, 3)) * real(a);
  const WeylOperator coupling_group =
      P(4) * real(2) + anti(X(2), P(2)) * real(3 * a) + (X(4) * real(a) + one() * lambda_pow(2)) * real(2 * a);
  x.add(3, cubic_group * imag(-pow(b, 3) / (8 * pow(a, 5))) + coupling_group * imag(b * c / (2 * pow(a, 4))));
  return x;
}

EpsilonSeries physical_momentum(const ProblemParams& prm) {
  const Rational& a = prm.alpha;
  const Rational& b = prm.beta;
  const Rational& c = prm.gamma;
  EpsilonSeries p(3);
  p.add(0, P(1));
  p.add(1, anti(X(1), P(1)) * imag(-b / (2 * a)));
  p.add(2, (P(3) * real(2) - anti(X(2), P(1)) * real(a)) * real(b * b / (8 * pow(a, 3))));
  const WeylOperator cubic_group = anti(X(1), P(3)) + anti(X(3), P(1)) * real(4 * a);
  const WeylOperator coupling_group = anti(X(1), P(3)) + anti(X(3), P(1)) * real(2 * a);
  p.add(3, cubic_group * imag(pow(b, 3) / (4 * pow(a, 4))) - coupling_group * imag(b * c / pow(a, 3)));
  return p;
}

ClassicalHamiltonian classical(const ProblemParams& prm) {
  const Rational& a = prm.alpha;
  const Rational& b = prm.beta;
  const Rational& c = prm.gamma;
  ClassicalHamiltonian hc;

  PhaseSpacePolynomial h0;
  add_phase_term(h0, 0, 2, Rational(1, 2));
  add_phase_term(h0, 2, 0, a);
  hc.orders.emplace(0, h0);

  PhaseSpacePolynomial h2;
  const Rational k2 = 3 * b * b / (4 * a * a);
  add_phase_term(h2, 2, 2, k2);
  add_phase_term(h2, 4, 0, k2 * a - c);
  hc.orders.emplace(2, h2);

  PhaseSpacePolynomial h4;
  const Rational f = pow(b, 4) / (32 * pow(a, 6));
  const Rational g = 3 * b * b * c / (2 * pow(a, 4));
  add_phase_term(h4, 0, 6, f);
  add_phase_term(h4, 2, 4, -36 * a * f);
  add_phase_term(h4, 4, 2, -51 * a * a * f);
  add_phase_term(h4, 6, 0, -14 * pow(a, 3) * f);
  add_phase_term(h4, 2, 4, g);
  add_phase_term(h4, 4, 2, 3 * a * g);
  add_phase_term(h4, 6, 0, a * a * g);
  if (!h4.is_zero()) hc.orders.emplace(4, h4);
  return hc;
}

}  // namespace ptqao::closed_forms
