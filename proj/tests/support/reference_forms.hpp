#pragma once

#include "ptqao/classical_limit.hpp"

namespace ptqao::testing {

// Reference h⁽⁴⁾, x_phys, p_phys and H_c transcribed with μ₀ = ℓ = 1 and ħ → λ.
// Anticommutators are expanded here through the operator product only.
struct ReferenceForms {
  Rational a;
  Rational b;
  Rational c;

  explicit ReferenceForms(const ProblemParams& p) : a(p.alpha), b(p.beta), c(p.gamma) {}

  static WeylOperator x(int n) { return WeylOperator::term(n, 0); }
  static WeylOperator p(int n) { return WeylOperator::term(0, n); }
  static WeylOperator anti(const WeylOperator& u, const WeylOperator& v) { return u * v + v * u; }
  static LambdaCoefficient r(const Rational& q) { return LambdaCoefficient(GaussianRational(q)); }
  static LambdaCoefficient i(const Rational& q) { return LambdaCoefficient(GaussianRational(Rational(0), q)); }
  static LambdaCoefficient hbar2(const Rational& q) { return LambdaCoefficient::monomial(2, GaussianRational(q)); }

  static Rational pw(const Rational& q, int n) {
    Rational out = 1;
    for (int k = 0; k < n; ++k) out *= q;
    return out;
  }

  WeylOperator h4() const {
    const WeylOperator first = p(6) - anti(x(2), p(4)) * r(18 * a) - anti(x(4), p(2)) * r(51 * a * a / 2) -
                               x(6) * r(14 * pw(a, 3)) - p(2) * hbar2(81 * a) - x(2) * hbar2(138 * a * a);
    const WeylOperator second = anti(x(2), p(4)) * r(Rational(1, 2)) + anti(x(4), p(2)) * r(3 * a / 2) +
                                x(6) * r(a * a) + p(2) * hbar2(2) + x(2) * hbar2(8 * a);
    return first * r(pw(b, 4) / (32 * pw(a, 6))) + second * r(3 * b * b * c / (2 * pw(a, 4)));
  }

  EpsilonSeries x_phys() const {
    EpsilonSeries s(3);
    s.add(0, x(1));
    s.add(1, (p(2) + x(2) * r(a)) * i(b / (2 * a * a)));
    s.add(2, (anti(x(1), p(2)) - x(3) * r(2 * a)) * r(b * b / (8 * pw(a, 3))));
    const WeylOperator g1 = p(4) * r(5) + anti(x(2), p(2)) * r(6 * a) + (x(4) * r(5 * a) + hbar2(3)) * r(a);
    const WeylOperator g2 = p(4) * r(2) + anti(x(2), p(2)) * r(3 * a) + (x(4) * r(a) + hbar2(1)) * r(2 * a);
    s.add(3, g1 * i(-pw(b, 3) / (8 * pw(a, 5))) + g2 * i(b * c / (2 * pw(a, 4))));
    return s;
  }

  EpsilonSeries p_phys() const {
    EpsilonSeries s(3);
    s.add(0, p(1));
    s.add(1, anti(x(1), p(1)) * i(-b / (2 * a)));
    s.add(2, (p(3) * r(2) - anti(x(2), p(1)) * r(a)) * r(b * b / (8 * pw(a, 3))));
    s.add(3, (anti(x(1), p(3)) + anti(x(3), p(1)) * r(4 * a)) * i(pw(b, 3) / (4 * pw(a, 4))) -
                 (anti(x(1), p(3)) + anti(x(3), p(1)) * r(2 * a)) * i(b * c / pw(a, 3)));
    return s;
  }

  PhaseSpacePolynomial hc(int order) const {
    PhaseSpacePolynomial out;
    auto add = [&out](int m, int n, const Rational& q) { out.add_term({m, n}, r(q)); };
    if (order == 0) {
      add(0, 2, Rational(1, 2));
      add(2, 0, a);
    } else if (order == 2) {
      add(2, 2, 3 * b * b / (4 * a * a));
      add(4, 0, 3 * b * b / (4 * a) - c);
    } else if (order == 4) {
      const Rational f = pw(b, 4) / (32 * pw(a, 6));
      const Rational g = 3 * b * b * c / (2 * pw(a, 4));
      add(0, 6, f);
      add(2, 4, -36 * a * f + g);
      add(4, 2, -51 * a * a * f + 3 * a * g);
      add(6, 0, -14 * pw(a, 3) * f + a * a * g);
    }
    return out;
  }
};

}  // namespace ptqao::testing
