#include "ptqao/weyl_operator.hpp"

#include <algorithm>
#include <tuple>
#include <vector>

namespace ptqao {

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

mpz_class factorial(unsigned long n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

namespace {

// k! C(a,k) C(b,k) · unit^k
GaussianRational contraction_weight(int a, int b, int k, const GaussianRational& unit) {
  const mpz_class w = factorial(k) * binomial(a, k) * binomial(b, k);
  return GaussianRational(Rational(w)) * pow(unit, k);
}

template <typename Terms>
void add_into(Terms& terms, const Monomial& m, const LambdaCoefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

const GaussianRational kMinusI{Rational(0), Rational(-1)};

}  // namespace

// --- WeylOperator -----------------------------------------------------------

WeylOperator::WeylOperator(const LambdaCoefficient& scalar) { add_term({0, 0}, scalar); }

WeylOperator WeylOperator::term(int x_pow, int p_pow, const LambdaCoefficient& c) {
  WeylOperator out;
  out.add_term({x_pow, p_pow}, c);
  return out;
}

LambdaCoefficient WeylOperator::coefficient(int x_pow, int p_pow) const {
  auto it = terms_.find({x_pow, p_pow});
  return it == terms_.end() ? LambdaCoefficient() : it->second;
}

int WeylOperator::max_p_power() const {
  int out = 0;
  for (const auto& [m, c] : terms_) out = std::max(out, m.p_pow);
  return out;
}

int WeylOperator::max_x_power() const {
  int out = 0;
  for (const auto& [m, c] : terms_) out = std::max(out, m.x_pow);
  return out;
}

int WeylOperator::degree() const {
  int out = 0;
  for (const auto& [m, c] : terms_) out = std::max(out, m.degree());
  return out;
}

bool WeylOperator::has_negative_lambda() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& kv) { return *kv.second.min_power() < 0; });
}

bool WeylOperator::is_lambda_free() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.is_lambda_free(); });
}

void WeylOperator::add_term(const Monomial& m, const LambdaCoefficient& c) { add_into(terms_, m, c); }

WeylOperator& WeylOperator::operator+=(const WeylOperator& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

WeylOperator& WeylOperator::operator-=(const WeylOperator& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

WeylOperator& WeylOperator::operator*=(const LambdaCoefficient& c) {
  Terms scaled;
  for (const auto& [m, v] : terms_) add_into(scaled, m, v * c);
  terms_ = std::move(scaled);
  return *this;
}

WeylOperator operator*(const WeylOperator& a, const WeylOperator& b) {
  WeylOperator out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      const LambdaCoefficient cc = ca * cb;
      // X^a P^b X^c P^d: only the inner P^b X^c needs reordering.
      const int kmax = std::min(ma.p_pow, mb.x_pow);
      for (int k = 0; k <= kmax; ++k) {
        const LambdaCoefficient w = LambdaCoefficient::monomial(k, contraction_weight(ma.p_pow, mb.x_pow, k, kMinusI));
        out.add_term({ma.x_pow + mb.x_pow - k, ma.p_pow + mb.p_pow - k}, cc * w);
      }
    }
  }
  return out;
}

// --- PhaseSpacePolynomial ---------------------------------------------------

LambdaCoefficient PhaseSpacePolynomial::coefficient(int x_pow, int p_pow) const {
  auto it = terms_.find({x_pow, p_pow});
  return it == terms_.end() ? LambdaCoefficient() : it->second;
}

void PhaseSpacePolynomial::add_term(const Monomial& m, const LambdaCoefficient& c) { add_into(terms_, m, c); }

PhaseSpacePolynomial PhaseSpacePolynomial::conj() const {
  PhaseSpacePolynomial out;
  for (const auto& [m, c] : terms_) out.add_term(m, c.conj());
  return out;
}

PhaseSpacePolynomial PhaseSpacePolynomial::reflect(int x_sign, int p_sign) const {
  PhaseSpacePolynomial out;
  for (const auto& [m, c] : terms_) {
    const bool flip = ((x_sign < 0) && (m.x_pow % 2 != 0)) != ((p_sign < 0) && (m.p_pow % 2 != 0));
    out.add_term(m, flip ? -c : c);
  }
  return out;
}

PhaseSpacePolynomial PhaseSpacePolynomial::lambda_constant_part() const {
  PhaseSpacePolynomial out;
  for (const auto& [m, c] : terms_) out.add_term(m, LambdaCoefficient(c.constant_term()));
  return out;
}

PhaseSpacePolynomial& PhaseSpacePolynomial::operator+=(const PhaseSpacePolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

PhaseSpacePolynomial& PhaseSpacePolynomial::operator-=(const PhaseSpacePolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

// --- operations -------------------------------------------------------------

WeylOperator reorder(int p_pow, int x_pow) {
  return WeylOperator::term(0, p_pow) * WeylOperator::term(x_pow, 0);
}

WeylOperator pow(const WeylOperator& a, unsigned n) {
  WeylOperator out = WeylOperator::identity();
  for (unsigned i = 0; i < n; ++i) out = out * a;
  return out;
}

WeylOperator commutator(const WeylOperator& a, const WeylOperator& b) { return a * b - b * a; }

WeylOperator anticommutator(const WeylOperator& a, const WeylOperator& b) { return a * b + b * a; }

WeylOperator adjoint(const WeylOperator& a) {
  WeylOperator out;
  for (const auto& [m, c] : a.terms()) {
    // (c X^a P^b)† = conj(c) P^b X^a
    out += reorder(m.p_pow, m.x_pow) * c.conj();
  }
  return out;
}

bool is_hermitian(const WeylOperator& a) { return adjoint(a) == a; }

WeylOperator pt_transform(const WeylOperator& a) {
  WeylOperator out;
  for (const auto& [m, c] : a.terms()) {
    LambdaCoefficient t = c.conj();
    if (m.x_pow % 2 != 0) t = -t;
    out.add_term(m, t);
  }
  return out;
}

bool is_pt_symmetric(const WeylOperator& a) { return pt_transform(a) == a; }

PhaseSpacePolynomial weyl_symbol(const WeylOperator& a) {
  const GaussianRational half_i{Rational(0), Rational(1, 2)};
  PhaseSpacePolynomial out;
  for (const auto& [m, c] : a.terms()) {
    for (int k = 0; k <= std::min(m.x_pow, m.p_pow); ++k) {
      const auto w = LambdaCoefficient::monomial(k, contraction_weight(m.x_pow, m.p_pow, k, half_i));
      out.add_term({m.x_pow - k, m.p_pow - k}, c * w);
    }
  }
  return out;
}

WeylOperator weyl_quantize(int x_pow, int p_pow) {
  const GaussianRational minus_half_i{Rational(0), Rational(-1, 2)};
  WeylOperator out;
  for (int k = 0; k <= std::min(x_pow, p_pow); ++k) {
    out.add_term({x_pow - k, p_pow - k},
                 LambdaCoefficient::monomial(k, contraction_weight(x_pow, p_pow, k, minus_half_i)));
  }
  return out;
}

WeylOperator weyl_quantize(const PhaseSpacePolynomial& symbol) {
  WeylOperator out;
  for (const auto& [m, c] : symbol.terms()) out += weyl_quantize(m.x_pow, m.p_pow) * c;
  return out;
}

WeylOperator substitute_lambda(const WeylOperator& a, const Rational& v) {
  WeylOperator out;
  for (const auto& [m, c] : a.terms()) out.add_term(m, LambdaCoefficient(c.evaluate(v)));
  return out;
}

namespace {

template <typename Terms>
std::string format_terms(const Terms& terms, LambdaDisplay display, char x_name, char p_name) {
  struct Entry {
    Monomial m;
    int lambda_power;
    const GaussianRational* coef;
  };
  std::vector<Entry> entries;
  for (const auto& [m, c] : terms) {
    for (const auto& [k, v] : c.terms()) entries.push_back({m, k, &v});
  }
  if (entries.empty()) return "0";
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return std::tuple(-a.m.degree(), -a.m.x_pow, a.lambda_power) <
           std::tuple(-b.m.degree(), -b.m.x_pow, b.lambda_power);
  });
  std::string out;
  for (const Entry& e : entries) {
    if (!out.empty()) out += " + ";
    out += '(';
    out += to_string(*e.coef);
    out += ')';
    if (display == LambdaDisplay::always || e.lambda_power != 0) {
      out += "*l^" + std::to_string(e.lambda_power);
    }
    out += '*';
    out += x_name;
    out += '^' + std::to_string(e.m.x_pow) + '*';
    out += p_name;
    out += '^' + std::to_string(e.m.p_pow);
  }
  return out;
}

}  // namespace

std::string to_string(const WeylOperator& a, LambdaDisplay display) {
  return format_terms(a.terms(), display, 'X', 'P');
}

std::string to_string(const PhaseSpacePolynomial& a, LambdaDisplay display) {
  return format_terms(a.terms(), display, 'x', 'p');
}

}  // namespace ptqao
