#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ptqao {

using Rational = mpq_class;

/// Builds num/den in canonical form. Throws DivisionByZero when den == 0.
Rational make_rational(long num, long den = 1);

/// Parses "n" or "n/d" (optional leading sign). Throws std::invalid_argument on
/// malformed text and DivisionByZero on a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// Exact element of Q(i). Both parts are kept canonical by mpq_class.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational real) : re(std::move(real)) {}  // NOLINT: implicit by design of the field embedding
  GaussianRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}
  GaussianRational(long real) : re(real) {}  // NOLINT

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

GaussianRational pow(const GaussianRational& base, unsigned exponent);

/// Canonical "re" or "re+imi" / "re-imi" text, e.g. "-1/3", "0+1i", "1/2-3i".
std::string to_string(const GaussianRational& z);

}  // namespace ptqao
