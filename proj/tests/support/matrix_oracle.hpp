#pragma once

#include <cmath>
#include <complex>

#include <Eigen/Dense>

#include "ptqao/weyl_operator.hpp"

namespace ptqao::testing {

// Test-only truncated ladder representation at λ = 1, built without the
// library's spectral module: X = (a + a†)/√2, P = i(a† − a)/√2 (ω = 1).
struct LadderOracle {
  using Matrix = Eigen::MatrixXcd;

  int dim;
  Matrix x;
  Matrix p;

  explicit LadderOracle(int dimension) : dim(dimension), x(Matrix::Zero(dim, dim)), p(Matrix::Zero(dim, dim)) {
    for (int k = 0; k + 1 < dim; ++k) {
      const double s = std::sqrt((k + 1) / 2.0);
      x(k, k + 1) = x(k + 1, k) = s;
      p(k, k + 1) = std::complex<double>(0, -s);
      p(k + 1, k) = std::complex<double>(0, s);
    }
  }

  Matrix power(const Matrix& m, int n) const {
    Matrix r = Matrix::Identity(dim, dim);
    for (int k = 0; k < n; ++k) r = r * m;
    return r;
  }

  /// Matrix of a normal-ordered operator after λ = 1.
  Matrix of(const WeylOperator& a) const {
    Matrix r = Matrix::Zero(dim, dim);
    const WeylOperator numeric = substitute_lambda(a, 1);
    for (const auto& [m, c] : numeric.terms()) {
      const GaussianRational v = c.constant_term();
      r += std::complex<double>(v.re.get_d(), v.im.get_d()) * power(x, m.x_pow) * power(p, m.p_pow);
    }
    return r;
  }

  /// max |a − b| / max |b| over the leading n × n block.
  static double relative_error(const Matrix& a, const Matrix& b, int n) {
    const double scale = b.topLeftCorner(n, n).cwiseAbs().maxCoeff();
    return (a - b).topLeftCorner(n, n).cwiseAbs().maxCoeff() / (scale == 0 ? 1.0 : scale);
  }
};

}  // namespace ptqao::testing
