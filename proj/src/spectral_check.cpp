#include "ptqao/spectral_check.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "ptqao/errors.hpp"

namespace ptqao {

double BasisSpec::omega() const { return std::sqrt(2.0 * alpha); }

void BasisSpec::validate() const {
  if (!(alpha > 0)) throw std::invalid_argument("basis alpha must be positive");
  if (n < 8) throw std::invalid_argument("basis dimension must be at least 8, got " + std::to_string(n));
  if (4 * buffer < n) throw std::invalid_argument("basis buffer must be at least n/4");
}

OscillatorMatrices oscillator_matrices(const BasisSpec& basis) {
  basis.validate();
  const int dim = basis.full_dimension();
  const double w = basis.omega();
  const double x_scale = 1.0 / std::sqrt(2.0 * w);
  const double p_scale = std::sqrt(w / 2.0);
  OscillatorMatrices m{DenseMatrix::Zero(dim, dim), DenseMatrix::Zero(dim, dim)};
  for (int k = 0; k + 1 < dim; ++k) {
    const double s = std::sqrt(static_cast<double>(k + 1));  // <k|a|k+1>
    m.x(k, k + 1) = x_scale * s;
    m.x(k + 1, k) = x_scale * s;
    m.p(k, k + 1) = Complex(0, -p_scale * s);
    m.p(k + 1, k) = Complex(0, p_scale * s);
  }
  return m;
}

MatrixRepresentation::MatrixRepresentation(const BasisSpec& basis) : basis_(basis), mats_(oscillator_matrices(basis)) {}

const DenseMatrix& MatrixRepresentation::x_power(int k) {
  auto it = x_powers_.find(k);
  if (it != x_powers_.end()) return it->second;
  DenseMatrix m = k == 0 ? DenseMatrix::Identity(basis_.full_dimension(), basis_.full_dimension())
                         : DenseMatrix(x_power(k - 1) * mats_.x);
  return x_powers_.emplace(k, std::move(m)).first->second;
}

const DenseMatrix& MatrixRepresentation::p_power(int k) {
  auto it = p_powers_.find(k);
  if (it != p_powers_.end()) return it->second;
  DenseMatrix m = k == 0 ? DenseMatrix::Identity(basis_.full_dimension(), basis_.full_dimension())
                         : DenseMatrix(p_power(k - 1) * mats_.p);
  return p_powers_.emplace(k, std::move(m)).first->second;
}

DenseMatrix MatrixRepresentation::full(const WeylOperator& a) {
  if (!a.is_lambda_free()) throw std::invalid_argument("operator still depends on λ: " + to_string(a));
  const int dim = basis_.full_dimension();
  DenseMatrix out = DenseMatrix::Zero(dim, dim);
  for (const auto& [m, c] : a.terms()) {
    const GaussianRational v = c.constant_term();
    const Complex coef(v.re.get_d(), v.im.get_d());
    if (m.x_pow == 0) {
      out += coef * p_power(m.p_pow);
    } else if (m.p_pow == 0) {
      out += coef * x_power(m.x_pow);
    } else {
      out.noalias() += coef * (x_power(m.x_pow) * p_power(m.p_pow));
    }
  }
  return out;
}

DenseMatrix MatrixRepresentation::truncated(const WeylOperator& a) {
  const int n = basis_.n;
  return full(a).topLeftCorner(n, n);
}

DenseMatrix to_matrix(const WeylOperator& a, const BasisSpec& basis) { return MatrixRepresentation(basis).truncated(a); }

std::vector<double> eigen_hermitian(const DenseMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eigen_hermitian needs a square matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NonConvergence("Hermitian eigensolver did not converge");
  const Eigen::VectorXd& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

std::vector<Complex> eigen_complex(const DenseMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eigen_complex needs a square matrix");
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  if (solver.info() != Eigen::Success) throw NonConvergence("complex eigensolver did not converge");
  const Eigen::VectorXcd& ev = solver.eigenvalues();
  std::vector<Complex> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end(), [](const Complex& a, const Complex& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

std::optional<double> fit_loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("slope fit needs equally many x and y values");
  std::vector<double> lx;
  std::vector<double> ly;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] > 0 && y[k] > 0) {
      lx.push_back(std::log(x[k]));
      ly.push_back(std::log(y[k]));
    }
  }
  if (lx.size() < 2) return std::nullopt;
  const double n = static_cast<double>(lx.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < lx.size(); ++k) {
    sx += lx[k];
    sy += ly[k];
    sxx += lx[k] * lx[k];
    sxy += lx[k] * ly[k];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0) return std::nullopt;
  return (n * sxy - sx * sy) / denom;
}

namespace {

struct SpectralOperators {
  DenseMatrix h0, h1, h2, k2, k4;  // H orders and Hermitian-equivalent corrections
};

SpectralOperators build_operators(const ProblemParams& params, const BasisSpec& basis) {
  const EquivalenceResult eq = assemble_h(params, 4);
  const EpsilonSeries ham = build_hamiltonian(params);
  MatrixRepresentation rep(basis);
  auto at_one = [](const WeylOperator& a) { return substitute_lambda(a, 1); };
  return {rep.truncated(at_one(ham.at(0))), rep.truncated(at_one(ham.at(1))), rep.truncated(at_one(ham.at(2))),
          rep.truncated(at_one(eq.h.at(2))), rep.truncated(at_one(eq.h.at(4)))};
}

SpectralRow compare_at(const SpectralOperators& ops, double eps, int levels) {
  const DenseMatrix h = ops.h0 + eps * ops.h1 + eps * eps * ops.h2;
  const DenseMatrix herm2 = ops.h0 + eps * eps * ops.k2;
  const DenseMatrix herm4 = herm2 + std::pow(eps, 4) * ops.k4;
  const std::vector<Complex> e = eigen_complex(h);
  const std::vector<double> e2 = eigen_hermitian(herm2);
  const std::vector<double> e4 = eigen_hermitian(herm4);
  SpectralRow row{eps, 0, 0, 0};
  for (int k = 0; k < levels; ++k) {
    row.max_imag = std::max(row.max_imag, std::abs(e[k].imag()));
    row.dev_order2 = std::max(row.dev_order2, std::abs(e[k] - e2[k]));
    row.dev_order4 = std::max(row.dev_order4, std::abs(e[k] - e4[k]));
  }
  return row;
}

}  // namespace

SpectralReport spectrum_comparison(const ProblemParams& params, std::span<const double> epsilon_grid, int levels,
                                   const BasisSpec& basis) {
  params.validate();
  basis.validate();
  if (levels < 1 || 8 * levels > basis.n) throw std::invalid_argument("level count must lie in [1, n/8]");
  for (std::size_t k = 0; k < epsilon_grid.size(); ++k) {
    const double e = epsilon_grid[k];
    if (!(e == 0 || (e >= 1e-3 && e <= 0.1))) {
      throw std::invalid_argument("epsilon " + std::to_string(e) + " outside [1e-3, 0.1]");
    }
    if (k > 0 && !(e > epsilon_grid[k - 1])) throw std::invalid_argument("epsilon grid must be strictly increasing");
  }
  const SpectralOperators ops = build_operators(params, basis);

  std::vector<std::future<SpectralRow>> pending;
  for (double e : epsilon_grid) {
    pending.push_back(std::async(std::launch::async, [&ops, e, levels] { return compare_at(ops, e, levels); }));
  }
  SpectralReport report;
  for (auto& f : pending) report.rows.push_back(f.get());

  std::vector<double> eps, d2, d4;
  for (const SpectralRow& r : report.rows) {
    eps.push_back(r.epsilon);
    d2.push_back(r.dev_order2);
    d4.push_back(r.dev_order4);
  }
  report.slope2 = fit_loglog_slope(eps, d2);
  report.slope4 = fit_loglog_slope(eps, d4);
  return report;
}

double truncation_shift(const ProblemParams& params, double epsilon, int levels, const BasisSpec& smaller,
                        const BasisSpec& larger) {
  const SpectralOperators a = build_operators(params, smaller);
  const SpectralOperators b = build_operators(params, larger);
  auto lowest = [&](const SpectralOperators& ops) {
    const double e2 = epsilon * epsilon;
    return std::pair(eigen_complex(ops.h0 + epsilon * ops.h1 + e2 * ops.h2),
                     eigen_hermitian(ops.h0 + e2 * ops.k2 + e2 * e2 * ops.k4));
  };
  const auto [ha, ka] = lowest(a);
  const auto [hb, kb] = lowest(b);
  double shift = 0;
  for (int k = 0; k < levels; ++k) {
    shift = std::max({shift, std::abs(ha[k] - hb[k]), std::abs(ka[k] - kb[k])});
  }
  return shift;
}

MetricResidual metric_residual_matrix(const ProblemParams& params, double epsilon, const BasisSpec& basis) {
  params.validate();
  basis.validate();
  const WeylOperator q1 = solve_q1(params);
  const WeylOperator q3 = solve_q3(params, q1);
  const EpsilonSeries ham = build_hamiltonian(params);
  MatrixRepresentation rep(basis);
  auto at_one = [&rep](const WeylOperator& a) { return rep.full(substitute_lambda(a, 1)); };

  const double e2 = epsilon * epsilon;
  const DenseMatrix h = at_one(ham.at(0)) + epsilon * at_one(ham.at(1)) + e2 * at_one(ham.at(2));
  DenseMatrix q = epsilon * at_one(q1) + epsilon * e2 * at_one(q3);
  q = (0.5 * (q + q.adjoint())).eval();  // remove round-off asymmetry before the Hermitian solver

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(q);
  if (solver.info() != Eigen::Success) throw NonConvergence("metric eigendecomposition did not converge");
  const Eigen::VectorXd weights = (-solver.eigenvalues().array()).exp();
  const Eigen::MatrixXcd& v = solver.eigenvectors();
  const DenseMatrix eta = v * weights.asDiagonal() * v.adjoint();

  const int n = basis.n;
  const DenseMatrix residual = h.adjoint() * eta - eta * h;
  return {residual.topLeftCorner(n, n).norm(), weights.minCoeff()};
}

}  // namespace ptqao
