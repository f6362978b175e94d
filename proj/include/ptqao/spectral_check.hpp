#pragma once

#include <complex>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ptqao/equivalence_map.hpp"

namespace ptqao {

using Complex = std::complex<double>;
using DenseMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Truncated harmonic-oscillator basis with ω = √(2α), so P²/2 + αX² is
/// diagonal with entries ω(n + ½). Matrices are built at dimension n + buffer
/// and truncated to n for spectra.
struct BasisSpec {
  double alpha = 1.0;
  int n = 80;
  int buffer = 24;

  int full_dimension() const { return n + buffer; }
  double omega() const;
  /// Throws std::invalid_argument unless α > 0, n ≥ 8 and buffer ≥ n/4.
  void validate() const;
};

struct OscillatorMatrices {
  DenseMatrix x;
  DenseMatrix p;
};

/// X = (2ω)^{−1/2}(a + a†), P = i(ω/2)^{1/2}(a† − a) at λ = 1, dimension n + buffer.
OscillatorMatrices oscillator_matrices(const BasisSpec& basis);

/// Caches powers of X and P so that many operators can share one basis.
class MatrixRepresentation {
 public:
  explicit MatrixRepresentation(const BasisSpec& basis);

  const BasisSpec& basis() const { return basis_; }
  const OscillatorMatrices& ladder() const { return mats_; }
  /// Σ c·X^a·P^b at dimension n + buffer. The operator must be λ-free.
  DenseMatrix full(const WeylOperator& a);
  /// Leading n × n block of full().
  DenseMatrix truncated(const WeylOperator& a);

 private:
  const DenseMatrix& x_power(int k);
  const DenseMatrix& p_power(int k);

  BasisSpec basis_;
  OscillatorMatrices mats_;
  std::map<int, DenseMatrix> x_powers_;
  std::map<int, DenseMatrix> p_powers_;
};

DenseMatrix to_matrix(const WeylOperator& a, const BasisSpec& basis);

/// Ascending eigenvalues of a Hermitian matrix (Householder tridiagonalization + QR).
std::vector<double> eigen_hermitian(const DenseMatrix& m);
/// Eigenvalues of a general complex matrix (Hessenberg reduction + shifted QR),
/// sorted by real part, then imaginary part.
std::vector<Complex> eigen_complex(const DenseMatrix& m);

/// Least-squares slope of log y against log x over points with x > 0 and y > 0.
/// Empty when fewer than two such points exist.
std::optional<double> fit_loglog_slope(std::span<const double> x, std::span<const double> y);

struct SpectralRow {
  double epsilon;
  double max_imag;     // over the lowest levels of H
  double dev_order2;   // max |E_n(H) − E_n(h through ε²)|
  double dev_order4;   // max |E_n(H) − E_n(h through ε⁴)|
};

struct SpectralReport {
  std::vector<SpectralRow> rows;
  std::optional<double> slope2;
  std::optional<double> slope4;
};

/// Compares the lowest `levels` eigenvalues of H(ε) with those of the Hermitian
/// equivalent truncated at ε² and at ε⁴, for every ε of the strictly increasing
/// grid (ε = 0 or ε ∈ [1e−3, 0.1]). Grid points are evaluated concurrently.
SpectralReport spectrum_comparison(const ProblemParams& params, std::span<const double> epsilon_grid, int levels,
                                   const BasisSpec& basis);

/// Largest shift of the lowest `levels` eigenvalues of H(ε) and of h (through ε⁴)
/// between two basis sizes.
double truncation_shift(const ProblemParams& params, double epsilon, int levels, const BasisSpec& smaller,
                        const BasisSpec& larger);

struct MetricResidual {
  double frobenius = 0;           // ‖H†η − ηH‖_F on the leading n × n block
  double min_metric_eigenvalue = 0;
};

/// η = exp(−εQ₁ − ε³Q₃) by Hermitian eigendecomposition at dimension n + buffer.
MetricResidual metric_residual_matrix(const ProblemParams& params, double epsilon, const BasisSpec& basis);

}  // namespace ptqao
