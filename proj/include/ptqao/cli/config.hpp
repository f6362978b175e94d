#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ptqao/metric_solver.hpp"
#include "ptqao/spectral_check.hpp"

namespace ptqao::cli {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Flat run configuration. Couplings stay as text so they parse exactly.
struct RunConfig {
  std::string alpha = "1";
  std::string beta = "1";
  std::string gamma = "1";
  std::vector<double> epsilon_grid{0.005, 0.01, 0.02, 0.04};
  int basis_n = 80;
  int basis_buffer = 24;
  int levels = 8;
  int max_order = 4;
  std::string output_dir = ".";

  // classical subcommand
  double x0 = 1.0;
  double p0 = 0.0;
  double dt = 1e-3;
  long steps = 10000;

  /// Parsed and validated couplings. Throws ConfigError naming the field.
  ProblemParams params() const;
  BasisSpec basis() const;
  /// Checks every field; throws ConfigError naming the first bad one.
  void validate() const;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// JSON text with stable key order.
std::string serialize(const RunConfig& config);
/// Missing keys keep their defaults; unknown keys are rejected.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

/// "0.005,0.01" → {0.005, 0.01}
std::vector<double> parse_epsilon_list(const std::string& csv);

/// Shortest decimal text that reads back to the same double.
std::string format_double(double v);

}  // namespace ptqao::cli
