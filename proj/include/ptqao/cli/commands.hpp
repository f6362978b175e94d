#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ptqao/cli/config.hpp"

namespace ptqao::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,
  kConfigError = 2,
  kSolverError = 3,
  kNonConvergence = 4,
};

struct Check {
  Check() = default;
  Check(std::string id_, std::string expected_, std::string computed_, bool passed_, std::string detail_ = {})
      : id(std::move(id_)),
        expected(std::move(expected_)),
        computed(std::move(computed_)),
        passed(passed_),
        detail(std::move(detail_)) {}

  std::string id;
  std::string expected;
  std::string computed;
  bool passed = false;
  std::string detail;  // shown on the PASS/FAIL line when set
};

struct VerificationReport {
  std::vector<Check> checks;

  bool passed() const;
  /// One "PASS <id>" / "FAIL <id>" line per check (with expected/computed on
  /// failure, detail in brackets when set), then "overall: PASS|FAIL".
  std::string serialize() const;
};

/// Prints Q₁, Q₃, h⁽²⁾, h⁽⁴⁾, M⁽²⁾, V_eff⁽²⁾, x_phys, p_phys and H_c.
int run_solve(const RunConfig& config, std::ostream& out);

/// Runs every golden equality. `flip_q1_sign` negates the right-hand side of
/// the Q₁ equation (debug aid: must make the checks fail).
VerificationReport run_verify(const RunConfig& config, bool flip_q1_sign = false);

/// Writes <out>/spectrum.csv and prints the slope summary.
int run_spectrum(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Writes <out>/trajectory.csv and prints the energy drift.
int run_classical(const RunConfig& config, std::ostream& out);

/// Full command line (argv[0] excluded): subcommand plus flags. Maps
/// exceptions onto the exit codes above.
int run_app(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Writes `content` to `path` via a temporary file and rename.
void write_atomically(const std::string& path, const std::string& content);

}  // namespace ptqao::cli
