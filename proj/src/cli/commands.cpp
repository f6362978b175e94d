#include "ptqao/cli/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ptqao/classical_limit.hpp"
#include "ptqao/closed_forms.hpp"
#include "ptqao/errors.hpp"

namespace ptqao::cli {

namespace {

constexpr double kSlope2Low = 3.6;
constexpr double kSlope2High = 4.4;
constexpr double kSlope4Low = 5.4;
constexpr double kSlope4High = 6.6;
constexpr double kMaxImag = 1e-7;
constexpr double kTruncationShift = 1e-8;
constexpr double kEnergyDrift = 1e-8;

void print_operator(std::ostream& out, const std::string& name, const WeylOperator& a) {
  out << name << " = " << to_string(a, LambdaDisplay::always) << '\n';
  out << name << "@l=1 = " << to_string(substitute_lambda(a, 1), LambdaDisplay::when_nonzero) << '\n';
}

void print_series(std::ostream& out, const std::string& name, const EpsilonSeries& s) {
  for (int k = 0; k <= s.truncation_order(); ++k) {
    print_operator(out, name + "[eps^" + std::to_string(k) + "]", s.at(k));
  }
}

std::string describe(const std::vector<Polynomial>& polys) {
  std::string out;
  for (std::size_t k = 0; k < polys.size(); ++k) {
    if (k) out += "; ";
    out += std::to_string(k) + ": " + to_string(polys[k]);
  }
  return out;
}

std::string describe(const SDecomposition& s) {
  return describe(std::vector<Polynomial>(s.s.begin(), s.s.end()));
}

std::string describe(const ClassicalHamiltonian& hc) {
  std::string out;
  for (const auto& [k, poly] : hc.orders) {
    if (!out.empty()) out += "; ";
    out += "eps^" + std::to_string(k) + ": " + to_string(poly, LambdaDisplay::when_nonzero);
  }
  return out.empty() ? "0" : out;
}

bool all_zero(const std::vector<Polynomial>& polys) {
  return std::all_of(polys.begin(), polys.end(), [](const Polynomial& p) { return p.is_zero(); });
}

template <typename T>
Check compare(std::string id, const T& expected, const T& computed) {
  Check c{std::move(id), "", "", expected == computed};
  if constexpr (std::is_same_v<T, EpsilonSeries>) {
    c.expected = to_string(expected);
    c.computed = to_string(computed);
  } else if constexpr (std::is_same_v<T, WeylOperator>) {
    c.expected = to_string(expected);
    c.computed = to_string(computed);
  } else {
    c.expected = describe(expected);
    c.computed = describe(computed);
  }
  return c;
}

}  // namespace

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::string VerificationReport::serialize() const {
  std::ostringstream out;
  for (const Check& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.id;
    if (!c.detail.empty()) out << " [" << c.detail << ']';
    if (!c.passed) out << "\n  expected: " << c.expected << "\n  computed: " << c.computed;
    out << '\n';
  }
  out << "overall: " << (passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

int run_solve(const RunConfig& config, std::ostream& out) {
  config.validate();
  const ProblemParams params = config.params();
  const EquivalenceResult eq = assemble_h(params, config.max_order);
  const EpsilonSeries q = metric_generator(eq.q1, eq.q3, config.max_order == 4);
  const int obs_order = config.max_order == 4 ? 3 : 2;

  out << "params alpha=" << params.alpha << " beta=" << params.beta << " gamma=" << params.gamma
      << " max_order=" << config.max_order << '\n';
  print_operator(out, "Q1", eq.q1);
  if (config.max_order == 4) print_operator(out, "Q3", eq.q3);
  print_operator(out, "h2", eq.h.at(2));
  if (config.max_order == 4) print_operator(out, "h4", eq.h.at(4));

  const PdmDecomposition pdm = extract_pdm(eq.h.at(2));
  print_operator(out, "M2", pdm.mass_correction);
  print_operator(out, "Veff2", pdm.effective_potential);
  out << "quartic_coefficient = " << to_string(pdm.effective_potential.coefficient(4, 0).constant_term()) << '\n';
  const QuarticClassification cls = classify_quartic(params);
  out << "quartic = " << to_string(cls.kind) << " (discriminant " << cls.discriminant << ")\n";

  print_series(out, "x_phys", physical_position(q.truncated(obs_order), obs_order));
  print_series(out, "p_phys", physical_momentum(q.truncated(obs_order), obs_order));

  const ClassicalHamiltonian hc = classical_hamiltonian(eq.h);
  for (int k = 0; k <= config.max_order; k += 2) {
    out << "Hc[eps^" << k << "] = " << to_string(hc.at(k), LambdaDisplay::when_nonzero) << '\n';
  }
  return kSuccess;
}

VerificationReport run_verify(const RunConfig& config, bool flip_q1_sign) {
  config.validate();
  const ProblemParams params = config.params();
  VerificationReport report;

  HomologicalProblem p1 = q1_problem(params);
  if (flip_q1_sign) p1.rhs = -p1.rhs;
  const WeylOperator q1 = solve_homological(p1);
  const WeylOperator q3 = solve_q3(params, q1);
  const EpsilonSeries q = metric_generator(q1, q3);
  const EpsilonSeries ham = build_hamiltonian(params, 4);
  const EpsilonSeries h = bch_conjugate(ham, q, Rational(-1, 2), 4);

  report.checks.push_back(compare("q1_form", closed_forms::q1(params), q1));

  const SDecomposition s = s_decomposition(substitute_lambda(q1, 1));
  report.checks.push_back(compare("s_values", closed_forms::s_values(params), s));

  const SRecursionReport rec = verify_s_recursion(s, params);
  report.checks.push_back({"s_recursion", "all residuals 0", describe(rec.residuals), rec.all_zero()});

  const WeylOperator h2 = h_order2(params, q1);
  const WeylOperator h4 = h_order4(params, q1, q3);
  Check pdm_check{"h2_pdm", "", "", false};
  try {
    const PdmDecomposition pdm = extract_pdm(h2);
    const PdmDecomposition want = closed_forms::pdm_order2(params);
    pdm_check.expected = "M2 = " + to_string(want.mass_correction) + "; Veff2 = " + to_string(want.effective_potential);
    pdm_check.computed = "M2 = " + to_string(pdm.mass_correction) + "; Veff2 = " + to_string(pdm.effective_potential);
    pdm_check.passed = pdm.mass_correction == want.mass_correction &&
                       pdm.effective_potential == want.effective_potential && pdm.mass_is_even();

    const PdmDecomposition at_one{substitute_lambda(pdm.mass_correction, 1), substitute_lambda(pdm.effective_potential, 1)};
    const auto w_res = w_relation_residuals(w_functions(s, params), at_one, params);
    report.checks.push_back(pdm_check);
    report.checks.push_back({"w_relations", "all residuals 0", describe(w_res), all_zero(w_res)});

    const QuarticClassification cls = classify_quartic(params);
    const int coefficient_sign = sgn(pdm.effective_potential.coefficient(4, 0).constant_term().re * 4 * params.alpha);
    const QuarticKind from_h2 = coefficient_sign > 0   ? QuarticKind::attractive
                                : coefficient_sign == 0 ? QuarticKind::null
                                                        : QuarticKind::repulsive;
    report.checks.push_back({"quartic_classification",
                             to_string(cls.kind) + " (discriminant " + cls.discriminant.get_str() + ")",
                             to_string(from_h2), cls.kind == from_h2,
                             to_string(cls.kind) + ", discriminant " + cls.discriminant.get_str()});
  } catch (const std::exception& e) {
    pdm_check.computed = e.what();
    report.checks.push_back(pdm_check);
    report.checks.push_back({"w_relations", "all residuals 0", "not evaluated", false});
    report.checks.push_back({"quartic_classification", "", "not evaluated", false});
  }

  report.checks.push_back(compare("h2_golden", closed_forms::h_order2(params), h2));
  report.checks.push_back(compare("h4_golden", closed_forms::h_order4(params), h4));
  report.checks.push_back(compare("h_eps2_matches_bch", h2, h.at(2)));
  report.checks.push_back(compare("h_eps4_matches_bch", h4, h.at(4)));

  const bool odd_vanish = h.at(1).is_zero() && h.at(3).is_zero();
  const bool hermitian = is_hermitian(h.at(2)) && is_hermitian(h.at(4)) && is_hermitian(q1) && is_hermitian(q3);
  report.checks.push_back({"h_structure", "odd orders 0; h, Q1, Q3 Hermitian",
                           std::string(odd_vanish ? "odd orders 0" : "odd orders nonzero") +
                               (hermitian ? "; Hermitian" : "; not Hermitian"),
                           odd_vanish && hermitian});

  report.checks.push_back(compare("x_phys_golden", closed_forms::physical_position(params), physical_position(q, 3)));
  report.checks.push_back(compare("p_phys_golden", closed_forms::physical_momentum(params), physical_momentum(q, 3)));

  Check classical_check{"classical_golden", describe(closed_forms::classical(params)), "", false};
  try {
    const ClassicalHamiltonian hc = classical_hamiltonian(h);
    classical_check.computed = describe(hc);
    classical_check.passed = hc == closed_forms::classical(params);
  } catch (const std::exception& e) {
    classical_check.computed = e.what();
  }
  report.checks.push_back(classical_check);

  const EpsilonSeries residual = pseudo_hermiticity_residual(ham, q, 4);
  report.checks.push_back({"pseudo_hermiticity", "0", to_string(residual), residual.orders().empty()});
  return report;
}

void write_atomically(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
  const std::filesystem::path tmp = target.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    f << content;
    if (!f) throw std::runtime_error("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

int run_spectrum(const RunConfig& config, std::ostream& out, std::ostream& err) {
  config.validate();
  const ProblemParams params = config.params();
  const BasisSpec basis = config.basis();
  const SpectralReport report = spectrum_comparison(params, config.epsilon_grid, config.levels, basis);

  std::string slopes = "# slope2=";
  slopes += report.slope2 ? format_double(*report.slope2) : "n/a";
  slopes += " slope4=";
  slopes += report.slope4 ? format_double(*report.slope4) : "n/a";

  std::ostringstream csv;
  csv << "epsilon,max_imag,dev_order2,dev_order4\n";
  double max_imag = 0;
  for (const SpectralRow& r : report.rows) {
    csv << format_double(r.epsilon) << ',' << format_double(r.max_imag) << ',' << format_double(r.dev_order2) << ','
        << format_double(r.dev_order4) << '\n';
    max_imag = std::max(max_imag, r.max_imag);
  }
  csv << slopes << '\n';
  write_atomically((std::filesystem::path(config.output_dir) / "spectrum.csv").string(), csv.str());

  const double eps_max = *std::max_element(config.epsilon_grid.begin(), config.epsilon_grid.end());
  BasisSpec larger = basis;
  larger.n = basis.n + basis.n / 2;
  larger.buffer = std::max(basis.buffer, (larger.n + 3) / 4);
  const double shift = truncation_shift(params, eps_max, config.levels, basis, larger);

  out << slopes << '\n';
  out << "max_imag=" << format_double(max_imag) << '\n';
  out << "truncation_shift(N=" << basis.n << "->" << larger.n << ")=" << format_double(shift) << '\n';

  bool ok = max_imag < kMaxImag && shift < kTruncationShift;
  if (!report.slope2 || !report.slope4) {
    err << "warning: fewer than two grid points; slopes not available\n";
  } else {
    ok = ok && *report.slope2 >= kSlope2Low && *report.slope2 <= kSlope2High && *report.slope4 >= kSlope4Low &&
         *report.slope4 <= kSlope4High;
  }
  out << "acceptance: " << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kSuccess : kCheckFailed;
}

int run_classical(const RunConfig& config, std::ostream& out) {
  config.validate();
  const ProblemParams params = config.params();
  const double eps = *std::max_element(config.epsilon_grid.begin(), config.epsilon_grid.end());
  const ClassicalHamiltonian hc = classical_hamiltonian(assemble_h(params, config.max_order).h);
  const TrajectoryRecord rec =
      hamiltonian_flow(hc, eps, {config.x0, config.p0}, config.dt, static_cast<std::size_t>(config.steps));

  std::ostringstream csv;
  csv << "t,x,p,H\n";
  for (const TrajectoryPoint& pt : rec.points) {
    csv << format_double(pt.t) << ',' << format_double(pt.x) << ',' << format_double(pt.p) << ','
        << format_double(pt.energy) << '\n';
  }
  write_atomically((std::filesystem::path(config.output_dir) / "trajectory.csv").string(), csv.str());

  const double drift = rec.relative_energy_drift();
  out << "epsilon=" << format_double(eps) << " steps=" << config.steps << " dt=" << format_double(config.dt) << '\n';
  out << "energy_drift=" << format_double(drift) << '\n';
  return drift <= kEnergyDrift ? kSuccess : kCheckFailed;
}

int run_app(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Perturbative metric, equivalent Hermitian PDM Hamiltonian and checks for the PT-symmetric quartic oscillator",
               "ptqao"};
  app.require_subcommand(1);

  std::string config_path;
  std::string alpha, beta, gamma, epsilon, out_dir;
  int basis_n = 0, basis_buffer = 0, levels = 0, max_order = 0;
  double x0 = 0, p0 = 0, dt = 0;
  long steps = 0;
  bool flip = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON config file");
    sub->add_option("--alpha", alpha, "harmonic coupling (rational, e.g. 3/2)");
    sub->add_option("--beta", beta, "cubic coupling (rational)");
    sub->add_option("--gamma", gamma, "quartic coupling (rational)");
    sub->add_option("--epsilon", epsilon, "comma-separated epsilon grid");
    sub->add_option("--basis-n", basis_n, "retained basis dimension");
    sub->add_option("--basis-buffer", basis_buffer, "extra basis states used before truncation");
    sub->add_option("--levels", levels, "number of low-lying levels compared");
    sub->add_option("--max-order", max_order, "highest epsilon order of h (2 or 4)");
    sub->add_option("--out", out_dir, "output directory");
  };
  CLI::App* solve = app.add_subcommand("solve", "print the metric generators and the equivalent Hamiltonian");
  CLI::App* verify = app.add_subcommand("verify", "check every closed-form result exactly");
  CLI::App* spectrum = app.add_subcommand("spectrum", "numerical epsilon-scaling study");
  CLI::App* classical = app.add_subcommand("classical", "integrate the classical Hamiltonian");
  for (CLI::App* sub : {solve, verify, spectrum, classical}) common(sub);
  verify->add_flag("--debug-flip-sign", flip, "negate the right-hand side of the Q1 equation");
  classical->add_option("--x0", x0, "initial position");
  classical->add_option("--p0", p0, "initial momentum");
  classical->add_option("--dt", dt, "time step");
  classical->add_option("--steps", steps, "number of steps");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    RunConfig config = config_path.empty() ? RunConfig{} : load_config(config_path);
    auto given = [sub](const char* flag) { return sub->count(flag) > 0; };
    if (given("--alpha")) config.alpha = alpha;
    if (given("--beta")) config.beta = beta;
    if (given("--gamma")) config.gamma = gamma;
    if (given("--epsilon")) config.epsilon_grid = parse_epsilon_list(epsilon);
    if (given("--basis-n")) config.basis_n = basis_n;
    if (given("--basis-buffer")) config.basis_buffer = basis_buffer;
    if (given("--levels")) config.levels = levels;
    if (given("--max-order")) config.max_order = max_order;
    if (given("--out")) config.output_dir = out_dir;
    if (sub == classical) {
      if (given("--x0")) config.x0 = x0;
      if (given("--p0")) config.p0 = p0;
      if (given("--dt")) config.dt = dt;
      if (given("--steps")) config.steps = steps;
    }
    config.validate();

    if (sub == solve) return run_solve(config, out);
    if (sub == verify) {
      const VerificationReport report = run_verify(config, flip);
      out << report.serialize();
      return report.passed() ? kSuccess : kCheckFailed;
    }
    if (sub == spectrum) return run_spectrum(config, out, err);
    return run_classical(config, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const IntegratorNonConvergence& e) {
    err << "non-convergence: " << e.what() << '\n';
    return kNonConvergence;
  } catch (const NonConvergence& e) {
    err << "non-convergence: " << e.what() << '\n';
    return kNonConvergence;
  } catch (const std::exception& e) {
    err << "solver error: " << e.what() << '\n';
    return kSolverError;
  }
}

}  // namespace ptqao::cli
