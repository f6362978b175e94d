#include "ptqao/cli/config.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ptqao/errors.hpp"

namespace ptqao::cli {

using nlohmann::json;

namespace {

Rational parse_field(const std::string& field, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::exception& e) {
    throw ConfigError("field '" + field + "': " + e.what());
  }
}

template <typename T>
void read(const json& doc, const char* key, T& into) {
  if (!doc.contains(key)) return;
  try {
    into = doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

ProblemParams RunConfig::params() const {
  ProblemParams p{parse_field("alpha", alpha), parse_field("beta", beta), parse_field("gamma", gamma)};
  if (sgn(p.alpha) <= 0) throw ConfigError("field 'alpha': must be positive");
  if (sgn(p.beta) == 0) throw ConfigError("field 'beta': must be nonzero");
  if (sgn(p.gamma) < 0) throw ConfigError("field 'gamma': must be non-negative");
  return p;
}

BasisSpec RunConfig::basis() const { return {params().alpha.get_d(), basis_n, basis_buffer}; }

void RunConfig::validate() const {
  (void)params();
  if (epsilon_grid.empty()) throw ConfigError("field 'epsilon': at least one value is required");
  for (std::size_t k = 0; k < epsilon_grid.size(); ++k) {
    const double e = epsilon_grid[k];
    if (!(e == 0 || (e >= 1e-3 && e <= 0.1))) {
      throw ConfigError("field 'epsilon': value " + format_double(e) + " must be 0 or lie in [0.001, 0.1]");
    }
    if (k > 0 && !(e > epsilon_grid[k - 1])) throw ConfigError("field 'epsilon': values must be strictly increasing");
  }
  if (basis_n < 8) throw ConfigError("field 'basis_n': must be at least 8");
  if (4 * basis_buffer < basis_n) throw ConfigError("field 'basis_buffer': must be at least basis_n/4");
  if (levels < 1 || 8 * levels > basis_n) throw ConfigError("field 'levels': must lie in [1, basis_n/8]");
  if (max_order != 2 && max_order != 4) throw ConfigError("field 'max_order': must be 2 or 4");
  if (output_dir.empty()) throw ConfigError("field 'out': must not be empty");
  if (!(dt != 0) || !std::isfinite(dt)) throw ConfigError("field 'dt': must be finite and nonzero");
  if (steps < 1) throw ConfigError("field 'steps': must be at least 1");
}

std::string serialize(const RunConfig& c) {
  json doc;
  doc["alpha"] = c.alpha;
  doc["beta"] = c.beta;
  doc["gamma"] = c.gamma;
  doc["epsilon"] = c.epsilon_grid;
  doc["basis_n"] = c.basis_n;
  doc["basis_buffer"] = c.basis_buffer;
  doc["levels"] = c.levels;
  doc["max_order"] = c.max_order;
  doc["out"] = c.output_dir;
  doc["x0"] = c.x0;
  doc["p0"] = c.p0;
  doc["dt"] = c.dt;
  doc["steps"] = c.steps;
  return doc.dump(2);
}

RunConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  static constexpr std::array kKnown{"alpha", "beta",      "gamma", "epsilon", "basis_n", "basis_buffer", "levels",
                                     "max_order", "out", "x0",    "p0",      "dt",      "steps"};
  for (const auto& [key, value] : doc.items()) {
    if (std::find(kKnown.begin(), kKnown.end(), key) == kKnown.end()) throw ConfigError("unknown field '" + key + "'");
  }
  RunConfig c;
  read(doc, "alpha", c.alpha);
  read(doc, "beta", c.beta);
  read(doc, "gamma", c.gamma);
  read(doc, "epsilon", c.epsilon_grid);
  read(doc, "basis_n", c.basis_n);
  read(doc, "basis_buffer", c.basis_buffer);
  read(doc, "levels", c.levels);
  read(doc, "max_order", c.max_order);
  read(doc, "out", c.output_dir);
  read(doc, "x0", c.x0);
  read(doc, "p0", c.p0);
  read(doc, "dt", c.dt);
  read(doc, "steps", c.steps);
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::vector<double> parse_epsilon_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double v = 0;
    const char* first = item.data();
    const char* last = item.data() + item.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || item.empty()) {
      throw ConfigError("field 'epsilon': malformed value '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw ConfigError("field 'epsilon': empty list");
  return out;
}

std::string format_double(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return {buf.data(), ptr};
}

}  // namespace ptqao::cli
