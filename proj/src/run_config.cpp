#include "arcscatter/run_config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace arcscatter {
namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  char* end = nullptr;
  const double v = std::strtod(value.c_str(), &end);
  if (end == value.c_str() || *end != '\0')
    throw ConfigError(key, "not a number: '" + value + "'");
  return v;
}

int parse_int(const std::string& key, const std::string& value) {
  const double v = parse_double(key, value);
  if (v != std::floor(v)) throw ConfigError(key, "not an integer");
  return static_cast<int>(v);
}

void apply(RunConfig& config, const std::string& key,
           const std::string& value) {
  if (key == "arc.family") {
    if (value != "flat" && value != "circular" && value != "perturbed")
      throw ConfigError(key, "unknown arc family '" + value + "'");
    config.arc_family = value;
  } else if (key == "arc.param1") {
    config.arc_param1 = parse_double(key, value);
  } else if (key == "arc.param2") {
    config.arc_param2 = parse_double(key, value);
  } else if (key == "k") {
    config.k_values.clear();
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ','))
      config.k_values.push_back(parse_double(key, trim(item)));
    if (config.k_values.empty()) throw ConfigError(key, "empty k list");
  } else if (key == "bc") {
    if (value == "dirichlet")
      config.bc = BoundaryCondition::Dirichlet;
    else if (value == "neumann")
      config.bc = BoundaryCondition::Neumann;
    else
      throw ConfigError(key, "expected dirichlet or neumann");
  } else if (key == "formulation") {
    if (value == "second_kind_ns")
      config.formulation = Formulation::SecondKindNS;
    else if (value == "first_kind_s")
      config.formulation = Formulation::FirstKindS;
    else if (value == "first_kind_n")
      config.formulation = Formulation::FirstKindN;
    else
      throw ConfigError(key, "unknown formulation '" + value + "'");
  } else if (key == "incident.angle") {
    config.incident_angle = parse_double(key, value);
  } else if (key == "N") {
    config.resolution = parse_int(key, value);
    if (config.resolution < 8) throw ConfigError(key, "N must be >= 8");
  } else if (key == "tol") {
    config.tol = parse_double(key, value);
    if (!(config.tol > 1e-14 && config.tol < 1e-2))
      throw ConfigError(key, "tol must lie in (1e-14, 1e-2)");
  } else if (key == "max_iter") {
    config.max_iter = parse_int(key, value);
    if (config.max_iter < 1) throw ConfigError(key, "max_iter must be >= 1");
  } else if (key == "out_dir") {
    config.out_dir = value;
  } else {
    throw ConfigError(key, "unknown key");
  }
}

void apply_line(RunConfig& config, const std::string& line) {
  const auto eq = line.find('=');
  if (eq == std::string::npos)
    throw ConfigError(line, "expected key=value");
  apply(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
}

}  // namespace

Arc RunConfig::make_arc() const {
  if (arc_family == "flat") return Arc::flat_segment();
  if (arc_family == "circular") {
    if (!(arc_param1 > 0.0))
      throw ConfigError("arc.param1", "circular arc needs a positive opening");
    return Arc::circular(arc_param1);
  }
  if (arc_param2 != std::floor(arc_param2) || arc_param2 < 1)
    throw ConfigError("arc.param2",
                      "perturbed arc needs a positive integer frequency");
  return Arc::perturbed_flat(arc_param1, static_cast<int>(arc_param2));
}

double RunConfig::single_k() const {
  if (k_values.size() != 1)
    throw ConfigError("k", "this command needs a single wavenumber");
  return k_values[0];
}

RunConfig parse_config(const std::string& path,
                       const std::vector<std::string>& overrides) {
  RunConfig config;
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config", "cannot open file " + path);
    std::string line;
    while (std::getline(in, line)) {
      const std::string stripped = trim(line.substr(0, line.find('#')));
      if (stripped.empty()) continue;
      apply_line(config, stripped);
    }
  }
  for (const std::string& item : overrides) apply_line(config, item);
  return config;
}

RunConfig parse_overrides(const std::vector<std::string>& overrides) {
  return parse_config("", overrides);
}

}  // namespace arcscatter
