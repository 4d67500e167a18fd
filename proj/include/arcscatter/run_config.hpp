#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "arcscatter/arc.hpp"
#include "arcscatter/scattering.hpp"

namespace arcscatter {

/// Raised for malformed configuration; carries the offending key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& key, const std::string& message)
      : std::runtime_error("config key '" + key + "': " + message), key_(key) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// Flat key=value run configuration. Recognized keys:
///   arc.family   flat | circular | perturbed
///   arc.param1   opening angle (circular) or amplitude (perturbed)
///   arc.param2   frequency (perturbed, integer)
///   k            wavenumber, or comma-separated list for sweeps
///   bc           dirichlet | neumann
///   formulation  second_kind_ns | first_kind_s | first_kind_n
///   incident.angle  plane-wave direction angle in radians (default 0)
///   N            truncation order
///   tol          solver tolerance
///   max_iter     solver iteration cap
///   out_dir      output directory
struct RunConfig {
  std::string arc_family = "flat";
  double arc_param1 = 0.0;
  double arc_param2 = 0.0;
  std::vector<double> k_values = {5.0};
  BoundaryCondition bc = BoundaryCondition::Dirichlet;
  Formulation formulation = Formulation::SecondKindNS;
  double incident_angle = 0.0;
  int resolution = 128;
  double tol = 1e-8;
  int max_iter = 200;
  std::string out_dir = ".";

  Arc make_arc() const;
  double single_k() const;  // errors if the k list is not a single value
};

/// Parses a key=value file ('#' comments, blank lines allowed) and applies
/// key=value override strings on top. Unknown keys and malformed values
/// raise ConfigError.
RunConfig parse_config(const std::string& path,
                       const std::vector<std::string>& overrides);

/// Parses overrides only (no file).
RunConfig parse_overrides(const std::vector<std::string>& overrides);

}  // namespace arcscatter
