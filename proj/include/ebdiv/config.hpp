#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "ebdiv/simulate.hpp"

namespace ebdiv::io {

/// Declarative simulation grid: scenarios are the cross product
/// profiles x alphas x betas x gammas, in declaration order.
struct SimulationConfig {
  int k = 0;
  int m = 0;
  std::uint64_t seed = 0;
  std::vector<ProfileKind> profiles;
  std::vector<double> alphas;
  std::vector<double> betas;
  std::vector<double> gammas;

  /// Expands the grid; scenario i gets the derived seed derive_seed(seed, i).
  std::vector<Scenario> expand() const;

  nlohmann::json to_json() const;
};

/// Stable human-readable cell id, e.g. "quasi-uniform:a20:b0.1:g1".
std::string scenario_id(const Scenario& s);

/// Throws ConfigError naming the offending field.
SimulationConfig parse_config(const nlohmann::json& j);

/// Throws ConfigError with parser line/column diagnostics on malformed JSON.
SimulationConfig load_config(const std::filesystem::path& path);

}  // namespace ebdiv::io
