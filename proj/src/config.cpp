#include "ebdiv/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "ebdiv/errors.hpp"
#include "ebdiv/rng.hpp"

namespace ebdiv::io {

namespace {

std::string format_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

const nlohmann::json& require_field(const nlohmann::json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) {
    throw ConfigError(std::string("config: missing field '") + name + "'");
  }
  return *it;
}

int parse_positive_int(const nlohmann::json& j, const char* name, int minimum) {
  const auto& field = require_field(j, name);
  if (!field.is_number_integer() || field.get<std::int64_t>() < minimum) {
    throw ConfigError(std::string("config: field '") + name + "' must be an integer >= " +
                      std::to_string(minimum));
  }
  return field.get<int>();
}

std::vector<double> parse_positive_list(const nlohmann::json& j, const char* name) {
  const auto& field = require_field(j, name);
  if (!field.is_array() || field.empty()) {
    throw ConfigError(std::string("config: field '") + name + "' must be a non-empty array");
  }
  std::vector<double> out;
  for (const auto& v : field) {
    if (!v.is_number() || !(v.get<double>() > 0.0) || !std::isfinite(v.get<double>())) {
      throw ConfigError(std::string("config: field '") + name +
                        "' entries must be positive numbers");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

std::string scenario_id(const Scenario& s) {
  return std::string(to_string(s.profile_kind)) + ":a" + format_num(s.alpha) + ":b" +
         format_num(s.beta) + ":g" + format_num(s.gamma);
}

std::vector<Scenario> SimulationConfig::expand() const {
  std::vector<Scenario> scenarios;
  scenarios.reserve(profiles.size() * alphas.size() * betas.size() * gammas.size());
  std::uint64_t index = 0;
  for (ProfileKind kind : profiles) {
    for (double alpha : alphas) {
      for (double beta : betas) {
        for (double gamma : gammas) {
          Scenario s;
          s.profile_kind = kind;
          s.alpha = alpha;
          s.beta = beta;
          s.gamma = gamma;
          s.k = k;
          s.m = m;
          s.seed = derive_seed(seed, index);
          scenarios.push_back(s);
          ++index;
        }
      }
    }
  }
  return scenarios;
}

nlohmann::json SimulationConfig::to_json() const {
  nlohmann::json j;
  j["k"] = k;
  j["m"] = m;
  j["seed"] = seed;
  auto& profs = j["profiles"] = nlohmann::json::array();
  for (ProfileKind p : profiles) {
    profs.push_back(std::string(to_string(p)));
  }
  j["alphas"] = alphas;
  j["betas"] = betas;
  j["gammas"] = gammas;
  return j;
}

SimulationConfig parse_config(const nlohmann::json& j) {
  if (!j.is_object()) {
    throw ConfigError("config: top level must be a JSON object");
  }
  SimulationConfig config;
  config.k = parse_positive_int(j, "k", 2);
  config.m = parse_positive_int(j, "m", 1);
  const auto& seed = require_field(j, "seed");
  if (!seed.is_number_unsigned() && !seed.is_number_integer()) {
    throw ConfigError("config: field 'seed' must be a nonnegative integer");
  }
  if (seed.is_number_integer() && !seed.is_number_unsigned() && seed.get<std::int64_t>() < 0) {
    throw ConfigError("config: field 'seed' must be a nonnegative integer");
  }
  config.seed = seed.get<std::uint64_t>();

  const auto& profiles = require_field(j, "profiles");
  if (!profiles.is_array() || profiles.empty()) {
    throw ConfigError("config: field 'profiles' must be a non-empty array of profile names");
  }
  for (const auto& p : profiles) {
    if (!p.is_string()) {
      throw ConfigError("config: field 'profiles' entries must be strings");
    }
    try {
      config.profiles.push_back(profile_kind_from_string(p.get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("config: ") + e.what());
    }
  }
  config.alphas = parse_positive_list(j, "alphas");
  config.betas = parse_positive_list(j, "betas");
  config.gammas = parse_positive_list(j, "gammas");
  return config;
}

SimulationConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file: " + path.string());
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config " + path.string() + ": " + e.what());
  }
  return parse_config(j);
}

}  // namespace ebdiv::io
