#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ebdiv/evaluate.hpp"
#include "ebdiv/model.hpp"
#include "ebdiv/profiles.hpp"
#include "ebdiv/simulate.hpp"

namespace ebdiv::io {

struct ProfileReport {
  ProfileKind kind{};
  int k = 0;
  double intercept = 0, exponent = 0;
  double true_shannon = 0, true_simpson = 0;
};

struct EtaStatusCounts {
  int converged = 0;
  int floor_clamped = 0;
  int ceiling_clamped = 0;
  int flat_likelihood = 0;
  int max_iterations = 0;
};

struct ScenarioReport {
  Scenario scenario;
  std::string id;
  std::vector<IndexSummary> summaries;
  EtaStatusCounts eta_statuses;
  int excluded = 0;  // replicates left out of the summaries
};

struct SpecificEfficiency {
  Index index{};
  std::string scenario_id;
  double value = 0;
};

struct PartialEfficiency {
  Index index{};
  ProfileKind profile{};
  double value = 0;
};

struct TotalEfficiency {
  Index index{};
  double value = 0;
};

/// Per-method result for one ingested sample (estimate mode).
struct SampleMethodReport {
  std::vector<double> proportions;
  double shannon = 0;
  double simpson = 0;
  std::optional<double> eta;
  std::optional<EtaStatus> status;
  std::optional<int> iterations;
};

struct SampleReport {
  std::string id;
  std::int64_t n = 0;
  int k = 0;
  std::optional<SampleMethodReport> ml;
  std::optional<SampleMethodReport> eb;
};

/// Self-describing run output: the embedded config plus seed and RNG name are
/// sufficient to reproduce every number in the report.
struct RunReport {
  std::string tool;
  std::string version;
  std::string rng_algorithm;
  std::string generated_at;  // excluded from reproducibility comparisons
  std::uint64_t seed = 0;
  nlohmann::json config;
  std::vector<ProfileReport> profiles;
  std::vector<ScenarioReport> scenarios;
  std::vector<SpecificEfficiency> specific_efficiency;
  std::vector<PartialEfficiency> partial_efficiency;
  std::vector<TotalEfficiency> total_efficiency;
  std::vector<SampleReport> samples;
  std::vector<std::string> warnings;
};

nlohmann::json report_to_json(const RunReport& report);

/// Throws DataError on schema violations, including summaries that reference
/// a scenario absent from the report.
RunReport report_from_json(const nlohmann::json& j);

void save_report(const RunReport& report, const std::filesystem::path& path);
RunReport load_report(const std::filesystem::path& path);

}  // namespace ebdiv::io
