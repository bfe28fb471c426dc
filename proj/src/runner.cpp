#include "ebdiv/runner.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <ctime>
#include <exception>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

#include "ebdiv/errors.hpp"
#include "ebdiv/indices.hpp"
#include "ebdiv/model.hpp"
#include "ebdiv/rng.hpp"
#include "ebdiv/version.hpp"

namespace ebdiv::io {

namespace {

constexpr std::array<Index, 4> kIndices = {Index::shannon, Index::simpson, Index::pma,
                                           Index::euclidean};
constexpr std::array<Estimator, 2> kEstimators = {Estimator::eb, Estimator::ml};

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

struct ScenarioOutcome {
  ScenarioReport report;
  // Squared-error sums against the true value, indexed [index][estimator].
  std::array<std::array<double, 2>, 4> sse{};
};

void tally_status(EtaStatusCounts& counts, EtaStatus status) {
  switch (status) {
    case EtaStatus::converged: ++counts.converged; break;
    case EtaStatus::floor_clamped: ++counts.floor_clamped; break;
    case EtaStatus::ceiling_clamped: ++counts.ceiling_clamped; break;
    case EtaStatus::flat_likelihood: ++counts.flat_likelihood; break;
    case EtaStatus::max_iterations: ++counts.max_iterations; break;
  }
}

ScenarioOutcome run_cell(const Scenario& scenario, const Profile& profile) {
  ScenarioOutcome outcome;
  outcome.report.scenario = scenario;
  outcome.report.id = scenario_id(scenario);

  std::array<std::array<std::vector<double>, 2>, 4> values;
  for (auto& per_index : values) {
    for (auto& v : per_index) v.reserve(static_cast<std::size_t>(scenario.m));
  }
  const std::array<double, 4> true_values = {profile.true_shannon, profile.true_simpson, 1.0,
                                             1.0};

  const auto samples = run_scenario(scenario, profile);
  for (const auto& sample : samples) {
    CompositionEstimate ml, eb;
    EtaSolution solution;
    try {
      ml = mle_proportions(sample.counts);
      solution = estimate_eta(sample.counts);
      tally_status(outcome.report.eta_statuses, solution.status);
      if (solution.status == EtaStatus::max_iterations) {
        ++outcome.report.excluded;
        continue;
      }
      eb = eb_proportions(sample.counts, solution.eta);
    } catch (const DataError&) {  // e.g. a replicate with no individuals
      ++outcome.report.excluded;
      continue;
    }

    const Simplex ml_simplex = ml.to_simplex();
    const Simplex eb_simplex = eb.to_simplex();
    for (std::size_t i = 0; i < kIndices.size(); ++i) {
      for (std::size_t e = 0; e < kEstimators.size(); ++e) {
        const Simplex& p = (kEstimators[e] == Estimator::eb) ? eb_simplex : ml_simplex;
        double value = 0.0;
        switch (kIndices[i]) {
          case Index::shannon: value = shannon(p).value; break;
          case Index::simpson: value = simpson(p).value; break;
          case Index::pma: value = pma(p, profile.pi_star).value; break;
          case Index::euclidean: value = euclidean_similarity(p, profile.pi_star).value; break;
        }
        values[i][e].push_back(value);
        const double err = value - true_values[i];
        outcome.sse[i][e] += err * err;
      }
    }
  }

  for (std::size_t i = 0; i < kIndices.size(); ++i) {
    for (std::size_t e = 0; e < kEstimators.size(); ++e) {
      if (values[i][e].empty()) {
        throw NumericError("scenario " + outcome.report.id + ": every replicate failed");
      }
      IndexSummary summary = summarize(values[i][e], true_values[i]);
      summary.index = kIndices[i];
      summary.estimator = kEstimators[e];
      summary.scenario_id = outcome.report.id;
      outcome.report.summaries.push_back(std::move(summary));
    }
  }
  return outcome;
}

double cell_rmse(const ScenarioReport& report, std::size_t index_pos, Estimator estimator) {
  for (const auto& s : report.summaries) {
    if (s.index == kIndices[index_pos] && s.estimator == estimator) return s.rmse;
  }
  throw NumericError("missing summary for efficiency computation");
}

}  // namespace

RunReport run_simulation(const SimulationConfig& config, const RunOptions& options) {
  const auto scenarios = config.expand();
  if (scenarios.empty()) {
    throw ConfigError("config expands to an empty scenario grid");
  }
  for (const auto& s : scenarios) {
    validate(s);
  }

  RunReport report;
  report.tool = std::string(kToolName);
  report.version = std::string(kVersion);
  report.rng_algorithm = std::string(kRngAlgorithm);
  report.generated_at = utc_timestamp();
  report.seed = config.seed;
  report.config = config.to_json();

  std::map<ProfileKind, Profile> profiles;
  for (ProfileKind kind : config.profiles) {
    if (!profiles.contains(kind)) {
      Profile p = make_profile(kind, config.k);
      report.profiles.push_back(
          ProfileReport{kind, p.k, p.intercept, p.exponent, p.true_shannon, p.true_simpson});
      profiles.emplace(kind, std::move(p));
    }
  }

  // Scenario cells are independent; workers pull the next cell and write the
  // outcome into its declaration-order slot, so the report does not depend on
  // the thread count.
  std::vector<ScenarioOutcome> outcomes(scenarios.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const int worker_count =
      std::min<int>(resolve_threads(options.threads), static_cast<int>(scenarios.size()));
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= scenarios.size()) return;
      try {
        outcomes[i] = run_cell(scenarios[i], profiles.at(scenarios[i].profile_kind));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  if (worker_count <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(worker_count));
    for (int t = 0; t < worker_count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  for (auto& outcome : outcomes) {
    report.scenarios.push_back(std::move(outcome.report));
  }

  // Efficiency block: specific per cell, partial per profile, total per index.
  for (std::size_t i = 0; i < kIndices.size(); ++i) {
    for (std::size_t s = 0; s < scenarios.size(); ++s) {
      try {
        const double value = relative_efficiency(cell_rmse(report.scenarios[s], i, Estimator::ml),
                                                 cell_rmse(report.scenarios[s], i, Estimator::eb));
        report.specific_efficiency.push_back(
            SpecificEfficiency{kIndices[i], report.scenarios[s].id, value});
      } catch (const DataError& e) {
        report.warnings.push_back("efficiency cell (" + std::string(to_string(kIndices[i])) +
                                  ", " + report.scenarios[s].id + ") skipped: " + e.what());
      }
    }
    for (ProfileKind kind : config.profiles) {
      std::vector<ScenarioSquaredError> cells;
      std::vector<std::string> expected;
      for (std::size_t s = 0; s < scenarios.size(); ++s) {
        if (scenarios[s].profile_kind != kind) continue;
        expected.push_back(report.scenarios[s].id);
        cells.push_back(ScenarioSquaredError{report.scenarios[s].id,
                                             outcomes[s].sse[i][1],   // ml
                                             outcomes[s].sse[i][0]}); // eb
      }
      try {
        report.partial_efficiency.push_back(
            PartialEfficiency{kIndices[i], kind, partial_efficiency(cells, expected)});
      } catch (const DataError& e) {
        report.warnings.push_back("partial efficiency (" + std::string(to_string(kIndices[i])) +
                                  ", " + std::string(to_string(kind)) + ") skipped: " + e.what());
      }
    }
    std::vector<ScenarioSquaredError> all_cells;
    std::vector<std::string> all_expected;
    for (std::size_t s = 0; s < scenarios.size(); ++s) {
      all_expected.push_back(report.scenarios[s].id);
      all_cells.push_back(ScenarioSquaredError{report.scenarios[s].id, outcomes[s].sse[i][1],
                                               outcomes[s].sse[i][0]});
    }
    try {
      report.total_efficiency.push_back(
          TotalEfficiency{kIndices[i], total_efficiency(all_cells, all_expected)});
    } catch (const DataError& e) {
      report.warnings.push_back("total efficiency (" + std::string(to_string(kIndices[i])) +
                                ") skipped: " + e.what());
    }
  }
  return report;
}

RunReport rerun_from_report(const RunReport& report, const RunOptions& options) {
  SimulationConfig config = parse_config(report.config);
  return run_simulation(config, options);
}

EstimateMethod estimate_method_from_string(std::string_view s) {
  if (s == "ml") return EstimateMethod::ml;
  if (s == "eb") return EstimateMethod::eb;
  if (s == "both") return EstimateMethod::both;
  throw ConfigError("unknown estimation method: " + std::string(s) +
                    " (expected ml, eb, or both)");
}

RunReport run_estimation(const CountMatrixFile& matrix, EstimateMethod method) {
  RunReport report;
  report.tool = std::string(kToolName);
  report.version = std::string(kVersion);
  report.rng_algorithm = "none (estimation is deterministic)";
  report.generated_at = utc_timestamp();
  report.seed = 0;
  report.config = nlohmann::json{
      {"mode", "estimate"},
      {"method",
       method == EstimateMethod::ml ? "ml" : (method == EstimateMethod::eb ? "eb" : "both")},
      {"k", matrix.k()},
      {"rows", matrix.rows.size()},
  };

  for (const auto& [id, counts] : matrix.rows) {
    if (counts.n() == 0) {
      report.warnings.push_back("sample '" + id + "' skipped: no individuals observed");
      continue;
    }
    SampleReport sample;
    sample.id = id;
    sample.n = counts.n();
    sample.k = counts.k();
    if (method == EstimateMethod::ml || method == EstimateMethod::both) {
      const CompositionEstimate est = mle_proportions(counts);
      const Simplex p = est.to_simplex();
      SampleMethodReport m;
      m.proportions = est.proportions;
      m.shannon = shannon(p).value;
      m.simpson = simpson(p).value;
      sample.ml = std::move(m);
    }
    if (method == EstimateMethod::eb || method == EstimateMethod::both) {
      const EtaSolution solution = estimate_eta(counts);
      const CompositionEstimate est = eb_proportions(counts, solution.eta);
      const Simplex p = est.to_simplex();
      SampleMethodReport m;
      m.proportions = est.proportions;
      m.shannon = shannon(p).value;
      m.simpson = simpson(p).value;
      m.eta = solution.eta;
      m.status = solution.status;
      m.iterations = solution.iterations;
      sample.eb = std::move(m);
    }
    report.samples.push_back(std::move(sample));
  }
  return report;
}

}  // namespace ebdiv::io
