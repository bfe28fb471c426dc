#pragma once

#include "ebdiv/config.hpp"
#include "ebdiv/csv.hpp"
#include "ebdiv/report.hpp"

namespace ebdiv::io {

struct RunOptions {
  int threads = 0;  // <= 0 picks hardware concurrency
};

/// Runs every scenario of the grid through simulation, both estimators, all
/// four indices, and evaluation. Scenario cells execute concurrently; output
/// ordering and content are independent of the thread count.
RunReport run_simulation(const SimulationConfig& config, const RunOptions& options = {});

/// Re-runs a simulation from the config embedded in an existing report.
RunReport rerun_from_report(const RunReport& report, const RunOptions& options = {});

enum class EstimateMethod { ml, eb, both };

EstimateMethod estimate_method_from_string(std::string_view s);

/// Per-sample ML/EB estimation for ingested count matrices. Rows with no
/// individuals are skipped with a warning record.
RunReport run_estimation(const CountMatrixFile& matrix, EstimateMethod method);

}  // namespace ebdiv::io
