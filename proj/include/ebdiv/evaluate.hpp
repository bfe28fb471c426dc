#pragma once

#include <span>
#include <string>
#include <vector>

#include "ebdiv/count_vector.hpp"
#include "ebdiv/indices.hpp"

namespace ebdiv {

struct Quantiles {
  double min = 0, q1 = 0, median = 0, q3 = 0, max = 0;
};

/// Sampling statistics of one index under one estimator in one scenario.
/// rmse uses the 1/m convention, so rmse^2 = bias^2 + sd^2 (m-1)/m.
/// sd is NaN (serialized as null) when m == 1.
struct IndexSummary {
  Index index{};
  Estimator estimator{};
  std::string scenario_id;
  double mean = 0, sd = 0, bias = 0, rmse = 0;
  Quantiles quantiles;
  int m = 0;
};

/// Linear-interpolation ("type 7") quantile of a sorted sequence.
double quantile_linear(std::span<const double> sorted_values, double p);

/// Computes mean/sd/bias/rmse/quantiles against the true value. The caller
/// fills in index/estimator/scenario_id. Throws DataError on empty input.
IndexSummary summarize(std::span<const double> values, double true_value);

/// RMSE_ML / RMSE_EB; > 1 means EB superior. Throws DataError unless both
/// inputs are strictly positive and finite.
double relative_efficiency(double rmse_ml, double rmse_eb);

/// Per-scenario pooled squared errors for one index: sse = sum_i (v_i - true)^2.
struct ScenarioSquaredError {
  std::string scenario_id;
  double sse_ml = 0.0;
  double sse_eb = 0.0;
};

/// Efficiency pooled over all scenarios of one profile:
///   sqrt(sum sse_ml) / sqrt(sum sse_eb)
/// Requires every expected scenario cell; throws DataError listing absentees.
double partial_efficiency(std::span<const ScenarioSquaredError> cells,
                          std::span<const std::string> expected_scenario_ids);

/// Efficiency pooled over every profile and scenario of the grid.
double total_efficiency(std::span<const ScenarioSquaredError> cells,
                        std::span<const std::string> expected_scenario_ids);

}  // namespace ebdiv
