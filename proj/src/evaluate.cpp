#include "ebdiv/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "ebdiv/errors.hpp"

namespace ebdiv {

double quantile_linear(std::span<const double> sorted_values, double p) {
  if (sorted_values.empty()) {
    throw DataError("quantile of empty sequence");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("quantile probability outside [0, 1]");
  }
  const std::size_t m = sorted_values.size();
  const double h = p * static_cast<double>(m - 1);
  const std::size_t lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, m - 1);
  const double frac = h - static_cast<double>(lo);
  return sorted_values[lo] + frac * (sorted_values[hi] - sorted_values[lo]);
}

IndexSummary summarize(std::span<const double> values, double true_value) {
  if (values.empty()) {
    throw DataError("summarize: empty input");
  }
  if (!std::isfinite(true_value)) {
    throw std::invalid_argument("summarize: true value must be finite");
  }
  const double m = static_cast<double>(values.size());

  IndexSummary s;
  s.m = static_cast<int>(values.size());

  double sum = 0.0;
  double sse = 0.0;  // against the true value
  for (double v : values) {
    sum += v;
    sse += (v - true_value) * (v - true_value);
  }
  s.mean = sum / m;
  s.bias = s.mean - true_value;
  s.rmse = std::sqrt(sse / m);

  if (values.size() >= 2) {
    double ss = 0.0;
    for (double v : values) {
      ss += (v - s.mean) * (v - s.mean);
    }
    s.sd = std::sqrt(ss / (m - 1.0));
  } else {
    s.sd = std::numeric_limits<double>::quiet_NaN();
  }

  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  s.quantiles.min = sorted.front();
  s.quantiles.q1 = quantile_linear(sorted, 0.25);
  s.quantiles.median = quantile_linear(sorted, 0.5);
  s.quantiles.q3 = quantile_linear(sorted, 0.75);
  s.quantiles.max = sorted.back();
  return s;
}

double relative_efficiency(double rmse_ml, double rmse_eb) {
  if (!(rmse_ml > 0.0) || !(rmse_eb > 0.0) || !std::isfinite(rmse_ml) ||
      !std::isfinite(rmse_eb)) {
    throw DataError("relative efficiency needs strictly positive finite RMSE values");
  }
  return rmse_ml / rmse_eb;
}

namespace {

double pooled_efficiency(std::span<const ScenarioSquaredError> cells,
                         std::span<const std::string> expected_scenario_ids,
                         const char* what) {
  std::unordered_set<std::string> present;
  for (const auto& cell : cells) present.insert(cell.scenario_id);
  std::string missing;
  for (const auto& id : expected_scenario_ids) {
    if (!present.contains(id)) {
      if (!missing.empty()) missing += ", ";
      missing += id;
    }
  }
  if (!missing.empty()) {
    throw DataError(std::string(what) + ": missing scenario cells: " + missing);
  }
  double sse_ml = 0.0, sse_eb = 0.0;
  for (const auto& cell : cells) {
    sse_ml += cell.sse_ml;
    sse_eb += cell.sse_eb;
  }
  if (!(sse_ml > 0.0) || !(sse_eb > 0.0)) {
    throw DataError(std::string(what) + ": pooled squared errors must be positive");
  }
  return std::sqrt(sse_ml) / std::sqrt(sse_eb);
}

}  // namespace

double partial_efficiency(std::span<const ScenarioSquaredError> cells,
                          std::span<const std::string> expected_scenario_ids) {
  return pooled_efficiency(cells, expected_scenario_ids, "partial efficiency");
}

double total_efficiency(std::span<const ScenarioSquaredError> cells,
                        std::span<const std::string> expected_scenario_ids) {
  return pooled_efficiency(cells, expected_scenario_ids, "total efficiency");
}

}  // namespace ebdiv
