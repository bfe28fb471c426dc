#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "ebdiv/errors.hpp"
#include "ebdiv/evaluate.hpp"

using namespace ebdiv;

TEST_SUITE("evaluate") {

TEST_CASE("summarize closed cases") {
  const double c = 3.7;
  const auto constant = summarize(std::vector<double>{c, c, c}, c);
  CHECK(constant.bias == doctest::Approx(0.0));
  CHECK(constant.sd == doctest::Approx(0.0));
  CHECK(constant.rmse == doctest::Approx(0.0));
  CHECK(constant.m == 3);

  const auto centered = summarize(std::vector<double>{0.0, 2.0}, 1.0);
  CHECK(centered.mean == doctest::Approx(1.0));
  CHECK(centered.bias == doctest::Approx(0.0));
  CHECK(centered.rmse == doctest::Approx(1.0));
  CHECK(centered.sd == doctest::Approx(std::sqrt(2.0)));

  const auto shifted = summarize(std::vector<double>{1.0, 3.0}, 0.0);
  CHECK(shifted.mean == doctest::Approx(2.0));
  CHECK(shifted.bias == doctest::Approx(2.0));
  CHECK(shifted.rmse == doctest::Approx(std::sqrt(5.0)));

  CHECK_THROWS_AS(summarize(std::vector<double>{}, 0.0), DataError);
}

TEST_CASE("single observation leaves sd undefined") {
  const auto s = summarize(std::vector<double>{2.0}, 1.5);
  CHECK(s.m == 1);
  CHECK(std::isnan(s.sd));
  CHECK(s.rmse == doctest::Approx(0.5));
  CHECK(s.quantiles.min == 2.0);
  CHECK(s.quantiles.median == 2.0);
  CHECK(s.quantiles.max == 2.0);
}

TEST_CASE("type-7 quantiles") {
  const std::vector<double> v = {1.0, 2.0, 3.0, 4.0};
  CHECK(quantile_linear(v, 0.25) == doctest::Approx(1.75));
  CHECK(quantile_linear(v, 0.5) == doctest::Approx(2.5));
  CHECK(quantile_linear(v, 0.75) == doctest::Approx(3.25));
  CHECK(quantile_linear(v, 0.0) == doctest::Approx(1.0));
  CHECK(quantile_linear(v, 1.0) == doctest::Approx(4.0));
}

TEST_CASE("rmse identity and quantile monotonicity on random data") {
  std::mt19937 gen(17);
  std::normal_distribution<double> noise(0.0, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 2 + static_cast<int>(gen() % 500);
    std::vector<double> values(static_cast<std::size_t>(m));
    for (auto& v : values) v = 1.0 + noise(gen);
    const auto s = summarize(values, 1.0);

    const double lhs = s.rmse * s.rmse;
    const double rhs = s.bias * s.bias + s.sd * s.sd * (m - 1.0) / m;
    CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, lhs));

    CHECK(s.quantiles.min <= s.quantiles.q1);
    CHECK(s.quantiles.q1 <= s.quantiles.median);
    CHECK(s.quantiles.median <= s.quantiles.q3);
    CHECK(s.quantiles.q3 <= s.quantiles.max);
  }
}

TEST_CASE("relative efficiency") {
  CHECK(relative_efficiency(0.5, 0.5) == doctest::Approx(1.0));
  // Published quasi-uniform cell: 0.908 / 0.203 rounds to 4.5.
  CHECK(relative_efficiency(0.908, 0.203) == doctest::Approx(4.4729).epsilon(1e-3));
  CHECK(relative_efficiency(0.639, 0.015) == doctest::Approx(42.6).epsilon(1e-2));
  CHECK_THROWS_AS(relative_efficiency(0.0, 1.0), DataError);
  CHECK_THROWS_AS(relative_efficiency(1.0, -2.0), DataError);
}

TEST_CASE("pooled efficiency degenerates to the specific ratio") {
  const std::vector<ScenarioSquaredError> cells = {{"only", 4.0, 1.0}};
  const std::vector<std::string> expected = {"only"};
  CHECK(partial_efficiency(cells, expected) == doctest::Approx(2.0));
  CHECK(total_efficiency(cells, expected) == doctest::Approx(2.0));
}

TEST_CASE("pooling identity against raw per-replicate errors") {
  std::mt19937 gen(23);
  std::normal_distribution<double> ml_err(0.0, 1.5);
  std::normal_distribution<double> eb_err(0.0, 0.5);
  std::vector<ScenarioSquaredError> cells;
  std::vector<std::string> expected;
  double raw_ml = 0.0, raw_eb = 0.0;
  for (int s = 0; s < 3; ++s) {
    ScenarioSquaredError cell;
    cell.scenario_id = "s" + std::to_string(s);
    for (int i = 0; i < 200; ++i) {
      const double e_ml = ml_err(gen);
      const double e_eb = eb_err(gen);
      cell.sse_ml += e_ml * e_ml;
      cell.sse_eb += e_eb * e_eb;
      raw_ml += e_ml * e_ml;
      raw_eb += e_eb * e_eb;
    }
    expected.push_back(cell.scenario_id);
    cells.push_back(cell);
  }
  const double pooled = partial_efficiency(cells, expected);
  CHECK(pooled == doctest::Approx(std::sqrt(raw_ml) / std::sqrt(raw_eb)).epsilon(1e-12));

  // Scale invariance: multiplying every error by c leaves the ratio unchanged.
  std::vector<ScenarioSquaredError> scaled = cells;
  for (auto& cell : scaled) {
    cell.sse_ml *= 9.0;
    cell.sse_eb *= 9.0;
  }
  CHECK(partial_efficiency(scaled, expected) == doctest::Approx(pooled).epsilon(1e-12));
}

TEST_CASE("missing scenario cells are reported") {
  const std::vector<ScenarioSquaredError> cells = {{"a", 1.0, 1.0}, {"c", 1.0, 1.0}};
  const std::vector<std::string> expected = {"a", "b", "c"};
  CHECK_THROWS_WITH_AS(partial_efficiency(cells, expected), doctest::Contains("b"), DataError);
  CHECK_THROWS_WITH_AS(total_efficiency(cells, expected), doctest::Contains("missing"), DataError);
}

}  // TEST_SUITE
