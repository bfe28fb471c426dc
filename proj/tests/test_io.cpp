#include <doctest.h>

#include <random>
#include <sstream>

#include "ebdiv/config.hpp"
#include "ebdiv/csv.hpp"
#include "ebdiv/errors.hpp"
#include "ebdiv/report.hpp"
#include "ebdiv/runner.hpp"
#include "ebdiv/tables.hpp"

using namespace ebdiv;
using namespace ebdiv::io;

namespace {

SimulationConfig tiny_config() {
  SimulationConfig config;
  config.k = 20;
  config.m = 25;
  config.seed = 555;
  config.profiles = {ProfileKind::quasi_uniform, ProfileKind::concentrated};
  config.alphas = {20.0, 50.0};
  config.betas = {0.1};
  config.gammas = {1.0, 10.0};
  return config;
}

nlohmann::json strip_timestamp(const RunReport& report) {
  auto j = report_to_json(report);
  j.erase("generated_at");
  return j;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("count matrix round-trips through csv") {
  CountMatrixFile matrix;
  matrix.id_column = "sample";
  matrix.taxa = {"baetis", "gammarus", "chironomus"};
  std::mt19937 gen(31);
  for (int r = 0; r < 12; ++r) {
    std::vector<std::int64_t> counts(3);
    for (auto& c : counts) c = static_cast<std::int64_t>(gen() % 40);
    counts[0] += 1;  // keep the row non-empty
    matrix.rows.emplace_back("site" + std::to_string(r), CountVector(std::move(counts)));
  }

  std::stringstream buffer;
  write_count_matrix(matrix, buffer);
  const auto parsed = read_count_matrix(buffer);
  CHECK(parsed == matrix);

  std::stringstream again;
  write_count_matrix(parsed, again);
  std::stringstream first;
  write_count_matrix(matrix, first);
  CHECK(again.str() == first.str());
}

TEST_CASE("count matrix rejects malformed input") {
  {
    std::stringstream in("sample,a,b\nrow1,1\n");
    CHECK_THROWS_WITH_AS(read_count_matrix(in), doctest::Contains("line 2"), DataError);
  }
  {
    std::stringstream in("sample,a,b\nrow1,1,x\n");
    CHECK_THROWS_WITH_AS(read_count_matrix(in), doctest::Contains("nonnegative integer"),
                         DataError);
  }
  {
    std::stringstream in("sample,a,b\nrow1,1,-2\n");
    CHECK_THROWS_AS(read_count_matrix(in), DataError);
  }
  {
    std::stringstream in("sample,a\n");
    CHECK_THROWS_AS(read_count_matrix(in), DataError);
  }
  {
    std::stringstream in("");
    CHECK_THROWS_WITH_AS(read_count_matrix(in), doctest::Contains("empty"), DataError);
  }
}

TEST_CASE("config parses, validates, and expands in declaration order") {
  const auto j = nlohmann::json::parse(R"({
    "k": 200, "m": 1000, "seed": 20240817,
    "profiles": ["quasi-uniform", "smooth", "concentrated"],
    "alphas": [20, 50, 100], "betas": [0.1], "gammas": [1, 10, 100]
  })");
  const auto config = parse_config(j);
  const auto scenarios = config.expand();
  REQUIRE(scenarios.size() == 27);
  CHECK(scenario_id(scenarios[0]) == "quasi-uniform:a20:b0.1:g1");
  CHECK(scenario_id(scenarios[1]) == "quasi-uniform:a20:b0.1:g10");
  CHECK(scenario_id(scenarios[26]) == "concentrated:a100:b0.1:g100");
  CHECK(scenarios[0].seed != scenarios[1].seed);

  // Deterministic derived seeds.
  const auto second = parse_config(j).expand();
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    CHECK(scenarios[i].seed == second[i].seed);
  }
}

TEST_CASE("config errors name the offending field") {
  auto base = tiny_config().to_json();

  auto missing = base;
  missing.erase("m");
  CHECK_THROWS_WITH_AS(parse_config(missing), doctest::Contains("'m'"), ConfigError);

  auto bad_alpha = base;
  bad_alpha["alphas"] = {20.0, -3.0};
  CHECK_THROWS_WITH_AS(parse_config(bad_alpha), doctest::Contains("'alphas'"), ConfigError);

  auto bad_profile = base;
  bad_profile["profiles"] = {"spiky"};
  CHECK_THROWS_WITH_AS(parse_config(bad_profile), doctest::Contains("spiky"), ConfigError);

  auto bad_k = base;
  bad_k["k"] = 1;
  CHECK_THROWS_AS(parse_config(bad_k), ConfigError);

  CHECK_THROWS_AS(parse_config(nlohmann::json::array()), ConfigError);
}

TEST_CASE("simulation reports are reproducible and thread-count independent") {
  const auto config = tiny_config();
  RunOptions serial;
  serial.threads = 1;
  RunOptions parallel;
  parallel.threads = 4;

  const auto a = run_simulation(config, serial);
  const auto b = run_simulation(config, serial);
  const auto c = run_simulation(config, parallel);
  CHECK(strip_timestamp(a).dump() == strip_timestamp(b).dump());
  CHECK(strip_timestamp(a).dump() == strip_timestamp(c).dump());

  REQUIRE(a.scenarios.size() == 8);
  CHECK(a.scenarios[0].summaries.size() == 8);
  CHECK(a.specific_efficiency.size() == 32);
  CHECK(a.partial_efficiency.size() == 8);
  CHECK(a.total_efficiency.size() == 4);
}

TEST_CASE("report json round-trips and is self-describing") {
  const auto config = tiny_config();
  const auto report = run_simulation(config, RunOptions{2});

  const auto j = report_to_json(report);
  const auto parsed = report_from_json(j);
  CHECK(report_to_json(parsed).dump() == j.dump());

  const auto rerun = rerun_from_report(report, RunOptions{2});
  CHECK(strip_timestamp(rerun).dump() == strip_timestamp(report).dump());
}

TEST_CASE("report validation rejects dangling scenario references") {
  const auto report = run_simulation(tiny_config(), RunOptions{2});
  auto j = report_to_json(report);
  j["scenarios"][0]["summaries"][0]["scenario_id"] = "nonexistent";
  CHECK_THROWS_WITH_AS(report_from_json(j), doctest::Contains("unknown scenario"), DataError);
}

TEST_CASE("failed replicates are excluded and accounted for") {
  // Expected sample size 0.1: most replicates observe nobody and only the
  // rest feed the summaries.
  SimulationConfig config;
  config.k = 5;
  config.m = 100;
  config.seed = 321;
  config.profiles = {ProfileKind::quasi_uniform};
  config.alphas = {1.0};
  config.betas = {10.0};
  config.gammas = {10.0};
  const auto report = run_simulation(config, RunOptions{1});
  REQUIRE(report.scenarios.size() == 1);
  const auto& s = report.scenarios[0];
  CHECK(s.excluded > 0);
  CHECK(s.excluded < config.m);
  for (const auto& summary : s.summaries) {
    CHECK(summary.m == config.m - s.excluded);
  }
  const int tallied = s.eta_statuses.converged + s.eta_statuses.floor_clamped +
                      s.eta_statuses.ceiling_clamped + s.eta_statuses.flat_likelihood +
                      s.eta_statuses.max_iterations;
  CHECK(tallied == config.m - s.excluded);
}

TEST_CASE("m = 1 smoke run leaves sd null") {
  auto config = tiny_config();
  config.m = 1;
  config.profiles = {ProfileKind::smooth};
  config.alphas = {20.0};
  config.gammas = {10.0};
  const auto report = run_simulation(config, RunOptions{1});
  const auto j = report_to_json(report);
  for (const auto& summary : j["scenarios"][0]["summaries"]) {
    CHECK(summary["sd"].is_null());
    CHECK(summary["m"] == 1);
  }
}

TEST_CASE("estimation pipeline per sample") {
  CountMatrixFile matrix;
  matrix.taxa = {"a", "b"};
  matrix.rows.emplace_back("pair", CountVector({3, 1}));
  matrix.rows.emplace_back("empty", CountVector({0, 0}));
  matrix.rows.emplace_back("equal", CountVector({6, 6}));

  const auto report = run_estimation(matrix, EstimateMethod::both);
  REQUIRE(report.samples.size() == 2);  // empty row skipped
  REQUIRE(report.warnings.size() == 1);
  CHECK(report.warnings[0].find("empty") != std::string::npos);

  const auto& pair = report.samples[0];
  REQUIRE(pair.ml.has_value());
  REQUIRE(pair.eb.has_value());
  CHECK(pair.ml->proportions[0] == doctest::Approx(0.75));
  REQUIRE(pair.eb->eta.has_value());
  const double eta = *pair.eb->eta;
  CHECK(pair.eb->proportions[0] == doctest::Approx((3.0 + eta) / (4.0 + 2.0 * eta)));

  // Counts too similar to each other: eta escapes upward or the marginal is flat.
  const auto& equal = report.samples[1];
  REQUIRE(equal.eb->status.has_value());
  const bool expected_status = *equal.eb->status == EtaStatus::ceiling_clamped ||
                               *equal.eb->status == EtaStatus::flat_likelihood;
  CHECK(expected_status);

  // Estimate reports round-trip through json too.
  const auto j = report_to_json(report);
  CHECK(report_to_json(report_from_json(j)).dump() == j.dump());
}

TEST_CASE("estimate ml echoes proportions with index values") {
  CountMatrixFile matrix;
  matrix.taxa = {"a", "b", "c"};
  matrix.rows.emplace_back("s", CountVector({2, 3, 5}));
  const auto report = run_estimation(matrix, EstimateMethod::ml);
  REQUIRE(report.samples.size() == 1);
  REQUIRE(report.samples[0].ml.has_value());
  CHECK_FALSE(report.samples[0].eb.has_value());
  const auto& ml = *report.samples[0].ml;
  CHECK(ml.proportions == std::vector<double>{0.2, 0.3, 0.5});
  CHECK(ml.simpson == doctest::Approx(0.38));
  CHECK(ml.shannon ==
        doctest::Approx(-(0.2 * std::log(0.2) + 0.3 * std::log(0.3) + 0.5 * std::log(0.5))));
}

TEST_CASE("table rendering") {
  const auto report = run_simulation(tiny_config(), RunOptions{2});

  std::stringstream efficiency;
  render_table(report, TableKind::efficiency, false, efficiency);
  CHECK(efficiency.str().find("Shannon entropy") != std::string::npos);
  CHECK(efficiency.str().find("partial") != std::string::npos);
  CHECK(efficiency.str().find("total") != std::string::npos);
  CHECK(efficiency.str().find("quasi-uniform") != std::string::npos);

  std::stringstream summary;
  render_table(report, TableKind::summary, false, summary);
  CHECK(summary.str().find("Mean") != std::string::npos);
  CHECK(summary.str().find("RMSE") != std::string::npos);

  std::stringstream quantiles_csv;
  render_table(report, TableKind::quantiles, true, quantiles_csv);
  std::size_t lines = 0;
  for (char ch : quantiles_csv.str()) {
    if (ch == '\n') ++lines;
  }
  // Header plus one row per (index, scenario, estimator).
  CHECK(lines == 1 + 4 * report.scenarios.size() * 2);

  CHECK_THROWS_WITH_AS(table_kind_from_string("boxplot"), doctest::Contains("valid names"),
                       ConfigError);
}

TEST_CASE("estimate reports render as a sample listing") {
  CountMatrixFile matrix;
  matrix.taxa = {"a", "b"};
  matrix.rows.emplace_back("s1", CountVector({3, 1}));
  const auto report = run_estimation(matrix, EstimateMethod::both);

  std::stringstream out;
  render_table(report, TableKind::summary, false, out);
  CHECK(out.str().find("s1") != std::string::npos);
  CHECK_THROWS_AS(render_table(report, TableKind::efficiency, false, out), DataError);
}

}  // TEST_SUITE
