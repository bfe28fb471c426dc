#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ebdiv/config.hpp"
#include "ebdiv/csv.hpp"
#include "ebdiv/errors.hpp"
#include "ebdiv/report.hpp"
#include "ebdiv/runner.hpp"
#include "ebdiv/tables.hpp"
#include "ebdiv/version.hpp"

namespace {

int env_threads() {
  const char* value = std::getenv("EBDIV_THREADS");
  if (value == nullptr) return 0;
  try {
    return std::max(0, std::stoi(value));
  } catch (const std::exception&) {
    return 0;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Empirical-Bayes estimation of taxonomic composition under overdispersion"};
  app.set_version_flag("--version", std::string(ebdiv::kVersion));
  app.require_subcommand(1);

  // simulate
  std::string sim_config, sim_out;
  std::uint64_t seed_override = 0;
  bool have_seed_override = false;
  int threads = 0;
  auto* simulate = app.add_subcommand("simulate", "Run a scenario grid and write a report");
  simulate->add_option("--config", sim_config, "Scenario grid config (JSON)")->required();
  simulate->add_option("--out", sim_out, "Report output path (JSON)")->required();
  simulate->add_option("--seed", seed_override, "Override the config seed")
      ->each([&](const std::string&) { have_seed_override = true; });
  simulate->add_option("--threads", threads, "Worker threads (default: EBDIV_THREADS or all cores)");

  // estimate
  std::string est_counts, est_method = "both", est_out;
  auto* estimate = app.add_subcommand("estimate", "Estimate composition for each sample of a count matrix");
  estimate->add_option("--counts", est_counts, "Count matrix CSV")->required();
  estimate->add_option("--method", est_method, "Estimator: ml, eb, or both")
      ->check(CLI::IsMember({"ml", "eb", "both"}));
  estimate->add_option("--out", est_out, "Report output path (JSON)")->required();

  // report
  std::string rep_in, rep_table;
  bool rep_csv = false;
  auto* report = app.add_subcommand("report", "Render a table from a report");
  report->add_option("--in", rep_in, "Report path (JSON)")->required();
  report->add_option("--table", rep_table, "Table: summary, quantiles, or efficiency")->required();
  report->add_flag("--csv", rep_csv, "Emit CSV instead of aligned text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (simulate->parsed()) {
      ebdiv::io::SimulationConfig config = ebdiv::io::load_config(sim_config);
      if (have_seed_override) config.seed = seed_override;
      ebdiv::io::RunOptions options;
      options.threads = threads > 0 ? threads : env_threads();
      const auto run = ebdiv::io::run_simulation(config, options);
      ebdiv::io::save_report(run, sim_out);
      std::cerr << "wrote " << run.scenarios.size() << " scenario(s) to " << sim_out << "\n";
    } else if (estimate->parsed()) {
      const auto matrix = ebdiv::io::load_count_matrix(est_counts);
      const auto method = ebdiv::io::estimate_method_from_string(est_method);
      const auto run = ebdiv::io::run_estimation(matrix, method);
      ebdiv::io::save_report(run, est_out);
      std::cerr << "wrote " << run.samples.size() << " sample estimate(s) to " << est_out << "\n";
      for (const auto& w : run.warnings) {
        std::cerr << "warning: " << w << "\n";
      }
    } else if (report->parsed()) {
      const auto kind = ebdiv::io::table_kind_from_string(rep_table);
      const auto run = ebdiv::io::load_report(rep_in);
      ebdiv::io::render_table(run, kind, rep_csv, std::cout);
    }
  } catch (const ebdiv::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ebdiv::DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
