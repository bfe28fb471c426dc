#include "ebdiv/report.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <unordered_set>

#include "ebdiv/errors.hpp"

namespace ebdiv::io {

namespace {

using nlohmann::json;

json number_or_null(double v) {
  if (std::isnan(v)) return nullptr;
  return v;
}

double number_from(const json& j) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  return j.get<double>();
}

json summary_to_json(const IndexSummary& s) {
  return json{
      {"index", std::string(to_string(s.index))},
      {"estimator", std::string(to_string(s.estimator))},
      {"scenario_id", s.scenario_id},
      {"mean", s.mean},
      {"sd", number_or_null(s.sd)},
      {"bias", s.bias},
      {"rmse", s.rmse},
      {"quantiles",
       json{{"min", s.quantiles.min},
            {"q1", s.quantiles.q1},
            {"median", s.quantiles.median},
            {"q3", s.quantiles.q3},
            {"max", s.quantiles.max}}},
      {"m", s.m},
  };
}

IndexSummary summary_from_json(const json& j) {
  IndexSummary s;
  s.index = index_from_string(j.at("index").get<std::string>());
  s.estimator = estimator_from_string(j.at("estimator").get<std::string>());
  s.scenario_id = j.at("scenario_id").get<std::string>();
  s.mean = j.at("mean").get<double>();
  s.sd = number_from(j.at("sd"));
  s.bias = j.at("bias").get<double>();
  s.rmse = j.at("rmse").get<double>();
  const auto& q = j.at("quantiles");
  s.quantiles = {q.at("min").get<double>(), q.at("q1").get<double>(),
                 q.at("median").get<double>(), q.at("q3").get<double>(),
                 q.at("max").get<double>()};
  s.m = j.at("m").get<int>();
  return s;
}

json scenario_to_json(const ScenarioReport& r) {
  json j{
      {"id", r.id},
      {"profile", std::string(to_string(r.scenario.profile_kind))},
      {"alpha", r.scenario.alpha},
      {"beta", r.scenario.beta},
      {"gamma", r.scenario.gamma},
      {"k", r.scenario.k},
      {"m", r.scenario.m},
      {"seed", r.scenario.seed},
      {"excluded", r.excluded},
      {"eta_statuses",
       json{{"converged", r.eta_statuses.converged},
            {"floor_clamped", r.eta_statuses.floor_clamped},
            {"ceiling_clamped", r.eta_statuses.ceiling_clamped},
            {"flat_likelihood", r.eta_statuses.flat_likelihood},
            {"max_iterations", r.eta_statuses.max_iterations}}},
  };
  auto& summaries = j["summaries"] = json::array();
  for (const auto& s : r.summaries) {
    summaries.push_back(summary_to_json(s));
  }
  return j;
}

ScenarioReport scenario_from_json(const json& j) {
  ScenarioReport r;
  r.id = j.at("id").get<std::string>();
  r.scenario.profile_kind = profile_kind_from_string(j.at("profile").get<std::string>());
  r.scenario.alpha = j.at("alpha").get<double>();
  r.scenario.beta = j.at("beta").get<double>();
  r.scenario.gamma = j.at("gamma").get<double>();
  r.scenario.k = j.at("k").get<int>();
  r.scenario.m = j.at("m").get<int>();
  r.scenario.seed = j.at("seed").get<std::uint64_t>();
  r.excluded = j.at("excluded").get<int>();
  const auto& st = j.at("eta_statuses");
  r.eta_statuses = {st.at("converged").get<int>(), st.at("floor_clamped").get<int>(),
                    st.at("ceiling_clamped").get<int>(), st.at("flat_likelihood").get<int>(),
                    st.at("max_iterations").get<int>()};
  for (const auto& s : j.at("summaries")) {
    r.summaries.push_back(summary_from_json(s));
  }
  return r;
}

json sample_method_to_json(const SampleMethodReport& m) {
  json j{
      {"proportions", m.proportions},
      {"shannon", m.shannon},
      {"simpson", m.simpson},
  };
  if (m.eta) j["eta"] = *m.eta;
  if (m.status) j["status"] = std::string(to_string(*m.status));
  if (m.iterations) j["iterations"] = *m.iterations;
  return j;
}

SampleMethodReport sample_method_from_json(const json& j) {
  SampleMethodReport m;
  m.proportions = j.at("proportions").get<std::vector<double>>();
  m.shannon = j.at("shannon").get<double>();
  m.simpson = j.at("simpson").get<double>();
  if (j.contains("eta")) m.eta = j.at("eta").get<double>();
  if (j.contains("status")) m.status = eta_status_from_string(j.at("status").get<std::string>());
  if (j.contains("iterations")) m.iterations = j.at("iterations").get<int>();
  return m;
}

}  // namespace

json report_to_json(const RunReport& report) {
  json j;
  j["tool"] = report.tool;
  j["version"] = report.version;
  j["rng"] = report.rng_algorithm;
  j["generated_at"] = report.generated_at;
  j["seed"] = report.seed;
  j["config"] = report.config;

  auto& profiles = j["profiles"] = json::array();
  for (const auto& p : report.profiles) {
    profiles.push_back(json{
        {"kind", std::string(to_string(p.kind))},
        {"k", p.k},
        {"intercept", p.intercept},
        {"exponent", p.exponent},
        {"true_shannon", p.true_shannon},
        {"true_simpson", p.true_simpson},
    });
  }

  auto& scenarios = j["scenarios"] = json::array();
  for (const auto& s : report.scenarios) {
    scenarios.push_back(scenario_to_json(s));
  }

  auto& eff = j["efficiency"];
  auto& specific = eff["specific"] = json::array();
  for (const auto& e : report.specific_efficiency) {
    specific.push_back(json{{"index", std::string(to_string(e.index))},
                            {"scenario_id", e.scenario_id},
                            {"value", e.value}});
  }
  auto& partial = eff["partial"] = json::array();
  for (const auto& e : report.partial_efficiency) {
    partial.push_back(json{{"index", std::string(to_string(e.index))},
                           {"profile", std::string(to_string(e.profile))},
                           {"value", e.value}});
  }
  auto& total = eff["total"] = json::array();
  for (const auto& e : report.total_efficiency) {
    total.push_back(json{{"index", std::string(to_string(e.index))}, {"value", e.value}});
  }

  auto& samples = j["samples"] = json::array();
  for (const auto& s : report.samples) {
    json sj{{"id", s.id}, {"n", s.n}, {"k", s.k}};
    if (s.ml) sj["ml"] = sample_method_to_json(*s.ml);
    if (s.eb) sj["eb"] = sample_method_to_json(*s.eb);
    samples.push_back(std::move(sj));
  }

  j["warnings"] = report.warnings;
  return j;
}

RunReport report_from_json(const json& j) {
  try {
    RunReport report;
    report.tool = j.at("tool").get<std::string>();
    report.version = j.at("version").get<std::string>();
    report.rng_algorithm = j.at("rng").get<std::string>();
    report.generated_at = j.at("generated_at").get<std::string>();
    report.seed = j.at("seed").get<std::uint64_t>();
    report.config = j.at("config");

    for (const auto& p : j.at("profiles")) {
      report.profiles.push_back(ProfileReport{
          profile_kind_from_string(p.at("kind").get<std::string>()),
          p.at("k").get<int>(),
          p.at("intercept").get<double>(),
          p.at("exponent").get<double>(),
          p.at("true_shannon").get<double>(),
          p.at("true_simpson").get<double>(),
      });
    }
    for (const auto& s : j.at("scenarios")) {
      report.scenarios.push_back(scenario_from_json(s));
    }

    std::unordered_set<std::string> scenario_ids;
    for (const auto& s : report.scenarios) {
      scenario_ids.insert(s.id);
    }
    for (const auto& s : report.scenarios) {
      for (const auto& summary : s.summaries) {
        if (!scenario_ids.contains(summary.scenario_id)) {
          throw DataError("report: summary references unknown scenario '" +
                          summary.scenario_id + "'");
        }
      }
    }

    const auto& eff = j.at("efficiency");
    for (const auto& e : eff.at("specific")) {
      if (!scenario_ids.contains(e.at("scenario_id").get<std::string>())) {
        throw DataError("report: efficiency cell references unknown scenario '" +
                        e.at("scenario_id").get<std::string>() + "'");
      }
      report.specific_efficiency.push_back(
          SpecificEfficiency{index_from_string(e.at("index").get<std::string>()),
                             e.at("scenario_id").get<std::string>(), e.at("value").get<double>()});
    }
    for (const auto& e : eff.at("partial")) {
      report.partial_efficiency.push_back(
          PartialEfficiency{index_from_string(e.at("index").get<std::string>()),
                            profile_kind_from_string(e.at("profile").get<std::string>()),
                            e.at("value").get<double>()});
    }
    for (const auto& e : eff.at("total")) {
      report.total_efficiency.push_back(TotalEfficiency{
          index_from_string(e.at("index").get<std::string>()), e.at("value").get<double>()});
    }

    for (const auto& s : j.at("samples")) {
      SampleReport sample;
      sample.id = s.at("id").get<std::string>();
      sample.n = s.at("n").get<std::int64_t>();
      sample.k = s.at("k").get<int>();
      if (s.contains("ml")) sample.ml = sample_method_from_json(s.at("ml"));
      if (s.contains("eb")) sample.eb = sample_method_from_json(s.at("eb"));
      report.samples.push_back(std::move(sample));
    }

    report.warnings = j.at("warnings").get<std::vector<std::string>>();
    return report;
  } catch (const json::exception& e) {
    throw DataError(std::string("report: malformed document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw DataError(std::string("report: malformed document: ") + e.what());
  }
}

void save_report(const RunReport& report, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw DataError("cannot write report file: " + path.string());
  }
  out << report_to_json(report).dump(2) << '\n';
}

RunReport load_report(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw DataError("cannot open report file: " + path.string());
  }
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw DataError("report " + path.string() + ": " + e.what());
  }
  return report_from_json(j);
}

}  // namespace ebdiv::io
