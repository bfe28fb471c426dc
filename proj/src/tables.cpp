#include "ebdiv/tables.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <iomanip>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ebdiv/errors.hpp"

namespace ebdiv::io {

namespace {

using Row = std::vector<std::string>;

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

std::string format_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

std::string index_label(Index i) {
  switch (i) {
    case Index::shannon: return "Shannon entropy (H)";
    case Index::simpson: return "Simpson diversity (D)";
    case Index::pma: return "PMA index (I)";
    case Index::euclidean: return "Euclidean similarity (E)";
  }
  return "?";
}

void print_aligned(const std::vector<Row>& rows, std::ostream& out) {
  if (rows.empty()) return;
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (row.size() > widths.size()) widths.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << (c == 0 ? "" : "  ") << std::left << std::setw(static_cast<int>(widths[c]))
          << row[c];
    }
    out << '\n';
  }
}

void print_csv(const std::vector<Row>& rows, std::ostream& out) {
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << (c == 0 ? "" : ",") << row[c];
    }
    out << '\n';
  }
}

std::string cell_label(const Scenario& s) {
  return "a" + format_num(s.alpha) + ":g" + format_num(s.gamma);
}

const IndexSummary& find_summary(const ScenarioReport& s, Index index, Estimator estimator) {
  for (const auto& summary : s.summaries) {
    if (summary.index == index && summary.estimator == estimator) return summary;
  }
  throw DataError("report: scenario " + s.id + " lacks a summary for index " +
                  std::string(to_string(index)));
}

constexpr std::array<Index, 4> kIndices = {Index::shannon, Index::simpson, Index::pma,
                                           Index::euclidean};
constexpr std::array<Estimator, 2> kEstimators = {Estimator::eb, Estimator::ml};

void render_sample_listing(const RunReport& report, bool as_csv, std::ostream& out) {
  std::vector<Row> rows;
  rows.push_back({"sample", "n", "k", "method", "eta", "status", "shannon", "simpson"});
  for (const auto& s : report.samples) {
    for (const auto* m : {s.ml ? &*s.ml : nullptr, s.eb ? &*s.eb : nullptr}) {
      if (m == nullptr) continue;
      rows.push_back({s.id, std::to_string(s.n), std::to_string(s.k),
                      m->eta ? "eb" : "ml", m->eta ? fixed(*m->eta, 4) : "-",
                      m->status ? std::string(to_string(*m->status)) : "-",
                      fixed(m->shannon, 3), fixed(m->simpson, 3)});
    }
  }
  as_csv ? print_csv(rows, out) : print_aligned(rows, out);
}

void require_simulation(const RunReport& report) {
  if (report.scenarios.empty()) {
    throw DataError("report contains no simulation results");
  }
}

void render_summary(const RunReport& report, bool as_csv, std::ostream& out) {
  if (report.scenarios.empty() && !report.samples.empty()) {
    render_sample_listing(report, as_csv, out);
    return;
  }
  require_simulation(report);
  if (as_csv) {
    std::vector<Row> rows;
    rows.push_back({"index", "profile", "alpha", "beta", "gamma", "estimator", "mean", "sd",
                    "bias", "rmse", "m", "excluded"});
    for (Index index : kIndices) {
      for (const auto& s : report.scenarios) {
        for (Estimator est : kEstimators) {
          const auto& summary = find_summary(s, index, est);
          rows.push_back({std::string(to_string(index)),
                          std::string(to_string(s.scenario.profile_kind)),
                          format_num(s.scenario.alpha), format_num(s.scenario.beta),
                          format_num(s.scenario.gamma), std::string(to_string(est)),
                          fixed(summary.mean, 6), fixed(summary.sd, 6), fixed(summary.bias, 6),
                          fixed(summary.rmse, 6), std::to_string(summary.m),
                          std::to_string(s.excluded)});
        }
      }
    }
    print_csv(rows, out);
    return;
  }

  const std::array<std::pair<const char*, double IndexSummary::*>, 4> stats = {
      std::pair{"Mean", &IndexSummary::mean}, std::pair{"SD", &IndexSummary::sd},
      std::pair{"Bias", &IndexSummary::bias}, std::pair{"RMSE", &IndexSummary::rmse}};

  for (Index index : kIndices) {
    out << "== " << index_label(index) << " ==\n";
    for (const auto& p : report.profiles) {
      std::vector<const ScenarioReport*> cells;
      for (const auto& s : report.scenarios) {
        if (s.scenario.profile_kind == p.kind) cells.push_back(&s);
      }
      if (cells.empty()) continue;
      const double true_value =
          index == Index::shannon ? p.true_shannon
                                  : (index == Index::simpson ? p.true_simpson : 1.0);
      out << "-- " << to_string(p.kind) << " evenness, true value "
          << fixed(true_value, 3) << " --\n";
      std::vector<Row> rows;
      Row header = {"", ""};
      for (const auto* s : cells) header.push_back(cell_label(s->scenario));
      rows.push_back(std::move(header));
      for (Estimator est : kEstimators) {
        bool first = true;
        for (const auto& [label, member] : stats) {
          Row row = {first ? (est == Estimator::eb ? "EB" : "ML") : "", label};
          first = false;
          for (const auto* s : cells) {
            row.push_back(fixed(find_summary(*s, index, est).*member, 3));
          }
          rows.push_back(std::move(row));
        }
      }
      print_aligned(rows, out);
    }
    out << '\n';
  }
}

void render_quantiles(const RunReport& report, bool as_csv, std::ostream& out) {
  require_simulation(report);
  const std::array<std::pair<const char*, double Quantiles::*>, 5> stats = {
      std::pair{"Min", &Quantiles::min}, std::pair{"1st Q.", &Quantiles::q1},
      std::pair{"Median", &Quantiles::median}, std::pair{"3rd Q.", &Quantiles::q3},
      std::pair{"Max", &Quantiles::max}};
  if (as_csv) {
    std::vector<Row> rows;
    rows.push_back({"index", "profile", "alpha", "beta", "gamma", "estimator", "min", "q1",
                    "median", "q3", "max"});
    for (Index index : kIndices) {
      for (const auto& s : report.scenarios) {
        for (Estimator est : kEstimators) {
          const auto& q = find_summary(s, index, est).quantiles;
          rows.push_back({std::string(to_string(index)),
                          std::string(to_string(s.scenario.profile_kind)),
                          format_num(s.scenario.alpha), format_num(s.scenario.beta),
                          format_num(s.scenario.gamma), std::string(to_string(est)),
                          fixed(q.min, 6), fixed(q.q1, 6), fixed(q.median, 6), fixed(q.q3, 6),
                          fixed(q.max, 6)});
        }
      }
    }
    print_csv(rows, out);
    return;
  }
  for (Index index : kIndices) {
    out << "== " << index_label(index) << ": sampling quantiles ==\n";
    for (const auto& p : report.profiles) {
      std::vector<const ScenarioReport*> cells;
      for (const auto& s : report.scenarios) {
        if (s.scenario.profile_kind == p.kind) cells.push_back(&s);
      }
      if (cells.empty()) continue;
      out << "-- " << to_string(p.kind) << " evenness --\n";
      std::vector<Row> rows;
      Row header = {"", ""};
      for (const auto* s : cells) header.push_back(cell_label(s->scenario));
      rows.push_back(std::move(header));
      for (Estimator est : kEstimators) {
        bool first = true;
        for (const auto& [label, member] : stats) {
          Row row = {first ? (est == Estimator::eb ? "EB" : "ML") : "", label};
          first = false;
          for (const auto* s : cells) {
            row.push_back(fixed(find_summary(*s, index, est).quantiles.*member, 3));
          }
          rows.push_back(std::move(row));
        }
      }
      print_aligned(rows, out);
    }
    out << '\n';
  }
}

void render_efficiency(const RunReport& report, bool as_csv, std::ostream& out) {
  require_simulation(report);
  std::map<std::pair<Index, std::string>, double> specific;
  for (const auto& e : report.specific_efficiency) {
    specific[{e.index, e.scenario_id}] = e.value;
  }
  std::map<std::pair<Index, ProfileKind>, double> partial;
  for (const auto& e : report.partial_efficiency) {
    partial[{e.index, e.profile}] = e.value;
  }
  std::map<Index, double> total;
  for (const auto& e : report.total_efficiency) {
    total[e.index] = e.value;
  }

  if (as_csv) {
    std::vector<Row> rows;
    rows.push_back({"index", "scope", "profile", "alpha", "beta", "gamma", "value"});
    for (const auto& e : report.specific_efficiency) {
      const ScenarioReport* s = nullptr;
      for (const auto& sc : report.scenarios) {
        if (sc.id == e.scenario_id) s = &sc;
      }
      rows.push_back({std::string(to_string(e.index)), "specific",
                      s ? std::string(to_string(s->scenario.profile_kind)) : "",
                      s ? format_num(s->scenario.alpha) : "", s ? format_num(s->scenario.beta) : "",
                      s ? format_num(s->scenario.gamma) : "", fixed(e.value, 3)});
    }
    for (const auto& e : report.partial_efficiency) {
      rows.push_back({std::string(to_string(e.index)), "partial",
                      std::string(to_string(e.profile)), "", "", "", fixed(e.value, 3)});
    }
    for (const auto& e : report.total_efficiency) {
      rows.push_back(
          {std::string(to_string(e.index)), "total", "", "", "", "", fixed(e.value, 3)});
    }
    print_csv(rows, out);
    return;
  }

  for (Index index : kIndices) {
    out << "== " << index_label(index);
    if (auto it = total.find(index); it != total.end()) {
      out << "  (total " << fixed(it->second, 1) << ")";
    }
    out << " ==\n";
    std::vector<Row> rows;
    bool printed_header = false;
    for (const auto& p : report.profiles) {
      std::vector<const ScenarioReport*> cells;
      for (const auto& s : report.scenarios) {
        if (s.scenario.profile_kind == p.kind) cells.push_back(&s);
      }
      if (cells.empty()) continue;
      if (!printed_header) {
        Row header = {"profile"};
        for (const auto* s : cells) header.push_back(cell_label(s->scenario));
        header.push_back("partial");
        rows.push_back(std::move(header));
        printed_header = true;
      }
      Row row = {std::string(to_string(p.kind))};
      for (const auto* s : cells) {
        auto it = specific.find({index, s->id});
        row.push_back(it == specific.end() ? "-" : fixed(it->second, 1));
      }
      auto it = partial.find({index, p.kind});
      row.push_back(it == partial.end() ? "-" : fixed(it->second, 1));
      rows.push_back(std::move(row));
    }
    print_aligned(rows, out);
    out << '\n';
  }
}

}  // namespace

TableKind table_kind_from_string(std::string_view s) {
  if (s == "summary") return TableKind::summary;
  if (s == "quantiles") return TableKind::quantiles;
  if (s == "efficiency") return TableKind::efficiency;
  throw ConfigError("unknown table name '" + std::string(s) +
                    "' (valid names: summary, quantiles, efficiency)");
}

void render_table(const RunReport& report, TableKind kind, bool as_csv, std::ostream& out) {
  switch (kind) {
    case TableKind::summary: render_summary(report, as_csv, out); break;
    case TableKind::quantiles: render_quantiles(report, as_csv, out); break;
    case TableKind::efficiency: render_efficiency(report, as_csv, out); break;
  }
}

}  // namespace ebdiv::io
