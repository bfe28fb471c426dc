#pragma once

#include <iosfwd>
#include <string_view>

#include "ebdiv/report.hpp"

namespace ebdiv::io {

enum class TableKind { summary, quantiles, efficiency };

/// Throws ConfigError listing the valid names on an unknown table name.
TableKind table_kind_from_string(std::string_view s);

/// Renders the requested table: summary (mean/SD/bias/RMSE, 3 decimals),
/// quantiles (five-number, 3 decimals), or efficiency (1 decimal, one row per
/// profile per index plus partial and total columns). `as_csv` switches from
/// aligned text to a long-format CSV.
void render_table(const RunReport& report, TableKind kind, bool as_csv, std::ostream& out);

}  // namespace ebdiv::io
