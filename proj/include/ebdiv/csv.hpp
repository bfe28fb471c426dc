#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ebdiv/count_vector.hpp"

namespace ebdiv::io {

/// Count matrix dialect: first header cell labels the sample-id column, the
/// remaining header cells are the k taxon names; each data row is a sample id
/// followed by exactly k nonnegative integer counts. Absence is an explicit 0.
struct CountMatrixFile {
  std::string id_column = "sample";
  std::vector<std::string> taxa;
  std::vector<std::pair<std::string, CountVector>> rows;

  int k() const { return static_cast<int>(taxa.size()); }
  bool operator==(const CountMatrixFile&) const = default;
};

/// Throws DataError with line/field diagnostics on malformed input.
CountMatrixFile read_count_matrix(std::istream& in);
CountMatrixFile load_count_matrix(const std::filesystem::path& path);

void write_count_matrix(const CountMatrixFile& matrix, std::ostream& out);
void save_count_matrix(const CountMatrixFile& matrix, const std::filesystem::path& path);

}  // namespace ebdiv::io
