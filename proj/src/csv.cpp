#include "ebdiv/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "ebdiv/errors.hpp"

namespace ebdiv::io {

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

std::int64_t parse_count(const std::string& field, std::size_t line_no, std::size_t field_no) {
  std::int64_t value = 0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || value < 0) {
    throw DataError("count matrix line " + std::to_string(line_no) + ", field " +
                    std::to_string(field_no) + ": '" + field +
                    "' is not a nonnegative integer");
  }
  return value;
}

}  // namespace

CountMatrixFile read_count_matrix(std::istream& in) {
  CountMatrixFile matrix;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_line(line);
    if (!have_header) {
      if (fields.size() < 3) {
        throw DataError("count matrix header needs an id column and at least 2 taxa, got " +
                        std::to_string(fields.size()) + " fields");
      }
      matrix.id_column = fields[0];
      matrix.taxa.assign(fields.begin() + 1, fields.end());
      have_header = true;
      continue;
    }
    if (fields.size() != matrix.taxa.size() + 1) {
      throw DataError("count matrix line " + std::to_string(line_no) + ": expected " +
                      std::to_string(matrix.taxa.size() + 1) + " fields, got " +
                      std::to_string(fields.size()));
    }
    std::vector<std::int64_t> counts;
    counts.reserve(matrix.taxa.size());
    for (std::size_t f = 1; f < fields.size(); ++f) {
      counts.push_back(parse_count(fields[f], line_no, f + 1));
    }
    matrix.rows.emplace_back(fields[0], CountVector(std::move(counts)));
  }
  if (!have_header) {
    throw DataError("count matrix is empty");
  }
  return matrix;
}

CountMatrixFile load_count_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw DataError("cannot open count matrix file: " + path.string());
  }
  return read_count_matrix(in);
}

void write_count_matrix(const CountMatrixFile& matrix, std::ostream& out) {
  out << matrix.id_column;
  for (const auto& taxon : matrix.taxa) {
    out << ',' << taxon;
  }
  out << '\n';
  for (const auto& [id, counts] : matrix.rows) {
    out << id;
    for (std::int64_t c : counts.counts()) {
      out << ',' << c;
    }
    out << '\n';
  }
}

void save_count_matrix(const CountMatrixFile& matrix, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw DataError("cannot write count matrix file: " + path.string());
  }
  write_count_matrix(matrix, out);
}

}  // namespace ebdiv::io
