#include "ebdiv/indices.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ebdiv {

std::string_view to_string(Index i) {
  switch (i) {
    case Index::shannon: return "shannon";
    case Index::simpson: return "simpson";
    case Index::pma: return "pma";
    case Index::euclidean: return "euclidean";
  }
  return "unknown";
}

Index index_from_string(std::string_view s) {
  if (s == "shannon") return Index::shannon;
  if (s == "simpson") return Index::simpson;
  if (s == "pma") return Index::pma;
  if (s == "euclidean") return Index::euclidean;
  throw std::invalid_argument("unknown index name: " + std::string(s));
}

IndexValue shannon(const Simplex& p) {
  double h = 0.0;
  for (double v : p.values()) {
    if (v > 0.0) {  // 0 log 0 := 0
      h -= v * std::log(v);
    }
  }
  return {Index::shannon, h};
}

IndexValue simpson(const Simplex& p) {
  double d = 0.0;
  for (double v : p.values()) {
    d += v * v;
  }
  return {Index::simpson, d};
}

namespace {
void require_same_k(const Simplex& a, const Simplex& b, const char* what) {
  if (a.k() != b.k()) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a.k()) + " vs " + std::to_string(b.k()) + ")");
  }
}
}  // namespace

IndexValue pma(const Simplex& p_hat, const Simplex& p_star) {
  require_same_k(p_hat, p_star, "pma");
  double acc = 0.0;
  for (int j = 0; j < p_hat.k(); ++j) {
    acc += std::abs(p_hat[j] - p_star[j]);
  }
  return {Index::pma, 1.0 - 0.5 * acc};
}

IndexValue euclidean_similarity(const Simplex& p_hat, const Simplex& p_star) {
  require_same_k(p_hat, p_star, "euclidean similarity");
  double acc = 0.0;
  for (int j = 0; j < p_hat.k(); ++j) {
    const double d = p_hat[j] - p_star[j];
    acc += d * d;
  }
  return {Index::euclidean, 1.0 - acc};
}

}  // namespace ebdiv
