#pragma once

#include <string_view>

#include "ebdiv/count_vector.hpp"

namespace ebdiv {

enum class Index { shannon, simpson, pma, euclidean };

std::string_view to_string(Index i);
Index index_from_string(std::string_view s);

struct IndexValue {
  Index index{};
  double value = 0.0;
};

/// Shannon entropy H = -sum p_j log p_j (natural log, 0 log 0 := 0).
/// Range [0, log k].
IndexValue shannon(const Simplex& p);

/// Simpson diversity D = sum p_j^2. Range [1/k, 1].
IndexValue simpson(const Simplex& p);

/// Percent model affinity I = 1 - (1/2) sum |p_j - q_j|. Range [0, 1].
IndexValue pma(const Simplex& p_hat, const Simplex& p_star);

/// Euclidean similarity E = 1 - sum (p_j - q_j)^2. Range [-1, 1].
IndexValue euclidean_similarity(const Simplex& p_hat, const Simplex& p_star);

}  // namespace ebdiv
