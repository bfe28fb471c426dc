#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace ebdiv {

/// One sample of multivariate counts over k fixed taxonomic categories.
/// The total n is always the sum of the per-category counts.
class CountVector {
 public:
  explicit CountVector(std::vector<std::int64_t> counts);

  int k() const { return static_cast<int>(counts_.size()); }
  std::int64_t n() const { return n_; }
  std::span<const std::int64_t> counts() const { return counts_; }
  std::int64_t operator[](int j) const { return counts_[static_cast<std::size_t>(j)]; }

  bool operator==(const CountVector&) const = default;

 private:
  std::vector<std::int64_t> counts_;
  std::int64_t n_ = 0;
};

/// Point on the (k-1)-simplex: nonnegative entries summing to one.
class Simplex {
 public:
  /// Requires values in [0,1] summing to 1 within 1e-10.
  explicit Simplex(std::vector<double> values);

  /// Scales nonnegative weights (with positive sum) to the simplex.
  static Simplex normalized(std::vector<double> weights);

  int k() const { return static_cast<int>(values_.size()); }
  std::span<const double> values() const { return values_; }
  double operator[](int j) const { return values_[static_cast<std::size_t>(j)]; }

  bool operator==(const Simplex&) const = default;

 private:
  Simplex() = default;
  std::vector<double> values_;
};

enum class Estimator { ml, eb };

std::string_view to_string(Estimator e);
Estimator estimator_from_string(std::string_view s);

/// Estimated composition with provenance. `eta` is set iff method == eb.
struct CompositionEstimate {
  std::vector<double> proportions;
  Estimator method = Estimator::ml;
  std::optional<double> eta;

  Simplex to_simplex() const { return Simplex(proportions); }
};

}  // namespace ebdiv
