#include "ebdiv/count_vector.hpp"

#include <cmath>
#include <string>

#include "ebdiv/errors.hpp"

namespace ebdiv {

CountVector::CountVector(std::vector<std::int64_t> counts) : counts_(std::move(counts)) {
  if (counts_.size() < 2) {
    throw DataError("count vector needs at least 2 categories, got " +
                    std::to_string(counts_.size()));
  }
  for (std::size_t j = 0; j < counts_.size(); ++j) {
    if (counts_[j] < 0) {
      throw DataError("count vector has negative entry at category " + std::to_string(j));
    }
    n_ += counts_[j];
  }
}

Simplex::Simplex(std::vector<double> values) : values_(std::move(values)) {
  if (values_.size() < 2) {
    throw std::invalid_argument("simplex needs at least 2 coordinates");
  }
  double sum = 0.0;
  for (double v : values_) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw std::invalid_argument("simplex coordinate " + std::to_string(v) +
                                  " outside [0, 1]");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-10) {
    throw std::invalid_argument("simplex coordinates sum to " + std::to_string(sum) +
                                ", expected 1");
  }
}

Simplex Simplex::normalized(std::vector<double> weights) {
  if (weights.size() < 2) {
    throw std::invalid_argument("simplex needs at least 2 coordinates");
  }
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument("simplex weights must be finite and nonnegative");
    }
    sum += w;
  }
  if (!(sum > 0.0)) {
    throw std::invalid_argument("simplex weights sum to zero");
  }
  for (double& w : weights) w /= sum;
  Simplex s;
  s.values_ = std::move(weights);
  return s;
}

std::string_view to_string(Estimator e) {
  return e == Estimator::ml ? "ml" : "eb";
}

Estimator estimator_from_string(std::string_view s) {
  if (s == "ml") return Estimator::ml;
  if (s == "eb") return Estimator::eb;
  throw std::invalid_argument("unknown estimator name: " + std::string(s));
}

}  // namespace ebdiv
