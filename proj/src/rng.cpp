#include "ebdiv/rng.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ebdiv/errors.hpp"

namespace ebdiv {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += kGolden);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t key) {
  return mix64(seed + kGolden * (key + 1));
}

Rng::Rng(std::uint64_t seed) {
  std::uint64_t sm = seed;
  for (auto& word : state_) {
    word = splitmix64(sm);
  }
}

Rng Rng::stream(std::uint64_t seed, std::uint64_t stream_id) {
  return Rng(derive_seed(seed, stream_id));
}

std::uint64_t Rng::next_u64() {
  const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform_pos() {
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double Rng::normal() {
  for (;;) {
    const double u = 2.0 * uniform() - 1.0;
    const double v = 2.0 * uniform() - 1.0;
    const double s = u * u + v * v;
    if (s > 0.0 && s < 1.0) {
      return u * std::sqrt(-2.0 * std::log(s) / s);
    }
  }
}

double Rng::gamma(double shape, double rate) {
  if (!(shape > 0.0) || !(rate > 0.0)) {
    throw std::invalid_argument("gamma sampler needs positive shape and rate");
  }
  if (shape < 1.0) {
    // Boost: Gamma(shape) = Gamma(shape+1) * U^(1/shape).
    const double u = uniform_pos();
    return gamma(shape + 1.0, rate) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double z = 0.0, v = 0.0;
    do {
      z = normal();
      v = 1.0 + c * z;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform_pos();
    const double z2 = z * z;
    if (u < 1.0 - 0.0331 * z2 * z2) {
      return d * v / rate;
    }
    if (std::log(u) < 0.5 * z2 + d * (1.0 - v + std::log(v))) {
      return d * v / rate;
    }
  }
}

std::int64_t Rng::poisson(double mean) {
  if (!(mean >= 0.0) || !std::isfinite(mean)) {
    throw std::invalid_argument("poisson sampler needs a finite nonnegative mean");
  }
  if (mean == 0.0) return 0;
  return mean < 10.0 ? poisson_small(mean) : poisson_ptrs(mean);
}

std::int64_t Rng::poisson_small(double mean) {
  const double limit = std::exp(-mean);
  double prod = 1.0;
  std::int64_t count = -1;
  do {
    ++count;
    prod *= uniform_pos();
  } while (prod > limit);
  return count;
}

// Hormann's PTRS transformed rejection, exact for mean >= 10.
std::int64_t Rng::poisson_ptrs(double mean) {
  const double b = 0.931 + 2.53 * std::sqrt(mean);
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);
  const double log_mean = std::log(mean);
  for (;;) {
    const double u = uniform() - 0.5;
    const double v = uniform();
    const double us = 0.5 - std::abs(u);
    const double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= v_r) {
      return static_cast<std::int64_t>(kf);
    }
    if (kf < 0.0 || (us < 0.013 && v > us)) {
      continue;
    }
    if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
        kf * log_mean - mean - std::lgamma(kf + 1.0)) {
      return static_cast<std::int64_t>(kf);
    }
  }
}

std::vector<double> dirichlet(std::span<const double> concentration, Rng& rng) {
  if (concentration.size() < 2) {
    throw std::invalid_argument("dirichlet needs at least 2 components");
  }
  std::vector<double> draw;
  draw.reserve(concentration.size());
  double sum = 0.0;
  for (double c : concentration) {
    if (!(c > 0.0)) {
      throw std::invalid_argument("dirichlet concentration entries must be positive");
    }
    const double g = rng.gamma(c, 1.0);
    draw.push_back(g);
    sum += g;
  }
  if (!(sum > 0.0) || !std::isfinite(sum)) {
    throw NumericError("dirichlet draw degenerated: gamma components sum to " +
                       std::to_string(sum));
  }
  for (double& v : draw) v /= sum;
  return draw;
}

}  // namespace ebdiv
