#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace ebdiv {

/// Generator recorded in report metadata for reproducibility.
inline constexpr std::string_view kRngAlgorithm =
    "xoshiro256++ with splitmix64-derived streams";

std::uint64_t mix64(std::uint64_t z);

/// Derives an independent child seed from (seed, key); used for per-scenario
/// and per-replicate streams so replicates can run in any order.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t key);

/// Deterministic xoshiro256++ generator with exact (non-std) samplers, so
/// identical seeds reproduce identical draws across runs.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  static Rng stream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t next_u64();

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Uniform on (0, 1].
  double uniform_pos();
  /// Standard normal (Marsaglia polar method).
  double normal();
  /// Gamma(shape, rate) via Marsaglia-Tsang; shape < 1 boosted through
  /// Gamma(shape+1) * U^(1/shape).
  double gamma(double shape, double rate = 1.0);
  /// Exact Poisson: sequential multiplication below mean 10, Hormann's PTRS
  /// transformed rejection above.
  std::int64_t poisson(double mean);

 private:
  std::array<std::uint64_t, 4> state_;
  std::int64_t poisson_small(double mean);
  std::int64_t poisson_ptrs(double mean);
};

/// Dirichlet draw as normalized independent Gamma(concentration_j, 1) draws.
/// Every concentration entry must be strictly positive.
std::vector<double> dirichlet(std::span<const double> concentration, Rng& rng);

}  // namespace ebdiv
