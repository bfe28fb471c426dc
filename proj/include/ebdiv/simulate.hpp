#pragma once

#include <cstdint>
#include <vector>

#include "ebdiv/count_vector.hpp"
#include "ebdiv/profiles.hpp"
#include "ebdiv/rng.hpp"

namespace ebdiv {

/// One simulation cell: Gamma(alpha, rate beta) abundance, Dirichlet
/// composition with concentration k*gamma*pi*, Poisson counts.
struct Scenario {
  ProfileKind profile_kind = ProfileKind::quasi_uniform;
  double alpha = 1.0;   // Gamma shape
  double beta = 1.0;    // Gamma rate; expected sample size is alpha/beta
  double gamma = 1.0;   // Dirichlet concentration scale (heterogeneity)
  int k = 2;
  int m = 1;            // replicate count
  std::uint64_t seed = 0;
};

/// Throws ConfigError on non-positive parameters, m < 1, or k < 2.
void validate(const Scenario& s);

struct SimulatedSample {
  CountVector counts;
  double lambda_drawn = 0.0;
  Simplex pi_drawn;
  int replicate_index = 0;
};

/// One Gamma(shape alpha, rate beta) draw; expectation alpha/beta.
double sample_lambda(double alpha, double beta, Rng& rng);

/// One Dirichlet draw with concentration k * gamma * pi*.
Simplex sample_composition(double gamma, const Profile& profile, Rng& rng);

/// Independent Poisson counts x_j ~ Poisson(lambda * pi_j).
CountVector sample_counts(double lambda, const Simplex& pi, Rng& rng);

/// Runs the three-stage pipeline for all m replicates. Replicate i draws from
/// a stream derived from (seed, i), so output is fully determined by the
/// scenario and independent of execution order. Sampler errors are rethrown
/// with the replicate index attached.
std::vector<SimulatedSample> run_scenario(const Scenario& s);
std::vector<SimulatedSample> run_scenario(const Scenario& s, const Profile& profile);

}  // namespace ebdiv
