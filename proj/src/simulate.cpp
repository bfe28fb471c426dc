#include "ebdiv/simulate.hpp"

#include <stdexcept>
#include <string>

#include "ebdiv/errors.hpp"

namespace ebdiv {

void validate(const Scenario& s) {
  if (!(s.alpha > 0.0) || !(s.beta > 0.0) || !(s.gamma > 0.0)) {
    throw ConfigError("scenario parameters alpha, beta, gamma must be positive");
  }
  if (s.k < 2) {
    throw ConfigError("scenario needs k >= 2, got " + std::to_string(s.k));
  }
  if (s.m < 1) {
    throw ConfigError("scenario needs m >= 1, got " + std::to_string(s.m));
  }
}

double sample_lambda(double alpha, double beta, Rng& rng) {
  if (!(alpha > 0.0) || !(beta > 0.0)) {
    throw std::invalid_argument("gamma abundance needs positive shape and rate");
  }
  return rng.gamma(alpha, beta);
}

Simplex sample_composition(double gamma, const Profile& profile, Rng& rng) {
  if (!(gamma > 0.0)) {
    throw std::invalid_argument("dirichlet concentration scale must be positive");
  }
  std::vector<double> theta;
  theta.reserve(static_cast<std::size_t>(profile.k));
  const double scale = static_cast<double>(profile.k) * gamma;
  for (double p : profile.pi_star.values()) {
    const double t = scale * p;
    if (!(t > 0.0)) {
      throw NumericError("dirichlet parameter vanished for a profile entry");
    }
    theta.push_back(t);
  }
  return Simplex::normalized(dirichlet(theta, rng));
}

CountVector sample_counts(double lambda, const Simplex& pi, Rng& rng) {
  if (!(lambda > 0.0)) {
    throw std::invalid_argument("poisson intensity must be positive");
  }
  std::vector<std::int64_t> counts;
  counts.reserve(static_cast<std::size_t>(pi.k()));
  for (double p : pi.values()) {
    counts.push_back(rng.poisson(lambda * p));
  }
  return CountVector(std::move(counts));
}

std::vector<SimulatedSample> run_scenario(const Scenario& s) {
  return run_scenario(s, make_profile(s.profile_kind, s.k));
}

std::vector<SimulatedSample> run_scenario(const Scenario& s, const Profile& profile) {
  validate(s);
  if (profile.kind != s.profile_kind || profile.k != s.k) {
    throw std::invalid_argument("profile does not match the scenario");
  }
  std::vector<SimulatedSample> samples;
  samples.reserve(static_cast<std::size_t>(s.m));
  for (int i = 0; i < s.m; ++i) {
    Rng rng = Rng::stream(s.seed, static_cast<std::uint64_t>(i));
    try {
      const double lambda = sample_lambda(s.alpha, s.beta, rng);
      Simplex pi = sample_composition(s.gamma, profile, rng);
      CountVector counts = sample_counts(lambda, pi, rng);
      samples.push_back({std::move(counts), lambda, std::move(pi), i});
    } catch (const std::exception& e) {
      throw NumericError("replicate " + std::to_string(i) + ": " + e.what());
    }
  }
  return samples;
}

}  // namespace ebdiv
