#include "ebdiv/profiles.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "ebdiv/errors.hpp"
#include "ebdiv/indices.hpp"

namespace ebdiv {

namespace {

constexpr int kCalibrationK = 200;

struct KindSpec {
  double exponent;
  double target_entropy;  // reference Shannon entropy at k = 200
};

KindSpec kind_spec(ProfileKind kind) {
  switch (kind) {
    case ProfileKind::quasi_uniform: return {1.0, 5.280};
    case ProfileKind::smooth: return {3.0, 4.699};
    case ProfileKind::concentrated: return {50.0, 3.291};
  }
  throw std::invalid_argument("unknown profile kind");
}

std::vector<double> ranked_weights(double exponent, double intercept, int k) {
  std::vector<double> w;
  w.reserve(static_cast<std::size_t>(k));
  for (int j = 1; j <= k; ++j) {
    w.push_back(intercept + std::pow(static_cast<double>(j) / k, exponent));
  }
  return w;
}

double profile_entropy(double exponent, double intercept, int k) {
  return shannon(Simplex::normalized(ranked_weights(exponent, intercept, k))).value;
}

}  // namespace

std::string_view to_string(ProfileKind k) {
  switch (k) {
    case ProfileKind::quasi_uniform: return "quasi-uniform";
    case ProfileKind::smooth: return "smooth";
    case ProfileKind::concentrated: return "concentrated";
  }
  return "unknown";
}

ProfileKind profile_kind_from_string(std::string_view s) {
  if (s == "quasi-uniform" || s == "quasi_uniform") return ProfileKind::quasi_uniform;
  if (s == "smooth") return ProfileKind::smooth;
  if (s == "concentrated") return ProfileKind::concentrated;
  throw std::invalid_argument("unknown profile kind: " + std::string(s) +
                              " (expected quasi-uniform, smooth, or concentrated)");
}

double calibrate_intercept(double exponent, double target_entropy, int k) {
  if (k < 2) {
    throw std::invalid_argument("profile calibration needs k >= 2");
  }
  double lo = 0.0, hi = 1e3;
  const double h_lo = profile_entropy(exponent, lo, k);
  const double h_hi = profile_entropy(exponent, hi, k);
  if (!(target_entropy >= h_lo && target_entropy <= h_hi)) {
    throw NumericError("profile calibration cannot bracket target entropy " +
                       std::to_string(target_entropy) + "; achievable range is [" +
                       std::to_string(h_lo) + ", " + std::to_string(h_hi) + "]");
  }
  // Entropy is strictly increasing in the intercept, so the root is unique.
  for (int it = 0; it < 200 && (hi - lo) > 1e-13 * std::max(1.0, lo); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (profile_entropy(exponent, mid, k) < target_entropy) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

Profile make_profile(ProfileKind kind, int k) {
  if (k < 2) {
    throw std::invalid_argument("profile needs k >= 2");
  }
  const KindSpec spec = kind_spec(kind);
  const double intercept = calibrate_intercept(spec.exponent, spec.target_entropy, kCalibrationK);
  Simplex pi_star = Simplex::normalized(ranked_weights(spec.exponent, intercept, k));
  Profile profile{kind, k, pi_star, intercept, spec.exponent, 0.0, 0.0};
  profile.true_shannon = shannon(pi_star).value;
  profile.true_simpson = simpson(pi_star).value;
  return profile;
}

}  // namespace ebdiv
