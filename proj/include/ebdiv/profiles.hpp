#pragma once

#include <string_view>

#include "ebdiv/count_vector.hpp"

namespace ebdiv {

enum class ProfileKind { quasi_uniform, smooth, concentrated };

std::string_view to_string(ProfileKind k);
ProfileKind profile_kind_from_string(std::string_view s);

/// A true community composition, ranked non-decreasing in j:
///   pi*_j  proportional to  intercept + (j/k)^exponent
struct Profile {
  ProfileKind kind{};
  int k = 0;
  Simplex pi_star;
  double intercept = 0.0;
  double exponent = 0.0;
  double true_shannon = 0.0;
  double true_simpson = 0.0;
};

/// Finds by bisection the intercept a >= 0 such that the Shannon entropy of
/// the normalized profile a + (j/k)^exponent equals target_entropy.
/// Throws NumericError (reporting the achievable range) when the target
/// cannot be bracketed.
double calibrate_intercept(double exponent, double target_entropy, int k);

/// Builds one of the three evenness profiles at the requested k. The
/// intercept is calibrated once per kind at k = 200 against the reference
/// entropies {5.280, 4.699, 3.291} and reused for any k, so profiles depend
/// on k only through j/k.
Profile make_profile(ProfileKind kind, int k);

}  // namespace ebdiv
