#include <doctest.h>

#include <stdexcept>
#include <cmath>

#include "ebdiv/errors.hpp"
#include "ebdiv/profiles.hpp"

using namespace ebdiv;

TEST_SUITE("profiles") {

TEST_CASE("reference entropies and simpson values at k = 200") {
  struct Expected {
    ProfileKind kind;
    double entropy;
    double simpson;
    double simpson_tol;
  };
  const Expected cases[] = {
      {ProfileKind::quasi_uniform, 5.280, 0.005, 5e-4},
      {ProfileKind::smooth, 4.699, 0.011, 5e-4},
      {ProfileKind::concentrated, 3.291, 0.087, 1e-3},
  };
  for (const auto& c : cases) {
    const Profile p = make_profile(c.kind, 200);
    CHECK(std::abs(p.true_shannon - c.entropy) < 1e-3);
    CHECK(std::abs(p.true_simpson - c.simpson) < c.simpson_tol);
  }
}

TEST_CASE("calibrated intercepts are stable") {
  CHECK(make_profile(ProfileKind::quasi_uniform, 200).intercept ==
        doctest::Approx(1.01413).epsilon(1e-3));
  CHECK(make_profile(ProfileKind::smooth, 200).intercept ==
        doctest::Approx(0.0049619).epsilon(1e-3));
  CHECK(make_profile(ProfileKind::concentrated, 200).intercept ==
        doctest::Approx(0.0050032).epsilon(1e-3));
}

TEST_CASE("profiles are ranked, strictly positive, and normalized") {
  for (ProfileKind kind :
       {ProfileKind::quasi_uniform, ProfileKind::smooth, ProfileKind::concentrated}) {
    for (int k : {2, 10, 200, 500}) {
      const Profile p = make_profile(kind, k);
      CHECK(p.k == k);
      double sum = 0.0;
      double prev = 0.0;
      for (int j = 0; j < k; ++j) {
        CHECK(p.pi_star[j] > 0.0);
        CHECK(p.pi_star[j] >= prev);
        prev = p.pi_star[j];
        sum += p.pi_star[j];
      }
      CHECK(std::abs(sum - 1.0) < 1e-10);
    }
  }
  CHECK_THROWS_AS(make_profile(ProfileKind::smooth, 1), std::invalid_argument);
}

TEST_CASE("calibration reports an unreachable target") {
  // log(200) is about 5.2983; anything above is unreachable.
  CHECK_THROWS_WITH_AS(calibrate_intercept(1.0, 5.9, 200), doctest::Contains("achievable"),
                       NumericError);
  // Below the zero-intercept entropy of the concentrated family.
  CHECK_THROWS_WITH_AS(calibrate_intercept(50.0, 1.0, 200), doctest::Contains("achievable"),
                       NumericError);
}

TEST_CASE("profile kind names round-trip") {
  for (ProfileKind kind :
       {ProfileKind::quasi_uniform, ProfileKind::smooth, ProfileKind::concentrated}) {
    CHECK(profile_kind_from_string(to_string(kind)) == kind);
  }
  CHECK_THROWS_AS(profile_kind_from_string("spiky"), std::invalid_argument);
}

}  // TEST_SUITE
