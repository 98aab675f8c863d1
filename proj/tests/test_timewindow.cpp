#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "test_util.hpp"
#include "trajkit/errors.hpp"
#include "trajkit/timewindow.hpp"

using namespace trajkit;

namespace {

TimedTrajectory uniform_trajectory(const PolyCurve& c) {
  std::vector<TimedSample> samples;
  const double n = static_cast<double>(c.size() - 1);
  for (std::size_t i = 0; i < c.size(); ++i)
    samples.push_back({static_cast<double>(i) / n, c[i]});
  return TimedTrajectory::from_raw(std::move(samples));
}

}  // namespace

TEST_CASE("valid pairs under uniform timestamps and sigma 0") {
  const std::size_t n = 6;
  const TimedTrajectory a = uniform_trajectory(testutil::random_curve(n, 1));
  const TimedTrajectory b = uniform_trajectory(testutil::random_curve(n, 2));
  const ValidPairs vp = valid_pairs_varying_speed(a, b, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(vp.lo[i] == (i == 0 ? 0 : i - 1));
    CHECK(vp.hi[i] == std::min(i + 1, n - 1));
  }
}

TEST_CASE("sigma >= 1 makes every pair valid") {
  const TimedTrajectory a = testutil::random_timed(7, 3);
  const TimedTrajectory b = testutil::random_timed(5, 4);
  const ValidPairs vp = valid_pairs_varying_speed(a, b, 1.0);
  CHECK(vp.count() == a.size() * b.size());
}

TEST_CASE("pair ranges are monotone on random timestamps") {
  for (int round = 0; round < 50; ++round) {
    const TimedTrajectory a = testutil::random_timed(8, 100 + round);
    const TimedTrajectory b = testutil::random_timed(9, 200 + round);
    for (double sigma : {0.0, 0.05, 0.2, 0.7}) {
      const ValidPairs vp = valid_pairs_varying_speed(a, b, sigma);
      for (std::size_t i = 1; i < a.size(); ++i) {
        CHECK(vp.lo[i] >= vp.lo[i - 1]);
        CHECK(vp.hi[i] >= vp.hi[i - 1]);
      }
      // every vertex pairs with at least two locations unless clipped at
      // the boundary rows
      for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(vp.hi[i] - vp.lo[i] + 1 >= 1);
    }
  }
}

TEST_CASE("decision: identical trajectories succeed at eps 0 for any sigma") {
  const TimedTrajectory a = testutil::random_timed(6, 5);
  for (double sigma : {0.0, 0.01, 0.3, 1.0}) {
    CHECK(tw_frechet_decision(a, a, sigma, 0.0, SpeedModel::ConstantSpeed));
    CHECK(tw_frechet_decision(a, a, sigma, 0.0, SpeedModel::VaryingSpeed));
  }
}

TEST_CASE("decision: parallel unit-separated constant-speed trajectories") {
  const TimedTrajectory a = uniform_trajectory({{0, 0}, {1, 0}});
  const TimedTrajectory b = uniform_trajectory({{0, 1}, {1, 1}});
  CHECK(tw_frechet_decision(a, b, 1.0, 1.0, SpeedModel::ConstantSpeed));
  CHECK_FALSE(
      tw_frechet_decision(a, b, 1.0, 0.999, SpeedModel::ConstantSpeed));
}

TEST_CASE("sigma >= 1 reduces to the unconstrained decision") {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> pick(0.0, 1.0);
  for (int round = 0; round < 60; ++round) {
    const TimedTrajectory a = testutil::random_timed(5, 300 + round);
    const TimedTrajectory b = testutil::random_timed(6, 400 + round);
    const double eps = pick(rng) * 1.2;
    const bool plain = frechet_decision(a.curve(), b.curve(), eps);
    CHECK(tw_frechet_decision(a, b, 1.0, eps, SpeedModel::ConstantSpeed) ==
          plain);
    CHECK(tw_frechet_decision(a, b, 1.0, eps, SpeedModel::VaryingSpeed) ==
          plain);
  }
}

TEST_CASE("tw distance: identity, vacuous band, monotonicity in sigma") {
  const TimedTrajectory a = testutil::random_timed(6, 7);
  const TimedTrajectory b = testutil::random_timed(6, 8);
  for (auto model : {SpeedModel::ConstantSpeed, SpeedModel::VaryingSpeed}) {
    CHECK(tw_frechet_distance(a, a, 0.5, model, SearchMode::Bisect, 1e-10) ==
          doctest::Approx(0.0).epsilon(1e-8));
    const double unconstrained =
        frechet_distance(a.curve(), b.curve(), SearchMode::Bisect, 1e-10);
    const double at_one =
        tw_frechet_distance(a, b, 1.0, model, SearchMode::Bisect, 1e-10);
    CHECK(at_one == doctest::Approx(unconstrained).epsilon(1e-7));
    double prev = kInfeasible;
    for (double sigma : {0.02, 0.06, 0.15, 0.4, 1.0}) {
      const double v =
          tw_frechet_distance(a, b, sigma, model, SearchMode::Bisect, 1e-10);
      if (prev != kInfeasible) {
        REQUIRE(v != kInfeasible);  // feasibility is monotone in sigma
        CHECK(v <= prev + 1e-8);
      }
      CHECK(v >= unconstrained - 1e-8);
      prev = v;
    }
  }
}

TEST_CASE("tw exact criticals agree with bisection") {
  for (int round = 0; round < 20; ++round) {
    const TimedTrajectory a = testutil::random_timed(5, 500 + round);
    const TimedTrajectory b = testutil::random_timed(5, 600 + round);
    for (auto model : {SpeedModel::ConstantSpeed, SpeedModel::VaryingSpeed}) {
      for (double sigma : {0.1, 0.35, 1.0}) {
        const double exact =
            tw_frechet_distance(a, b, sigma, model, SearchMode::ExactCritical);
        const double bisect =
            tw_frechet_distance(a, b, sigma, model, SearchMode::Bisect, 1e-11);
        if (exact == kInfeasible) {
          CHECK(bisect == kInfeasible);
        } else {
          CHECK(exact == doctest::Approx(bisect).epsilon(1e-6));
        }
      }
    }
  }
}

TEST_CASE("constant-speed band never disconnects, sigma 0 gives sup distance") {
  const TimedTrajectory a = uniform_trajectory({{0, 0}, {1, 0}, {2, 0}});
  const TimedTrajectory b = uniform_trajectory({{0, 1}, {1, 2}, {2, 1}});
  const double v = tw_frechet_distance(a, b, 0.0, SpeedModel::ConstantSpeed,
                                       SearchMode::Bisect, 1e-10);
  REQUIRE(v != kInfeasible);
  CHECK(v == doctest::Approx(2.0).epsilon(1e-7));  // max gap at t = 0.5
}

TEST_CASE("dtw") {
  SUBCASE("identical curves cost zero") {
    const PolyCurve a = testutil::random_curve(5, 9);
    CHECK(dtw(a, a) == doctest::Approx(0.0));
  }
  SUBCASE("single forced pair") {
    CHECK(dtw({{0, 0}}, {{3, 4}}) == doctest::Approx(5.0));
  }
  SUBCASE("matches exhaustive coupling enumeration") {
    std::mt19937_64 rng(10);
    std::uniform_int_distribution<std::size_t> len(1, 6);
    for (int round = 0; round < 40; ++round) {
      const PolyCurve a = testutil::random_curve(len(rng), 700 + round);
      const PolyCurve b = testutil::random_curve(len(rng), 800 + round);
      CHECK(dtw(a, b) ==
            doctest::Approx(oracles::coupling_min_sum(a, b)).epsilon(1e-10));
    }
  }
}

TEST_CASE("windowed DPs reduce to the unconstrained values at sigma >= 1") {
  for (int round = 0; round < 20; ++round) {
    const TimedTrajectory a = testutil::random_timed(6, 900 + round);
    const TimedTrajectory b = testutil::random_timed(7, 1000 + round);
    CHECK(tw_discrete_frechet(a, b, 1.0) ==
          doctest::Approx(discrete_frechet(a.curve(), b.curve())));
    CHECK(tw_dtw(a, b, 1.0) == doctest::Approx(dtw(a.curve(), b.curve())));
  }
}

TEST_CASE("windowed DPs never drop below the unconstrained values") {
  for (int round = 0; round < 40; ++round) {
    const TimedTrajectory a = testutil::random_timed(7, 1100 + round);
    const TimedTrajectory b = testutil::random_timed(6, 1200 + round);
    for (double sigma : {0.0, 0.05, 0.2, 0.6}) {
      CHECK(tw_discrete_frechet(a, b, sigma) >=
            discrete_frechet(a.curve(), b.curve()) - 1e-12);
      CHECK(tw_dtw(a, b, sigma) >= dtw(a.curve(), b.curve()) - 1e-12);
    }
  }
}

TEST_CASE("uniform sampling with mid-step sigma equals a Sakoe-Chiba band") {
  const std::size_t n = 9;
  const PolyCurve ca = testutil::random_curve(n, 21);
  const PolyCurve cb = testutil::random_curve(n, 22);
  const TimedTrajectory a = uniform_trajectory(ca);
  const TimedTrajectory b = uniform_trajectory(cb);
  for (std::size_t w : {1ul, 2ul, 3ul}) {
    // sigma strictly between (w-1)/(n-1) and w/(n-1): the window clause
    // admits |i-j| <= w-1 and the first-outside clauses add exactly the
    // band edge |i-j| = w
    const double sigma =
        (static_cast<double>(w) - 0.5) / static_cast<double>(n - 1);
    const ValidPairs vp = valid_pairs_varying_speed(a, b, sigma);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(vp.lo[i] == (i >= w ? i - w : 0));
      CHECK(vp.hi[i] == std::min(i + w, n - 1));
    }
    // band-constrained DTW oracle over |i-j| <= w
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<std::vector<double>> dp(n, std::vector<double>(n, inf));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i > j + w || j > i + w) continue;
        const double d = dist(ca[i], cb[j]);
        if (i == 0 && j == 0) {
          dp[i][j] = d;
          continue;
        }
        double reach = inf;
        if (i > 0) reach = std::min(reach, dp[i - 1][j]);
        if (j > 0) reach = std::min(reach, dp[i][j - 1]);
        if (i > 0 && j > 0) reach = std::min(reach, dp[i - 1][j - 1]);
        dp[i][j] = d + reach;
      }
    CHECK(tw_dtw(a, b, sigma) == doctest::Approx(dp[n - 1][n - 1]));
  }
}

TEST_CASE("every sample keeps at least one valid cell or pair") {
  // Constant speed: the band meets at least one cell per column. Varying
  // speed: every A vertex pairs with at least one B vertex (the DP's
  // C(n,m,sigma) counts these pairs).
  for (int round = 0; round < 30; ++round) {
    const TimedTrajectory a = testutil::random_timed(7, 1300 + round);
    const TimedTrajectory b = testutil::random_timed(5, 1400 + round);
    for (double sigma : {0.0, 0.1, 0.5, 1.0}) {
      CHECK(valid_cell_count(a, b, sigma, SpeedModel::ConstantSpeed) >=
            a.segments());
      CHECK(valid_pairs_varying_speed(a, b, sigma).count() >= a.size());
    }
  }
}

TEST_CASE("negative parameters are rejected") {
  const TimedTrajectory a = testutil::random_timed(4, 30);
  CHECK_THROWS_AS(valid_pairs_varying_speed(a, a, -0.1), UsageError);
  CHECK_THROWS_AS(
      tw_frechet_decision(a, a, 0.5, -1.0, SpeedModel::ConstantSpeed),
      UsageError);
}
