#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "test_util.hpp"
#include "trajkit/errors.hpp"
#include "trajkit/frechet.hpp"

using namespace trajkit;

TEST_CASE("free space cell intervals match direct distance membership") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> coord(0.0, 1.0);
  auto rp = [&] { return Point{coord(rng), coord(rng)}; };
  for (int round = 0; round < 20; ++round) {
    const std::pair<Point, Point> sa{rp(), rp()};
    const std::pair<Point, Point> sb{rp(), rp()};
    const double eps = 0.3 + 0.4 * coord(rng);
    const FreeSpaceCell cell = free_space_cell(sa, sb, eps);
    for (int k = 0; k < 500; ++k) {
      const double s = coord(rng);
      // skip samples too close to the eps boundary to stay robust
      auto check_edge = [&](const Interval& iv, Point fixed,
                            std::pair<Point, Point> seg) {
        const double d = dist(lerp(seg.first, seg.second, s), fixed);
        if (std::abs(d - eps) < 1e-9) return;
        CHECK(iv.contains(s) == (d <= eps));
      };
      check_edge(cell.left, sa.first, sb);
      check_edge(cell.right, sa.second, sb);
      check_edge(cell.bottom, sb.first, sa);
      check_edge(cell.top, sb.second, sa);
    }
  }
}

TEST_CASE("free space diagram assembles per-cell intervals") {
  const PolyCurve a = testutil::random_curve(4, 31);
  const PolyCurve b = testutil::random_curve(3, 32);
  const FreeSpaceDiagram d = build_free_space_diagram(a, b, 0.4);
  REQUIRE(d.n == 3);
  REQUIRE(d.m == 2);
  CHECK(d.eps == 0.4);
  const FreeSpaceCell direct =
      free_space_cell({a[1], a[2]}, {b[0], b[1]}, 0.4);
  CHECK(d.cell(1, 0).left.lo == direct.left.lo);
  CHECK(d.cell(1, 0).top.hi == direct.top.hi);
}

TEST_CASE("free space cell of disjoint segments is empty") {
  const FreeSpaceCell cell =
      free_space_cell({{0, 0}, {1, 0}}, {{0, 5}, {1, 5}}, 1.0);
  CHECK(cell.left.empty());
  CHECK(cell.right.empty());
  CHECK(cell.bottom.empty());
  CHECK(cell.top.empty());
}

TEST_CASE("free space cell of identical segments keeps the diagonal free") {
  const FreeSpaceCell cell =
      free_space_cell({{0, 0}, {1, 0}}, {{0, 0}, {1, 0}}, 0.5);
  CHECK_FALSE(cell.left.empty());
  CHECK_FALSE(cell.right.empty());
  CHECK_FALSE(cell.bottom.empty());
  CHECK_FALSE(cell.top.empty());
}

TEST_CASE("frechet decision basics") {
  const PolyCurve a = {{0, 0}, {1, 0}};
  const PolyCurve b = {{0, 1}, {1, 1}};
  CHECK(frechet_decision(a, a, 0.0));
  CHECK(frechet_decision(a, b, 1.0));
  CHECK_FALSE(frechet_decision(a, b, 0.999));
  CHECK_THROWS_AS(frechet_decision(a, b, -1.0), UsageError);
}

TEST_CASE("decision is monotone in eps and true at the discrete bound") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::size_t> len(2, 6);
  for (int round = 0; round < 40; ++round) {
    const PolyCurve a = testutil::random_curve(len(rng), 1000 + round);
    const PolyCurve b = testutil::random_curve(len(rng), 2000 + round);
    const double dd = discrete_frechet(a, b);
    // hair of slack: at eps exactly dd the free space is tangent
    CHECK(frechet_decision(a, b, dd * (1.0 + 1e-12) + 1e-15));
    const double fd = frechet_distance(a, b, SearchMode::Bisect, 1e-10);
    for (double eps : {fd * 0.9, fd, fd * 1.1, fd * 2.0}) {
      if (frechet_decision(a, b, eps)) CHECK(frechet_decision(a, b, eps * 1.5));
    }
  }
}

TEST_CASE("discrete frechet equals exhaustive coupling enumeration") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<std::size_t> len(1, 6);
  for (int round = 0; round < 60; ++round) {
    const PolyCurve a = testutil::random_curve(len(rng), 3000 + round);
    const PolyCurve b = testutil::random_curve(len(rng), 4000 + round);
    CHECK(discrete_frechet(a, b) ==
          doctest::Approx(oracles::coupling_min_max(a, b)).epsilon(1e-12));
  }
}

TEST_CASE("discrete frechet fixed values") {
  CHECK(discrete_frechet({{0, 0}}, {{3, 4}}) == doctest::Approx(5.0));
  const PolyCurve a = testutil::random_curve(5, 7);
  CHECK(discrete_frechet(a, a) == 0.0);
}

TEST_CASE("frechet distance: identity, parallel segments, argument errors") {
  const PolyCurve a = {{0, 0}, {1, 0}};
  const PolyCurve b = {{0, 1}, {1, 1}};
  CHECK(frechet_distance(a, a, SearchMode::ExactCritical) == 0.0);
  CHECK(frechet_distance(a, b, SearchMode::ExactCritical) ==
        doctest::Approx(1.0));
  CHECK_THROWS_AS(frechet_distance(a, b, SearchMode::Bisect, -0.5),
                  UsageError);
  CHECK_THROWS_AS(frechet_distance(a, b, SearchMode::Bisect, 0.0), UsageError);
}

TEST_CASE("exact criticals agree with bisection on random curves") {
  std::mt19937_64 rng(44);
  std::uniform_int_distribution<std::size_t> len(2, 5);
  for (int round = 0; round < 30; ++round) {
    const PolyCurve a = testutil::random_curve(len(rng), 5000 + round);
    const PolyCurve b = testutil::random_curve(len(rng), 6000 + round);
    const double exact = frechet_distance(a, b, SearchMode::ExactCritical);
    const double bisect = frechet_distance(a, b, SearchMode::Bisect, 1e-11);
    CHECK(exact == doctest::Approx(bisect).epsilon(1e-8));
  }
}

TEST_CASE("frechet distance tracks the dense-sampling oracle") {
  std::mt19937_64 rng(45);
  std::uniform_int_distribution<std::size_t> len(2, 5);
  for (int round = 0; round < 8; ++round) {
    const PolyCurve a = testutil::random_curve(len(rng), 7000 + round);
    const PolyCurve b = testutil::random_curve(len(rng), 8000 + round);
    const double value = frechet_distance(a, b, SearchMode::ExactCritical);
    const double sampled = oracles::sampled_frechet_distance(a, b, 60, 1e-4);
    // the sampled decision underestimates reachability by at most the
    // grid step times the segment lengths
    const double slack = 2.0 * longest_edge(a) / 60.0 +
                         2.0 * longest_edge(b) / 60.0 + 1e-3;
    CHECK(value <= sampled + slack);
    CHECK(sampled <= value + slack);
  }
}

TEST_CASE("discrete dominates continuous and gap is bounded by edge length") {
  std::mt19937_64 rng(46);
  std::uniform_int_distribution<std::size_t> len(2, 6);
  for (int round = 0; round < 40; ++round) {
    const PolyCurve a = testutil::random_curve(len(rng), 9000 + round);
    const PolyCurve b = testutil::random_curve(len(rng), 10000 + round);
    const double dd = discrete_frechet(a, b);
    const double fd = frechet_distance(a, b, SearchMode::Bisect, 1e-10);
    CHECK(dd >= fd - 1e-9);
    CHECK(dd - fd <= std::max(longest_edge(a), longest_edge(b)) + 1e-9);
  }
}

TEST_CASE("both distances are symmetric") {
  std::mt19937_64 rng(47);
  for (int round = 0; round < 20; ++round) {
    const PolyCurve a = testutil::random_curve(4, 11000 + round);
    const PolyCurve b = testutil::random_curve(5, 12000 + round);
    CHECK(discrete_frechet(a, b) == doctest::Approx(discrete_frechet(b, a)));
    CHECK(frechet_distance(a, b, SearchMode::ExactCritical) ==
          doctest::Approx(frechet_distance(b, a, SearchMode::ExactCritical)));
  }
}

TEST_CASE("single-point curves take the direct formula") {
  const PolyCurve point = {{0, 0}};
  const PolyCurve far = {{3, 4}, {6, 8}};
  CHECK(frechet_distance(point, far) == doctest::Approx(10.0));
  CHECK(frechet_decision(point, far, 10.0));
  CHECK_FALSE(frechet_decision(point, far, 9.99));
}
