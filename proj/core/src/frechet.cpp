#include "trajkit/frechet.hpp"

#include <algorithm>
#include <cmath>

#include "trajkit/errors.hpp"

namespace trajkit {

FreeSpaceCell free_space_cell(std::pair<Point, Point> seg_a,
                              std::pair<Point, Point> seg_b, double eps) {
  FreeSpaceCell c;
  c.left = segment_ball_intersection(seg_b.first, seg_b.second, seg_a.first, eps);
  c.right =
      segment_ball_intersection(seg_b.first, seg_b.second, seg_a.second, eps);
  c.bottom =
      segment_ball_intersection(seg_a.first, seg_a.second, seg_b.first, eps);
  c.top =
      segment_ball_intersection(seg_a.first, seg_a.second, seg_b.second, eps);
  return c;
}

FreeSpaceDiagram build_free_space_diagram(const PolyCurve& a,
                                          const PolyCurve& b, double eps) {
  if (a.size() < 2 || b.size() < 2)
    throw DataError("free-space diagram needs curves with at least 1 segment");
  FreeSpaceDiagram d;
  d.n = a.size() - 1;
  d.m = b.size() - 1;
  d.eps = eps;
  d.cells.reserve(d.n * d.m);
  for (std::size_t j = 0; j < d.m; ++j)
    for (std::size_t i = 0; i < d.n; ++i)
      d.cells.push_back(
          free_space_cell({a[i], a[i + 1]}, {b[j], b[j + 1]}, eps));
  return d;
}

bool monotone_path_exists(
    std::size_t n, std::size_t m,
    const std::function<Interval(std::size_t, std::size_t)>& left_free,
    const std::function<Interval(std::size_t, std::size_t)>& bottom_free,
    const std::function<bool(std::size_t, std::size_t)>& cell_ok) {
  // Start corner must be free and its cell traversable.
  if (!bottom_free(0, 0).contains(0.0) || !left_free(0, 0).contains(0.0) ||
      !cell_ok(0, 0))
    return false;

  // Reachable portion of the left boundary, per row. Walking up the
  // boundary requires every edge below to be fully free and its cell ok.
  std::vector<Interval> left_init(m, Interval::none());
  {
    bool full = true;
    for (std::size_t j = 0; j < m && full; ++j) {
      if (!cell_ok(0, j)) break;
      const Interval f = left_free(0, j);
      if (!f.contains(0.0)) break;
      left_init[j] = {0.0, f.hi};
      full = f.hi >= 1.0;
    }
  }

  // bottom_reach[i]: reachable part of the bottom edge of cell (i, row).
  std::vector<Interval> bottom_reach(n, Interval::none());
  {
    bool full = true;
    for (std::size_t i = 0; i < n && full; ++i) {
      if (!cell_ok(i, 0)) break;
      const Interval f = bottom_free(i, 0);
      if (!f.contains(0.0)) break;
      bottom_reach[i] = {0.0, f.hi};
      full = f.hi >= 1.0;
    }
  }

  // corner_in[i]: the grid corner at the bottom-left of cell (i, row) is
  // reachable through cell (i-1, row-1). A path may hop diagonally
  // between two traversable cells that only share that corner, so this
  // entry is tracked besides the two edge entries; from the corner every
  // free exit point of the (convex) cell free set is reachable.
  std::vector<char> corner_in(n + 1, 0);
  std::vector<char> corner_next(n + 1, 0);

  Interval right_last = Interval::none();
  Interval top_last = Interval::none();
  for (std::size_t j = 0; j < m; ++j) {
    Interval left_reach = left_init[j];
    std::fill(corner_next.begin(), corner_next.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      Interval right = Interval::none();
      Interval top = Interval::none();
      if (cell_ok(i, j)) {
        const Interval rf = left_free(i + 1, j);
        const Interval tf = bottom_free(i, j + 1);
        const bool via_corner = corner_in[i] && bottom_free(i, j).contains(0.0);
        if (!bottom_reach[i].empty()) {
          right = rf;  // entering from below reaches any free exit height
          top = tf.clipped(bottom_reach[i].lo, 1.0);
        }
        if (!left_reach.empty()) {
          top = tf;  // entering from the left reaches any free exit abscissa
          if (right.empty()) right = rf.clipped(left_reach.lo, 1.0);
        }
        if (via_corner) {
          right = rf;
          top = tf;
        }
        if (right.contains(1.0) || top.contains(1.0)) corner_next[i + 1] = 1;
      }
      bottom_reach[i] = top;
      left_reach = right;
      if (j + 1 == m && i + 1 == n) {
        right_last = right;
        top_last = top;
      }
    }
    std::swap(corner_in, corner_next);
  }
  return right_last.contains(1.0) || top_last.contains(1.0);
}

namespace {

double max_pointwise(const Point p, const PolyCurve& c) {
  double best = 0.0;
  for (const Point& q : c) best = std::max(best, dist(p, q));
  return best;
}

bool is_degenerate(const PolyCurve& c) { return c.size() < 2; }

}  // namespace

bool frechet_decision(const PolyCurve& a, const PolyCurve& b, double eps) {
  if (eps < 0) throw UsageError("eps must be >= 0");
  if (a.empty() || b.empty()) throw DataError("empty curve");
  if (is_degenerate(a)) return max_pointwise(a.front(), b) <= eps;
  if (is_degenerate(b)) return max_pointwise(b.front(), a) <= eps;

  const std::size_t n = a.size() - 1;
  const std::size_t m = b.size() - 1;
  auto left = [&](std::size_t i, std::size_t j) {
    return segment_ball_intersection(b[j], b[j + 1], a[i], eps);
  };
  auto bottom = [&](std::size_t i, std::size_t j) {
    return segment_ball_intersection(a[i], a[i + 1], b[j], eps);
  };
  auto ok = [](std::size_t, std::size_t) { return true; };
  return monotone_path_exists(n, m, left, bottom, ok);
}

std::vector<double> frechet_critical_values(const PolyCurve& a,
                                            const PolyCurve& b) {
  std::vector<double> vals;
  vals.push_back(dist(a.front(), b.front()));
  vals.push_back(dist(a.back(), b.back()));
  for (const Point& p : a)
    for (const Point& q : b) vals.push_back(dist(p, q));
  for (const Point& p : a)
    for (std::size_t j = 0; j + 1 < b.size(); ++j)
      vals.push_back(point_segment_distance(p, b[j], b[j + 1]));
  for (const Point& q : b)
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
      vals.push_back(point_segment_distance(q, a[i], a[i + 1]));
  // Passage openings: two vertices of one curve against an edge of the
  // other become simultaneously reachable where the bisector crosses.
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = i + 1; k < a.size(); ++k)
      for (std::size_t j = 0; j + 1 < b.size(); ++j) {
        if (auto s = bisector_segment_intersection(a[i], a[k], b[j], b[j + 1]))
          vals.push_back(dist(a[i], lerp(b[j], b[j + 1], *s)));
      }
  for (std::size_t j = 0; j < b.size(); ++j)
    for (std::size_t k = j + 1; k < b.size(); ++k)
      for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        if (auto s = bisector_segment_intersection(b[j], b[k], a[i], a[i + 1]))
          vals.push_back(dist(b[j], lerp(a[i], a[i + 1], *s)));
      }
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals;
}

double frechet_distance(const PolyCurve& a, const PolyCurve& b,
                        SearchMode mode, std::optional<double> tol) {
  if (a.empty() || b.empty()) throw DataError("empty curve");
  if (is_degenerate(a)) return max_pointwise(a.front(), b);
  if (is_degenerate(b)) return max_pointwise(b.front(), a);

  if (mode == SearchMode::ExactCritical) {
    // At a critical value the free space is tangent to an edge or a
    // passage shrinks to a point; a hair of slack keeps the decision
    // from flipping on roundoff while staying far below the candidate
    // spacing that matters.
    const std::vector<double> vals = frechet_critical_values(a, b);
    auto decide = [&](double eps) {
      return frechet_decision(a, b, eps * (1.0 + 1e-12) + 1e-15);
    };
    std::size_t lo = 0, hi = vals.size() - 1;
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (decide(vals[mid]))
        hi = mid;
      else
        lo = mid + 1;
    }
    return vals[lo];
  }

  const double t = tol.value_or(1e-9 * pair_diameter(a, b));
  if (t <= 0) throw UsageError("bisection tolerance must be > 0");
  double lo = 0.0;
  double hi = std::max(pair_diameter(a, b), t);
  while (hi - lo > t) {
    const double mid = 0.5 * (lo + hi);
    if (frechet_decision(a, b, mid))
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

double discrete_frechet(const PolyCurve& a, const PolyCurve& b) {
  if (a.empty() || b.empty()) throw DataError("empty curve");
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  std::vector<double> prev(m), cur(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double d = dist(a[0], b[j]);
    cur[j] = j == 0 ? d : std::max(cur[j - 1], d);
  }
  for (std::size_t i = 1; i < n; ++i) {
    std::swap(prev, cur);
    for (std::size_t j = 0; j < m; ++j) {
      const double d = dist(a[i], b[j]);
      double reach = prev[j];
      if (j > 0) reach = std::min({reach, prev[j - 1], cur[j - 1]});
      cur[j] = std::max(d, reach);
    }
  }
  return cur[m - 1];
}

}  // namespace trajkit
