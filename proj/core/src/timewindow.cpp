#include "trajkit/timewindow.hpp"

#include <algorithm>
#include <cmath>

#include "trajkit/errors.hpp"

namespace trajkit {

ValidPairs valid_pairs_varying_speed(const TimedTrajectory& a,
                                     const TimedTrajectory& b, double sigma) {
  if (sigma < 0) throw UsageError("sigma must be >= 0");
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  ValidPairs vp;
  vp.lo.resize(na);
  vp.hi.resize(na);
  // Two-pointer sweep; timestamps are sorted, so the window edges only
  // move forward.
  std::size_t first_ge = 0;  // first j with t'_j >= t_i - sigma
  std::size_t last_le = 0;   // last  j with t'_j <= t_i + sigma
  for (std::size_t i = 0; i < na; ++i) {
    const double ti = a.time(i);
    while (first_ge < nb && b.time(first_ge) < ti - sigma) ++first_ge;
    while (last_le + 1 < nb && b.time(last_le + 1) <= ti + sigma) ++last_le;
    // t'_0 = 0 <= t_i + sigma and t'_{nb-1} = 1 >= t_i - sigma always
    // hold, so both pointers stay in range.
    vp.lo[i] = first_ge > 0 ? first_ge - 1 : 0;
    vp.hi[i] = std::min(last_le + 1, nb - 1);
    if (i > 0 && (vp.lo[i] < vp.lo[i - 1] || vp.hi[i] < vp.hi[i - 1]))
      throw std::logic_error("valid pair ranges are not monotone in time");
  }
  return vp;
}

namespace {

bool vertex_pairable(const ValidPairs& vp, std::size_t i, std::size_t j) {
  return vp.contains(i, j);
}

/// Band clip for the vertical edge at A-vertex i over B-segment j,
/// expressed in the segment parameter of B.
Interval band_clip_on_b_segment(const TimedTrajectory& a,
                                const TimedTrajectory& b, std::size_t i,
                                std::size_t j, double sigma) {
  const double tj = b.time(j);
  const double dt = b.time(j + 1) - tj;
  const double lo = (a.time(i) - sigma - tj) / dt;
  const double hi = (a.time(i) + sigma - tj) / dt;
  return Interval{std::max(lo, 0.0), std::min(hi, 1.0)};
}

Interval band_clip_on_a_segment(const TimedTrajectory& a,
                                const TimedTrajectory& b, std::size_t i,
                                std::size_t j, double sigma) {
  const double ti = a.time(i);
  const double dt = a.time(i + 1) - ti;
  const double lo = (b.time(j) - sigma - ti) / dt;
  const double hi = (b.time(j) + sigma - ti) / dt;
  return Interval{std::max(lo, 0.0), std::min(hi, 1.0)};
}

}  // namespace

std::size_t valid_cell_count(const TimedTrajectory& a,
                             const TimedTrajectory& b, double sigma,
                             SpeedModel model) {
  const std::size_t n = a.segments();
  const std::size_t m = b.segments();
  std::size_t count = 0;
  if (model == SpeedModel::VaryingSpeed) {
    const ValidPairs vp = valid_pairs_varying_speed(a, b, sigma);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (vertex_pairable(vp, i, j) && vertex_pairable(vp, i, j + 1) &&
            vertex_pairable(vp, i + 1, j) && vertex_pairable(vp, i + 1, j + 1))
          ++count;
    return count;
  }
  // ConstantSpeed: a cell intersects the band iff the time boxes of the
  // two segments come within sigma of each other.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const double gap_low = b.time(j) - a.time(i + 1);
      const double gap_high = a.time(i) - b.time(j + 1);
      if (gap_low <= sigma && gap_high <= sigma) ++count;
    }
  return count;
}

bool tw_frechet_decision(const TimedTrajectory& a, const TimedTrajectory& b,
                         double sigma, double eps, SpeedModel model) {
  if (eps < 0) throw UsageError("eps must be >= 0");
  if (sigma < 0) throw UsageError("sigma must be >= 0");
  const PolyCurve ca = a.curve();
  const PolyCurve cb = b.curve();
  const std::size_t n = a.segments();
  const std::size_t m = b.segments();

  if (model == SpeedModel::ConstantSpeed) {
    auto left = [&](std::size_t i, std::size_t j) {
      const Interval free =
          segment_ball_intersection(cb[j], cb[j + 1], ca[i], eps);
      return intersect(free, band_clip_on_b_segment(a, b, i, j, sigma));
    };
    auto bottom = [&](std::size_t i, std::size_t j) {
      const Interval free =
          segment_ball_intersection(ca[i], ca[i + 1], cb[j], eps);
      return intersect(free, band_clip_on_a_segment(a, b, i, j, sigma));
    };
    auto ok = [](std::size_t, std::size_t) { return true; };
    return monotone_path_exists(n, m, left, bottom, ok);
  }

  const ValidPairs vp = valid_pairs_varying_speed(a, b, sigma);
  auto left = [&](std::size_t i, std::size_t j) {
    return segment_ball_intersection(cb[j], cb[j + 1], ca[i], eps);
  };
  auto bottom = [&](std::size_t i, std::size_t j) {
    return segment_ball_intersection(ca[i], ca[i + 1], cb[j], eps);
  };
  auto ok = [&](std::size_t i, std::size_t j) {
    return vertex_pairable(vp, i, j) && vertex_pairable(vp, i, j + 1) &&
           vertex_pairable(vp, i + 1, j) && vertex_pairable(vp, i + 1, j + 1);
  };
  return monotone_path_exists(n, m, left, bottom, ok);
}

namespace {

std::vector<double> tw_critical_values(const TimedTrajectory& a,
                                       const TimedTrajectory& b, double sigma,
                                       SpeedModel model) {
  const PolyCurve ca = a.curve();
  const PolyCurve cb = b.curve();
  std::vector<double> vals = frechet_critical_values(ca, cb);
  if (model == SpeedModel::ConstantSpeed) {
    // Band-clip points are eps-independent positions, so decision flips
    // also happen where a free-interval endpoint meets one. The clip
    // position of one grid line can pin the monotone crossing abscissa
    // for any later line, so all vertex/clip-time combinations count.
    std::vector<double> clip_times_a;  // positions on A, from B's windows
    std::vector<double> clip_times_b;
    for (std::size_t j = 0; j < b.size(); ++j) {
      clip_times_a.push_back(b.time(j) - sigma);
      clip_times_a.push_back(b.time(j) + sigma);
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      clip_times_b.push_back(a.time(i) - sigma);
      clip_times_b.push_back(a.time(i) + sigma);
    }
    for (std::size_t j = 0; j < b.size(); ++j)
      for (double t : clip_times_a) {
        if (t < 0.0 || t > 1.0) continue;
        vals.push_back(dist(cb[j], a.at_time(t)));
      }
    for (std::size_t i = 0; i < a.size(); ++i)
      for (double t : clip_times_b) {
        if (t < 0.0 || t > 1.0) continue;
        vals.push_back(dist(ca[i], b.at_time(t)));
      }
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  }
  return vals;
}

}  // namespace

double tw_frechet_distance(const TimedTrajectory& a, const TimedTrajectory& b,
                           double sigma, SpeedModel model, SearchMode mode,
                           std::optional<double> tol) {
  const PolyCurve ca = a.curve();
  const PolyCurve cb = b.curve();
  const double diameter = pair_diameter(ca, cb);
  // Probe feasibility a hair above the largest possible answer; at the
  // diameter itself the free space can be tangent and flip on roundoff.
  const double ceiling = diameter * (1.0 + 1e-9) + 1e-12;
  if (!tw_frechet_decision(a, b, sigma, ceiling, model)) return kInfeasible;

  if (mode == SearchMode::ExactCritical) {
    // The candidate list contains all pairwise vertex distances, so the
    // decision is true at its maximum (feasibility was checked above).
    // The evaluation cushion absorbs tangency roundoff at the critical
    // value itself.
    const std::vector<double> vals = tw_critical_values(a, b, sigma, model);
    auto decide = [&](double eps) {
      return tw_frechet_decision(a, b, sigma, eps * (1.0 + 1e-12) + 1e-15,
                                 model);
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

  const double t = tol.value_or(1e-9 * diameter);
  if (t <= 0) throw UsageError("bisection tolerance must be > 0");
  double lo = 0.0;
  double hi = std::max(ceiling, t);
  while (hi - lo > t) {
    const double mid = 0.5 * (lo + hi);
    if (tw_frechet_decision(a, b, sigma, mid, model))
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

double dtw(const PolyCurve& a, const PolyCurve& b,
           const std::function<double(Point, Point)>& point_distance) {
  if (a.empty() || b.empty()) throw DataError("empty curve");
  auto pd = point_distance ? point_distance
                           : [](Point p, Point q) { return dist(p, q); };
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  std::vector<double> prev(m), cur(m);
  for (std::size_t j = 0; j < m; ++j)
    cur[j] = pd(a[0], b[j]) + (j == 0 ? 0.0 : cur[j - 1]);
  for (std::size_t i = 1; i < n; ++i) {
    std::swap(prev, cur);
    for (std::size_t j = 0; j < m; ++j) {
      double reach = prev[j];
      if (j > 0) reach = std::min({reach, prev[j - 1], cur[j - 1]});
      cur[j] = pd(a[i], b[j]) + reach;
    }
  }
  return cur[m - 1];
}

namespace {

enum class CouplingKind { MaxOfPairs, SumOfPairs };

/// Coupling DP restricted to the valid pair ranges. Row storage covers
/// only [lo,hi] per row, so work and memory are proportional to the
/// number of valid pairs.
double windowed_coupling_dp(const TimedTrajectory& a, const TimedTrajectory& b,
                            double sigma, CouplingKind kind) {
  const ValidPairs vp = valid_pairs_varying_speed(a, b, sigma);
  const PolyCurve ca = a.curve();
  const PolyCurve cb = b.curve();
  const std::size_t n = ca.size();
  const double inf = std::numeric_limits<double>::infinity();

  std::vector<double> prev, cur;
  std::size_t prev_lo = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = vp.lo[i], hi = vp.hi[i];
    cur.assign(hi - lo + 1, inf);
    for (std::size_t j = lo; j <= hi; ++j) {
      const double d = dist(ca[i], cb[j]);
      double reach = inf;
      if (i == 0 && j == 0) {
        reach = kind == CouplingKind::MaxOfPairs ? 0.0 : 0.0;
      } else {
        if (i > 0 && vp.contains(i - 1, j))
          reach = std::min(reach, prev[j - prev_lo]);
        if (i > 0 && j > 0 && vp.contains(i - 1, j - 1))
          reach = std::min(reach, prev[j - 1 - prev_lo]);
        if (j > lo) reach = std::min(reach, cur[j - 1 - lo]);
      }
      cur[j - lo] = kind == CouplingKind::MaxOfPairs ? std::max(d, reach)
                                                     : d + reach;
    }
    prev = std::move(cur);
    prev_lo = lo;
  }
  const std::size_t m_last = cb.size() - 1;
  return prev[m_last - prev_lo];
}

}  // namespace

double tw_discrete_frechet(const TimedTrajectory& a, const TimedTrajectory& b,
                           double sigma) {
  return windowed_coupling_dp(a, b, sigma, CouplingKind::MaxOfPairs);
}

double tw_dtw(const TimedTrajectory& a, const TimedTrajectory& b,
              double sigma) {
  return windowed_coupling_dp(a, b, sigma, CouplingKind::SumOfPairs);
}

}  // namespace trajkit
