#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "trajkit/frechet.hpp"
#include "trajkit/trajectory.hpp"

namespace trajkit {

/// Sentinel for "no monotone path exists at any eps".
inline constexpr double kInfeasible = std::numeric_limits<double>::infinity();

/// Per-vertex pairable index ranges under the varying-speed time window:
/// A-vertex i may pair with B-vertices j in [lo[i], hi[i]]. A pair (i,j)
/// qualifies when |t_i - t'_j| <= sigma, or t'_j is the first B timestamp
/// outside the window on either side. Ranges are contiguous and monotone
/// in i.
struct ValidPairs {
  std::vector<std::size_t> lo, hi;

  bool contains(std::size_t i, std::size_t j) const {
    return lo[i] <= j && j <= hi[i];
  }
  /// Number of valid index pairs (the C(n,m,sigma) of the DP variants).
  std::size_t count() const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < lo.size(); ++i) c += hi[i] - lo[i] + 1;
    return c;
  }
};

ValidPairs valid_pairs_varying_speed(const TimedTrajectory& a,
                                     const TimedTrajectory& b, double sigma);

/// Number of traversable free-space cells under the window constraint
/// (both speed models); at least max(n,m) on any input.
std::size_t valid_cell_count(const TimedTrajectory& a,
                             const TimedTrajectory& b, double sigma,
                             SpeedModel model);

/// Decides delta_tw(A,B) <= eps for the given window and speed model.
///
/// ConstantSpeed clips each free-space edge interval by the band
/// |t - t'| <= sigma; the band is convex and each cell's free set is
/// convex, so the clipped edge sets stay intervals and the usual
/// reachability propagation remains exact. VaryingSpeed restricts
/// reachability to cells whose four corner vertex pairs are pairable.
bool tw_frechet_decision(const TimedTrajectory& a, const TimedTrajectory& b,
                         double sigma, double eps, SpeedModel model);

/// Smallest eps admitting a window-respecting monotone path, or
/// kInfeasible when no eps works (possible when the band or the valid
/// cells are monotonically disconnected).
double tw_frechet_distance(const TimedTrajectory& a, const TimedTrajectory& b,
                           double sigma, SpeedModel model,
                           SearchMode mode = SearchMode::ExactCritical,
                           std::optional<double> tol = std::nullopt);

/// Dynamic time warping over vertex couplings (sum of paired distances).
double dtw(const PolyCurve& a, const PolyCurve& b,
           const std::function<double(Point, Point)>& point_distance = {});

/// Time-windowed variants: the coupling DP is evaluated only on pairs from
/// valid_pairs_varying_speed. Returns kInfeasible when no coupling can
/// visit every vertex within the valid pairs.
double tw_discrete_frechet(const TimedTrajectory& a, const TimedTrajectory& b,
                           double sigma);
double tw_dtw(const TimedTrajectory& a, const TimedTrajectory& b,
              double sigma);

}  // namespace trajkit
