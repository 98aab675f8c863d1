#pragma once

#include <string>
#include <vector>

#include "trajkit/geometry.hpp"
#include "trajkit/metric.hpp"
#include "trajkit/trajectory.hpp"

namespace trajkit {

/// Labeled planar decomposition used to turn a trajectory into the sequence
/// of regions it visits. Either an axis-aligned grid or explicit convex
/// polygons; labels are unique and the regions cover the extent.
class PlanarDecomposition {
 public:
  static PlanarDecomposition grid(Point origin, double cell_width,
                                  double cell_height, int nx, int ny);
  /// Convex polygons given in counter-clockwise or clockwise vertex order.
  static PlanarDecomposition polygons(
      std::vector<std::pair<std::string, std::vector<Point>>> regions);

  /// Label of the region containing p; boundary points resolve to the
  /// first matching region. Throws DataError when p is outside the extent.
  const std::string& label_at(Point p) const;

  bool inside_extent(Point p) const;

  /// Shortest cell edge; the default sub-sampling step for crossing
  /// detection is 1/100 of this.
  double shortest_edge() const;

 private:
  PlanarDecomposition() = default;

  // grid mode
  bool is_grid_ = false;
  Point origin_;
  double cw_ = 0.0, ch_ = 0.0;
  int nx_ = 0, ny_ = 0;
  std::vector<std::string> grid_labels_;

  // polygon mode
  std::vector<std::string> labels_;
  std::vector<std::vector<Point>> polys_;
  double min_x_ = 0, min_y_ = 0, max_x_ = 0, max_y_ = 0;
};

/// Sequence of region labels visited by the trajectory, consecutive
/// duplicates collapsed. Segment/region crossings are resolved by
/// sub-sampling each segment at `step` (default: shortest_edge()/100).
SymbolTrajectory map_to_string(const TimedTrajectory& traj,
                               const PlanarDecomposition& dec,
                               double step = 0.0);

}  // namespace trajkit
