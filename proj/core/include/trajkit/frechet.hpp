#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "trajkit/geometry.hpp"
#include "trajkit/trajectory.hpp"

namespace trajkit {

/// Free intervals on the four edges of one free-space cell, each as a
/// closed subinterval of [0,1] along the edge. Every interval is the
/// intersection of the edge with {d(A(s),B(s')) <= eps}, which is convex
/// per edge.
struct FreeSpaceCell {
  Interval left, bottom, right, top;
};

/// n x m grid of free-space cells for two polygonal curves at a given eps.
struct FreeSpaceDiagram {
  std::size_t n = 0, m = 0;
  double eps = 0.0;
  std::vector<FreeSpaceCell> cells;  // row-major, cell(i,j) = cells[j*n+i]

  const FreeSpaceCell& cell(std::size_t i, std::size_t j) const {
    return cells[j * n + i];
  }
};

FreeSpaceCell free_space_cell(std::pair<Point, Point> seg_a,
                              std::pair<Point, Point> seg_b, double eps);

FreeSpaceDiagram build_free_space_diagram(const PolyCurve& a,
                                          const PolyCurve& b, double eps);

/// Generic monotone reachability over an n x m cell grid.
///
/// left_free(i,j):   free interval on the vertical edge x=i of row j,
///                   i in [0..n], j in [0..m-1]
/// bottom_free(i,j): free interval on the horizontal edge y=j of column i,
///                   i in [0..n-1], j in [0..m]
/// cell_ok(i,j):     whether the cell may be traversed at all
///
/// Returns true iff a path monotone in both coordinates leads from (0,0)
/// to (n,m) through free parts of traversable cells. Cell free regions are
/// convex, so reachable edge portions stay intervals during propagation.
bool monotone_path_exists(
    std::size_t n, std::size_t m,
    const std::function<Interval(std::size_t, std::size_t)>& left_free,
    const std::function<Interval(std::size_t, std::size_t)>& bottom_free,
    const std::function<bool(std::size_t, std::size_t)>& cell_ok);

/// Decides delta_F(A,B) <= eps via free-space reachability in O(nm).
bool frechet_decision(const PolyCurve& a, const PolyCurve& b, double eps);

enum class SearchMode {
  ExactCritical,  // enumerate critical values, binary-search the decision
  Bisect,         // bisect eps to a tolerance
};

/// Continuous Fréchet distance. ExactCritical enumerates endpoint,
/// vertex-edge and vertex-pair passage candidates (O(n^2 m + n m^2) values);
/// Bisect brackets the decision to `tol` (default 1e-9 x input diameter).
/// Throws UsageError when an explicit tol <= 0 is passed.
double frechet_distance(const PolyCurve& a, const PolyCurve& b,
                        SearchMode mode = SearchMode::ExactCritical,
                        std::optional<double> tol = std::nullopt);

/// Discrete Fréchet distance over vertex couplings, O(nm) DP.
double discrete_frechet(const PolyCurve& a, const PolyCurve& b);

/// Critical eps candidates at which the continuous decision can flip.
std::vector<double> frechet_critical_values(const PolyCurve& a,
                                            const PolyCurve& b);

}  // namespace trajkit
