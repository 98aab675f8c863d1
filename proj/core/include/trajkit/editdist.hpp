#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "trajkit/metric.hpp"

namespace trajkit {

/// Unit-cost edit distance with insertions and deletions only (no
/// substitution), O(nm).
int plain_edit_distance(const SymbolTrajectory& a, const SymbolTrajectory& b);

/// Geometric insertion/deletion costs: the price of a detour through z
/// between neighbors x and y. INS and DEL coincide and are nonnegative
/// whenever the underlying distance satisfies the triangle inequality.
struct EditCostModel {
  const LocationMetric& metric;

  double ins(const std::string& x, const std::string& y,
             const std::string& z) const {
    return metric.d(x, z) + metric.d(y, z) - metric.d(x, y);
  }
  double del(const std::string& x, const std::string& y,
             const std::string& z) const {
    return ins(x, y, z);
  }
};

/// Total cost of deleting the run `seq` between x and y: the path length
/// along x, seq..., y minus d(x,y). Equals the summed stepwise deletion
/// cost in every deletion order.
double seq_delete_cost(const std::string& x, const std::string& y,
                       const std::vector<std::string>& seq,
                       const LocationMetric& metric);

/// Minimum total cost of turning `a` into `b` with insertions and
/// deletions in arbitrary order, via the windowed 4-index DP.
///
/// The DP is O(n^3 m^3 (n+m)); inputs longer than `size_cap` symbols are
/// refused with SizeGuardError.
double metric_edit_distance(const SymbolTrajectory& a,
                            const SymbolTrajectory& b,
                            const LocationMetric& metric,
                            std::size_t size_cap = 12);

/// Variant constraining every insertion to precede every deletion; O(nm).
/// Converts `from` into `to`. Not a metric: the ordering restriction can
/// break the triangle inequality.
double insertion_first_edit_distance(const SymbolTrajectory& from,
                                     const SymbolTrajectory& to,
                                     const LocationMetric& metric);

}  // namespace trajkit
