#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace trajkit {

/// Symmetric nonnegative distance matrix with zero diagonal.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, 0.0) {}
  static DistanceMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, double v) {
    d_[i * n_ + j] = v;
    d_[j * n_ + i] = v;
  }

 private:
  std::size_t n_;
  std::vector<double> d_;
};

struct Cluster {
  std::size_t center;
  std::vector<std::size_t> members;  // includes the center
};

/// Partition into clusters of at least k points each, one center per
/// cluster; radius is the max member-to-center distance over all clusters.
struct Clustering {
  std::vector<Cluster> clusters;
  double radius = 0.0;

  /// Recomputes the radius from the matrix and verifies the partition and
  /// size invariants; throws std::logic_error on violation.
  void validate(const DistanceMatrix& dm, std::size_t k) const;
};

/// Greedy cover + flow feasibility check at radius R:
///  1. every point needs at least k-1 others within R;
///  2. lowest-index-first greedy picks centers more than R apart, then a
///     flow network (source -> center -> point -> sink, arcs only within
///     R) must draw k members per center, the center itself included.
/// Points the flow leaves unassigned join the nearest center within R.
std::optional<Clustering> kgather_feasible(const DistanceMatrix& dm,
                                           std::size_t k, double radius);

/// Smallest feasible radius among the pairwise distances, found by binary
/// search; the result is at most twice the optimal k-gather radius.
Clustering kgather_approx(const DistanceMatrix& dm, std::size_t k);

/// Exhaustive minimum over all center subsets, assignment feasibility
/// decided by the same flow construction per candidate radius. Refuses
/// inputs beyond `size_cap` points.
Clustering kgather_exact(const DistanceMatrix& dm, std::size_t k,
                         std::size_t size_cap = 16);

/// Whether some center subset admits a full assignment at radius R:
/// every point within R of a chosen center and a flow saturating k per
/// center. Used as the exhaustive counterpart of kgather_feasible.
bool kgather_feasible_exhaustive(const DistanceMatrix& dm, std::size_t k,
                                 double radius, std::size_t size_cap = 16);

}  // namespace trajkit
