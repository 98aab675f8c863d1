#include "trajkit/kgather.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "trajkit/errors.hpp"
#include "trajkit/maxflow.hpp"

namespace trajkit {

DistanceMatrix DistanceMatrix::from_rows(
    const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  DistanceMatrix dm(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw DataError("distance matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      const double v = rows[i][j];
      if (!std::isfinite(v) || v < 0.0)
        throw DataError("distance matrix entries must be finite and >= 0");
      if (rows[j][i] != v) throw DataError("distance matrix is not symmetric");
      if (i == j && v != 0.0)
        throw DataError("distance matrix diagonal must be zero");
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) dm.set(i, j, rows[i][j]);
  return dm;
}

void Clustering::validate(const DistanceMatrix& dm, std::size_t k) const {
  std::vector<bool> seen(dm.size(), false);
  double max_d = 0.0;
  for (const Cluster& c : clusters) {
    if (c.members.size() < k)
      throw std::logic_error("cluster smaller than k");
    bool center_in = false;
    for (std::size_t v : c.members) {
      if (seen[v]) throw std::logic_error("point assigned twice");
      seen[v] = true;
      center_in |= v == c.center;
      max_d = std::max(max_d, dm(c.center, v));
    }
    if (!center_in) throw std::logic_error("center outside its cluster");
  }
  for (bool s : seen)
    if (!s) throw std::logic_error("point left unassigned");
  if (std::abs(max_d - radius) > 0.0)
    throw std::logic_error("reported radius differs from recomputed radius");
}

namespace {

struct FlowAssignment {
  bool saturated = false;
  // member -> center index into `centers`, or npos
  std::vector<std::size_t> assigned_to;
};

/// Source -k-> centers -1-> points -1-> sink with arcs only within R.
/// Each center is reserved for its own cluster (its slot is taken off
/// the flow), so the check saturates k-1 per center over the remaining
/// points; centers chosen within R of each other stay with themselves.
FlowAssignment assign_by_flow(const DistanceMatrix& dm,
                              const std::vector<std::size_t>& centers,
                              std::size_t k, double radius) {
  const std::size_t n = dm.size();
  std::vector<std::size_t> center_of(n, static_cast<std::size_t>(-1));
  for (std::size_t c = 0; c < centers.size(); ++c) center_of[centers[c]] = c;

  const int source = 0;
  const int sink = 1;
  auto center_node = [](std::size_t c) { return 2 + static_cast<int>(c); };
  const int point_base = 2 + static_cast<int>(centers.size());
  FlowNetwork net(point_base + static_cast<int>(n));

  for (std::size_t c = 0; c < centers.size(); ++c)
    net.add_arc(source, center_node(c), static_cast<std::int64_t>(k) - 1);
  std::vector<std::vector<int>> arc_ids(centers.size());
  for (std::size_t c = 0; c < centers.size(); ++c) {
    arc_ids[c].assign(n, -1);
    for (std::size_t v = 0; v < n; ++v) {
      if (center_of[v] != static_cast<std::size_t>(-1)) continue;
      if (dm(centers[c], v) <= radius)
        arc_ids[c][v] = net.add_arc(center_node(c),
                                    point_base + static_cast<int>(v), 1);
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    if (center_of[v] == static_cast<std::size_t>(-1))
      net.add_arc(point_base + static_cast<int>(v), sink, 1);

  const std::int64_t flow = net.max_flow(source, sink);
  FlowAssignment out;
  out.saturated =
      flow == static_cast<std::int64_t>(k - 1) *
                  static_cast<std::int64_t>(centers.size());
  out.assigned_to.assign(n, static_cast<std::size_t>(-1));
  for (std::size_t c = 0; c < centers.size(); ++c)
    out.assigned_to[centers[c]] = c;
  if (out.saturated) {
    for (std::size_t c = 0; c < centers.size(); ++c)
      for (std::size_t v = 0; v < n; ++v)
        if (arc_ids[c][v] >= 0 && net.flow_on(arc_ids[c][v]) > 0)
          out.assigned_to[v] = c;
  }
  return out;
}

Clustering build_clustering(const DistanceMatrix& dm,
                            const std::vector<std::size_t>& centers,
                            const FlowAssignment& assignment, double radius) {
  const std::size_t n = dm.size();
  Clustering out;
  out.clusters.resize(centers.size());
  for (std::size_t c = 0; c < centers.size(); ++c)
    out.clusters[c].center = centers[c];
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t c = assignment.assigned_to[v];
    if (c == static_cast<std::size_t>(-1)) {
      // leftover: nearest center within the radius
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t cc = 0; cc < centers.size(); ++cc) {
        const double d = dm(centers[cc], v);
        if (d <= radius && d < best) {
          best = d;
          c = cc;
        }
      }
      if (c == static_cast<std::size_t>(-1))
        throw std::logic_error("uncovered point after feasible flow");
    }
    out.clusters[c].members.push_back(v);
  }
  double max_d = 0.0;
  for (const Cluster& cl : out.clusters)
    for (std::size_t v : cl.members) max_d = std::max(max_d, dm(cl.center, v));
  out.radius = max_d;
  return out;
}

bool condition_one(const DistanceMatrix& dm, std::size_t k, double radius) {
  const std::size_t n = dm.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t within = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && dm(i, j) <= radius) ++within;
    if (within + 1 < k) return false;
  }
  return true;
}

std::vector<std::size_t> greedy_centers(const DistanceMatrix& dm,
                                        double radius) {
  const std::size_t n = dm.size();
  std::vector<bool> covered(n, false);
  std::vector<std::size_t> centers;
  for (std::size_t v = 0; v < n; ++v) {
    if (covered[v]) continue;
    centers.push_back(v);
    for (std::size_t u = 0; u < n; ++u)
      if (dm(v, u) <= radius) covered[u] = true;
  }
  return centers;
}

std::vector<double> radius_candidates(const DistanceMatrix& dm) {
  std::vector<double> vals;
  const std::size_t n = dm.size();
  vals.reserve(n * (n + 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) vals.push_back(dm(i, j));
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals;
}

}  // namespace

std::optional<Clustering> kgather_feasible(const DistanceMatrix& dm,
                                           std::size_t k, double radius) {
  const std::size_t n = dm.size();
  if (k < 1 || k > n) throw UsageError("k must be in [1, n]");
  if (!condition_one(dm, k, radius)) return std::nullopt;
  const std::vector<std::size_t> centers = greedy_centers(dm, radius);
  const FlowAssignment assignment = assign_by_flow(dm, centers, k, radius);
  if (!assignment.saturated) return std::nullopt;
  return build_clustering(dm, centers, assignment, radius);
}

Clustering kgather_approx(const DistanceMatrix& dm, std::size_t k) {
  const std::size_t n = dm.size();
  if (k < 1) throw UsageError("k must be >= 1");
  if (n < k) throw UsageError("need at least k points");
  const std::vector<double> vals = radius_candidates(dm);
  std::size_t lo = 0, hi = vals.size() - 1;
  if (!kgather_feasible(dm, k, vals[hi]))
    throw std::logic_error("k-gather infeasible at the maximum distance");
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (kgather_feasible(dm, k, vals[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }
  return *kgather_feasible(dm, k, vals[lo]);
}

namespace {

/// Smallest candidate radius at which `centers` admits a full assignment;
/// nullopt when even the largest fails.
std::optional<double> subset_min_radius(const DistanceMatrix& dm,
                                        const std::vector<std::size_t>& centers,
                                        std::size_t k,
                                        const std::vector<double>& vals) {
  auto feasible = [&](double r) {
    const std::size_t n = dm.size();
    for (std::size_t v = 0; v < n; ++v) {
      bool covered = false;
      for (std::size_t c : centers)
        if (dm(c, v) <= r) {
          covered = true;
          break;
        }
      if (!covered) return false;
    }
    return assign_by_flow(dm, centers, k, r).saturated;
  };
  std::size_t lo = 0, hi = vals.size() - 1;
  if (!feasible(vals[hi])) return std::nullopt;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (feasible(vals[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }
  return vals[lo];
}

}  // namespace

Clustering kgather_exact(const DistanceMatrix& dm, std::size_t k,
                         std::size_t size_cap) {
  const std::size_t n = dm.size();
  if (n < k) throw UsageError("need at least k points");
  if (k < 1) throw UsageError("k must be >= 1");
  if (n > size_cap)
    throw SizeGuardError("exact k-gather enumerates all center subsets; "
                         "refusing n = " +
                         std::to_string(n) + " beyond the cap of " +
                         std::to_string(size_cap));

  const std::vector<double> vals = radius_candidates(dm);
  const std::size_t max_centers = n / k;
  double best_radius = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> best_centers;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const auto bits = static_cast<std::size_t>(__builtin_popcount(mask));
    if (bits == 0 || bits > max_centers) continue;
    std::vector<std::size_t> centers;
    for (std::size_t v = 0; v < n; ++v)
      if (mask & (1u << v)) centers.push_back(v);
    const auto r = subset_min_radius(dm, centers, k, vals);
    if (r && *r < best_radius) {
      best_radius = *r;
      best_centers = centers;
    }
  }
  if (best_centers.empty())
    throw std::logic_error("no feasible center subset");
  const FlowAssignment assignment =
      assign_by_flow(dm, best_centers, k, best_radius);
  return build_clustering(dm, best_centers, assignment, best_radius);
}

bool kgather_feasible_exhaustive(const DistanceMatrix& dm, std::size_t k,
                                 double radius, std::size_t size_cap) {
  const std::size_t n = dm.size();
  if (n > size_cap)
    throw SizeGuardError("exhaustive feasibility refuses n = " +
                         std::to_string(n) + " beyond the cap of " +
                         std::to_string(size_cap));
  const std::size_t max_centers = n / k;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const auto bits = static_cast<std::size_t>(__builtin_popcount(mask));
    if (bits == 0 || bits > max_centers) continue;
    std::vector<std::size_t> centers;
    for (std::size_t v = 0; v < n; ++v)
      if (mask & (1u << v)) centers.push_back(v);
    bool covered = true;
    for (std::size_t v = 0; v < n && covered; ++v) {
      bool any = false;
      for (std::size_t c : centers) any |= dm(c, v) <= radius;
      covered = any;
    }
    if (covered && assign_by_flow(dm, centers, k, radius).saturated)
      return true;
  }
  return false;
}

}  // namespace trajkit
