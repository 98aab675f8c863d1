#include "trajkit/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "trajkit/errors.hpp"

namespace trajkit {

PlanarDecomposition PlanarDecomposition::grid(Point origin, double cell_width,
                                              double cell_height, int nx,
                                              int ny) {
  if (cell_width <= 0 || cell_height <= 0 || nx <= 0 || ny <= 0)
    throw DataError("grid decomposition needs positive cell size and counts");
  PlanarDecomposition d;
  d.is_grid_ = true;
  d.origin_ = origin;
  d.cw_ = cell_width;
  d.ch_ = cell_height;
  d.nx_ = nx;
  d.ny_ = ny;
  d.grid_labels_.reserve(static_cast<std::size_t>(nx) * ny);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      d.grid_labels_.push_back("c" + std::to_string(i) + "_" +
                               std::to_string(j));
  return d;
}

PlanarDecomposition PlanarDecomposition::polygons(
    std::vector<std::pair<std::string, std::vector<Point>>> regions) {
  if (regions.empty()) throw DataError("decomposition needs at least one region");
  PlanarDecomposition d;
  std::set<std::string> seen;
  bool first = true;
  for (auto& [label, verts] : regions) {
    if (verts.size() < 3)
      throw DataError("region '" + label + "' needs at least 3 vertices");
    if (!seen.insert(label).second)
      throw DataError("duplicate region label '" + label + "'");
    for (const Point& p : verts) {
      if (first) {
        d.min_x_ = d.max_x_ = p.x;
        d.min_y_ = d.max_y_ = p.y;
        first = false;
      }
      d.min_x_ = std::min(d.min_x_, p.x);
      d.max_x_ = std::max(d.max_x_, p.x);
      d.min_y_ = std::min(d.min_y_, p.y);
      d.max_y_ = std::max(d.max_y_, p.y);
    }
    d.labels_.push_back(label);
    d.polys_.push_back(verts);
  }
  return d;
}

namespace {

bool point_in_convex_polygon(Point p, const std::vector<Point>& poly) {
  int sign = 0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = poly[i];
    const Point b = poly[(i + 1) % n];
    const double cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
    if (cross == 0.0) continue;
    const int s = cross > 0 ? 1 : -1;
    if (sign == 0) sign = s;
    else if (s != sign) return false;
  }
  return true;
}

}  // namespace

bool PlanarDecomposition::inside_extent(Point p) const {
  if (is_grid_) {
    return p.x >= origin_.x && p.y >= origin_.y &&
           p.x <= origin_.x + cw_ * nx_ && p.y <= origin_.y + ch_ * ny_;
  }
  return p.x >= min_x_ && p.x <= max_x_ && p.y >= min_y_ && p.y <= max_y_;
}

const std::string& PlanarDecomposition::label_at(Point p) const {
  if (is_grid_) {
    if (!inside_extent(p))
      throw DataError("point (" + std::to_string(p.x) + ", " +
                      std::to_string(p.y) + ") is outside the decomposition");
    int i = static_cast<int>(std::floor((p.x - origin_.x) / cw_));
    int j = static_cast<int>(std::floor((p.y - origin_.y) / ch_));
    i = std::clamp(i, 0, nx_ - 1);
    j = std::clamp(j, 0, ny_ - 1);
    return grid_labels_[static_cast<std::size_t>(j) * nx_ + i];
  }
  for (std::size_t r = 0; r < polys_.size(); ++r) {
    if (point_in_convex_polygon(p, polys_[r])) return labels_[r];
  }
  throw DataError("point (" + std::to_string(p.x) + ", " + std::to_string(p.y) +
                  ") is outside the decomposition");
}

double PlanarDecomposition::shortest_edge() const {
  if (is_grid_) return std::min(cw_, ch_);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& poly : polys_) {
    for (std::size_t i = 0; i < poly.size(); ++i)
      best = std::min(best, dist(poly[i], poly[(i + 1) % poly.size()]));
  }
  return best;
}

SymbolTrajectory map_to_string(const TimedTrajectory& traj,
                               const PlanarDecomposition& dec, double step) {
  if (step <= 0.0) step = dec.shortest_edge() / 100.0;
  SymbolTrajectory out;
  auto visit = [&](Point p) {
    const std::string& label = dec.label_at(p);
    if (out.symbols.empty() || out.symbols.back() != label)
      out.symbols.push_back(label);
  };
  const auto& samples = traj.samples();
  for (const TimedSample& s : samples) {
    if (!dec.inside_extent(s.p))
      throw DataError("trajectory sample outside the decomposition extent");
  }
  visit(samples.front().p);
  for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
    const Point a = samples[i].p;
    const Point b = samples[i + 1].p;
    const double len = dist(a, b);
    const int pieces = std::max(1, static_cast<int>(std::ceil(len / step)));
    for (int k = 1; k <= pieces; ++k)
      visit(lerp(a, b, static_cast<double>(k) / pieces));
  }
  return out;
}

}  // namespace trajkit
