#pragma once

#include <cmath>
#include <optional>
#include <utility>

namespace trajkit {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
  friend bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double dist(Point a, Point b) { return norm(a - b); }
inline double dist_sq(Point a, Point b) {
  const Point d = a - b;
  return dot(d, d);
}

/// Point on segment ab at parameter s in [0,1].
inline Point lerp(Point a, Point b, double s) { return (1.0 - s) * a + s * b; }

inline bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Closed subinterval of a parameter range; empty when lo > hi.
struct Interval {
  double lo = 1.0;
  double hi = 0.0;

  bool empty() const { return lo > hi; }
  bool contains(double v) const { return lo <= v && v <= hi; }

  static Interval whole() { return {0.0, 1.0}; }
  static Interval none() { return {1.0, 0.0}; }

  Interval clipped(double l, double h) const {
    return {std::max(lo, l), std::min(hi, h)};
  }
};

inline Interval intersect(Interval a, Interval b) {
  return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

/// Smallest distance from p to the segment ab.
double point_segment_distance(Point p, Point a, Point b);

/// Parameters s in [0,1] with |lerp(a,b,s) - c| <= eps, as a closed interval.
/// The squared distance is a quadratic in s, so the solution set is convex.
Interval segment_ball_intersection(Point a, Point b, Point c, double eps);

/// Parameter on segment ab equidistant to p and q, if the perpendicular
/// bisector of pq crosses the segment.
std::optional<double> bisector_segment_intersection(Point p, Point q, Point a,
                                                    Point b);

}  // namespace trajkit
