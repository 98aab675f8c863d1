#include "trajkit/geometry.hpp"

#include <algorithm>

namespace trajkit {

double point_segment_distance(Point p, Point a, Point b) {
  const Point ab = b - a;
  const double len_sq = dot(ab, ab);
  if (len_sq == 0.0) return dist(p, a);
  const double s = std::clamp(dot(p - a, ab) / len_sq, 0.0, 1.0);
  return dist(p, lerp(a, b, s));
}

Interval segment_ball_intersection(Point a, Point b, Point c, double eps) {
  // |a + s(b-a) - c|^2 <= eps^2  <=>  qa*s^2 + 2*qb*s + qc <= 0
  const Point u = b - a;
  const Point v = a - c;
  const double qa = dot(u, u);
  const double qb = dot(u, v);
  const double qc = dot(v, v) - eps * eps;
  if (qa == 0.0) {
    return qc <= 0.0 ? Interval::whole() : Interval::none();
  }
  const double disc = qb * qb - qa * qc;
  if (disc < 0.0) return Interval::none();
  const double root = std::sqrt(disc);
  const double lo = (-qb - root) / qa;
  const double hi = (-qb + root) / qa;
  Interval out{std::max(lo, 0.0), std::min(hi, 1.0)};
  return out.empty() ? Interval::none() : out;
}

std::optional<double> bisector_segment_intersection(Point p, Point q, Point a,
                                                    Point b) {
  // Solve |a + s(b-a) - p|^2 = |a + s(b-a) - q|^2 for s in [0,1].
  const Point u = b - a;
  const Point pq = q - p;
  const double denom = 2.0 * dot(u, pq);
  if (denom == 0.0) return std::nullopt;
  const double num = dot(q, q) - dot(p, p) - 2.0 * dot(a, pq);
  const double s = num / denom;
  if (s < 0.0 || s > 1.0) return std::nullopt;
  return s;
}

}  // namespace trajkit
