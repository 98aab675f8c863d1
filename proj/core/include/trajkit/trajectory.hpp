#pragma once

#include <string>
#include <vector>

#include "trajkit/geometry.hpp"

namespace trajkit {

/// Polygonal curve on [0,n]: vertex i at parameter i, affine in between.
using PolyCurve = std::vector<Point>;

/// A(s) for s in [0, curve.size()-1].
Point curve_at(const PolyCurve& curve, double s);

double curve_diameter(const PolyCurve& curve);
double longest_edge(const PolyCurve& curve);

/// Largest coordinate spread of two curves together; used to scale
/// bisection tolerances.
double pair_diameter(const PolyCurve& a, const PolyCurve& b);

enum class SpeedModel { ConstantSpeed, VaryingSpeed };

struct TimedSample {
  double t = 0.0;
  Point p;
};

/// Time-stamped polygonal trajectory with timestamps normalized to [0,1].
///
/// Construction sorts samples by time, rejects duplicates and non-finite
/// values, and affinely maps the time range onto [0,1], so every instance
/// starts at t=0 and ends at t=1.
class TimedTrajectory {
 public:
  /// Validates and normalizes raw samples. Throws DataError on fewer than
  /// two samples, duplicate timestamps, or non-finite coordinates.
  static TimedTrajectory from_raw(std::vector<TimedSample> samples);

  const std::vector<TimedSample>& samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }
  std::size_t segments() const { return samples_.size() - 1; }

  double time(std::size_t i) const { return samples_[i].t; }
  Point vertex(std::size_t i) const { return samples_[i].p; }

  /// Vertex list without timestamps.
  PolyCurve curve() const;

  /// Position at time t in [0,1] under constant speed per segment.
  Point at_time(double t) const;

 private:
  explicit TimedTrajectory(std::vector<TimedSample> samples)
      : samples_(std::move(samples)) {}

  std::vector<TimedSample> samples_;
};

}  // namespace trajkit
