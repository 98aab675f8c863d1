#include "trajkit/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "trajkit/errors.hpp"

namespace trajkit {

Point curve_at(const PolyCurve& curve, double s) {
  if (curve.size() == 1) return curve.front();
  const double max_s = static_cast<double>(curve.size() - 1);
  s = std::clamp(s, 0.0, max_s);
  const auto i = static_cast<std::size_t>(
      std::min(std::floor(s), max_s - 1.0));
  return lerp(curve[i], curve[i + 1], s - static_cast<double>(i));
}

double curve_diameter(const PolyCurve& curve) {
  double best = 0.0;
  for (std::size_t i = 0; i < curve.size(); ++i)
    for (std::size_t j = i + 1; j < curve.size(); ++j)
      best = std::max(best, dist(curve[i], curve[j]));
  return best;
}

double longest_edge(const PolyCurve& curve) {
  double best = 0.0;
  for (std::size_t i = 0; i + 1 < curve.size(); ++i)
    best = std::max(best, dist(curve[i], curve[i + 1]));
  return best;
}

double pair_diameter(const PolyCurve& a, const PolyCurve& b) {
  double best = 0.0;
  for (const Point& p : a)
    for (const Point& q : b) best = std::max(best, dist(p, q));
  return std::max({best, curve_diameter(a), curve_diameter(b)});
}

TimedTrajectory TimedTrajectory::from_raw(std::vector<TimedSample> samples) {
  if (samples.size() < 2)
    throw DataError("trajectory needs at least 2 samples, got " +
                    std::to_string(samples.size()));
  for (const TimedSample& s : samples) {
    if (!std::isfinite(s.t) || !finite(s.p))
      throw DataError("trajectory contains non-finite values");
  }
  std::stable_sort(samples.begin(), samples.end(),
                   [](const TimedSample& a, const TimedSample& b) {
                     return a.t < b.t;
                   });
  for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
    if (samples[i].t == samples[i + 1].t)
      throw DataError("duplicate timestamp " + std::to_string(samples[i].t));
  }
  const double t0 = samples.front().t;
  const double span = samples.back().t - t0;
  for (TimedSample& s : samples) s.t = (s.t - t0) / span;
  samples.front().t = 0.0;
  samples.back().t = 1.0;
  return TimedTrajectory(std::move(samples));
}

PolyCurve TimedTrajectory::curve() const {
  PolyCurve c;
  c.reserve(samples_.size());
  for (const TimedSample& s : samples_) c.push_back(s.p);
  return c;
}

Point TimedTrajectory::at_time(double t) const {
  t = std::clamp(t, 0.0, 1.0);
  auto it = std::upper_bound(
      samples_.begin(), samples_.end(), t,
      [](double v, const TimedSample& s) { return v < s.t; });
  if (it == samples_.begin()) return samples_.front().p;
  if (it == samples_.end()) return samples_.back().p;
  const TimedSample& hi = *it;
  const TimedSample& lo = *(it - 1);
  const double s = (t - lo.t) / (hi.t - lo.t);
  return lerp(lo.p, hi.p, s);
}

}  // namespace trajkit
