#include "trajkit/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

#include "trajkit/editdist.hpp"
#include "trajkit/frechet.hpp"
#include "trajkit/timewindow.hpp"

namespace trajkit {

PolyCurve random_curve(std::size_t n_vertices, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(0.0, 1.0);
  PolyCurve c(n_vertices);
  for (Point& p : c) p = {coord(rng), coord(rng)};
  return c;
}

TimedTrajectory random_timed_trajectory(std::size_t n_samples,
                                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(0.0, 1.0);
  std::vector<TimedSample> samples(n_samples);
  for (std::size_t i = 0; i < n_samples; ++i)
    samples[i] = {coord(rng), {coord(rng), coord(rng)}};
  samples[0].t = 0.0;
  samples[n_samples - 1].t = 1.0;
  std::sort(samples.begin(), samples.end(),
            [](const TimedSample& a, const TimedSample& b) { return a.t < b.t; });
  // nudge exact collisions apart; from_raw rejects duplicates
  for (std::size_t i = 1; i + 1 < n_samples; ++i)
    if (samples[i].t <= samples[i - 1].t)
      samples[i].t = std::nextafter(samples[i - 1].t, 2.0);
  return TimedTrajectory::from_raw(std::move(samples));
}

namespace {

using Clock = std::chrono::steady_clock;

/// Median per-run seconds, repeating until `min_seconds` accumulate.
template <typename F>
double time_median(F&& run, double min_seconds) {
  std::vector<double> times;
  double total = 0.0;
  do {
    const auto start = Clock::now();
    run();
    const double s = std::chrono::duration<double>(Clock::now() - start).count();
    times.push_back(s);
    total += s;
  } while (total < min_seconds || times.size() < 3);
  std::nth_element(times.begin(), times.begin() + times.size() / 2,
                   times.end());
  return times[times.size() / 2];
}

volatile double g_sink = 0.0;

}  // namespace

double pearson_correlation(const std::vector<double>& x,
                           const std::vector<double>& y) {
  const std::size_t n = x.size();
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0 || syy == 0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

ScalingResult bench_discrete_frechet_scaling(
    const std::vector<std::size_t>& sizes, std::uint64_t seed,
    double min_seconds) {
  ScalingResult result;
  for (std::size_t idx = 0; idx < sizes.size(); ++idx) {
    const std::size_t n = sizes[idx];
    const PolyCurve a = random_curve(n, seed + 2 * idx);
    const PolyCurve b = random_curve(n, seed + 2 * idx + 1);
    const double t = time_median([&] { g_sink = discrete_frechet(a, b); },
                                 min_seconds);
    result.points.push_back({n, t});
  }
  std::vector<double> lx, ly;
  for (const auto& p : result.points) {
    lx.push_back(std::log(static_cast<double>(p.n)));
    ly.push_back(std::log(p.seconds));
  }
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= lx.size();
  my /= ly.size();
  double num = 0, den = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    num += (lx[i] - mx) * (ly[i] - my);
    den += (lx[i] - mx) * (lx[i] - mx);
  }
  result.exponent = den == 0 ? 0.0 : num / den;
  return result;
}

CellCorrelationResult bench_tw_cell_correlation(
    std::size_t n_samples, const std::vector<double>& sigmas,
    std::uint64_t seed, double min_seconds) {
  const TimedTrajectory a = random_timed_trajectory(n_samples, seed);
  const TimedTrajectory b = random_timed_trajectory(n_samples, seed + 1);
  CellCorrelationResult result;
  for (double sigma : sigmas) {
    const std::size_t valid = valid_pairs_varying_speed(a, b, sigma).count();
    const double t = time_median([&] { g_sink = tw_discrete_frechet(a, b, sigma); },
                                 min_seconds);
    result.points.push_back({sigma, valid, t});
  }
  std::vector<double> xs, ys;
  for (const auto& p : result.points) {
    xs.push_back(static_cast<double>(p.valid_pairs));
    ys.push_back(p.seconds);
  }
  result.pearson_r = pearson_correlation(xs, ys);
  return result;
}

EditGrowthResult bench_metric_edit_growth(const std::vector<std::size_t>& sizes,
                                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // four locations on a unit square
  const LocationMetric metric = LocationMetric::from_coordinates(
      {{"a", {0, 0}}, {"b", {1, 0}}, {"c", {0, 1}}, {"d", {1, 1}}});
  std::uniform_int_distribution<int> pick(0, 3);
  const std::vector<std::string> alphabet = {"a", "b", "c", "d"};
  EditGrowthResult result;
  for (std::size_t n : sizes) {
    SymbolTrajectory s1, s2;
    for (std::size_t i = 0; i < n; ++i) {
      s1.symbols.push_back(alphabet[pick(rng)]);
      s2.symbols.push_back(alphabet[pick(rng)]);
    }
    const double t = time_median(
        [&] { g_sink = metric_edit_distance(s1, s2, metric, n); }, 0.0);
    result.points.push_back({n, t});
  }
  return result;
}

}  // namespace trajkit
