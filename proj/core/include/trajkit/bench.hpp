#pragma once

#include <cstdint>
#include <vector>

#include "trajkit/trajectory.hpp"

namespace trajkit {

/// Random inputs for the empirical complexity probes.
PolyCurve random_curve(std::size_t n_vertices, std::uint64_t seed);
TimedTrajectory random_timed_trajectory(std::size_t n_samples,
                                        std::uint64_t seed);

struct ScalingPoint {
  std::size_t n = 0;
  double seconds = 0.0;
};

struct ScalingResult {
  std::vector<ScalingPoint> points;
  double exponent = 0.0;  // least-squares slope of log t against log n
};

/// Times the discrete Fréchet DP on same-length random curve pairs.
/// Each size is repeated until at least `min_seconds` accumulates and the
/// median per-run time is kept.
ScalingResult bench_discrete_frechet_scaling(
    const std::vector<std::size_t>& sizes, std::uint64_t seed,
    double min_seconds = 0.05);

struct CellCorrelationPoint {
  double sigma = 0.0;
  std::size_t valid_pairs = 0;
  double seconds = 0.0;
};

struct CellCorrelationResult {
  std::vector<CellCorrelationPoint> points;
  double pearson_r = 0.0;  // time against valid-pair count
};

/// Runtime of the time-windowed discrete Fréchet DP against the measured
/// valid-pair count over a sigma grid, at fixed input size.
CellCorrelationResult bench_tw_cell_correlation(
    std::size_t n_samples, const std::vector<double>& sigmas,
    std::uint64_t seed, double min_seconds = 0.02);

struct EditGrowthPoint {
  std::size_t n = 0;
  double seconds = 0.0;
};

struct EditGrowthResult {
  std::vector<EditGrowthPoint> points;
};

/// Times the arbitrary-order metric edit DP on random strings (desk-scale
/// sizes only; the DP is O(n^3 m^3 (n+m))).
EditGrowthResult bench_metric_edit_growth(const std::vector<std::size_t>& sizes,
                                          std::uint64_t seed);

double pearson_correlation(const std::vector<double>& x,
                           const std::vector<double>& y);

}  // namespace trajkit
