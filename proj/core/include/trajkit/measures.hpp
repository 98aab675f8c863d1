#pragma once

#include <optional>
#include <string>

#include "trajkit/editdist.hpp"
#include "trajkit/io.hpp"
#include "trajkit/kgather.hpp"
#include "trajkit/timewindow.hpp"

namespace trajkit {

enum class Measure {
  Frechet,
  DiscreteFrechet,
  Dtw,
  TwFrechet,
  TwDiscreteFrechet,
  TwDtw,
  Edit,
  MetricEdit,
  MetricEditInsertFirst,
  Jaccard,
};

/// Parses the CLI spelling (e.g. "tw-frechet"); throws UsageError on
/// unknown names.
Measure parse_measure(const std::string& name);
std::string measure_name(Measure m);

/// Whether the measure runs on timed trajectories (otherwise symbolic).
bool measure_is_timed(Measure m);
bool measure_needs_metric(Measure m);

struct MeasureConfig {
  Measure measure = Measure::DiscreteFrechet;
  double sigma = 0.1;
  SpeedModel speed = SpeedModel::ConstantSpeed;
  SearchMode mode = SearchMode::Bisect;
  std::optional<double> tol;
  std::size_t shingle_w = 2;
  std::optional<LocationMetric> metric;
  std::size_t edit_cap = 12;

  void validate() const;  // parameter completeness, ConfigError on failure
};

/// Distance between dataset entries i and j under the configured measure.
/// Throws ConfigError when the dataset kind does not match the measure.
double measure_distance(const Dataset& ds, std::size_t i, std::size_t j,
                        const MeasureConfig& config);

/// All-pairs matrix; pairs fan out over `jobs` workers, writing disjoint
/// entries, so the result does not depend on scheduling.
DistanceMatrix pairwise_distances(const Dataset& ds,
                                  const MeasureConfig& config,
                                  unsigned jobs = 1);

}  // namespace trajkit
