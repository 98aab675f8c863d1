#include "trajkit/measures.hpp"

#include <atomic>
#include <map>
#include <mutex>
#include <thread>

#include "trajkit/errors.hpp"
#include "trajkit/shingles.hpp"

namespace trajkit {

Measure parse_measure(const std::string& name) {
  static const std::map<std::string, Measure> table = {
      {"frechet", Measure::Frechet},
      {"discrete-frechet", Measure::DiscreteFrechet},
      {"dtw", Measure::Dtw},
      {"tw-frechet", Measure::TwFrechet},
      {"tw-discrete-frechet", Measure::TwDiscreteFrechet},
      {"tw-dtw", Measure::TwDtw},
      {"edit", Measure::Edit},
      {"metric-edit", Measure::MetricEdit},
      {"metric-edit-insertfirst", Measure::MetricEditInsertFirst},
      {"jaccard", Measure::Jaccard},
  };
  auto it = table.find(name);
  if (it == table.end()) throw UsageError("unknown measure '" + name + "'");
  return it->second;
}

std::string measure_name(Measure m) {
  switch (m) {
    case Measure::Frechet: return "frechet";
    case Measure::DiscreteFrechet: return "discrete-frechet";
    case Measure::Dtw: return "dtw";
    case Measure::TwFrechet: return "tw-frechet";
    case Measure::TwDiscreteFrechet: return "tw-discrete-frechet";
    case Measure::TwDtw: return "tw-dtw";
    case Measure::Edit: return "edit";
    case Measure::MetricEdit: return "metric-edit";
    case Measure::MetricEditInsertFirst: return "metric-edit-insertfirst";
    case Measure::Jaccard: return "jaccard";
  }
  return "?";
}

bool measure_is_timed(Measure m) {
  switch (m) {
    case Measure::Frechet:
    case Measure::DiscreteFrechet:
    case Measure::Dtw:
    case Measure::TwFrechet:
    case Measure::TwDiscreteFrechet:
    case Measure::TwDtw:
      return true;
    default:
      return false;
  }
}

bool measure_needs_metric(Measure m) {
  return m == Measure::MetricEdit || m == Measure::MetricEditInsertFirst;
}

void MeasureConfig::validate() const {
  if (sigma < 0) throw ConfigError("sigma must be >= 0");
  if (shingle_w < 1) throw ConfigError("shingle width must be >= 1");
  if (measure_needs_metric(measure) && !metric)
    throw ConfigError("measure '" + measure_name(measure) +
                      "' needs a --metric file");
  if (tol && *tol <= 0) throw ConfigError("tolerance must be > 0");
}

double measure_distance(const Dataset& ds, std::size_t i, std::size_t j,
                        const MeasureConfig& config) {
  config.validate();
  if (measure_is_timed(config.measure) != ds.is_timed())
    throw ConfigError("measure '" + measure_name(config.measure) +
                      (measure_is_timed(config.measure)
                           ? "' needs timed trajectories"
                           : "' needs symbol trajectories"));
  if (ds.is_timed()) {
    const TimedTrajectory& a = ds.timed.trajectories[i];
    const TimedTrajectory& b = ds.timed.trajectories[j];
    switch (config.measure) {
      case Measure::Frechet:
        return frechet_distance(a.curve(), b.curve(), config.mode, config.tol);
      case Measure::DiscreteFrechet:
        return discrete_frechet(a.curve(), b.curve());
      case Measure::Dtw:
        return dtw(a.curve(), b.curve());
      case Measure::TwFrechet:
        return tw_frechet_distance(a, b, config.sigma, config.speed,
                                   config.mode, config.tol);
      case Measure::TwDiscreteFrechet:
        return tw_discrete_frechet(a, b, config.sigma);
      case Measure::TwDtw:
        return tw_dtw(a, b, config.sigma);
      default:
        break;
    }
  } else {
    const SymbolTrajectory& a = ds.symbolic.trajectories[i];
    const SymbolTrajectory& b = ds.symbolic.trajectories[j];
    switch (config.measure) {
      case Measure::Edit:
        return plain_edit_distance(a, b);
      case Measure::MetricEdit:
        return metric_edit_distance(a, b, *config.metric, config.edit_cap);
      case Measure::MetricEditInsertFirst:
        return insertion_first_edit_distance(a, b, *config.metric);
      case Measure::Jaccard:
        return jaccard_distance(a, b, config.shingle_w);
      default:
        break;
    }
  }
  throw ConfigError("unhandled measure/dataset combination");
}

DistanceMatrix pairwise_distances(const Dataset& ds,
                                  const MeasureConfig& config, unsigned jobs) {
  config.validate();
  const std::size_t n = ds.size();
  DistanceMatrix dm(n);
  if (n < 2) return dm;

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  if (jobs <= 1) {
    for (const auto& [i, j] : pairs)
      dm.set(i, j, measure_distance(ds, i, j, config));
    return dm;
  }

  std::atomic<std::size_t> next{0};
  std::vector<double> results(pairs.size(), 0.0);
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= pairs.size()) return;
      try {
        results[idx] =
            measure_distance(ds, pairs[idx].first, pairs[idx].second, config);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
  for (std::size_t idx = 0; idx < pairs.size(); ++idx)
    dm.set(pairs[idx].first, pairs[idx].second, results[idx]);
  return dm;
}

}  // namespace trajkit
