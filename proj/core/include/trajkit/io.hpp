#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "trajkit/decomposition.hpp"
#include "trajkit/metric.hpp"
#include "trajkit/trajectory.hpp"

namespace trajkit {

enum class TrajectoryFormat { Csv, Json };

/// Loads one trajectory from a CSV file with `t,x,y` rows (optional header)
/// or from a JSON dataset holding exactly one trajectory.
TimedTrajectory load_timed_trajectory(const std::string& path,
                                      TrajectoryFormat format);
TimedTrajectory parse_trajectory_csv(std::istream& in);

/// Named collection of trajectories. A dataset is either timed or symbolic;
/// measures check the kind they need.
struct TimedDataset {
  std::vector<std::string> ids;
  std::vector<TimedTrajectory> trajectories;
  std::size_t size() const { return trajectories.size(); }
};

struct SymbolDataset {
  std::vector<std::string> ids;
  std::vector<SymbolTrajectory> trajectories;
  std::size_t size() const { return trajectories.size(); }
};

struct Dataset {
  // exactly one of the two is populated
  TimedDataset timed;
  SymbolDataset symbolic;
  bool is_timed() const { return !timed.trajectories.empty(); }
  std::size_t size() const {
    return is_timed() ? timed.size() : symbolic.size();
  }
};

/// JSON dataset: {"trajectories":[{"id":str,"samples":[[t,x,y],...]}]}
/// or {"symbol_trajectories":[{"id":str,"symbols":["a",...]}]}.
Dataset load_dataset(const std::string& path);

/// Metric file: {"locations":{"a":[x,y],...}}
/// or {"matrix":{"symbols":[...],"d":[[...]]}}.
LocationMetric load_metric(const std::string& path);

/// Decomposition file:
/// {"grid":{"origin":[x,y],"cell":[w,h],"nx":int,"ny":int}}
/// or {"polygons":[{"label":"A","vertices":[[x,y],...]}]}.
PlanarDecomposition load_decomposition(const std::string& path);

std::string trajectory_to_csv(const TimedTrajectory& traj);
std::string dataset_to_json(const TimedDataset& ds);
std::string dataset_to_json(const SymbolDataset& ds);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace trajkit
