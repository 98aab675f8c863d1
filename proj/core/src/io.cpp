#include "trajkit/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "trajkit/errors.hpp"

namespace trajkit {

namespace {

using nlohmann::json;

json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw DataError("invalid JSON in '" + path + "': " + e.what());
  }
}

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  return fields;
}

bool parse_double(const std::string& s, double& out) {
  try {
    std::size_t pos = 0;
    out = std::stod(s, &pos);
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
    return pos == s.size();
  } catch (...) {
    return false;
  }
}

TimedTrajectory trajectory_from_json(const json& j) {
  if (!j.contains("samples") || !j["samples"].is_array())
    throw DataError("trajectory entry lacks a 'samples' array");
  std::vector<TimedSample> samples;
  for (const auto& row : j["samples"]) {
    if (!row.is_array() || row.size() != 3)
      throw DataError("trajectory sample must be [t,x,y]");
    samples.push_back({row[0].get<double>(),
                       {row[1].get<double>(), row[2].get<double>()}});
  }
  return TimedTrajectory::from_raw(std::move(samples));
}

}  // namespace

TimedTrajectory parse_trajectory_csv(std::istream& in) {
  std::vector<TimedSample> samples;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_csv_row(line);
    if (fields.size() != 3)
      throw ParseError("expected 3 fields t,x,y, got " +
                           std::to_string(fields.size()),
                       lineno);
    double t, x, y;
    if (!parse_double(fields[0], t) || !parse_double(fields[1], x) ||
        !parse_double(fields[2], y)) {
      // a single non-numeric first row is accepted as a header
      if (lineno == 1 && samples.empty()) continue;
      throw ParseError("non-numeric field in row '" + line + "'", lineno);
    }
    samples.push_back({t, {x, y}});
  }
  return TimedTrajectory::from_raw(std::move(samples));
}

TimedTrajectory load_timed_trajectory(const std::string& path,
                                      TrajectoryFormat format) {
  if (format == TrajectoryFormat::Csv) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path + "'");
    return parse_trajectory_csv(in);
  }
  const json j = parse_json_file(path);
  if (j.contains("trajectories")) {
    const auto& arr = j["trajectories"];
    if (!arr.is_array() || arr.size() != 1)
      throw DataError("expected exactly one trajectory in '" + path + "'");
    return trajectory_from_json(arr[0]);
  }
  return trajectory_from_json(j);
}

Dataset load_dataset(const std::string& path) {
  const json j = parse_json_file(path);
  Dataset ds;
  if (j.contains("trajectories")) {
    int k = 0;
    for (const auto& entry : j["trajectories"]) {
      ds.timed.ids.push_back(entry.value("id", "t" + std::to_string(k)));
      ds.timed.trajectories.push_back(trajectory_from_json(entry));
      ++k;
    }
    if (ds.timed.trajectories.empty())
      throw DataError("dataset '" + path + "' holds no trajectories");
    return ds;
  }
  if (j.contains("symbol_trajectories")) {
    int k = 0;
    for (const auto& entry : j["symbol_trajectories"]) {
      if (!entry.contains("symbols") || !entry["symbols"].is_array())
        throw DataError("symbol trajectory entry lacks a 'symbols' array");
      SymbolTrajectory st;
      for (const auto& s : entry["symbols"]) st.symbols.push_back(s.get<std::string>());
      if (st.symbols.empty()) throw DataError("empty symbol trajectory");
      ds.symbolic.ids.push_back(entry.value("id", "s" + std::to_string(k)));
      ds.symbolic.trajectories.push_back(std::move(st));
      ++k;
    }
    if (ds.symbolic.trajectories.empty())
      throw DataError("dataset '" + path + "' holds no trajectories");
    return ds;
  }
  throw DataError("dataset '" + path +
                  "' has neither 'trajectories' nor 'symbol_trajectories'");
}

LocationMetric load_metric(const std::string& path) {
  const json j = parse_json_file(path);
  if (j.contains("locations")) {
    std::vector<std::pair<std::string, Point>> locs;
    for (const auto& [name, xy] : j["locations"].items()) {
      if (!xy.is_array() || xy.size() != 2)
        throw DataError("location '" + name + "' must map to [x,y]");
      locs.emplace_back(name, Point{xy[0].get<double>(), xy[1].get<double>()});
    }
    return LocationMetric::from_coordinates(std::move(locs));
  }
  if (j.contains("matrix")) {
    const auto& m = j["matrix"];
    if (!m.contains("symbols") || !m.contains("d"))
      throw DataError("metric matrix needs 'symbols' and 'd'");
    std::vector<std::string> symbols =
        m["symbols"].get<std::vector<std::string>>();
    std::vector<std::vector<double>> d =
        m["d"].get<std::vector<std::vector<double>>>();
    return LocationMetric::from_matrix(std::move(symbols), std::move(d));
  }
  throw DataError("metric file '" + path +
                  "' has neither 'locations' nor 'matrix'");
}

PlanarDecomposition load_decomposition(const std::string& path) {
  const json j = parse_json_file(path);
  if (j.contains("grid")) {
    const auto& g = j["grid"];
    const auto origin = g.value("origin", std::vector<double>{0.0, 0.0});
    if (!g.contains("cell") || !g.contains("nx") || !g.contains("ny"))
      throw DataError("grid decomposition needs 'cell', 'nx', 'ny'");
    const auto cell = g["cell"].get<std::vector<double>>();
    if (origin.size() != 2 || cell.size() != 2)
      throw DataError("'origin' and 'cell' must be [x,y] pairs");
    return PlanarDecomposition::grid({origin[0], origin[1]}, cell[0], cell[1],
                                     g["nx"].get<int>(), g["ny"].get<int>());
  }
  if (j.contains("polygons")) {
    std::vector<std::pair<std::string, std::vector<Point>>> regions;
    for (const auto& entry : j["polygons"]) {
      if (!entry.contains("label") || !entry.contains("vertices"))
        throw DataError("polygon region needs 'label' and 'vertices'");
      std::vector<Point> verts;
      for (const auto& v : entry["vertices"]) {
        if (!v.is_array() || v.size() != 2)
          throw DataError("polygon vertex must be [x,y]");
        verts.push_back({v[0].get<double>(), v[1].get<double>()});
      }
      regions.emplace_back(entry["label"].get<std::string>(), std::move(verts));
    }
    return PlanarDecomposition::polygons(std::move(regions));
  }
  throw DataError("decomposition file '" + path +
                  "' has neither 'grid' nor 'polygons'");
}

std::string trajectory_to_csv(const TimedTrajectory& traj) {
  std::ostringstream out;
  out.precision(17);
  out << "t,x,y\n";
  for (const TimedSample& s : traj.samples())
    out << s.t << ',' << s.p.x << ',' << s.p.y << '\n';
  return out.str();
}

std::string dataset_to_json(const TimedDataset& ds) {
  json out;
  out["schema"] = 1;
  out["trajectories"] = json::array();
  for (std::size_t i = 0; i < ds.trajectories.size(); ++i) {
    json entry;
    entry["id"] = ds.ids[i];
    entry["samples"] = json::array();
    for (const TimedSample& s : ds.trajectories[i].samples())
      entry["samples"].push_back({s.t, s.p.x, s.p.y});
    out["trajectories"].push_back(std::move(entry));
  }
  return out.dump(2);
}

std::string dataset_to_json(const SymbolDataset& ds) {
  json out;
  out["schema"] = 1;
  out["symbol_trajectories"] = json::array();
  for (std::size_t i = 0; i < ds.trajectories.size(); ++i) {
    json entry;
    entry["id"] = ds.ids[i];
    entry["symbols"] = ds.trajectories[i].symbols;
    out["symbol_trajectories"].push_back(std::move(entry));
  }
  return out.dump(2);
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write '" + path + "'");
  out << content;
}

}  // namespace trajkit
