// trajkit: trajectory similarity measures, k-gather clustering, and
// hardness-gadget generators behind one command-line surface.
//
// Exit codes: 0 success, 2 usage error, 3 data/validation error,
// 4 size-guard refusal.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "trajkit/bench.hpp"
#include "trajkit/errors.hpp"
#include "trajkit/io.hpp"
#include "trajkit/measures.hpp"
#include "trajkit/ovgadget.hpp"
#include "trajkit/satgadget.hpp"

namespace {

using nlohmann::json;
using namespace trajkit;

struct DistOptions {
  std::vector<std::string> files;
  std::string measure = "discrete-frechet";
  double sigma = 0.1;
  std::string speed = "constant";
  std::string mode = "bisect";
  double tol = 0.0;
  std::size_t shingle_w = 2;
  std::string metric_file;
  std::string decomposition_file;
  bool all_pairs = false;
  unsigned jobs = 1;
  std::string output;
  std::string format = "json";
  std::size_t edit_cap = 12;
};

MeasureConfig make_config(const DistOptions& opt) {
  MeasureConfig config;
  config.measure = parse_measure(opt.measure);
  config.sigma = opt.sigma;
  if (opt.speed == "constant")
    config.speed = SpeedModel::ConstantSpeed;
  else if (opt.speed == "varying")
    config.speed = SpeedModel::VaryingSpeed;
  else
    throw UsageError("--speed must be 'constant' or 'varying'");
  if (opt.mode == "bisect")
    config.mode = SearchMode::Bisect;
  else if (opt.mode == "exact")
    config.mode = SearchMode::ExactCritical;
  else
    throw UsageError("--mode must be 'exact' or 'bisect'");
  if (opt.tol != 0.0) config.tol = opt.tol;
  config.shingle_w = opt.shingle_w;
  config.edit_cap = opt.edit_cap;
  if (!opt.metric_file.empty()) config.metric = load_metric(opt.metric_file);
  return config;
}

TimedTrajectory load_single_timed(const std::string& path) {
  const bool csv = std::filesystem::path(path).extension() == ".csv";
  return load_timed_trajectory(
      path, csv ? TrajectoryFormat::Csv : TrajectoryFormat::Json);
}

/// Loads one trajectory file for the two-file mode, converting timed
/// inputs through the decomposition when the measure is symbolic.
Dataset load_pair(const DistOptions& opt, const MeasureConfig& config) {
  Dataset ds;
  const bool want_timed = measure_is_timed(config.measure);
  for (const std::string& path : opt.files) {
    const bool is_json =
        std::filesystem::path(path).extension() != ".csv";
    if (is_json) {
      std::ifstream probe(path);
      json j;
      probe >> j;
      if (j.contains("symbol_trajectories")) {
        Dataset one = load_dataset(path);
        if (one.symbolic.size() != 1)
          throw DataError("expected exactly one trajectory in '" + path + "'");
        if (want_timed)
          throw ConfigError("measure '" + opt.measure +
                            "' needs timed trajectories");
        ds.symbolic.ids.push_back(one.symbolic.ids[0]);
        ds.symbolic.trajectories.push_back(one.symbolic.trajectories[0]);
        continue;
      }
    }
    TimedTrajectory traj = load_single_timed(path);
    if (want_timed) {
      ds.timed.ids.push_back(path);
      ds.timed.trajectories.push_back(std::move(traj));
    } else {
      if (opt.decomposition_file.empty())
        throw ConfigError("measure '" + opt.measure +
                          "' needs symbol trajectories; pass a symbol "
                          "dataset or --decomposition to map timed input");
      const PlanarDecomposition dec =
          load_decomposition(opt.decomposition_file);
      ds.symbolic.ids.push_back(path);
      ds.symbolic.trajectories.push_back(map_to_string(traj, dec));
    }
  }
  return ds;
}

void emit(const std::string& output, const std::string& content) {
  if (output.empty())
    std::cout << content << '\n';
  else
    write_text_file(output, content);
}

int cmd_dist(const DistOptions& opt) {
  const MeasureConfig config = make_config(opt);
  if (opt.all_pairs) {
    if (opt.files.size() != 1)
      throw UsageError("--all-pairs expects exactly one dataset file");
    Dataset ds = load_dataset(opt.files[0]);
    if (!measure_is_timed(config.measure) && ds.is_timed()) {
      if (opt.decomposition_file.empty())
        throw ConfigError("measure '" + opt.measure +
                          "' needs symbol trajectories; pass "
                          "--decomposition to map timed input");
      const PlanarDecomposition dec =
          load_decomposition(opt.decomposition_file);
      Dataset mapped;
      mapped.symbolic.ids = ds.timed.ids;
      for (const TimedTrajectory& t : ds.timed.trajectories)
        mapped.symbolic.trajectories.push_back(map_to_string(t, dec));
      ds = std::move(mapped);
    }
    const DistanceMatrix dm = pairwise_distances(ds, config, opt.jobs);
    const auto& ids = ds.is_timed() ? ds.timed.ids : ds.symbolic.ids;
    if (opt.format == "csv") {
      std::ostringstream out;
      out.precision(17);
      for (std::size_t i = 0; i < dm.size(); ++i) {
        for (std::size_t j = 0; j < dm.size(); ++j)
          out << dm(i, j) << (j + 1 < dm.size() ? "," : "");
        out << '\n';
      }
      emit(opt.output, out.str());
    } else {
      json out;
      out["schema"] = 1;
      out["measure"] = opt.measure;
      out["ids"] = ids;
      json rows = json::array();
      for (std::size_t i = 0; i < dm.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < dm.size(); ++j) row.push_back(dm(i, j));
        rows.push_back(std::move(row));
      }
      out["matrix"] = std::move(rows);
      emit(opt.output, out.dump(2));
    }
    return 0;
  }

  if (opt.files.size() != 2)
    throw UsageError("dist expects two trajectory files (or --all-pairs)");
  const Dataset ds = load_pair(opt, config);
  const double value = measure_distance(ds, 0, 1, config);
  std::ostringstream out;
  out.precision(17);
  out << value;
  emit(opt.output, out.str());
  return 0;
}

struct ClusterOptions {
  std::string dataset;
  std::size_t k = 2;
  bool exact = false;
  DistOptions dist;
};

int cmd_cluster(const ClusterOptions& opt) {
  const MeasureConfig config = make_config(opt.dist);
  Dataset ds = load_dataset(opt.dataset);
  if (!measure_is_timed(config.measure) && ds.is_timed() &&
      !opt.dist.decomposition_file.empty()) {
    const PlanarDecomposition dec =
        load_decomposition(opt.dist.decomposition_file);
    Dataset mapped;
    mapped.symbolic.ids = ds.timed.ids;
    for (const TimedTrajectory& t : ds.timed.trajectories)
      mapped.symbolic.trajectories.push_back(map_to_string(t, dec));
    ds = std::move(mapped);
  }
  if (ds.size() < opt.k) throw UsageError("dataset has fewer than k entries");
  const DistanceMatrix dm = pairwise_distances(ds, config, opt.dist.jobs);
  const Clustering clustering =
      opt.exact ? kgather_exact(dm, opt.k) : kgather_approx(dm, opt.k);
  const auto& ids = ds.is_timed() ? ds.timed.ids : ds.symbolic.ids;

  json out;
  out["schema"] = 1;
  out["measure"] = opt.dist.measure;
  out["k"] = opt.k;
  out["exact"] = opt.exact;
  out["radius"] = clustering.radius;
  out["clusters"] = json::array();
  for (const Cluster& c : clustering.clusters) {
    json jc;
    jc["center"] = ids[c.center];
    jc["members"] = json::array();
    for (std::size_t v : c.members) jc["members"].push_back(ids[v]);
    out["clusters"].push_back(std::move(jc));
  }
  emit(opt.dist.output, out.dump(2));
  return 0;
}

struct GadgetOvOptions {
  std::size_t n = 3;
  std::size_t d = 4;
  std::uint64_t seed = 1;
  bool verify = false;
  std::string out_prefix;
};

int cmd_gadget_ov(const GadgetOvOptions& opt) {
  const OVInstance inst = OVInstance::random(opt.n, opt.d, opt.seed);
  auto [p, q] = build_ov_curves(inst);

  json out;
  out["schema"] = 1;
  out["n"] = opt.n;
  out["d"] = inst.dim();
  out["seed"] = opt.seed;
  out["p_size"] = p.size();
  out["q_size"] = q.size();
  if (opt.verify) {
    const OVGadgetReport report = verify_ov_gadget(inst);
    out["has_orthogonal_pair"] = report.has_orthogonal_pair;
    out["discrete_frechet"] = report.discrete_frechet;
    out["consistent"] = report.consistent;
  }
  if (!opt.out_prefix.empty()) {
    TimedDataset curves;
    auto as_trajectory = [](const PolyCurve& c) {
      std::vector<TimedSample> samples;
      for (std::size_t i = 0; i < c.size(); ++i)
        samples.push_back(
            {static_cast<double>(i) / static_cast<double>(c.size() - 1), c[i]});
      return TimedTrajectory::from_raw(std::move(samples));
    };
    curves.ids = {"P", "Q"};
    curves.trajectories = {as_trajectory(p), as_trajectory(q)};
    write_text_file(opt.out_prefix + "_curves.json", dataset_to_json(curves));
    out["curves_file"] = opt.out_prefix + "_curves.json";
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

struct GadgetSatOptions {
  std::string formula_file;
  int k = 14;
  bool verify = false;
  std::string out_prefix;
};

int cmd_gadget_sat(const GadgetSatOptions& opt) {
  std::ifstream in(opt.formula_file);
  if (!in) throw DataError("cannot open '" + opt.formula_file + "'");
  const CNFFormula f = CNFFormula::parse_dimacs(in);
  const SatGadget gadget = build_sat_gadget(f, opt.k);
  if (gadget.below_theorem_regime)
    std::cerr << "warning: k = " << opt.k
              << " is below the k > 13 hardness regime\n";

  json out;
  out["schema"] = 1;
  out["num_vars"] = f.num_vars;
  out["num_clauses"] = f.clauses.size();
  out["k"] = opt.k;
  out["trajectories"] = gadget.trajectories.size();
  if (opt.verify) {
    const SatGadgetReport report = verify_sat_gadget(f, opt.k);
    out["satisfiable"] = report.satisfiable;
    out["distance_checks_ok"] = report.distances.all();
    out["forward_constructions_ok"] = report.forward_constructions_ok;
    out["jaccard_formula"] = report.jaccard_formula;
    json assignments = json::array();
    for (const SatAssignmentCheck& check : report.assignments) {
      json jc;
      jc["assignment"] = check.assignment;
      jc["construction_ok"] = check.construction_ok;
      jc["edit_radius"] = check.edit_radius;
      jc["jaccard_radius"] = check.jaccard_radius;
      assignments.push_back(std::move(jc));
    }
    out["assignments"] = std::move(assignments);
  }
  if (!opt.out_prefix.empty()) {
    SymbolDataset ds;
    for (const GadgetTrajectory& t : gadget.trajectories) {
      ds.ids.push_back(t.id);
      ds.trajectories.push_back(t.string);
    }
    write_text_file(opt.out_prefix + "_strings.json", dataset_to_json(ds));
    json metric;
    metric["locations"] = json::object();
    for (const std::string& sym : gadget.face_metric.symbols()) {
      const Point p = gadget.face_metric.coordinate(
          gadget.face_metric.index_of(sym));
      metric["locations"][sym] = {p.x, p.y};
    }
    write_text_file(opt.out_prefix + "_metric.json", metric.dump(2));
    out["strings_file"] = opt.out_prefix + "_strings.json";
    out["metric_file"] = opt.out_prefix + "_metric.json";
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

struct BenchOptions {
  std::string suite = "frechet-scaling";
  std::vector<std::size_t> sizes;
  std::size_t n = 1500;
  std::uint64_t seed = 1;
  std::string output;
};

int cmd_bench(const BenchOptions& opt) {
  json out;
  out["schema"] = 1;
  out["suite"] = opt.suite;
  std::ostringstream table;
  if (opt.suite == "frechet-scaling") {
    std::vector<std::size_t> sizes =
        opt.sizes.empty() ? std::vector<std::size_t>{256, 512, 1024, 2048}
                          : opt.sizes;
    const ScalingResult r = bench_discrete_frechet_scaling(sizes, opt.seed);
    table << "n\tseconds\n";
    for (const auto& p : r.points)
      table << p.n << '\t' << p.seconds << '\n';
    table << "fitted exponent: " << r.exponent << '\n';
    out["exponent"] = r.exponent;
    json points = json::array();
    for (const auto& p : r.points)
      points.push_back({{"n", p.n}, {"seconds", p.seconds}});
    out["points"] = std::move(points);
  } else if (opt.suite == "tw-cells") {
    std::vector<double> sigmas;
    for (double s = 0.002; s <= 0.5; s *= 1.8) sigmas.push_back(s);
    const CellCorrelationResult r =
        bench_tw_cell_correlation(opt.n, sigmas, opt.seed);
    table << "sigma\tvalid_pairs\tseconds\n";
    for (const auto& p : r.points)
      table << p.sigma << '\t' << p.valid_pairs << '\t' << p.seconds << '\n';
    table << "pearson r: " << r.pearson_r << '\n';
    out["pearson_r"] = r.pearson_r;
    json points = json::array();
    for (const auto& p : r.points)
      points.push_back({{"sigma", p.sigma},
                        {"valid_pairs", p.valid_pairs},
                        {"seconds", p.seconds}});
    out["points"] = std::move(points);
  } else if (opt.suite == "edit-growth") {
    std::vector<std::size_t> sizes =
        opt.sizes.empty() ? std::vector<std::size_t>{8, 10} : opt.sizes;
    const EditGrowthResult r = bench_metric_edit_growth(sizes, opt.seed);
    table << "n\tseconds\n";
    for (const auto& p : r.points)
      table << p.n << '\t' << p.seconds << '\n';
    for (std::size_t i = 1; i < r.points.size(); ++i) {
      const double ratio = r.points[i].seconds / r.points[i - 1].seconds;
      const double nn = static_cast<double>(r.points[i].n) /
                        static_cast<double>(r.points[i - 1].n);
      // n^6 (n+m) growth of the arbitrary-order DP at n = m
      const double expected = std::pow(nn, 7.0);
      table << "observed x" << ratio << " from n=" << r.points[i - 1].n
            << " to n=" << r.points[i].n << " (n^6(n+m) predicts x"
            << expected << ")\n";
    }
    json points = json::array();
    for (const auto& p : r.points)
      points.push_back({{"n", p.n}, {"seconds", p.seconds}});
    out["points"] = std::move(points);
  } else {
    throw UsageError("unknown bench suite '" + opt.suite + "'");
  }
  std::cout << table.str();
  if (!opt.output.empty()) write_text_file(opt.output, out.dump(2));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trajectory similarity, k-gather clustering, and "
               "hardness-gadget toolkit"};
  app.require_subcommand(1);

  DistOptions dist_opt;
  CLI::App* dist = app.add_subcommand("dist", "compute trajectory distances");
  dist->add_option("files", dist_opt.files, "trajectory or dataset files");
  dist->add_option("--measure", dist_opt.measure, "distance measure");
  dist->add_option("--sigma", dist_opt.sigma, "time window (normalized)");
  dist->add_option("--speed", dist_opt.speed, "constant|varying");
  dist->add_option("--mode", dist_opt.mode, "exact|bisect");
  dist->add_option("--tol", dist_opt.tol, "bisection tolerance");
  dist->add_option("--shingle-w", dist_opt.shingle_w, "shingle width");
  dist->add_option("--metric", dist_opt.metric_file, "location metric file");
  dist->add_option("--decomposition", dist_opt.decomposition_file,
                   "planar decomposition for string mapping");
  dist->add_flag("--all-pairs", dist_opt.all_pairs, "full distance matrix");
  dist->add_option("--jobs", dist_opt.jobs, "worker threads");
  dist->add_option("--output", dist_opt.output, "output file");
  dist->add_option("--format", dist_opt.format, "json|csv (matrix output)");
  dist->add_option("--edit-cap", dist_opt.edit_cap,
                   "size cap for the full metric edit DP");

  ClusterOptions cluster_opt;
  CLI::App* cluster =
      app.add_subcommand("cluster", "k-gather clustering of a dataset");
  cluster->add_option("dataset", cluster_opt.dataset, "dataset file")
      ->required();
  cluster->add_option("--k", cluster_opt.k, "minimum cluster size")
      ->required();
  cluster->add_flag("--exact", cluster_opt.exact,
                    "exhaustive search instead of the 2-approximation");
  cluster->add_option("--measure", cluster_opt.dist.measure, "measure");
  cluster->add_option("--sigma", cluster_opt.dist.sigma, "time window");
  cluster->add_option("--speed", cluster_opt.dist.speed, "constant|varying");
  cluster->add_option("--mode", cluster_opt.dist.mode, "exact|bisect");
  cluster->add_option("--tol", cluster_opt.dist.tol, "bisection tolerance");
  cluster->add_option("--shingle-w", cluster_opt.dist.shingle_w,
                      "shingle width");
  cluster->add_option("--metric", cluster_opt.dist.metric_file, "metric file");
  cluster->add_option("--decomposition", cluster_opt.dist.decomposition_file,
                      "planar decomposition for string mapping");
  cluster->add_option("--jobs", cluster_opt.dist.jobs, "worker threads");
  cluster->add_option("--output", cluster_opt.dist.output, "output file");

  CLI::App* gadget = app.add_subcommand("gadget", "hardness constructions");
  gadget->require_subcommand(1);

  GadgetOvOptions ov_opt;
  CLI::App* ov = gadget->add_subcommand(
      "ov", "orthogonal-vectors to discrete Fréchet reduction");
  ov->add_option("--n", ov_opt.n, "vectors per side")->required();
  ov->add_option("--d", ov_opt.d, "dimension")->required();
  ov->add_option("--seed", ov_opt.seed, "random seed");
  ov->add_flag("--verify", ov_opt.verify, "brute-force consistency check");
  ov->add_option("--out", ov_opt.out_prefix, "write curves under this prefix");

  GadgetSatOptions sat_opt;
  CLI::App* sat =
      gadget->add_subcommand("sat", "3SAT to k-gather reduction");
  sat->add_option("--formula", sat_opt.formula_file, "DIMACS CNF file")
      ->required();
  sat->add_option("--k", sat_opt.k, "cluster size parameter")->required();
  sat->add_flag("--verify", sat_opt.verify, "verify proof distance claims");
  sat->add_option("--out", sat_opt.out_prefix,
                  "write strings/metric under this prefix");

  BenchOptions bench_opt;
  CLI::App* bench =
      app.add_subcommand("bench", "empirical complexity probes");
  bench->add_option("--suite", bench_opt.suite,
                    "frechet-scaling|tw-cells|edit-growth");
  bench->add_option("--sizes", bench_opt.sizes, "input sizes");
  bench->add_option("--n", bench_opt.n, "trajectory size for tw-cells");
  bench->add_option("--seed", bench_opt.seed, "random seed");
  bench->add_option("--output", bench_opt.output, "JSON output file");

  try {
    app.parse(argc, argv);
    if (dist->parsed()) return cmd_dist(dist_opt);
    if (cluster->parsed()) return cmd_cluster(cluster_opt);
    if (gadget->parsed()) {
      if (ov->parsed()) return cmd_gadget_ov(ov_opt);
      if (sat->parsed()) return cmd_gadget_sat(sat_opt);
    }
    if (bench->parsed()) return cmd_bench(bench_opt);
    throw UsageError("no subcommand given");
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const SizeGuardError& e) {
    std::cerr << "size guard: " << e.what() << '\n';
    return 4;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
