#include "trajkit/satgadget.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "trajkit/editdist.hpp"
#include "trajkit/errors.hpp"
#include "trajkit/maxflow.hpp"
#include "trajkit/shingles.hpp"

namespace trajkit {

void CNFFormula::validate() const {
  if (num_vars < 3) throw DataError("formula needs at least 3 variables");
  std::map<int, int> var_occurrences;
  std::map<int, int> literal_clauses;
  for (const auto& clause : clauses) {
    std::set<int> vars;
    for (int lit : clause) {
      const int var = std::abs(lit);
      if (var < 1 || var > num_vars)
        throw DataError("literal " + std::to_string(lit) + " out of range");
      vars.insert(var);
      ++var_occurrences[var];
      ++literal_clauses[lit];
    }
    if (vars.size() != 3)
      throw DataError("clauses must cover three distinct variables");
  }
  for (const auto& [var, count] : var_occurrences)
    if (count > 3)
      throw DataError("variable x" + std::to_string(var) +
                      " occurs " + std::to_string(count) + " times (max 3)");
  for (const auto& [lit, count] : literal_clauses)
    if (count > 2)
      throw DataError("literal " + std::to_string(lit) + " appears in " +
                      std::to_string(count) + " clauses (max 2)");
}

CNFFormula CNFFormula::parse_dimacs(std::istream& in) {
  CNFFormula f;
  std::string line;
  int lineno = 0;
  bool header_seen = false;
  std::vector<int> pending;
  int declared_clauses = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ss(line);
    if (line[0] == 'p') {
      std::string p, cnf;
      if (!(ss >> p >> cnf >> f.num_vars >> declared_clauses) || cnf != "cnf")
        throw ParseError("malformed DIMACS header", lineno);
      header_seen = true;
      continue;
    }
    if (!header_seen) throw ParseError("clause before DIMACS header", lineno);
    int lit;
    while (ss >> lit) {
      if (lit == 0) {
        if (pending.size() != 3)
          throw ParseError("clause must have exactly 3 literals", lineno);
        f.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
      } else {
        pending.push_back(lit);
      }
    }
  }
  if (!pending.empty()) throw DataError("unterminated clause in DIMACS input");
  if (!header_seen) throw DataError("missing DIMACS header");
  if (declared_clauses != static_cast<int>(f.clauses.size()))
    throw DataError("DIMACS header declares " +
                    std::to_string(declared_clauses) + " clauses, found " +
                    std::to_string(f.clauses.size()));
  f.validate();
  return f;
}

std::string CNFFormula::to_dimacs() const {
  std::ostringstream out;
  out << "p cnf " << num_vars << ' ' << clauses.size() << '\n';
  for (const auto& clause : clauses)
    out << clause[0] << ' ' << clause[1] << ' ' << clause[2] << " 0\n";
  return out.str();
}

std::vector<std::vector<bool>> CNFFormula::satisfying_assignments(
    int var_guard) const {
  if (num_vars > var_guard)
    throw SizeGuardError("satisfiability is brute-forced over 2^n "
                         "assignments; refusing n = " +
                         std::to_string(num_vars));
  std::vector<std::vector<bool>> out;
  for (std::uint32_t mask = 0; mask < (1u << num_vars); ++mask) {
    bool ok = true;
    for (const auto& clause : clauses) {
      bool sat = false;
      for (int lit : clause) {
        const bool value = (mask >> (std::abs(lit) - 1)) & 1u;
        sat |= lit > 0 ? value : !value;
      }
      if (!sat) {
        ok = false;
        break;
      }
    }
    if (ok) {
      std::vector<bool> assignment(num_vars);
      for (int v = 0; v < num_vars; ++v) assignment[v] = (mask >> v) & 1u;
      out.push_back(std::move(assignment));
    }
  }
  return out;
}

namespace {

enum class Detour { None, Top, Bottom };

std::string rect_symbol(int cell, int side) {
  return "r" + std::to_string(2 * (cell - 1) + side + 1);
}
std::string top_symbol(int cell) { return "t" + std::to_string(cell); }
std::string bottom_symbol(int cell) { return "u" + std::to_string(cell); }

SymbolTrajectory make_strip_string(int total_cells,
                                   const std::map<int, Detour>& detours) {
  SymbolTrajectory s;
  for (int c = 1; c <= total_cells; ++c) {
    s.symbols.push_back(rect_symbol(c, 0));
    auto it = detours.find(c);
    if (it != detours.end() && it->second != Detour::None)
      s.symbols.push_back(it->second == Detour::Top ? top_symbol(c)
                                                    : bottom_symbol(c));
    s.symbols.push_back(rect_symbol(c, 1));
  }
  return s;
}

LocationMetric make_face_metric(int n) {
  // Unit spacing between consecutive rectangle centers; triangle centers
  // form unit equilateral triangles with their cell's rectangles.
  const double h = std::sqrt(3.0) / 2.0;
  std::vector<std::pair<std::string, Point>> locs;
  const int total_cells = 4 * n;
  for (int c = 1; c <= total_cells; ++c) {
    const double x = 2.0 * (c - 1);
    locs.emplace_back(rect_symbol(c, 0), Point{x, 0.0});
    locs.emplace_back(rect_symbol(c, 1), Point{x + 1.0, 0.0});
    locs.emplace_back(top_symbol(c), Point{x + 0.5, h});
    if (c > 3 * n) locs.emplace_back(bottom_symbol(c), Point{x + 0.5, -h});
  }
  return LocationMetric::from_coordinates(std::move(locs));
}

std::map<int, Detour> marker_detours(int var) {
  return {{3 * var - 2, Detour::Top},
          {3 * var - 1, Detour::Top},
          {3 * var, Detour::Top}};
}

}  // namespace

SatGadget build_sat_gadget(const CNFFormula& f, int k) {
  f.validate();
  if (k < 4)
    throw UsageError("gadget needs k >= 4 (supplement count is k-3)");
  SatGadget g;
  g.n = f.num_vars;
  g.m = static_cast<int>(f.clauses.size());
  g.k = k;
  g.below_theorem_regime = k <= 13;
  g.face_metric = make_face_metric(g.n);
  const int cells = 4 * g.n;

  for (int var = 1; var <= g.n; ++var) {
    auto base = marker_detours(var);
    auto true_detours = base;
    true_detours[3 * g.n + var] = Detour::Top;
    auto false_detours = base;
    false_detours[3 * g.n + var] = Detour::Bottom;
    g.trajectories.push_back({GadgetKind::VarTrue, var, 0, 0,
                              make_strip_string(cells, true_detours),
                              "x" + std::to_string(var) + "_true"});
    g.trajectories.push_back({GadgetKind::VarFalse, var, 0, 0,
                              make_strip_string(cells, false_detours),
                              "x" + std::to_string(var) + "_false"});
    for (int s = 0; s < k - 3; ++s)
      g.trajectories.push_back({GadgetKind::Supplement, var, 0, s,
                                make_strip_string(cells, base),
                                "x" + std::to_string(var) + "_sup" +
                                    std::to_string(s)});
  }
  for (int c = 0; c < g.m; ++c) {
    std::map<int, Detour> detours;
    for (int lit : f.clauses[c])
      detours[3 * g.n + std::abs(lit)] =
          lit > 0 ? Detour::Top : Detour::Bottom;
    for (int copy = 0; copy < 3; ++copy)
      g.trajectories.push_back({GadgetKind::ClauseCopy, 0, c, copy,
                                make_strip_string(cells, detours),
                                "c" + std::to_string(c) + "_copy" +
                                    std::to_string(copy)});
  }
  return g;
}

namespace {

/// Index of the variable trajectory for the assigned polarity.
std::size_t center_index(const SatGadget& g, int var, bool value) {
  for (std::size_t i = 0; i < g.trajectories.size(); ++i) {
    const GadgetTrajectory& t = g.trajectories[i];
    if (t.var == var &&
        t.kind == (value ? GadgetKind::VarTrue : GadgetKind::VarFalse))
      return i;
  }
  throw std::logic_error("variable trajectory missing");
}

bool clause_satisfied_by(const CNFFormula& f, int clause,
                         const std::vector<bool>& assignment, int var) {
  for (int lit : f.clauses[clause]) {
    if (std::abs(lit) != var) continue;
    return (lit > 0) == assignment[var - 1];
  }
  return false;
}

}  // namespace

Clustering sat_forward_clustering(const SatGadget& g, const CNFFormula& f,
                                  const std::vector<bool>& assignment) {
  const int n = g.n;
  const int m = g.m;
  for (int c = 0; c < m; ++c) {
    bool sat = false;
    for (int lit : f.clauses[c])
      sat |= (lit > 0) == assignment[std::abs(lit) - 1];
    if (!sat) throw DataError("assignment does not satisfy the formula");
  }

  // Every variable cluster holds k-1 trajectories before clause copies,
  // so each needs at least one copy of a clause its literal satisfies.
  // Match variables to copies with a flow (clause node capacity 3).
  const int source = 0, sink = 1;
  auto var_node = [](int var) { return 1 + var; };  // 2 .. n+1
  auto clause_node = [n](int c) { return 2 + n + c; };
  FlowNetwork net(2 + n + m);
  std::map<std::pair<int, int>, int> arc_of;  // (var, clause) -> arc id
  for (int var = 1; var <= n; ++var) net.add_arc(source, var_node(var), 1);
  for (int var = 1; var <= n; ++var)
    for (int c = 0; c < m; ++c)
      if (clause_satisfied_by(f, c, assignment, var))
        arc_of[{var, c}] = net.add_arc(var_node(var), clause_node(c), 1);
  for (int c = 0; c < m; ++c) net.add_arc(clause_node(c), sink, 3);
  if (net.max_flow(source, sink) != n)
    throw DataError("no clause-copy matching exists for this assignment");

  std::vector<int> matched_clause(n + 1, -1);
  for (const auto& [key, arc] : arc_of)
    if (net.flow_on(arc) > 0) matched_clause[key.first] = key.second;

  // Hand out concrete copy indices: matched variables first, leftovers to
  // any cluster whose center literal the clause contains.
  std::vector<std::vector<std::size_t>> copy_pool(m);
  for (std::size_t i = 0; i < g.trajectories.size(); ++i)
    if (g.trajectories[i].kind == GadgetKind::ClauseCopy)
      copy_pool[g.trajectories[i].clause].push_back(i);

  Clustering out;
  out.clusters.resize(n);
  std::vector<std::size_t> cluster_of_traj(g.trajectories.size(),
                                           static_cast<std::size_t>(-1));
  for (int var = 1; var <= n; ++var) {
    Cluster& cl = out.clusters[var - 1];
    cl.center = center_index(g, var, assignment[var - 1]);
    for (std::size_t i = 0; i < g.trajectories.size(); ++i) {
      const GadgetTrajectory& t = g.trajectories[i];
      if (t.var == var && t.kind != GadgetKind::ClauseCopy) {
        cl.members.push_back(i);
        cluster_of_traj[i] = var - 1;
      }
    }
    const int c = matched_clause[var];
    const std::size_t copy = copy_pool[c].back();
    copy_pool[c].pop_back();
    cl.members.push_back(copy);
    cluster_of_traj[copy] = var - 1;
  }
  for (int c = 0; c < m; ++c) {
    for (std::size_t copy : copy_pool[c]) {
      int home = -1;
      for (int var = 1; var <= n && home < 0; ++var)
        if (clause_satisfied_by(f, c, assignment, var)) home = var;
      out.clusters[home - 1].members.push_back(copy);
      cluster_of_traj[copy] = home - 1;
    }
  }

  int radius = 0;
  for (const Cluster& cl : out.clusters)
    for (std::size_t v : cl.members)
      radius = std::max(radius,
                        plain_edit_distance(g.trajectories[cl.center].string,
                                            g.trajectories[v].string));
  out.radius = radius;
  return out;
}

namespace {

SatDistanceChecks check_distances(const SatGadget& g, const CNFFormula& f) {
  SatDistanceChecks checks;
  const int n = g.n;
  const int m = g.m;
  const int k = g.k;
  const std::size_t expected =
      static_cast<std::size_t>(2 * n + (k - 3) * n + 3 * m);
  checks.trajectory_count_ok = g.trajectories.size() == expected;

  auto dist_of = [&](std::size_t i, std::size_t j) {
    return plain_edit_distance(g.trajectories[i].string,
                               g.trajectories[j].string);
  };
  std::vector<std::size_t> var_true(n + 1), var_false(n + 1);
  std::vector<std::vector<std::size_t>> supplements(n + 1);
  std::vector<std::vector<std::size_t>> copies(m);
  for (std::size_t i = 0; i < g.trajectories.size(); ++i) {
    const GadgetTrajectory& t = g.trajectories[i];
    switch (t.kind) {
      case GadgetKind::VarTrue: var_true[t.var] = i; break;
      case GadgetKind::VarFalse: var_false[t.var] = i; break;
      case GadgetKind::Supplement: supplements[t.var].push_back(i); break;
      case GadgetKind::ClauseCopy: copies[t.clause].push_back(i); break;
    }
  }

  checks.supplement_variable_distance_1 = true;
  checks.true_false_distance_2 = true;
  for (int var = 1; var <= n; ++var) {
    checks.true_false_distance_2 &=
        dist_of(var_true[var], var_false[var]) == 2;
    for (std::size_t s : supplements[var]) {
      checks.supplement_variable_distance_1 &= dist_of(s, var_true[var]) == 1;
      checks.supplement_variable_distance_1 &= dist_of(s, var_false[var]) == 1;
    }
  }

  checks.matching_clause_distance_5 = true;
  checks.mismatching_clause_distance_7 = true;
  for (int c = 0; c < m; ++c) {
    std::set<int> clause_vars;
    for (int lit : f.clauses[c]) clause_vars.insert(std::abs(lit));
    for (std::size_t copy : copies[c]) {
      for (int lit : f.clauses[c]) {
        const int var = std::abs(lit);
        const std::size_t match = lit > 0 ? var_true[var] : var_false[var];
        const std::size_t other = lit > 0 ? var_false[var] : var_true[var];
        checks.matching_clause_distance_5 &= dist_of(copy, match) == 5;
        checks.mismatching_clause_distance_7 &= dist_of(copy, other) == 7;
      }
      for (int var = 1; var <= n; ++var) {
        if (clause_vars.count(var)) continue;
        checks.mismatching_clause_distance_7 &=
            dist_of(copy, var_true[var]) == 7;
        checks.mismatching_clause_distance_7 &=
            dist_of(copy, var_false[var]) == 7;
      }
    }
  }

  checks.neighbor_bounds_ok = true;
  for (std::size_t i = 0; i < g.trajectories.size(); ++i) {
    std::size_t within = 0;
    for (std::size_t j = 0; j < g.trajectories.size(); ++j)
      if (j != i && dist_of(i, j) <= 5) ++within;
    switch (g.trajectories[i].kind) {
      case GadgetKind::VarTrue:
      case GadgetKind::VarFalse:
        checks.neighbor_bounds_ok &= within <= static_cast<std::size_t>(k + 6);
        break;
      case GadgetKind::ClauseCopy:
        checks.neighbor_bounds_ok &= within <= 12;
        break;
      case GadgetKind::Supplement:
        checks.neighbor_bounds_ok &= within == static_cast<std::size_t>(k - 2);
        break;
    }
  }

  // Per-cell costs, on a marker cell and on an assignment cell, under the
  // plain and the metric-based distance alike.
  const int marker_cell = 1;
  const int updown_cell = 3 * n + 1;
  SymbolTrajectory straight{{rect_symbol(marker_cell, 0),
                             rect_symbol(marker_cell, 1)}};
  SymbolTrajectory detoured{{rect_symbol(marker_cell, 0),
                             top_symbol(marker_cell),
                             rect_symbol(marker_cell, 1)}};
  SymbolTrajectory top_var{{rect_symbol(updown_cell, 0),
                            top_symbol(updown_cell),
                            rect_symbol(updown_cell, 1)}};
  SymbolTrajectory bottom_var{{rect_symbol(updown_cell, 0),
                               bottom_symbol(updown_cell),
                               rect_symbol(updown_cell, 1)}};
  const double tol = 1e-9;
  checks.per_cell_costs_ok =
      plain_edit_distance(straight, detoured) == 1 &&
      plain_edit_distance(top_var, bottom_var) == 2 &&
      std::abs(metric_edit_distance(straight, detoured, g.face_metric) - 1.0) <
          tol &&
      std::abs(metric_edit_distance(top_var, bottom_var, g.face_metric) - 2.0) <
          tol;
  return checks;
}

}  // namespace

SatGadgetReport verify_sat_gadget(const CNFFormula& f, int k, int var_guard) {
  const SatGadget g = build_sat_gadget(f, k);
  SatGadgetReport report;
  report.distances = check_distances(g, f);
  report.jaccard_formula = 15.0 / (8.0 * g.n + 10.0);

  const auto assignments = f.satisfying_assignments(var_guard);
  report.satisfiable = !assignments.empty();
  report.forward_constructions_ok = true;
  for (const auto& assignment : assignments) {
    SatAssignmentCheck check;
    check.assignment = assignment;
    try {
      const Clustering clustering = sat_forward_clustering(g, f, assignment);
      check.edit_radius = static_cast<int>(clustering.radius);
      bool sizes_ok = true;
      std::vector<bool> seen(g.trajectories.size(), false);
      for (const Cluster& cl : clustering.clusters) {
        sizes_ok &= cl.members.size() >= static_cast<std::size_t>(k);
        for (std::size_t v : cl.members) {
          sizes_ok &= !seen[v];
          seen[v] = true;
        }
      }
      for (bool s : seen) sizes_ok &= s;
      check.construction_ok = sizes_ok;

      double jr = 0.0;
      for (const Cluster& cl : clustering.clusters)
        for (std::size_t v : cl.members)
          jr = std::max(jr,
                        jaccard_distance(g.trajectories[cl.center].string,
                                         g.trajectories[v].string, 2));
      check.jaccard_radius = jr;
    } catch (const DataError&) {
      check.construction_ok = false;
    }
    report.forward_constructions_ok &=
        check.construction_ok && check.edit_radius == 5;
    report.assignments.push_back(std::move(check));
  }
  return report;
}

CNFFormula random_restricted_formula(int num_vars, int num_clauses,
                                     std::uint64_t seed) {
  if (num_vars < 3) throw UsageError("need at least 3 variables");
  if (3 * num_clauses < num_vars)
    throw UsageError("need 3m >= n so every variable cluster can draw a "
                     "clause copy");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 200000; ++attempt) {
    CNFFormula f;
    f.num_vars = num_vars;
    std::vector<int> var_occurrences(num_vars + 1, 0);
    std::map<int, int> literal_count;
    bool ok = true;
    for (int c = 0; c < num_clauses && ok; ++c) {
      std::vector<int> vars(num_vars);
      std::iota(vars.begin(), vars.end(), 1);
      std::shuffle(vars.begin(), vars.end(), rng);
      std::array<int, 3> clause{};
      int filled = 0;
      for (int var : vars) {
        if (filled == 3) break;
        if (var_occurrences[var] >= 3) continue;
        const int lit = std::bernoulli_distribution(0.5)(rng) ? var : -var;
        if (literal_count[lit] >= 2) continue;
        clause[filled++] = lit;
        ++var_occurrences[var];
        ++literal_count[lit];
      }
      if (filled < 3) {
        ok = false;
        break;
      }
      f.clauses.push_back(clause);
    }
    if (!ok) continue;
    bool all_used = true;
    for (int var = 1; var <= num_vars; ++var)
      all_used &= var_occurrences[var] > 0;
    if (!all_used) continue;
    try {
      f.validate();
    } catch (const DataError&) {
      continue;
    }
    // keep only formulas whose every satisfying assignment supports the
    // forward construction
    const auto assignments = f.satisfying_assignments();
    if (assignments.empty()) continue;
    const SatGadget g = build_sat_gadget(f, 4);
    bool constructible = true;
    for (const auto& assignment : assignments) {
      try {
        sat_forward_clustering(g, f, assignment);
      } catch (const DataError&) {
        constructible = false;
        break;
      }
    }
    if (constructible) return f;
  }
  throw DataError("could not sample a constructible formula for these "
                  "parameters");
}

}  // namespace trajkit
