#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "trajkit/kgather.hpp"
#include "trajkit/metric.hpp"

namespace trajkit {

/// 3-CNF formula in the restricted family the reduction needs: every
/// clause covers three distinct variables, every variable occurs at most
/// three times, every literal in at most two clauses.
struct CNFFormula {
  int num_vars = 0;
  std::vector<std::array<int, 3>> clauses;  // literals as +/-(1..num_vars)

  void validate() const;  // throws DataError when outside the family

  static CNFFormula parse_dimacs(std::istream& in);
  std::string to_dimacs() const;

  /// All satisfying assignments by brute force; refuses num_vars beyond
  /// the guard.
  std::vector<std::vector<bool>> satisfying_assignments(
      int var_guard = 12) const;
};

enum class GadgetKind { VarTrue, VarFalse, Supplement, ClauseCopy };

struct GadgetTrajectory {
  GadgetKind kind;
  int var = 0;     // 1-based for variable/supplement trajectories
  int clause = 0;  // 0-based clause index for copies
  int copy = 0;    // 0..2
  SymbolTrajectory string;
  std::string id;
};

/// Trajectory family over a 4n-cell strip. Every trajectory walks all
/// 8n rectangle faces in order; a detour interposes the cell's triangle
/// face between its rectangles. Variable trajectories mark cells
/// 3i-2..3i on top and encode the assignment in cell 3n+i (top = true,
/// bottom = false); each clause contributes three identical copies with
/// detours at its literals' cells.
struct SatGadget {
  int n = 0;  // variables
  int m = 0;  // clauses
  int k = 0;
  bool below_theorem_regime = false;  // k <= 13
  std::vector<GadgetTrajectory> trajectories;
  /// Face centers: consecutive rectangle centers at distance 1 and every
  /// triangle center at distance 1 from both rectangles of its cell.
  LocationMetric face_metric;
};

SatGadget build_sat_gadget(const CNFFormula& f, int k);

struct SatDistanceChecks {
  bool trajectory_count_ok = false;
  bool supplement_variable_distance_1 = false;
  bool true_false_distance_2 = false;
  bool matching_clause_distance_5 = false;
  bool mismatching_clause_distance_7 = false;
  bool neighbor_bounds_ok = false;  // var <= k+6, clause <= 12, suppl == k-2
  bool per_cell_costs_ok = false;   // detour 1 / top-bottom 2, plain + metric

  bool all() const {
    return trajectory_count_ok && supplement_variable_distance_1 &&
           true_false_distance_2 && matching_clause_distance_5 &&
           mismatching_clause_distance_7 && neighbor_bounds_ok &&
           per_cell_costs_ok;
  }
};

struct SatAssignmentCheck {
  std::vector<bool> assignment;
  bool construction_ok = false;  // matching + partition + sizes
  int edit_radius = -1;          // expected exactly 5
  double jaccard_radius = -1.0;  // 2-shingle radius of the same clustering
};

struct SatGadgetReport {
  bool satisfiable = false;
  SatDistanceChecks distances;
  std::vector<SatAssignmentCheck> assignments;
  double jaccard_formula = 0.0;  // 15 / (8n + 10)
  bool forward_constructions_ok = false;
};

/// Builds the gadget, checks the distance structure, and runs the
/// cluster construction for every satisfying assignment.
SatGadgetReport verify_sat_gadget(const CNFFormula& f, int k,
                                  int var_guard = 12);

/// Runs the proof-side construction for one satisfying assignment:
/// one cluster per variable centered on the assigned polarity, filled
/// with the opposite trajectory, the supplements, and clause copies
/// matched by flow. Returns the clustering over trajectory indices.
/// Throws DataError when the assignment does not satisfy the formula or
/// admits no copy matching.
Clustering sat_forward_clustering(const SatGadget& gadget,
                                  const CNFFormula& f,
                                  const std::vector<bool>& assignment);

/// Random formula from the restricted family, additionally filtered so
/// every satisfying assignment admits the forward construction (each
/// variable can draw a matching clause copy).
CNFFormula random_restricted_formula(int num_vars, int num_clauses,
                                     std::uint64_t seed);

}  // namespace trajkit
