#pragma once

#include <map>
#include <string>
#include <vector>

#include "trajkit/geometry.hpp"

namespace trajkit {

/// Trajectory over a finite location alphabet.
struct SymbolTrajectory {
  std::vector<std::string> symbols;

  bool operator==(const SymbolTrajectory&) const = default;
};

/// Distance on a finite set of location symbols, backed either by point
/// coordinates (Euclidean) or by an explicit symmetric matrix.
///
/// The virtual endpoint symbols used by the edit distances are not part of
/// the alphabet; their infinite distances cancel analytically inside the
/// cost formulas and never appear here.
class LocationMetric {
 public:
  LocationMetric() = default;  // empty alphabet; populate via a factory

  static LocationMetric from_coordinates(
      std::vector<std::pair<std::string, Point>> locations);
  static LocationMetric from_matrix(std::vector<std::string> symbols,
                                    std::vector<std::vector<double>> d);

  bool has_coordinates() const { return !coords_.empty(); }
  std::size_t alphabet_size() const { return symbols_.size(); }
  const std::vector<std::string>& symbols() const { return symbols_; }

  bool contains(const std::string& symbol) const;
  int index_of(const std::string& symbol) const;  // throws DataError if absent
  const std::string& symbol(int id) const { return symbols_[id]; }
  Point coordinate(int id) const;  // coordinate mode only

  double d(int a, int b) const { return matrix_[a * symbols_.size() + b]; }
  double d(const std::string& a, const std::string& b) const {
    return d(index_of(a), index_of(b));
  }

 private:
  std::vector<std::string> symbols_;
  std::map<std::string, int> index_;
  std::vector<Point> coords_;    // empty in matrix mode
  std::vector<double> matrix_;   // row-major |U| x |U|, always populated
};

/// One violated metric axiom with a witnessing symbol tuple.
struct MetricViolation {
  enum class Axiom { Identity, Nonnegativity, Symmetry, Triangle };
  Axiom axiom;
  std::vector<std::string> witness;
  std::string detail;
};

struct MetricValidationReport {
  std::vector<MetricViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks d(x,x)=0, nonnegativity, symmetry, and the triangle inequality,
/// reporting every violation. Coordinate-backed metrics always pass.
MetricValidationReport validate_metric(const LocationMetric& m);

}  // namespace trajkit
