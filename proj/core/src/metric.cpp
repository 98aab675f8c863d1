#include "trajkit/metric.hpp"

#include <cmath>

#include "trajkit/errors.hpp"

namespace trajkit {

LocationMetric LocationMetric::from_coordinates(
    std::vector<std::pair<std::string, Point>> locations) {
  if (locations.empty()) throw DataError("metric needs at least one location");
  LocationMetric m;
  for (auto& [name, p] : locations) {
    if (!finite(p)) throw DataError("non-finite coordinates for '" + name + "'");
    if (m.index_.count(name))
      throw DataError("duplicate location symbol '" + name + "'");
    m.index_[name] = static_cast<int>(m.symbols_.size());
    m.symbols_.push_back(name);
    m.coords_.push_back(p);
  }
  const std::size_t n = m.symbols_.size();
  m.matrix_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.matrix_[i * n + j] = dist(m.coords_[i], m.coords_[j]);
  return m;
}

LocationMetric LocationMetric::from_matrix(
    std::vector<std::string> symbols, std::vector<std::vector<double>> d) {
  if (symbols.empty()) throw DataError("metric needs at least one symbol");
  if (d.size() != symbols.size())
    throw DataError("metric matrix has " + std::to_string(d.size()) +
                    " rows for " + std::to_string(symbols.size()) + " symbols");
  LocationMetric m;
  for (const std::string& s : symbols) {
    if (m.index_.count(s)) throw DataError("duplicate location symbol '" + s + "'");
    m.index_[s] = static_cast<int>(m.symbols_.size());
    m.symbols_.push_back(s);
  }
  const std::size_t n = symbols.size();
  m.matrix_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i].size() != n)
      throw DataError("metric matrix row " + std::to_string(i) +
                      " has wrong length");
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(d[i][j]))
        throw DataError("metric matrix contains non-finite entries");
      m.matrix_[i * n + j] = d[i][j];
    }
  }
  return m;
}

bool LocationMetric::contains(const std::string& symbol) const {
  return index_.count(symbol) != 0;
}

int LocationMetric::index_of(const std::string& symbol) const {
  auto it = index_.find(symbol);
  if (it == index_.end())
    throw DataError("symbol '" + symbol + "' is not in the metric alphabet");
  return it->second;
}

Point LocationMetric::coordinate(int id) const {
  if (coords_.empty())
    throw DataError("metric has no coordinates (matrix mode)");
  return coords_[id];
}

MetricValidationReport validate_metric(const LocationMetric& m) {
  MetricValidationReport report;
  const auto n = static_cast<int>(m.alphabet_size());
  auto sym = [&](int i) { return m.symbol(i); };

  for (int i = 0; i < n; ++i) {
    if (m.d(i, i) != 0.0)
      report.violations.push_back({MetricViolation::Axiom::Identity,
                                   {sym(i)},
                                   "d(x,x) = " + std::to_string(m.d(i, i))});
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (m.d(i, j) < 0.0)
        report.violations.push_back({MetricViolation::Axiom::Nonnegativity,
                                     {sym(i), sym(j)},
                                     "d = " + std::to_string(m.d(i, j))});
      if (j > i && m.d(i, j) != m.d(j, i))
        report.violations.push_back(
            {MetricViolation::Axiom::Symmetry,
             {sym(i), sym(j)},
             std::to_string(m.d(i, j)) + " != " + std::to_string(m.d(j, i))});
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (m.d(i, j) > m.d(i, k) + m.d(k, j))
          report.violations.push_back(
              {MetricViolation::Axiom::Triangle,
               {sym(i), sym(j), sym(k)},
               "d(x,y) = " + std::to_string(m.d(i, j)) + " > " +
                   std::to_string(m.d(i, k) + m.d(k, j)) + " via z"});
      }
  return report;
}

}  // namespace trajkit
