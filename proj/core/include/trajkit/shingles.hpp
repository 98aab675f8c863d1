#pragma once

#include <set>
#include <string>
#include <vector>

#include "trajkit/metric.hpp"

namespace trajkit {

/// Set of length-w contiguous symbol windows of a trajectory string.
struct ShingleSet {
  std::size_t w = 0;
  std::set<std::vector<std::string>> shingles;
};

/// All |S|-w+1 windows, deduplicated; empty when |S| < w.
/// Throws UsageError for w = 0.
ShingleSet shingle_set(const SymbolTrajectory& s, std::size_t w);

/// 1 - |A∩B| / |A∪B| over w-shingle sets. Throws DataError when both
/// shingle sets are empty (the ratio is undefined).
double jaccard_distance(const SymbolTrajectory& a, const SymbolTrajectory& b,
                        std::size_t w);

double jaccard_distance(const ShingleSet& a, const ShingleSet& b);

}  // namespace trajkit
