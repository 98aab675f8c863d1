#include "trajkit/shingles.hpp"

#include <algorithm>

#include "trajkit/errors.hpp"

namespace trajkit {

ShingleSet shingle_set(const SymbolTrajectory& s, std::size_t w) {
  if (w == 0) throw UsageError("shingle width must be >= 1");
  ShingleSet out;
  out.w = w;
  if (s.symbols.size() < w) return out;
  for (std::size_t i = 0; i + w <= s.symbols.size(); ++i)
    out.shingles.insert(std::vector<std::string>(s.symbols.begin() + i,
                                                 s.symbols.begin() + i + w));
  return out;
}

double jaccard_distance(const ShingleSet& a, const ShingleSet& b) {
  if (a.shingles.empty() && b.shingles.empty())
    throw DataError("Jaccard distance is undefined for two empty shingle sets");
  std::size_t inter = 0;
  for (const auto& sh : a.shingles) inter += b.shingles.count(sh);
  const std::size_t uni = a.shingles.size() + b.shingles.size() - inter;
  return 1.0 - static_cast<double>(inter) / static_cast<double>(uni);
}

double jaccard_distance(const SymbolTrajectory& a, const SymbolTrajectory& b,
                        std::size_t w) {
  return jaccard_distance(shingle_set(a, w), shingle_set(b, w));
}

}  // namespace trajkit
