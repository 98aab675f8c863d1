#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "trajkit/trajectory.hpp"

namespace trajkit {

/// Orthogonal-vectors instance: two collections of N binary vectors of
/// even dimension D (odd inputs are padded with a zero coordinate).
struct OVInstance {
  std::vector<std::vector<int>> u;
  std::vector<std::vector<int>> v;

  static OVInstance create(std::vector<std::vector<int>> u,
                           std::vector<std::vector<int>> v);
  static OVInstance random(std::size_t n_vectors, std::size_t dim,
                           std::uint64_t seed);

  std::size_t n_vectors() const { return u.size(); }
  std::size_t dim() const { return u.empty() ? 0 : u[0].size(); }

  /// O(N^2 D) scan for a cross pair with zero inner product.
  bool has_orthogonal_pair() const;
};

/// The fixed reduction points. The o/e variants are mirror images across
/// the x-axis; s, w1, w2, x1, x2 are synchronization and guard points.
struct GadgetPoints {
  static constexpr Point b0o{0.0, 1.61};
  static constexpr Point b0e{0.0, -1.61};
  static constexpr Point b1o{-1.305, 0.66};
  static constexpr Point b1e{-1.305, -0.66};
  static constexpr Point a0o{-0.305, 0.66};
  static constexpr Point a0e{-0.305, -0.66};
  static constexpr Point a1o{0.305, 0.66};
  static constexpr Point a1e{0.305, -0.66};
  static constexpr Point s{0.555, 0.0};
  static constexpr Point w1{-0.445, 0.0};
  static constexpr Point w2{0.445, 0.0};
  static constexpr Point x1{-0.88, 0.90};
  static constexpr Point x2{1.445, 0.0};

  /// Vector-gadget point for bit value at 1-based position k: the a/b
  /// family with the o side for odd k and the e side for even k.
  static Point a_point(int bit, std::size_t k);
  static Point b_point(int bit, std::size_t k);
};

/// Curves P and Q with |P| = 2D(N-1) + N(D+1) + 3 and |Q| = N(D+2) such
/// that an orthogonal pair exists iff the discrete Fréchet distance of
/// (P,Q) is at most 1, and otherwise it is at least 1.61.
std::pair<PolyCurve, PolyCurve> build_ov_curves(const OVInstance& inst);

struct OVGadgetReport {
  bool has_orthogonal_pair = false;
  double discrete_frechet = 0.0;
  std::size_t p_size = 0;
  std::size_t q_size = 0;
  /// orthogonal => dF <= 1 + 1e-9; none => dF >= 1.61 - 1e-9
  bool consistent = false;
};

/// Brute-forces the OV instance and checks it against the discrete
/// Fréchet distance of the emitted curves. Refuses instances with
/// |P| * |Q| beyond `pair_guard`.
OVGadgetReport verify_ov_gadget(const OVInstance& inst,
                                std::size_t pair_guard = 10'000'000);

struct ParallelCouplingReport {
  bool orthogonal = false;
  double parallel_width = 0.0;
  double min_nonparallel_width = 0.0;
  std::size_t couplings_checked = 0;
  bool nonparallel_all_above_161 = false;
  bool parallel_matches_orthogonality = false;
};

/// Enumerates every coupling of the two vector gadgets (exponential in D;
/// guarded) and checks: non-parallel couplings exceed width 1.61, and the
/// parallel coupling has width <= 1 exactly when u is orthogonal to v.
ParallelCouplingReport check_parallel_coupling_lemma(
    const std::vector<int>& u, const std::vector<int>& v,
    std::size_t dim_guard = 8);

}  // namespace trajkit
