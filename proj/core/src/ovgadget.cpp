#include "trajkit/ovgadget.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include "trajkit/errors.hpp"
#include "trajkit/frechet.hpp"

namespace trajkit {

OVInstance OVInstance::create(std::vector<std::vector<int>> u,
                              std::vector<std::vector<int>> v) {
  if (u.empty() || u.size() != v.size())
    throw DataError("OV instance needs two equally sized vector collections");
  const std::size_t d = u[0].size();
  if (d == 0) throw DataError("OV vectors must be nonempty");
  auto check = [&](const std::vector<std::vector<int>>& side) {
    for (const auto& vec : side) {
      if (vec.size() != d) throw DataError("OV vectors have mixed dimensions");
      for (int bit : vec)
        if (bit != 0 && bit != 1) throw DataError("OV entries must be 0 or 1");
    }
  };
  check(u);
  check(v);
  OVInstance inst{std::move(u), std::move(v)};
  if (d % 2 == 1) {  // pad a zero coordinate to make the dimension even
    for (auto& vec : inst.u) vec.push_back(0);
    for (auto& vec : inst.v) vec.push_back(0);
  }
  return inst;
}

OVInstance OVInstance::random(std::size_t n_vectors, std::size_t dim,
                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution bit(0.5);
  auto gen = [&] {
    std::vector<std::vector<int>> side(n_vectors, std::vector<int>(dim));
    for (auto& vec : side)
      for (int& b : vec) b = bit(rng) ? 1 : 0;
    return side;
  };
  return create(gen(), gen());
}

bool OVInstance::has_orthogonal_pair() const {
  for (const auto& a : u)
    for (const auto& b : v) {
      int inner = 0;
      for (std::size_t k = 0; k < a.size(); ++k) inner += a[k] * b[k];
      if (inner == 0) return true;
    }
  return false;
}

Point GadgetPoints::a_point(int bit, std::size_t k) {
  const bool odd = k % 2 == 1;
  if (bit == 0) return odd ? a0o : a0e;
  return odd ? a1o : a1e;
}

Point GadgetPoints::b_point(int bit, std::size_t k) {
  const bool odd = k % 2 == 1;
  if (bit == 0) return odd ? b0o : b0e;
  return odd ? b1o : b1e;
}

namespace {

void append_vector_gadget(PolyCurve& out, const std::vector<int>& vec,
                          bool a_side) {
  for (std::size_t k = 1; k <= vec.size(); ++k)
    out.push_back(a_side ? GadgetPoints::a_point(vec[k - 1], k)
                         : GadgetPoints::b_point(vec[k - 1], k));
}

void append_buffer(PolyCurve& out, std::size_t count) {
  for (std::size_t w = 1; w <= count; ++w)
    out.push_back(w % 2 == 1 ? GadgetPoints::a0o : GadgetPoints::a0e);
}

}  // namespace

std::pair<PolyCurve, PolyCurve> build_ov_curves(const OVInstance& inst) {
  const std::size_t n = inst.n_vectors();
  const std::size_t d = inst.dim();
  PolyCurve p;
  p.reserve(2 * d * (n - 1) + n * (d + 1) + 3);
  append_buffer(p, d * (n - 1));
  p.push_back(GadgetPoints::x1);
  for (const auto& vec : inst.u) {
    p.push_back(GadgetPoints::s);
    append_vector_gadget(p, vec, /*a_side=*/true);
  }
  p.push_back(GadgetPoints::s);
  p.push_back(GadgetPoints::x2);
  append_buffer(p, d * (n - 1));

  PolyCurve q;
  q.reserve(n * (d + 2));
  for (const auto& vec : inst.v) {
    q.push_back(GadgetPoints::w1);
    append_vector_gadget(q, vec, /*a_side=*/false);
    q.push_back(GadgetPoints::w2);
  }
  return {std::move(p), std::move(q)};
}

OVGadgetReport verify_ov_gadget(const OVInstance& inst,
                                std::size_t pair_guard) {
  auto [p, q] = build_ov_curves(inst);
  if (p.size() * q.size() > pair_guard)
    throw SizeGuardError("OV gadget verification needs an O(|P||Q|) DP; "
                         "refusing |P|*|Q| = " +
                         std::to_string(p.size() * q.size()));
  OVGadgetReport report;
  report.p_size = p.size();
  report.q_size = q.size();
  report.has_orthogonal_pair = inst.has_orthogonal_pair();
  report.discrete_frechet = discrete_frechet(p, q);
  report.consistent = report.has_orthogonal_pair
                          ? report.discrete_frechet <= 1.0 + 1e-9
                          : report.discrete_frechet >= 1.61 - 1e-9;
  return report;
}

ParallelCouplingReport check_parallel_coupling_lemma(
    const std::vector<int>& u, const std::vector<int>& v,
    std::size_t dim_guard) {
  if (u.size() != v.size() || u.empty())
    throw DataError("vectors must share a positive dimension");
  if (u.size() > dim_guard)
    throw SizeGuardError(
        "coupling enumeration is exponential; refusing dimension " +
        std::to_string(u.size()) + " beyond the guard of " +
        std::to_string(dim_guard));
  const std::size_t d = u.size();
  PolyCurve a, b;
  for (std::size_t k = 1; k <= d; ++k) {
    a.push_back(GadgetPoints::a_point(u[k - 1], k));
    b.push_back(GadgetPoints::b_point(v[k - 1], k));
  }

  ParallelCouplingReport report;
  int inner = 0;
  for (std::size_t k = 0; k < d; ++k) inner += u[k] * v[k];
  report.orthogonal = inner == 0;

  report.parallel_width = 0.0;
  for (std::size_t k = 0; k < d; ++k)
    report.parallel_width = std::max(report.parallel_width, dist(a[k], b[k]));

  // depth-first walk over all couplings from (0,0) to (d-1,d-1)
  double min_nonparallel = std::numeric_limits<double>::infinity();
  std::size_t total = 0;
  struct Frame {
    std::size_t i, j;
    double width;
    bool parallel;
  };
  std::vector<Frame> stack{{0, 0, dist(a[0], b[0]), true}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    if (f.i + 1 == d && f.j + 1 == d) {
      ++total;
      if (!f.parallel)
        min_nonparallel = std::min(min_nonparallel, f.width);
      continue;
    }
    auto push = [&](std::size_t ni, std::size_t nj) {
      const double w = std::max(f.width, dist(a[ni], b[nj]));
      stack.push_back({ni, nj, w, f.parallel && ni == nj});
    };
    if (f.i + 1 < d && f.j + 1 < d) push(f.i + 1, f.j + 1);
    if (f.i + 1 < d) push(f.i + 1, f.j);
    if (f.j + 1 < d) push(f.i, f.j + 1);
  }
  report.couplings_checked = total;
  report.min_nonparallel_width = min_nonparallel;
  report.nonparallel_all_above_161 =
      total == 1 || min_nonparallel > 1.61;
  report.parallel_matches_orthogonality =
      report.orthogonal ? report.parallel_width <= 1.0 + 1e-9
                        : report.parallel_width >= 1.61 - 1e-9;
  return report;
}

}  // namespace trajkit
