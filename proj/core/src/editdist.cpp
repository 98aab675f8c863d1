#include "trajkit/editdist.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

#include "trajkit/errors.hpp"

namespace trajkit {

int plain_edit_distance(const SymbolTrajectory& a, const SymbolTrajectory& b) {
  const std::size_t n = a.symbols.size();
  const std::size_t m = b.symbols.size();
  std::vector<int> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) cur[j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    std::swap(prev, cur);
    cur[0] = static_cast<int>(i);
    for (std::size_t j = 1; j <= m; ++j) {
      if (a.symbols[i - 1] == b.symbols[j - 1])
        cur[j] = prev[j - 1];
      else
        cur[j] = 1 + std::min(prev[j], cur[j - 1]);
    }
  }
  return cur[m];
}

namespace {

// Costs carry a symbolic multiple of the virtual-endpoint distance M.
// Every reachable edit script cancels its M terms pairwise; a positive
// residue marks an impossible branch (for example emptying the string).
struct MCost {
  double v = 0.0;
  int m = 0;

  friend MCost operator+(MCost a, MCost b) { return {a.v + b.v, a.m + b.m}; }
  friend MCost operator-(MCost a, MCost b) { return {a.v - b.v, a.m - b.m}; }
  friend bool operator<(MCost a, MCost b) {
    return std::tie(a.m, a.v) < std::tie(b.m, b.v);
  }
  bool finite() const { return m == 0; }
};

constexpr int kDummy = -1;

MCost mmin(MCost a, MCost b) { return a < b ? a : b; }

/// Padded string over metric ids; index 0 and size-1 are the virtual
/// endpoints.
struct Padded {
  std::vector<int> ids;  // kDummy at both ends
  std::size_t interior() const { return ids.size() - 2; }
};

Padded pad(const SymbolTrajectory& s, const LocationMetric& metric) {
  if (s.symbols.empty()) throw DataError("empty symbol trajectory");
  Padded p;
  p.ids.push_back(kDummy);
  for (const std::string& sym : s.symbols)
    p.ids.push_back(metric.index_of(sym));
  p.ids.push_back(kDummy);
  return p;
}

struct CostContext {
  const LocationMetric& metric;
  const Padded& a;
  const Padded& b;
  std::vector<double> path_a;  // path_a[i] = sum of d(a_t, a_{t+1}), t < i
  std::vector<double> path_b;

  MCost d(int x, int y) const {
    if (x == kDummy || y == kDummy) return {0.0, 1};
    return {metric.d(x, y), 0};
  }
  MCost da(std::size_t i, std::size_t j) const { return d(a.ids[i], b.ids[j]); }

  MCost ins(int x, int y, int z) const { return d(x, z) + d(y, z) - d(x, y); }

  /// Cost of inserting the run a_i..a_j between symbols x and y.
  MCost seq_ins_a(int x, std::size_t i, std::size_t j, int y) const {
    if (i > j) return {0.0, 0};
    return d(x, a.ids[i]) + MCost{path_a[j] - path_a[i], 0} +
           d(a.ids[j], y) - d(x, y);
  }
  /// Cost of deleting the run b_k..b_l between symbols x and y.
  MCost seq_del_b(int x, std::size_t k, std::size_t l, int y) const {
    if (k > l) return {0.0, 0};
    return d(x, b.ids[k]) + MCost{path_b[l] - path_b[k], 0} +
           d(b.ids[l], y) - d(x, y);
  }
};

CostContext make_context(const LocationMetric& metric, const Padded& a,
                         const Padded& b) {
  CostContext ctx{metric, a, b, {}, {}};
  ctx.path_a.assign(a.ids.size(), 0.0);
  for (std::size_t i = 1; i + 2 < a.ids.size(); ++i)
    ctx.path_a[i + 1] = ctx.path_a[i] + metric.d(a.ids[i], a.ids[i + 1]);
  ctx.path_b.assign(b.ids.size(), 0.0);
  for (std::size_t j = 1; j + 2 < b.ids.size(); ++j)
    ctx.path_b[j + 1] = ctx.path_b[j] + metric.d(b.ids[j], b.ids[j + 1]);
  return ctx;
}

}  // namespace

double seq_delete_cost(const std::string& x, const std::string& y,
                       const std::vector<std::string>& seq,
                       const LocationMetric& metric) {
  double path = 0.0;
  std::string prev = x;
  for (const std::string& z : seq) {
    path += metric.d(prev, z);
    prev = z;
  }
  path += metric.d(prev, y);
  return path - metric.d(x, y);
}

double metric_edit_distance(const SymbolTrajectory& a,
                            const SymbolTrajectory& b,
                            const LocationMetric& metric,
                            std::size_t size_cap) {
  const std::size_t n = a.symbols.size();
  const std::size_t m = b.symbols.size();
  if (n > size_cap || m > size_cap)
    throw SizeGuardError(
        "metric edit distance runs the O(n^3 m^3 (n+m)) arbitrary-order DP; "
        "refusing strings of length " +
        std::to_string(n) + " and " + std::to_string(m) +
        " beyond the cap of " + std::to_string(size_cap));

  // The DP converts b into a. D(k,l,i,j) below is the cheapest way to turn
  // the window b_k .. b_l into b_k, a_i .. a_j, b_l; W(k,l) is the same
  // with no a-symbols kept.
  const Padded pa = pad(a, metric);
  const Padded pb = pad(b, metric);
  const CostContext ctx = make_context(metric, pa, pb);

  const std::size_t bp = m + 2;  // padded b length
  auto widx = [bp](std::size_t k, std::size_t l) { return k * bp + l; };
  std::vector<MCost> w(bp * bp, MCost{0.0, 0});
  for (std::size_t k = 0; k + 1 < bp; ++k)
    for (std::size_t l = k + 2; l < bp; ++l)
      w[widx(k, l)] = ctx.seq_del_b(pb.ids[k], k + 1, l - 1, pb.ids[l]);

  const std::size_t an = n;  // interior a symbols, indices 1..n
  auto eidx = [&](std::size_t k, std::size_t l, std::size_t i,
                  std::size_t j) {
    return ((k * bp + l) * (an + 1) + i) * (an + 1) + j;
  };
  const MCost inf{0.0, std::numeric_limits<int>::max() / 4};
  std::vector<MCost> e(bp * bp * (an + 1) * (an + 1), inf);

  for (std::size_t len = 1; len <= m + 1; ++len) {
    for (std::size_t k = 0; k + len < bp; ++k) {
      const std::size_t l = k + len;
      for (std::size_t span = 1; span <= an; ++span) {
        for (std::size_t i = 1; i + span - 1 <= an; ++i) {
          const std::size_t j = i + span - 1;
          MCost best = inf;
          if (len == 1) {
            best = ctx.seq_ins_a(pb.ids[k], i, j, pb.ids[l]);
          } else if (i == j) {
            best = mmin(best, e[eidx(k, l - 1, i, i)] +
                                  ctx.ins(pa.ids[i], pb.ids[l], pb.ids[l - 1]));
            best = mmin(best, e[eidx(k + 1, l, i, i)] +
                                  ctx.ins(pb.ids[k], pa.ids[i], pb.ids[k + 1]));
            best = mmin(best, w[widx(k, l)] +
                                  ctx.ins(pb.ids[k], pb.ids[l], pa.ids[i]));
          } else {
            // A last operation block is either a b-run deletion next to
            // one of the window anchors, a deleted split b between two
            // kept a-symbols (with the missing middle inserted after),
            // or an a-run insertion whose neighbors are an anchor and an
            // edge of the already-built range.

            // last block deletes a right-side b-run next to a_j
            for (std::size_t lp = k + 1; lp < l; ++lp)
              best = mmin(best, e[eidx(k, lp, i, j)] +
                                    ctx.seq_del_b(pa.ids[j], lp, l - 1,
                                                  pb.ids[l]));
            // last block deletes a left-side b-run next to a_i
            for (std::size_t kp = k + 1; kp < l; ++kp)
              best = mmin(best, e[eidx(kp, l, i, j)] +
                                    ctx.seq_del_b(pb.ids[k], k + 1, kp,
                                                  pa.ids[i]));
            // split at a deleted b_{lp}: transform both sides, delete
            // b_{lp} between a_{ip} and a_{jp}, insert the missing middle
            for (std::size_t lp = k + 1; lp < l; ++lp)
              for (std::size_t ip = i; ip < j; ++ip)
                for (std::size_t jp = ip + 1; jp <= j; ++jp) {
                  const MCost left = e[eidx(k, lp, i, ip)];
                  const MCost right = e[eidx(lp, l, jp, j)];
                  const MCost del_b =
                      ctx.ins(pa.ids[ip], pa.ids[jp], pb.ids[lp]);
                  const MCost mid =
                      ctx.seq_ins_a(pa.ids[ip], ip + 1, jp - 1, pa.ids[jp]);
                  best = mmin(best, left + right + del_b + mid);
                }
            // window interior cleared first, the whole run inserted last
            best = mmin(best, w[widx(k, l)] +
                                  ctx.seq_ins_a(pb.ids[k], i, j, pb.ids[l]));
            // a prefix run inserted last, next to the left anchor
            for (std::size_t p = i + 1; p <= j; ++p)
              best = mmin(best, e[eidx(k, l, p, j)] +
                                    ctx.seq_ins_a(pb.ids[k], i, p - 1,
                                                  pa.ids[p]));
            // a suffix run inserted last, next to the right anchor
            for (std::size_t q = i; q < j; ++q)
              best = mmin(best, e[eidx(k, l, i, q)] +
                                    ctx.seq_ins_a(pa.ids[q], q + 1, j,
                                                  pb.ids[l]));
          }
          e[eidx(k, l, i, j)] = best;
        }
      }
    }
  }

  const MCost result = e[eidx(0, m + 1, 1, n)];
  if (!result.finite())
    throw std::logic_error("metric edit DP produced an unreachable result");
  return result.v;
}

double insertion_first_edit_distance(const SymbolTrajectory& from,
                                     const SymbolTrajectory& to,
                                     const LocationMetric& metric) {
  // Converts `from` (source, deleted) into `to` (target, inserted). All
  // target symbols are inserted while every source symbol is still
  // present, so an insertion's right-hand neighbor is always the next
  // source symbol; deletions run left to right afterwards, which is what
  // the beta flag (0: next is a_{i+1}, 1: next is b_{j+1}) tracks.
  const Padded pa = pad(to, metric);
  const Padded pb = pad(from, metric);
  const CostContext ctx = make_context(metric, pa, pb);
  const std::size_t n = pa.interior();
  const std::size_t m = pb.interior();

  const MCost inf{0.0, std::numeric_limits<int>::max() / 4};
  // state[(i*(m+1)+j)*4 + alpha*2 + beta]
  auto sidx = [m](std::size_t i, std::size_t j) { return (i * (m + 1) + j) * 4; };
  std::vector<MCost> d((n + 1) * (m + 1) * 4, inf);
  for (int s = 0; s < 4; ++s) d[s] = MCost{0.0, 0};

  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= m; ++j) {
      if (i == 0 && j == 0) continue;
      MCost* cell = &d[sidx(i, j)];
      if (i > 0) {
        const MCost* p = &d[sidx(i - 1, j)];
        const MCost ins_after_a =
            p[0 * 2 + 0] + ctx.ins(pa.ids[i - 1], pb.ids[j + 1], pa.ids[i]);
        const MCost ins_after_b =
            p[1 * 2 + 0] + ctx.ins(pb.ids[j], pb.ids[j + 1], pa.ids[i]);
        const MCost best = mmin(ins_after_a, ins_after_b);
        cell[0 * 2 + 0] = best;
        cell[0 * 2 + 1] = best;
      }
      if (j > 0) {
        const MCost* p = &d[sidx(i, j - 1)];
        const MCost reach = mmin(p[0 * 2 + 1], p[1 * 2 + 1]);
        cell[1 * 2 + 0] =
            reach + ctx.ins(pa.ids[i], pa.ids[i + 1], pb.ids[j]);
        cell[1 * 2 + 1] =
            reach + ctx.ins(pa.ids[i], pb.ids[j + 1], pb.ids[j]);
      }
    }
  }

  MCost best = inf;
  for (int s = 0; s < 4; ++s) best = mmin(best, d[sidx(n, m) + s]);
  if (!best.finite())
    throw std::logic_error("insertion-first DP produced an unreachable result");
  return best.v;
}

}  // namespace trajkit
