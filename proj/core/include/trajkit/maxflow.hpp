#pragma once

#include <cstdint>
#include <vector>

namespace trajkit {

/// Integer-capacity flow network solved with Dinic's blocking-flow
/// algorithm.
class FlowNetwork {
 public:
  explicit FlowNetwork(int num_nodes);

  /// Adds a directed arc and returns its id (usable with flow_on).
  int add_arc(int from, int to, std::int64_t capacity);

  std::int64_t max_flow(int source, int sink);

  /// Flow routed through an arc after max_flow ran.
  std::int64_t flow_on(int arc_id) const;

  int num_nodes() const { return static_cast<int>(head_.size()); }

 private:
  struct Arc {
    int to;
    std::int64_t cap;
    int next;
  };

  bool bfs(int source, int sink);
  std::int64_t dfs(int v, int sink, std::int64_t limit);

  std::vector<Arc> arcs_;  // arc 2k is forward, 2k+1 its residual twin
  std::vector<int> head_;
  std::vector<int> level_;
  std::vector<int> iter_;
  std::vector<std::int64_t> initial_cap_;
};

}  // namespace trajkit
