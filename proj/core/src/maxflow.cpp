#include "trajkit/maxflow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace trajkit {

FlowNetwork::FlowNetwork(int num_nodes) : head_(num_nodes, -1) {
  if (num_nodes <= 0) throw std::invalid_argument("flow network needs nodes");
}

int FlowNetwork::add_arc(int from, int to, std::int64_t capacity) {
  if (capacity < 0) throw std::invalid_argument("negative arc capacity");
  const int id = static_cast<int>(arcs_.size());
  arcs_.push_back({to, capacity, head_[from]});
  head_[from] = id;
  arcs_.push_back({from, 0, head_[to]});
  head_[to] = id + 1;
  initial_cap_.push_back(capacity);
  return id / 2;
}

bool FlowNetwork::bfs(int source, int sink) {
  level_.assign(head_.size(), -1);
  std::queue<int> q;
  level_[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int id = head_[v]; id != -1; id = arcs_[id].next) {
      if (arcs_[id].cap > 0 && level_[arcs_[id].to] < 0) {
        level_[arcs_[id].to] = level_[v] + 1;
        q.push(arcs_[id].to);
      }
    }
  }
  return level_[sink] >= 0;
}

std::int64_t FlowNetwork::dfs(int v, int sink, std::int64_t limit) {
  if (v == sink) return limit;
  std::int64_t pushed = 0;
  while (iter_[v] != -1 && limit > 0) {
    const int id = iter_[v];
    Arc& arc = arcs_[id];
    if (arc.cap > 0 && level_[arc.to] == level_[v] + 1) {
      const std::int64_t got = dfs(arc.to, sink, std::min(limit, arc.cap));
      if (got > 0) {
        arc.cap -= got;
        arcs_[id ^ 1].cap += got;
        pushed += got;
        limit -= got;
        continue;  // the same arc may admit more flow
      }
    }
    iter_[v] = arc.next;
  }
  if (pushed == 0) level_[v] = -1;
  return pushed;
}

std::int64_t FlowNetwork::max_flow(int source, int sink) {
  std::int64_t total = 0;
  while (bfs(source, sink)) {
    iter_ = head_;
    total += dfs(source, sink, std::numeric_limits<std::int64_t>::max());
  }
  return total;
}

std::int64_t FlowNetwork::flow_on(int arc_id) const {
  return initial_cap_[arc_id] - arcs_[2 * arc_id].cap;
}

}  // namespace trajkit
