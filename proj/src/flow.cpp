#include "sparsecol/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace sparsecol {

MaxFlow::MaxFlow(int nodes) : head_(static_cast<std::size_t>(nodes)) {}

int MaxFlow::add_arc(int from, int to, std::int64_t capacity,
                     std::int64_t reverse_capacity) {
  const int id = static_cast<int>(arcs_.size());
  arcs_.push_back({to, capacity});
  arcs_.push_back({from, reverse_capacity});
  capacity_.push_back(capacity);
  capacity_.push_back(reverse_capacity);
  head_[from].push_back(id);
  head_[to].push_back(id + 1);
  return id;
}

bool MaxFlow::build_levels(int source, int sink) {
  level_.assign(head_.size(), -1);
  std::queue<int> q;
  level_[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int id : head_[v]) {
      const Arc& a = arcs_[id];
      if (a.residual > 0 && level_[a.to] < 0) {
        level_[a.to] = level_[v] + 1;
        q.push(a.to);
      }
    }
  }
  return level_[sink] >= 0;
}

std::int64_t MaxFlow::push(int v, int sink, std::int64_t limit) {
  if (v == sink) return limit;
  for (auto& i = next_[v]; i < head_[v].size(); ++i) {
    const int id = head_[v][i];
    Arc& a = arcs_[id];
    if (a.residual <= 0 || level_[a.to] != level_[v] + 1) continue;
    const std::int64_t pushed = push(a.to, sink, std::min(limit, a.residual));
    if (pushed > 0) {
      a.residual -= pushed;
      arcs_[id ^ 1].residual += pushed;
      return pushed;
    }
  }
  return 0;
}

std::int64_t MaxFlow::run(int source, int sink) {
  std::int64_t total = 0;
  constexpr auto kInf = std::numeric_limits<std::int64_t>::max();
  while (build_levels(source, sink)) {
    next_.assign(head_.size(), 0);
    while (const std::int64_t f = push(source, sink, kInf)) total += f;
  }
  return total;
}

std::int64_t MaxFlow::flow_on(int arc) const {
  return capacity_[arc] - arcs_[arc].residual;
}

std::vector<bool> MaxFlow::source_side(int source) const {
  std::vector<bool> seen(head_.size(), false);
  std::vector<int> stack{source};
  seen[source] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int id : head_[v]) {
      const Arc& a = arcs_[id];
      if (a.residual > 0 && !seen[a.to]) {
        seen[a.to] = true;
        stack.push_back(a.to);
      }
    }
  }
  return seen;
}

}  // namespace sparsecol
