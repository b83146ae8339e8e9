#pragma once

#include <cstdint>
#include <vector>

namespace sparsecol {

/// Dinic's algorithm over int64 capacities. Used for the densest-subgraph
/// test and for capacitated vertex-to-colour assignments.
class MaxFlow {
 public:
  explicit MaxFlow(int nodes);

  /// Returns the index of the forward arc.
  int add_arc(int from, int to, std::int64_t capacity,
              std::int64_t reverse_capacity = 0);

  std::int64_t run(int source, int sink);

  /// Flow currently on the forward arc returned by add_arc.
  std::int64_t flow_on(int arc) const;

  /// Nodes reachable from source in the residual network after run(). This
  /// is the source side of the inclusion-minimal minimum cut.
  std::vector<bool> source_side(int source) const;

  int node_count() const noexcept { return static_cast<int>(head_.size()); }

 private:
  struct Arc {
    int to;
    std::int64_t residual;
  };

  bool build_levels(int source, int sink);
  std::int64_t push(int v, int sink, std::int64_t limit);

  std::vector<Arc> arcs_;
  std::vector<std::int64_t> capacity_;
  std::vector<std::vector<int>> head_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

}  // namespace sparsecol
