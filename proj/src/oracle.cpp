#include "sparsecol/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace sparsecol {
namespace {

// Union-find by size without path compression so unions can be undone.
class RollbackSets {
 public:
  explicit RollbackSets(int n)
      : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
  }
  // Returns the size of the merged set.
  int unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      history_.push_back(-1);
      return size_[a];
    }
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    return size_[a];
  }
  void undo() {
    const int b = history_.back();
    history_.pop_back();
    if (b < 0) return;
    const int a = parent_[b];
    size_[a] -= size_[b];
    parent_[b] = b;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
};

class BranchAndBound {
 public:
  BranchAndBound(const Graph& g, const ListAssignment& lists, Objective objective)
      : g_(g),
        lists_(lists),
        objective_(objective),
        order_(static_cast<std::size_t>(g.vertex_count())),
        colouring_(static_cast<std::size_t>(g.vertex_count()), kUncoloured),
        mono_(static_cast<std::size_t>(g.vertex_count()), 0),
        sets_(g.vertex_count()) {
    std::iota(order_.begin(), order_.end(), 0);
    std::ranges::stable_sort(order_, [&](Vertex a, Vertex b) {
      return g.degree(a) > g.degree(b);
    });
  }

  OracleResult run() {
    OracleResult out;
    out.objective = objective_;
    if (g_.vertex_count() == 0) return out;
    best_ = std::numeric_limits<int>::max();
    search(0, objective_ == Objective::Defect ? 0 : 1);
    out.minimum = best_;
    out.witness = best_colouring_;
    out.explored = explored_;
    return out;
  }

 private:
  // `partial` is the objective of the coloured prefix; it only grows.
  void search(std::size_t depth, int partial) {
    ++explored_;
    if (partial >= best_) return;
    if (depth == order_.size()) {
      best_ = partial;
      best_colouring_ = colouring_;
      return;
    }
    const Vertex v = order_[depth];
    for (Colour c : lists_[v]) {
      colouring_[v] = c;
      int value = partial;
      std::vector<Vertex> touched;
      for (Vertex w : g_.neighbours(v)) {
        if (colouring_[w] != c || w == v) continue;
        touched.push_back(w);
        if (objective_ == Objective::Defect) {
          ++mono_[w];
          ++mono_[v];
          value = std::max({value, mono_[w], mono_[v]});
        } else {
          value = std::max(value, sets_.unite(v, w));
        }
      }
      search(depth + 1, value);
      for (auto it = touched.rbegin(); it != touched.rend(); ++it) {
        if (objective_ == Objective::Defect) {
          --mono_[*it];
          --mono_[v];
        } else {
          sets_.undo();
        }
      }
      colouring_[v] = kUncoloured;
    }
  }

  const Graph& g_;
  const ListAssignment& lists_;
  Objective objective_;
  std::vector<Vertex> order_;
  Colouring colouring_;
  std::vector<int> mono_;
  RollbackSets sets_;
  int best_ = 0;
  Colouring best_colouring_;
  std::int64_t explored_ = 0;
};

}  // namespace

const char* to_string(Objective objective) noexcept {
  return objective == Objective::Defect ? "defect" : "clustering";
}

OracleResult oracle_colour(const Graph& g, const ListAssignment& lists,
                           Objective objective, std::int64_t cap) {
  if (lists.size() != g.vertex_count())
    throw Error(Errc::InvalidSpec, "list assignment does not match the graph");
  std::int64_t product = 1;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    product *= lists.list_size(v);
    if (product > cap)
      throw Error(Errc::SizeLimitExceeded,
                  "search space exceeds " + std::to_string(cap) + " colourings");
  }
  return BranchAndBound(g, lists, objective).run();
}

}  // namespace sparsecol
