#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sparsecol/density.hpp"

namespace sparsecol {

using Colour = int;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr Colour kUncoloured = -1;

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable once built.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
  int edge_count() const noexcept { return edges_; }
  bool empty() const noexcept { return adj_.empty(); }

  std::span<const Vertex> neighbours(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const noexcept;
  bool adjacent(Vertex u, Vertex v) const;

  /// Every edge once as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph build_graph(int n, std::span<const Edge> edges);

  std::vector<std::vector<Vertex>> adj_;
  int edges_ = 0;
};

/// Normalises an edge sequence into a Graph: duplicates are merged, adjacency
/// is sorted. Throws Error(OutOfRange) or Error(SelfLoop).
Graph build_graph(int n, std::span<const Edge> edges);

/// G[vertices] relabelled to 0..k-1 in the order given.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
};

InducedSubgraph induced_subgraph(const Graph& g,
                                 std::span<const Vertex> vertices);

/// Number of edges of g with both ends in the marked set.
std::int64_t induced_edge_count(const Graph& g, const std::vector<bool>& in_set);

/// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

bool is_stable_set(const Graph& g, std::span<const Vertex> vertices);

/// Per-vertex sorted, duplicate-free colour lists.
class ListAssignment {
 public:
  ListAssignment() = default;
  /// Throws Error(InvalidSpec) on an empty list or a negative colour.
  explicit ListAssignment(std::vector<std::vector<Colour>> lists);

  /// Every vertex receives the same list.
  static ListAssignment uniform(int n, std::vector<Colour> colours);

  int size() const noexcept { return static_cast<int>(lists_.size()); }
  std::span<const Colour> operator[](Vertex v) const { return lists_[v]; }
  int list_size(Vertex v) const { return static_cast<int>(lists_[v].size()); }
  bool contains(Vertex v, Colour c) const;
  /// Position of c in L(v), or -1.
  int index_of(Vertex v, Colour c) const;
  int min_size() const noexcept;

  /// Lists of the given vertices, in that order (for induced subgraphs).
  ListAssignment restricted(std::span<const Vertex> vertices) const;
  /// Keeps the k smallest colours of every list.
  ListAssignment truncated(int k) const;

  const std::vector<std::vector<Colour>>& lists() const noexcept {
    return lists_;
  }

  friend bool operator==(const ListAssignment&,
                         const ListAssignment&) = default;

 private:
  std::vector<std::vector<Colour>> lists_;
};

using Colouring = std::vector<Colour>;

/// The monochromatic subgraph G[phi]: per-vertex defect and the component
/// structure of the monochromatic edges.
struct MonoView {
  std::vector<int> mono_degree;
  std::vector<int> component;       // component id of each vertex
  std::vector<int> component_size;  // indexed by component id
  std::int64_t mono_edge_count = 0;
};

MonoView mono_view(const Graph& g, const Colouring& colouring);

/// Spanning subgraph of monochromatic edges.
Graph monochromatic_subgraph(const Graph& g, const Colouring& colouring);

std::int64_t mono_edge_count(const Graph& g, const Colouring& colouring);

/// Maximum monochromatic degree; 0 on the empty graph.
int defect_of(const MonoView& view);
/// Largest monochromatic component; 0 on the empty graph.
int clustering_of(const MonoView& view);

enum class BoundKind { Defect, Clustering };

const char* to_string(BoundKind kind) noexcept;

struct Report {
  int defect = 0;
  int clustering = 0;
  int bound = 0;
  BoundKind kind = BoundKind::Defect;
  bool ok = false;
  std::optional<DensityCertificate> certificate;
};

/// True iff colouring(v) is in L(v) for every v and sizes agree.
bool is_list_colouring(const ListAssignment& lists, const Colouring& colouring);

/// Measures the colouring against bound. Throws Error(InvalidColouring) when
/// the colouring is not an L-colouring.
Report verify(const Graph& g, const ListAssignment& lists,
              const Colouring& colouring, BoundKind kind, int bound);

}  // namespace sparsecol
