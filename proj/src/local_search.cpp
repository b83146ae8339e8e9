#include "sparsecol/local_search.hpp"

#include <random>

namespace sparsecol {

std::vector<int> list_colour_counts(const Graph& g, const ListAssignment& lists,
                                    const Colouring& colouring, Vertex v) {
  std::vector<int> counts(static_cast<std::size_t>(lists.list_size(v)), 0);
  for (Vertex w : g.neighbours(v)) {
    const int i = lists.index_of(v, colouring[w]);
    if (i >= 0) ++counts[i];
  }
  return counts;
}

int neighbours_coloured(const Graph& g, const Colouring& colouring, Vertex v,
                        Colour c) {
  int count = 0;
  for (Vertex w : g.neighbours(v))
    if (colouring[w] == c) ++count;
  return count;
}

std::optional<Colour> improving_colour(const Graph& g,
                                       const ListAssignment& lists,
                                       const Colouring& colouring, Vertex v) {
  const auto counts = list_colour_counts(g, lists, colouring, v);
  const int current = neighbours_coloured(g, colouring, v, colouring[v]);
  const auto list = lists[v];
  for (std::size_t i = 0; i < list.size(); ++i)
    if (counts[i] < current) return list[i];
  return std::nullopt;
}

bool is_local_minimum(const Graph& g, const ListAssignment& lists,
                      const Colouring& colouring) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (improving_colour(g, lists, colouring, v)) return false;
  return true;
}

bool is_local_minimum_around(const Graph& g, const ListAssignment& lists,
                             const Colouring& colouring, Vertex v) {
  if (improving_colour(g, lists, colouring, v)) return false;
  for (Vertex w : g.neighbours(v))
    if (improving_colour(g, lists, colouring, w)) return false;
  return true;
}

std::int64_t descend(const Graph& g, const ListAssignment& lists,
                     Colouring& colouring) {
  const int n = g.vertex_count();
  // A vertex whose neighbourhood has not changed since it was last checked
  // still has no improving move, so only dirty vertices are rescanned. This
  // visits vertices exactly as repeated full id-order sweeps would.
  std::vector<char> dirty(static_cast<std::size_t>(n), 1);
  std::int64_t moves = 0;
  bool again = true;
  while (again) {
    again = false;
    for (Vertex v = 0; v < n; ++v) {
      if (!dirty[v]) continue;
      dirty[v] = 0;
      const auto c = improving_colour(g, lists, colouring, v);
      if (!c) continue;
      colouring[v] = *c;
      ++moves;
      again = true;
      dirty[v] = 1;
      for (Vertex w : g.neighbours(v)) dirty[w] = 1;
    }
  }
  return moves;
}

Colouring local_min_colouring(const Graph& g, const ListAssignment& lists,
                              std::uint64_t seed) {
  if (lists.size() != g.vertex_count())
    throw Error(Errc::InvalidSpec, "list assignment does not match the graph");
  std::mt19937_64 rng(seed);
  Colouring colouring(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto list = lists[v];
    colouring[v] = list[rng() % list.size()];
  }
  descend(g, lists, colouring);
  return colouring;
}

std::vector<Colour> moveable_colours(const Graph& g,
                                     const ListAssignment& lists,
                                     const Colouring& colouring, Vertex v) {
  const auto counts = list_colour_counts(g, lists, colouring, v);
  const int current = neighbours_coloured(g, colouring, v, colouring[v]);
  std::vector<Colour> out;
  const auto list = lists[v];
  for (std::size_t i = 0; i < list.size(); ++i)
    if (counts[i] == current) out.push_back(list[i]);
  return out;
}

}  // namespace sparsecol
