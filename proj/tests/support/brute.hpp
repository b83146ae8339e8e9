#pragma once

// Brute-force reference computations used as oracles by the tests. They
// share no code with the library beyond the Graph container.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "sparsecol/density.hpp"
#include "sparsecol/graph.hpp"

namespace brute {

using sparsecol::Colour;
using sparsecol::Graph;
using sparsecol::Rational;
using sparsecol::Vertex;

struct Measure {
  std::vector<int> mono_degree;
  int mono_edges = 0;
  int defect = 0;
  int clustering = 0;
};

inline Measure measure(const Graph& g, const std::vector<Colour>& colouring) {
  const int n = g.vertex_count();
  Measure m;
  m.mono_degree.assign(n, 0);
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [u, v] : g.edges()) {
    if (colouring[u] != colouring[v]) continue;
    ++m.mono_degree[u];
    ++m.mono_degree[v];
    ++m.mono_edges;
    parent[find(u)] = find(v);
  }
  std::vector<int> size(n, 0);
  for (int v = 0; v < n; ++v) m.clustering = std::max(m.clustering, ++size[find(v)]);
  for (int d : m.mono_degree) m.defect = std::max(m.defect, d);
  return m;
}

inline bool from_lists(const std::vector<std::vector<Colour>>& lists,
                       const std::vector<Colour>& colouring) {
  if (lists.size() != colouring.size()) return false;
  for (std::size_t v = 0; v < lists.size(); ++v)
    if (std::find(lists[v].begin(), lists[v].end(), colouring[v]) == lists[v].end())
      return false;
  return true;
}

inline void for_each_colouring(const std::vector<std::vector<Colour>>& lists,
                               const std::function<void(const std::vector<Colour>&)>& fn) {
  const std::size_t n = lists.size();
  std::vector<std::size_t> idx(n, 0);
  std::vector<Colour> col(n);
  while (true) {
    for (std::size_t v = 0; v < n; ++v) col[v] = lists[v][idx[v]];
    fn(col);
    std::size_t v = 0;
    while (v < n && ++idx[v] == lists[v].size()) idx[v++] = 0;
    if (v == n) return;
  }
}

struct Minima {
  int mono_edges = 0;
  int defect = 0;
  int clustering = 0;
};

inline Minima minima(const Graph& g, const std::vector<std::vector<Colour>>& lists) {
  Minima best{1 << 30, 1 << 30, 1 << 30};
  for_each_colouring(lists, [&](const std::vector<Colour>& col) {
    const auto m = measure(g, col);
    best.mono_edges = std::min(best.mono_edges, m.mono_edges);
    best.defect = std::min(best.defect, m.defect);
    best.clustering = std::min(best.clustering, m.clustering);
  });
  return best;
}

// No single recolouring inside the lists lowers the monochromatic edge count.
inline bool local_minimum(const Graph& g, const std::vector<std::vector<Colour>>& lists,
                          const std::vector<Colour>& col) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto count = [&](Colour c) {
      int k = 0;
      for (Vertex w : g.neighbours(v)) k += col[w] == c;
      return k;
    };
    const int here = count(col[v]);
    for (Colour c : lists[v])
      if (count(c) < here) return false;
  }
  return true;
}

inline Rational density(const Graph& g, std::uint32_t mask) {
  int size = 0;
  int edges = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) size += mask >> v & 1;
  for (const auto& [u, v] : g.edges()) edges += (mask >> u & 1) && (mask >> v & 1);
  return Rational(2 * edges, size);
}

// Maximum average degree over subsets of at least n0 vertices; 0 if none.
inline Rational mad(const Graph& g, int n0 = 1) {
  Rational best(0, 1);
  const std::uint32_t full = 1u << g.vertex_count();
  for (std::uint32_t mask = 1; mask < full; ++mask)
    if (std::popcount(mask) >= n0) best = std::max(best, density(g, mask));
  return best;
}

inline Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<sparsecol::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return sparsecol::build_graph(n, edges);
}

// Edges in shuffled order, kept while both ends have degree below max_degree.
inline Graph random_bounded_degree(int n, int max_degree, std::uint64_t seed,
                                   double keep = 1.0) {
  std::mt19937_64 rng(seed);
  std::vector<sparsecol::Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::bernoulli_distribution coin(keep);
  std::vector<int> deg(n, 0);
  std::vector<sparsecol::Edge> edges;
  for (const auto& [u, v] : pairs)
    if (deg[u] < max_degree && deg[v] < max_degree && coin(rng)) {
      ++deg[u];
      ++deg[v];
      edges.emplace_back(u, v);
    }
  return sparsecol::build_graph(n, edges);
}

inline std::vector<std::vector<Colour>> random_lists(int n, int size, int pool,
                                                     std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Colour>> out(n);
  std::vector<Colour> deck(pool);
  for (auto& list : out) {
    std::iota(deck.begin(), deck.end(), 0);
    std::shuffle(deck.begin(), deck.end(), rng);
    list.assign(deck.begin(), deck.begin() + size);
    std::sort(list.begin(), list.end());
  }
  return out;
}

}  // namespace brute
