#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "clustered_internal.hpp"
#include "sparsecol/local_search.hpp"

namespace sparsecol {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

// Edges (x, y) whose y-colour lies in the x-list, deduplicated.
std::vector<std::pair<int, int>> kept_edges(const BipartiteRecolourInstance& inst) {
  const int nx = static_cast<int>(inst.x_lists.size());
  const int ny = static_cast<int>(inst.y_colour.size());
  std::vector<std::pair<int, int>> out;
  for (const auto& [x, y] : inst.edges) {
    if (x < 0 || x >= nx || y < 0 || y >= ny)
      throw Error(Errc::OutOfRange, "bipartite edge endpoint out of range");
    const auto& list = inst.x_lists[x];
    if (list[0] == inst.y_colour[y] || list[1] == inst.y_colour[y])
      out.emplace_back(x, y);
  }
  std::ranges::sort(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Kept edges grouped by colour; every edge lies in exactly one class, the
// one of its y-end.
std::map<Colour, std::vector<std::pair<int, int>>> colour_classes(
    const BipartiteRecolourInstance& inst) {
  std::map<Colour, std::vector<std::pair<int, int>>> classes;
  for (const auto& e : kept_edges(inst)) classes[inst.y_colour[e.second]].push_back(e);
  return classes;
}

}  // namespace

namespace detail {

std::optional<Colour> beta_colour(const Graph& g, const ListAssignment& lists,
                                  const Colouring& colouring, Vertex v) {
  const auto counts = list_colour_counts(g, lists, colouring, v);
  const auto list = lists[v];
  for (std::size_t i = 0; i < list.size(); ++i)
    if (list[i] != colouring[v] && counts[i] <= 2) return list[i];
  return std::nullopt;
}

BipartiteBuild bipartite_instance(
    const Graph& g, const Colouring& colouring,
    const std::vector<Vertex>& recoloured,
    const std::vector<std::array<Colour, 2>>& pairs) {
  const int n = g.vertex_count();
  const auto in_x = membership(n, recoloured);
  DisjointSets sets(n);
  for (Vertex v = 0; v < n; ++v) {
    if (in_x[v]) continue;
    for (Vertex w : g.neighbours(v))
      if (w > v && !in_x[w] && colouring[w] == colouring[v]) sets.unite(v, w);
  }
  BipartiteBuild out;
  std::vector<int> y_index(static_cast<std::size_t>(n), -1);
  for (Vertex v = 0; v < n; ++v) {
    if (in_x[v]) continue;
    const int root = sets.find(v);
    if (y_index[root] < 0) {
      y_index[root] = static_cast<int>(out.y_vertex.size());
      out.y_vertex.push_back(v);
      out.inst.y_colour.push_back(colouring[v]);
    }
  }
  out.inst.x_lists = pairs;
  for (std::size_t i = 0; i < recoloured.size(); ++i) {
    const Vertex s = recoloured[i];
    for (Vertex w : g.neighbours(s)) {
      if (in_x[w]) continue;
      const Colour c = colouring[w];
      if (c == pairs[i][0] || c == pairs[i][1])
        out.inst.edges.emplace_back(static_cast<int>(i), y_index[sets.find(w)]);
    }
  }
  std::ranges::sort(out.inst.edges);
  out.inst.edges.erase(std::unique(out.inst.edges.begin(), out.inst.edges.end()),
                       out.inst.edges.end());
  return out;
}

std::optional<Colour> overloaded_colour(const BipartiteRecolourInstance& inst) {
  const int nx = static_cast<int>(inst.x_lists.size());
  for (const auto& [c, edges] : colour_classes(inst)) {
    std::map<int, int> degree;
    for (const auto& [x, y] : edges) {
      if (++degree[x] > 2 || ++degree[nx + y] > 2) return c;
    }
  }
  return std::nullopt;
}

std::vector<bool> membership(int n, const std::vector<Vertex>& vertices) {
  std::vector<bool> in(static_cast<std::size_t>(n), false);
  for (Vertex v : vertices) {
    if (v < 0 || v >= n)
      throw Error(Errc::OutOfRange, "vertex " + std::to_string(v) + " out of range");
    in[v] = true;
  }
  return in;
}

void require_lists_match(const Graph& g, const ListAssignment& lists) {
  if (lists.size() != g.vertex_count())
    throw Error(Errc::InvalidSpec, "list assignment does not match the graph");
}

std::vector<bool> stable_membership(const Graph& g,
                                    const std::vector<Vertex>& stable) {
  auto in = membership(g.vertex_count(), stable);
  for (Vertex v : stable)
    for (Vertex w : g.neighbours(v))
      if (in[w])
        throw PreconditionViolated(v, "vertices " + std::to_string(v) + " and " +
                                          std::to_string(w) +
                                          " of the stable set are adjacent");
  return in;
}

}  // namespace detail

Defect2Base defect2_base(const Graph& g, const ListAssignment& lists,
                         const std::vector<Vertex>& stable, std::uint64_t seed) {
  detail::require_lists_match(g, lists);
  const auto in_i = detail::stable_membership(g, stable);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const int slack = in_i[v] ? 1 : 2;
    if (g.degree(v) + slack > 3 * lists.list_size(v))
      throw PreconditionViolated(v, "vertex " + std::to_string(v) +
                                        " has too few colours for defect 2");
  }
  Defect2Base out;
  out.colouring = local_min_colouring(g, lists, seed);
  const auto view = mono_view(g, out.colouring);
  if (defect_of(view) > 2) internal_error("local minimum has defect above 2");
  out.beta.assign(static_cast<std::size_t>(g.vertex_count()), std::nullopt);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (in_i[v] || view.mono_degree[v] != 2) continue;
    out.beta[v] = detail::beta_colour(g, lists, out.colouring, v);
    if (!out.beta[v]) internal_error("defect-2 vertex without a spare colour");
  }
  return out;
}

std::vector<Vertex> orient_paths_and_cycles(const Graph& h) {
  const int n = h.vertex_count();
  std::vector<Vertex> out(static_cast<std::size_t>(n), -1);
  for (Vertex v = 0; v < n; ++v)
    if (h.degree(v) > 2)
      throw PreconditionViolated(v, "orientation needs maximum degree 2");
  for (const auto& comp : connected_components(h)) {
    if (comp.size() < 2) continue;
    const bool cycle =
        std::ranges::all_of(comp, [&](Vertex v) { return h.degree(v) == 2; });
    Vertex start = comp.front();
    Vertex next;
    if (cycle) {
      const auto nb = h.neighbours(start);
      next = std::min(nb[0], nb[1]);
    } else {
      for (Vertex v : comp)
        if (h.degree(v) == 1) {
          start = v;
          break;
        }
      next = h.neighbours(start)[0];
    }
    Vertex prev = start;
    Vertex cur = next;
    out[start] = next;
    while (cur != start) {
      Vertex step = -1;
      for (Vertex w : h.neighbours(cur))
        if (w != prev) step = w;
      if (step == -1) break;
      out[cur] = step;
      prev = cur;
      cur = step;
    }
  }
  return out;
}

std::vector<Colour> recolour_bipartite(const BipartiteRecolourInstance& inst) {
  const int nx = static_cast<int>(inst.x_lists.size());
  const int ny = static_cast<int>(inst.y_colour.size());
  for (int x = 0; x < nx; ++x)
    if (inst.x_lists[x][0] == inst.x_lists[x][1])
      throw Error(Errc::InvalidSpec, "x-list needs two distinct colours");
  if (auto c = detail::overloaded_colour(inst))
    throw PreconditionViolated(
        -1, "colour " + std::to_string(*c) + " class has a vertex of degree above 2");

  // Orientation of every colour class; a vertex has one in- and one
  // out-neighbour per colour at most. Nodes: x as x, y as nx + y.
  const int none = -1;
  std::vector<std::array<int, 2>> out_x(nx, {none, none});
  std::vector<std::array<int, 2>> in_x(nx, {none, none});
  std::vector<int> out_y(ny, none);
  std::vector<int> in_y(ny, none);
  auto slot = [&](int x, Colour c) { return inst.x_lists[x][0] == c ? 0 : 1; };
  for (const auto& [c, edges] : colour_classes(inst)) {
    std::vector<int> nodes;
    for (const auto& [x, y] : edges) {
      nodes.push_back(x);
      nodes.push_back(nx + y);
    }
    std::ranges::sort(nodes);
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    auto local = [&](int node) {
      return static_cast<Vertex>(std::ranges::lower_bound(nodes, node) - nodes.begin());
    };
    std::vector<Edge> local_edges;
    for (const auto& [x, y] : edges) local_edges.emplace_back(local(x), local(nx + y));
    const Graph hc = build_graph(static_cast<int>(nodes.size()), local_edges);
    const auto succ = orient_paths_and_cycles(hc);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (succ[i] < 0) continue;
      const int from = nodes[i];
      const int to = nodes[succ[i]];
      if (from < nx) {
        out_x[from][slot(from, c)] = to;
        in_y[to - nx] = from;
      } else {
        out_y[from - nx] = to;
        in_x[to][slot(to, c)] = from;
      }
    }
  }

  std::vector<Colour> colour(static_cast<std::size_t>(nx), kUncoloured);
  auto other = [&](int x, Colour c) {
    return inst.x_lists[x][0] == c ? inst.x_lists[x][1] : inst.x_lists[x][0];
  };
  for (int start = 0; start < nx; ++start) {
    if (colour[start] != kUncoloured) continue;
    colour[start] = std::min(inst.x_lists[start][0], inst.x_lists[start][1]);
    int last = start;
    while (true) {
      const Colour c = colour[last];
      const int s = slot(last, c);
      // Forward: last -> y -> x, then backward: x -> y -> last.
      int next = none;
      if (const int y = out_x[last][s]; y != none && out_y[y - nx] != none &&
                                        colour[out_y[y - nx]] == kUncoloured)
        next = out_y[y - nx];
      else if (const int y2 = in_x[last][s]; y2 != none && in_y[y2 - nx] != none &&
                                             colour[in_y[y2 - nx]] == kUncoloured)
        next = in_y[y2 - nx];
      if (next == none) break;
      colour[next] = other(next, c);
      last = next;
    }
  }
  if (max_x_per_component(inst, colour) > 2)
    internal_error("chain recolouring left three x-vertices in one component");
  return colour;
}

int max_x_per_component(const BipartiteRecolourInstance& inst,
                        const std::vector<Colour>& x_colours) {
  const int nx = static_cast<int>(inst.x_lists.size());
  const int ny = static_cast<int>(inst.y_colour.size());
  DisjointSets sets(nx + ny);
  for (const auto& [x, y] : kept_edges(inst))
    if (x_colours[x] == inst.y_colour[y]) sets.unite(x, nx + y);
  std::vector<int> count(static_cast<std::size_t>(nx + ny), 0);
  int worst = 0;
  for (int x = 0; x < nx; ++x) worst = std::max(worst, ++count[sets.find(x)]);
  return worst;
}

ContractionMap build_contraction(const Graph& g, const Colouring& colouring,
                                 const std::vector<bool>& in_stable) {
  const int n = g.vertex_count();
  const Graph mono = monochromatic_subgraph(g, colouring);
  const auto succ = orient_paths_and_cycles(mono);
  std::vector<Vertex> absorbed_into(static_cast<std::size_t>(n), -1);
  for (Vertex v = 0; v < n; ++v) {
    const Vertex x = succ[v];
    if (x >= 0 && in_stable[x] && mono.degree(x) == 2) absorbed_into[x] = v;
  }

  ContractionMap out;
  out.image.assign(static_cast<std::size_t>(n), -1);
  for (Vertex v = 0; v < n; ++v) {
    if (absorbed_into[v] >= 0) continue;
    out.image[v] = static_cast<int>(out.members.size());
    out.members.push_back({v});
    out.colours.push_back(colouring[v]);
  }
  for (Vertex x = 0; x < n; ++x) {
    if (absorbed_into[x] < 0) continue;
    out.image[x] = out.image[absorbed_into[x]];
    out.members[out.image[x]].push_back(x);
    ++out.contractions;
  }
  std::vector<Edge> edges;
  for (const auto& [a, b] : g.edges()) {
    if ((in_stable[a] || in_stable[b]) && colouring[a] != colouring[b]) continue;
    const int ia = out.image[a];
    const int ib = out.image[b];
    if (ia != ib) edges.emplace_back(std::min(ia, ib), std::max(ia, ib));
  }
  out.contracted = build_graph(static_cast<int>(out.members.size()), edges);
  if (out.contracted.max_degree() > g.max_degree())
    internal_error("contraction raised the maximum degree");
  return out;
}

}  // namespace sparsecol
