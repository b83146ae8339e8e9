#include <algorithm>
#include <string>

#include "clustered_internal.hpp"
#include "sparsecol/local_search.hpp"

namespace sparsecol {
namespace {

// Vertices of a component of a maximum-degree-2 graph in walk order, plus
// whether it closes into a cycle.
std::pair<std::vector<Vertex>, bool> trace_component(const Graph& mono,
                                                     const std::vector<Vertex>& comp) {
  const bool cycle =
      comp.size() >= 3 &&
      std::ranges::all_of(comp, [&](Vertex v) { return mono.degree(v) == 2; });
  Vertex start = comp.front();
  if (!cycle)
    for (Vertex v : comp)
      if (mono.degree(v) <= 1) {
        start = v;
        break;
      }
  std::vector<Vertex> order{start};
  Vertex prev = -1;
  Vertex cur = start;
  while (true) {
    Vertex step = -1;
    for (Vertex w : mono.neighbours(cur))
      if (w != prev) {
        step = w;
        break;
      }
    if (step == -1 || step == start) break;
    order.push_back(step);
    prev = cur;
    cur = step;
  }
  return {order, cycle};
}

// Three vertices of degree 2 in the component, pairwise non-adjacent in it
// and outside the stable set.
std::vector<Vertex> exchange_triple(const std::vector<Vertex>& order, bool cycle,
                                    const std::vector<bool>& in_i, bool no_stable) {
  if (no_stable) {
    if (cycle) return {order[0], order[2], order[4]};
    return {order[1], order[3], order[5]};
  }
  // p_1..p_8: eight consecutive degree-2 vertices.
  const std::size_t offset = cycle ? 0 : 1;
  auto p = [&](int i) { return order[offset + static_cast<std::size_t>(i) - 1]; };
  std::vector<Vertex> out;
  for (const auto& [a, b] : {std::pair{1, 2}, std::pair{4, 5}, std::pair{7, 8}}) {
    if (!in_i[p(a)]) out.push_back(p(a));
    else if (!in_i[p(b)]) out.push_back(p(b));
    else internal_error("two adjacent vertices of the stable set");
  }
  return out;
}

}  // namespace

ColouringResult choose_clustered_absolute(const Graph& g,
                                          const ListAssignment& lists,
                                          const std::vector<Vertex>& stable,
                                          std::uint64_t seed) {
  detail::require_lists_match(g, lists);
  const int n = g.vertex_count();
  const auto in_i = detail::stable_membership(g, stable);
  for (Vertex v = 0; v < n; ++v) {
    const int need = 2 * g.degree(v) + (in_i[v] ? 1 : 2);
    if (5 * lists.list_size(v) < need)
      throw PreconditionViolated(v, "vertex " + std::to_string(v) +
                                        " has too few colours");
  }
  const bool no_stable = stable.empty();
  const int bound = no_stable ? 6 : 9;
  const int trigger = bound + 1;

  ColouringResult result;
  Colouring phi0 = local_min_colouring(g, lists, seed);
  std::vector<Vertex> s_set;  // sorted; stable in G[phi0], degree 2 there

  auto restart = [&](Colouring psi) {
    const auto before = mono_edge_count(g, phi0);
    if (mono_edge_count(g, psi) > before)
      internal_error("witness colouring has more monochromatic edges");
    result.stats.moves += descend(g, lists, psi);
    if (mono_edge_count(g, psi) >= before)
      internal_error("restart did not lower the monochromatic edge count");
    phi0 = std::move(psi);
    s_set.clear();
    ++result.stats.restarts;
  };

  while (true) {
    const auto in_s = detail::membership(n, s_set);

    // phi_i recolours s_i inside L(phi_0, s_i) and L(phi_{i-1}, s_i); each
    // step keeps the edge count, so phi_i stays a local minimum unless the
    // check around s_i fails.
    Colouring chain = phi0;
    std::vector<std::array<Colour, 2>> pairs;
    bool restarted = false;
    for (Vertex s : s_set) {
      const auto base = moveable_colours(g, lists, phi0, s);
      const auto here = moveable_colours(g, lists, chain, s);
      Colour pick = kUncoloured;
      for (Colour c : base)
        if (c != phi0[s] && std::ranges::binary_search(here, c)) {
          pick = c;
          break;
        }
      if (pick == kUncoloured)
        internal_error("no common moveable colour for vertex " + std::to_string(s));
      chain[s] = pick;
      if (!is_local_minimum_around(g, lists, chain, s)) {
        restart(std::move(chain));
        restarted = true;
        break;
      }
      pairs.push_back({std::min(phi0[s], pick), std::max(phi0[s], pick)});
    }
    if (restarted) continue;

    for (std::size_t i = 0; i < s_set.size() && !restarted; ++i) {
      Colouring psi = phi0;
      psi[s_set[i]] = chain[s_set[i]];
      if (!is_local_minimum_around(g, lists, psi, s_set[i])) {
        restart(std::move(psi));
        restarted = true;
      }
    }
    if (restarted) continue;

    const auto build = detail::bipartite_instance(g, phi0, s_set, pairs);
    if (const auto c = detail::overloaded_colour(build.inst)) {
      Colouring psi = phi0;
      for (std::size_t i = 0; i < s_set.size(); ++i)
        if (pairs[i][0] == *c || pairs[i][1] == *c) psi[s_set[i]] = *c;
      if (is_local_minimum(g, lists, psi))
        internal_error("overloaded colour class at a local minimum");
      restart(std::move(psi));
      continue;
    }
    const auto x_colours = recolour_bipartite(build.inst);
    Colouring phi = phi0;
    for (std::size_t i = 0; i < s_set.size(); ++i) phi[s_set[i]] = x_colours[i];
    if (!is_local_minimum(g, lists, phi)) {
      restart(std::move(phi));
      continue;
    }
    for (Vertex s : s_set) {
      int outside = 0;
      for (Vertex w : g.neighbours(s)) {
        if (phi[w] != phi[s]) continue;
        if (in_s[w]) internal_error("monochromatic edge inside the recoloured set");
        ++outside;
      }
      if (outside != 2)
        internal_error("recoloured vertex without two monochromatic neighbours");
    }

    const Graph mono = monochromatic_subgraph(g, phi);
    const auto comps = connected_components(mono);
    const auto big = std::ranges::find_if(
        comps, [&](const auto& comp) { return static_cast<int>(comp.size()) >= trigger; });
    if (big == comps.end()) {
      result.report = verify(g, lists, phi, BoundKind::Clustering, bound);
      if (!result.report.ok) internal_error("clustering exceeds the bound");
      result.colouring = std::move(phi);
      return result;
    }

    // A long component holds at most two vertices of S; trading them for a
    // triple inside it grows S while phi becomes the new base.
    const auto [order, cycle] = trace_component(mono, *big);
    const auto triple = exchange_triple(order, cycle, in_i, no_stable);
    const auto in_big = detail::membership(n, *big);
    std::vector<Vertex> grown;
    for (Vertex s : s_set)
      if (!in_big[s]) grown.push_back(s);
    grown.insert(grown.end(), triple.begin(), triple.end());
    std::ranges::sort(grown);
    if (grown.size() <= s_set.size())
      internal_error("exchange did not grow the recoloured set");
    phi0 = std::move(phi);
    s_set = std::move(grown);
    ++result.stats.exchanges;
  }
}

}  // namespace sparsecol
