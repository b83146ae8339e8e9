#include <algorithm>
#include <string>

#include "clustered_internal.hpp"
#include "sparsecol/local_search.hpp"
#include "sparsecol/transversal.hpp"

namespace sparsecol {
namespace {

// Defect-2 base colouring, stable set from the segment selector, chain
// recolouring of that set. Every colouring built on the way has at most the
// current number of monochromatic edges; whenever one admits an improving
// move the pipeline descends from it and starts over, so restarts strictly
// lower the edge count.
ColouringResult defect2_pipeline(const Graph& g, const ListAssignment& lists,
                                 const std::vector<bool>& in_i, int delta,
                                 int bound, std::uint64_t seed) {
  ColouringResult result;
  Colouring phi = local_min_colouring(g, lists, seed);

  auto restart = [&](Colouring psi) {
    const auto before = mono_edge_count(g, phi);
    if (mono_edge_count(g, psi) > before)
      internal_error("witness colouring has more monochromatic edges");
    result.stats.moves += descend(g, lists, psi);
    if (mono_edge_count(g, psi) >= before)
      internal_error("restart did not lower the monochromatic edge count");
    phi = std::move(psi);
    ++result.stats.restarts;
  };

  while (true) {
    const auto view = mono_view(g, phi);
    if (defect_of(view) > 2) internal_error("local minimum has defect above 2");

    const auto contraction = build_contraction(g, phi, in_i);
    const Graph mono_prime =
        monochromatic_subgraph(contraction.contracted, contraction.colours);
    const auto selection =
        select_stable_set(contraction.contracted, mono_prime, delta, seed);
    std::vector<Vertex> s_set;
    for (Vertex sp : selection.stable) s_set.push_back(contraction.members[sp][0]);
    std::ranges::sort(s_set);

    std::vector<std::array<Colour, 2>> pairs;
    bool restarted = false;
    for (Vertex s : s_set) {
      if (in_i[s] || view.mono_degree[s] != 2)
        internal_error("selected vertex is not a defect-2 vertex off the stable set");
      const auto beta = detail::beta_colour(g, lists, phi, s);
      if (!beta) internal_error("defect-2 vertex without a spare colour");
      Colouring psi = phi;
      psi[s] = *beta;
      if (!is_local_minimum_around(g, lists, psi, s)) {
        restart(std::move(psi));
        restarted = true;
        break;
      }
      pairs.push_back({std::min(phi[s], *beta), std::max(phi[s], *beta)});
    }
    if (restarted) continue;

    const auto build = detail::bipartite_instance(g, phi, s_set, pairs);
    if (const auto c = detail::overloaded_colour(build.inst)) {
      Colouring psi = phi;
      for (std::size_t i = 0; i < s_set.size(); ++i)
        if (pairs[i][0] == *c || pairs[i][1] == *c) psi[s_set[i]] = *c;
      if (is_local_minimum(g, lists, psi))
        internal_error("overloaded colour class at a local minimum");
      restart(std::move(psi));
      continue;
    }

    const auto x_colours = recolour_bipartite(build.inst);
    Colouring next = phi;
    for (std::size_t i = 0; i < s_set.size(); ++i) next[s_set[i]] = x_colours[i];
    if (!is_local_minimum(g, lists, next)) {
      restart(std::move(next));
      continue;
    }

    result.report = verify(g, lists, next, BoundKind::Clustering, bound);
    if (!result.report.ok)
      internal_error("clustering " + std::to_string(result.report.clustering) +
                     " exceeds the bound " + std::to_string(bound));
    result.colouring = std::move(next);
    return result;
  }
}

}  // namespace

int maxdeg_clustering_bound(int max_degree) {
  return (19 * max_degree + 1) / 2 - 17;
}

ColouringResult choose_clustered_maxdeg(const Graph& g,
                                        const ListAssignment& lists,
                                        std::uint64_t seed) {
  detail::require_lists_match(g, lists);
  const int delta = g.max_degree();
  if (delta < 3)
    throw PreconditionViolated(-1, "maximum degree " + std::to_string(delta) +
                                       " is below 3");
  const int k = (delta + 4) / 3;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (lists.list_size(v) < k)
      throw PreconditionViolated(v, "vertex " + std::to_string(v) + " has " +
                                        std::to_string(lists.list_size(v)) +
                                        " colours, needs " + std::to_string(k));
  return defect2_pipeline(g, lists,
                          std::vector<bool>(g.vertex_count(), false), delta,
                          maxdeg_clustering_bound(delta), seed);
}

ColouringResult stable_set_colour(const Graph& g, const ListAssignment& lists,
                                  const std::vector<Vertex>& stable,
                                  std::optional<int> max_degree,
                                  std::uint64_t seed) {
  detail::require_lists_match(g, lists);
  const int delta = max_degree.value_or(g.max_degree());
  if (delta < 3)
    throw PreconditionViolated(-1, "degree bound " + std::to_string(delta) +
                                       " is below 3");
  if (g.max_degree() > delta)
    throw PreconditionViolated(-1, "graph exceeds the degree bound");
  const auto in_i = detail::stable_membership(g, stable);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const int need = g.degree(v) + (in_i[v] ? 1 : 2);
    if (3 * lists.list_size(v) < need)
      throw PreconditionViolated(v, "vertex " + std::to_string(v) +
                                        " has too few colours");
  }
  return defect2_pipeline(g, lists, in_i, delta, 19 * delta - 32, seed);
}

}  // namespace sparsecol
