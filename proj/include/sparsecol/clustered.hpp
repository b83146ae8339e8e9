#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sparsecol/defective.hpp"
#include "sparsecol/graph.hpp"
#include "sparsecol/result.hpp"

namespace sparsecol {

/// Local-minimum colouring of defect at most 2 together with, for every
/// defect-2 vertex outside the stable set, the smallest other colour beta_v
/// of its list used by at most two neighbours.
struct Defect2Base {
  Colouring colouring;
  std::vector<std::optional<Colour>> beta;
};

/// Needs deg(v) + 2 <= 3|L(v)| off `stable` and deg(v) + 1 <= 3|L(v)| on
/// it; throws PreconditionViolated otherwise or when `stable` is not stable.
Defect2Base defect2_base(const Graph& g, const ListAssignment& lists,
                         const std::vector<Vertex>& stable = {},
                         std::uint64_t seed = 0);

/// Out-neighbour of every vertex (or -1) in a graph of maximum degree 2.
/// Cycles follow the walk from their lowest vertex towards its smaller
/// neighbour; paths run from their lower endpoint. In- and out-degree are
/// at most one everywhere.
std::vector<Vertex> orient_paths_and_cycles(const Graph& h);

/// Bipartite graph between X-vertices with two candidate colours and
/// Y-vertices with one fixed colour. Edges are (x, y) index pairs; an edge
/// whose y-colour is not in the x-list never becomes monochromatic and is
/// dropped.
struct BipartiteRecolourInstance {
  std::vector<std::array<Colour, 2>> x_lists;
  std::vector<Colour> y_colour;
  std::vector<std::pair<int, int>> edges;
};

/// Chain recolouring of the X side: every monochromatic component ends up
/// with at most two X-vertices. Needs, for each colour c, the graph on the
/// vertices that may take c to have maximum degree 2; throws
/// PreconditionViolated otherwise.
std::vector<Colour> recolour_bipartite(const BipartiteRecolourInstance& inst);

/// Largest number of X-vertices in one monochromatic component.
int max_x_per_component(const BipartiteRecolourInstance& inst,
                        const std::vector<Colour>& x_colours);

/// G' for the stable-set reduction: non-monochromatic edges at stable-set
/// vertices are deleted, then each oriented monochromatic edge v -> x with x
/// in the stable set and of defect 2 is contracted. G' vertices keep the
/// colour of their first member.
struct ContractionMap {
  Graph contracted;
  std::vector<std::vector<Vertex>> members;  // {v} or {v, x}
  std::vector<int> image;                    // G vertex -> G' vertex
  Colouring colours;                         // on G'
  int contractions = 0;
};

ContractionMap build_contraction(const Graph& g, const Colouring& colouring,
                                 const std::vector<bool>& in_stable);

/// ceil(19 Delta / 2) - 17.
int maxdeg_clustering_bound(int max_degree);

/// Clustering at most ceil(19 Delta / 2) - 17 from lists of size at least
/// ceil((Delta + 2) / 3), Delta >= 3.
ColouringResult choose_clustered_maxdeg(const Graph& g,
                                        const ListAssignment& lists,
                                        std::uint64_t seed = 0);

/// Clustering at most 19 Delta - 32 where Delta is max_degree (default the
/// maximum degree of g, which must not exceed it). Needs Delta >= 3, `stable`
/// stable, 3|L(v)| >= deg(v) + 1 on it and >= deg(v) + 2 elsewhere.
ColouringResult stable_set_colour(const Graph& g, const ListAssignment& lists,
                                  const std::vector<Vertex>& stable,
                                  std::optional<int> max_degree = std::nullopt,
                                  std::uint64_t seed = 0);

/// Clustering at most 9 (6 when `stable` is empty). Needs `stable` stable,
/// 5|L(v)| >= 2 deg(v) + 2 off it and >= 2 deg(v) + 1 on it.
ColouringResult choose_clustered_absolute(const Graph& g,
                                          const ListAssignment& lists,
                                          const std::vector<Vertex>& stable,
                                          std::uint64_t seed = 0);

/// Peel of one- and two-vertex sets. With A the vertices peeled before X,
/// a single v is eligible when
///   list_coef |L(v)| <= a_coef deg_A(v) + deg_coef deg(v)
/// and an edge vw when both ends satisfy it with one added on the right.
/// deg is taken inside the current vertex set.
struct PeelRule {
  int list_coef = 5;
  int a_coef = 3;
  int deg_coef = 2;
};

inline constexpr PeelRule kAbsolutePeel{5, 3, 2};
inline constexpr PeelRule kExtensionPeel{3, 2, 1};

/// Singles are preferred (lowest id), otherwise the lexicographically least
/// eligible edge.
PeelDecomposition peel_pairs(const Graph& g, const ListAssignment& lists,
                             const PeelRule& rule);

/// Clustering at most 9 when every list has more than 7/10 mad(G) colours;
/// otherwise may throw DensityViolation with a subgraph of average degree at
/// least 10k/7, k the smallest list size.
ColouringResult choose_clustered_mad7_10(const Graph& g,
                                         const ListAssignment& lists,
                                         std::uint64_t seed = 0);

/// max(ceil((n0 - 1) / k), 57k - 51).
int extension_clustering_bound(int k, int n0);

/// Clustering at most extension_clustering_bound(k, n0) using the k smallest
/// colours of every list. Throws DensityViolation with a subgraph on at least
/// n0 vertices of average degree at least 3k/2 when the peel gets stuck.
ColouringResult choose_clustered_extension(const Graph& g,
                                           const ListAssignment& lists, int k,
                                           int n0, std::uint64_t seed = 0);

}  // namespace sparsecol
