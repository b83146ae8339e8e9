#pragma once

#include <array>
#include <optional>
#include <vector>

#include "sparsecol/clustered.hpp"

namespace sparsecol::detail {

/// Smallest colour of L(v) other than colour(v) on at most two neighbours.
std::optional<Colour> beta_colour(const Graph& g, const ListAssignment& lists,
                                  const Colouring& colouring, Vertex v);

/// X = the recoloured set with its two-colour lists, Y = the components of
/// the monochromatic subgraph after deleting that set, each carrying its
/// common colour. y_vertex[j] is one member of component j.
struct BipartiteBuild {
  BipartiteRecolourInstance inst;
  std::vector<Vertex> y_vertex;
};

BipartiteBuild bipartite_instance(const Graph& g, const Colouring& colouring,
                                  const std::vector<Vertex>& recoloured,
                                  const std::vector<std::array<Colour, 2>>& pairs);

/// A colour c whose class graph (vertices that may take c) has a vertex of
/// degree above 2, if any.
std::optional<Colour> overloaded_colour(const BipartiteRecolourInstance& inst);

std::vector<bool> membership(int n, const std::vector<Vertex>& vertices);

void require_lists_match(const Graph& g, const ListAssignment& lists);

/// Range and stability check for a caller-supplied stable set.
std::vector<bool> stable_membership(const Graph& g,
                                    const std::vector<Vertex>& stable);

}  // namespace sparsecol::detail
