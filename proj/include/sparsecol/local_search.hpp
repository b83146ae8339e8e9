#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sparsecol/graph.hpp"

namespace sparsecol {

/// For each colour of L(v) (same order as the list), the number of
/// neighbours of v currently coloured with it.
std::vector<int> list_colour_counts(const Graph& g, const ListAssignment& lists,
                                    const Colouring& colouring, Vertex v);

/// Number of neighbours of v coloured c.
int neighbours_coloured(const Graph& g, const Colouring& colouring, Vertex v,
                        Colour c);

/// Smallest colour c in L(v) whose recolouring strictly lowers the number of
/// monochromatic edges, i.e. fewer neighbours use c than use colour(v).
std::optional<Colour> improving_colour(const Graph& g,
                                       const ListAssignment& lists,
                                       const Colouring& colouring, Vertex v);

/// No single-vertex recolouring inside the lists lowers the monochromatic
/// edge count.
bool is_local_minimum(const Graph& g, const ListAssignment& lists,
                      const Colouring& colouring);

/// Local-minimum test restricted to v and its neighbours: the only vertices
/// whose options change when v alone is recoloured.
bool is_local_minimum_around(const Graph& g, const ListAssignment& lists,
                             const Colouring& colouring, Vertex v);

/// Takes first-improving moves (vertices in id order, colours ascending)
/// until none remains. Returns the number of moves made.
std::int64_t descend(const Graph& g, const ListAssignment& lists,
                     Colouring& colouring);

/// Seeded random start followed by descend(). Every list must be nonempty.
Colouring local_min_colouring(const Graph& g, const ListAssignment& lists,
                              std::uint64_t seed = 0);

/// L(phi, v): the colours of L(v) used by exactly defect(v) neighbours. At a
/// local minimum these are the recolourings of v that keep the edge count.
std::vector<Colour> moveable_colours(const Graph& g,
                                     const ListAssignment& lists,
                                     const Colouring& colouring, Vertex v);

}  // namespace sparsecol
