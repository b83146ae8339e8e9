#pragma once

#include <cstdint>

#include "sparsecol/density.hpp"
#include "sparsecol/graph.hpp"

namespace sparsecol {

inline constexpr int kDefaultExhaustiveCap = 20;

/// Exact average degree 2|E(G[S])|/|S| of the subgraph induced by S.
Rational induced_density(const Graph& g, std::span<const Vertex> vertices);

/// Exact maximum average degree with a witness vertex set. Binary search on
/// the density threshold with a min-cut feasibility test; the final cut is
/// the witness. Throws Error(EmptyGraph) on the null graph.
DensityCertificate mad(const Graph& g);

/// True iff some nonempty S has 2|E(G[S])|/|S| >= threshold; a single
/// min-cut computation.
bool has_density_at_least(const Graph& g, const Rational& threshold);

/// Exhaustive maximum over all vertex subsets. Throws
/// Error(SizeLimitExceeded) above cap vertices.
DensityCertificate mad_bruteforce(const Graph& g,
                                  int cap = kDefaultExhaustiveCap);

/// Maximum average degree over subgraphs with at least n0 vertices; 0 with
/// an empty witness when the graph has fewer than n0 vertices. Exhaustive,
/// so graphs above cap vertices are rejected.
DensityCertificate mad_at_least(const Graph& g, int n0,
                                int cap = kDefaultExhaustiveCap);

}  // namespace sparsecol
