#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sparsecol/graph.hpp"

namespace sparsecol {

/// Disjoint vertex classes of a conflict graph. A transversal picks one
/// vertex per part; it is independent when no two picks are adjacent.
struct TransversalInstance {
  Graph conflict;
  std::vector<std::vector<Vertex>> parts;
};

/// Independent transversal, entry i drawn from parts[i]. Augmenting
/// insertion first, then min-conflicts repair, then exact backtracking, so
/// Error(NotFound) means no independent transversal exists. Parts of size at
/// least twice the maximum degree always admit one.
std::vector<Vertex> independent_transversal(const TransversalInstance& inst,
                                            std::uint64_t seed = 0);

/// Lexicographically first independent transversal by plain enumeration.
/// Throws Error(SizeLimitExceeded) when the product of part sizes exceeds
/// cap.
std::optional<std::vector<Vertex>> oracle_transversal(
    const TransversalInstance& inst, std::int64_t cap = 10'000'000);

enum class ComponentShape { Cycle, Path, Short };

const char* to_string(ComponentShape shape) noexcept;

/// Split of one component of H into alternating segments. Cycles read
/// A_1 B_1 ... A_a B_a, paths B_0 A_1 B_1 ... A_a B_a; every A-segment has
/// 2*Delta - 4 vertices. Short components carry no segments.
struct ComponentPlan {
  ComponentShape shape = ComponentShape::Short;
  std::vector<Vertex> order;  // traversal order of the component
  int a = 0;
  int b = 0;
  std::vector<std::vector<Vertex>> a_segments;
  std::vector<std::vector<Vertex>> b_segments;
};

struct SegmentPlan {
  std::vector<ComponentPlan> components;  // ordered by smallest vertex
};

/// Cycles are long from 8*Delta - 12 vertices, paths from 2*Delta - 4.
/// A path whose remainder leaves an endpoint inside an A-segment gives up
/// one segment, so every A-vertex has degree 2 in H.
SegmentPlan plan_segments(const Graph& h, int max_degree);

struct StableSetSelection {
  std::vector<Vertex> stable;  // sorted
  SegmentPlan plan;
};

/// Stable set of G made of H-degree-2 vertices, exactly one inside every
/// A-segment. Needs Delta >= 3, Delta(G) <= Delta, H a spanning subgraph of
/// G with Delta(H) <= 2; throws PreconditionViolated otherwise.
StableSetSelection select_stable_set(const Graph& g, const Graph& h,
                                     int max_degree, std::uint64_t seed = 0);

}  // namespace sparsecol
