#pragma once

#include <cstdint>

#include "sparsecol/graph.hpp"

namespace sparsecol {

enum class Objective { Defect, Clustering };

const char* to_string(Objective objective) noexcept;

struct OracleResult {
  Objective objective = Objective::Defect;
  int minimum = 0;
  Colouring witness;         // an L-colouring attaining the minimum
  std::int64_t explored = 0;  // search nodes visited
};

inline constexpr std::int64_t kDefaultOracleCap = 10'000'000;

/// Exact minimum defect or clustering over all L-colourings by branch and
/// bound. Throws Error(SizeLimitExceeded) when the product of list sizes
/// exceeds cap.
OracleResult oracle_colour(const Graph& g, const ListAssignment& lists,
                           Objective objective,
                           std::int64_t cap = kDefaultOracleCap);

}  // namespace sparsecol
