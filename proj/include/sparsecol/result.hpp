#pragma once

#include <cstdint>

#include "sparsecol/graph.hpp"

namespace sparsecol {

/// Work counters reported by the colouring pipelines.
struct PipelineStats {
  std::int64_t levels = 0;     // peel/extend recursion depth
  std::int64_t moves = 0;      // single-vertex improving moves applied
  std::int64_t restarts = 0;   // pipeline restarts after an improving move
  std::int64_t exchanges = 0;  // stable-set exchange steps
};

struct ColouringResult {
  Colouring colouring;
  Report report;
  PipelineStats stats;
};

}  // namespace sparsecol
