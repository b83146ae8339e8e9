#pragma once

#include <cstdint>
#include <vector>

#include "sparsecol/graph.hpp"
#include "sparsecol/result.hpp"

namespace sparsecol {

/// Sequence of peeled vertex sets followed by the residual set B. Layers
/// hold one vertex in the defective peel and one or two in the clustered
/// peels.
struct PeelDecomposition {
  std::vector<std::vector<Vertex>> layers;
  std::vector<Vertex> residual;
  bool exhausted = false;  // residual empty
};

struct DefectParams {
  int k = 1;
  int d = 0;
  int n0 = 1;

  /// max(ceil((n0-1)/k) - 1, d): the defect actually guaranteed.
  int final_defect() const;
};

/// Local-minimum colouring, which has defect at most d whenever
/// deg(v) + 1 <= |L(v)|(d+1) for every v. Throws PreconditionViolated
/// naming the first vertex where that fails.
Colouring defective_colour(const Graph& g, const ListAssignment& lists, int d,
                           std::uint64_t seed = 0);

/// Maximal sequence of vertices v_i with
/// (d+1) deg_{A_i}(v_i) + deg_{B_i}(v_i) >= (d+1)k, where A_i includes v_i.
/// The lowest eligible id is taken at every step.
PeelDecomposition peel_defective(const Graph& g, int k, int d);

/// Colours B = V \ A given a colouring of A (entries off A are ignored).
/// Each v in B avoids the colours on its A-neighbours and needs
/// deg_B(v) + 1 <= (d+1)|L'(v)| for the reduced list L'(v). The result
/// agrees with phi_a on A, has no monochromatic A-B edge and defect at most
/// d_prime.
Colouring extend_defective(const Graph& g, const ListAssignment& lists,
                           const std::vector<bool>& in_a,
                           const Colouring& phi_a, int d, int d_prime,
                           std::uint64_t seed = 0);

/// One colour per vertex of `vertices` from its list, no colour used more
/// than ceil(|vertices|/k) times. Entries off `vertices` are kUncoloured.
/// Needs every list of size at least k.
Colouring balanced_assignment(int n, const ListAssignment& lists,
                              const std::vector<Vertex>& vertices, int k);

/// Recursive peel and extend. Defect at most params.final_defect(), or
/// DensityViolation with a subgraph of at least n0 vertices and average
/// degree at least (2d+2)k/(d+2).
ColouringResult choose_defective(const Graph& g, const ListAssignment& lists,
                                 const DefectParams& params,
                                 std::uint64_t seed = 0);

}  // namespace sparsecol
