#pragma once

#include <cstdint>
#include <string>

#include "sparsecol/density.hpp"
#include "sparsecol/graph.hpp"

namespace sparsecol {

enum class Family {
  Path,
  Cycle,
  Complete,
  CompleteBipartite,
  Apollonian,
  TorusGrid,
  EarthMoon,
  Thickness,
  RandomMadBounded,
};

const char* to_string(Family family) noexcept;
/// Accepts the names printed by to_string; throws Error(InvalidSpec).
Family parse_family(const std::string& name);

/// n is the vertex count, except: CompleteBipartite uses parts n and m,
/// TorusGrid a rows-by-cols grid with rows = n and cols = m (m = 0 means
/// square). Thickness unions `layers` triangulations. RandomMadBounded keeps
/// mad below `target` and stops after m edges when m > 0.
struct GenSpec {
  Family family = Family::Path;
  int n = 0;
  int m = 0;
  int layers = 2;
  Rational target{4, 1};
  std::uint64_t seed = 0;
};

/// Deterministic for a given spec on every platform.
Graph generate(const GenSpec& spec);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);
/// Planar triangulation grown by inserting each new vertex into a random
/// face; 3n - 6 edges for n >= 3.
Graph apollonian_graph(int n, std::uint64_t seed);
/// Triangulated torus: (i, j) joined to (i+1, j), (i, j+1), (i+1, j+1)
/// cyclically. 6-regular for rows, cols >= 3.
Graph torus_grid_graph(int rows, int cols);
/// Union of `layers` triangulations on independently permuted copies of the
/// same vertex set; mad below 6 * layers.
Graph thickness_graph(int n, int layers, std::uint64_t seed);
Graph earth_moon_graph(int n, std::uint64_t seed);
/// Random maximal edge set subject to mad < target, tried in shuffled order.
Graph random_mad_bounded_graph(int n, const Rational& target, std::uint64_t seed,
                               int max_edges = 0);

}  // namespace sparsecol
