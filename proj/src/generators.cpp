#include "sparsecol/generators.hpp"

#include <array>
#include <numeric>
#include <random>

#include "sparsecol/sparsity.hpp"

namespace sparsecol {
namespace {

// Draws use rng() % bound so the output does not depend on the standard
// library's distribution implementations.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

std::vector<Vertex> permutation(int n, std::mt19937_64& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i)
    std::swap(perm[i], perm[draw(rng, static_cast<std::uint64_t>(i) + 1)]);
  return perm;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::InvalidSpec, what);
}

}  // namespace

const char* to_string(Family family) noexcept {
  switch (family) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Complete: return "complete";
    case Family::CompleteBipartite: return "completeBipartite";
    case Family::Apollonian: return "apollonian";
    case Family::TorusGrid: return "torusGrid";
    case Family::EarthMoon: return "earthMoon";
    case Family::Thickness: return "thickness";
    case Family::RandomMadBounded: return "randomMadBounded";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  for (Family f : {Family::Path, Family::Cycle, Family::Complete,
                   Family::CompleteBipartite, Family::Apollonian, Family::TorusGrid,
                   Family::EarthMoon, Family::Thickness, Family::RandomMadBounded})
    if (name == to_string(f)) return f;
  throw Error(Errc::InvalidSpec, "unknown family '" + name + "'");
}

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return build_graph(n, edges);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return build_graph(n, edges);
}

Graph complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return build_graph(n, edges);
}

Graph complete_bipartite_graph(int a, int b) {
  require(a >= 1 && b >= 1, "complete bipartite graph needs two nonempty parts");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return build_graph(a + b, edges);
}

Graph apollonian_graph(int n, std::uint64_t seed) {
  require(n >= 3, "triangulation needs n >= 3");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
  // Both sides of the starting triangle are faces.
  std::vector<std::array<Vertex, 3>> faces{{0, 1, 2}, {0, 1, 2}};
  for (Vertex v = 3; v < n; ++v) {
    const auto f = draw(rng, faces.size());
    const auto [a, b, c] = faces[f];
    edges.emplace_back(a, v);
    edges.emplace_back(b, v);
    edges.emplace_back(c, v);
    faces[f] = {a, b, v};
    faces.push_back({b, c, v});
    faces.push_back({a, c, v});
  }
  return build_graph(n, edges);
}

Graph torus_grid_graph(int rows, int cols) {
  require(rows >= 3 && cols >= 3, "torus grid needs at least 3 rows and columns");
  auto id = [&](int i, int j) { return ((i + rows) % rows) * cols + (j + cols) % cols; };
  std::vector<Edge> edges;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      edges.emplace_back(id(i, j), id(i + 1, j));
      edges.emplace_back(id(i, j), id(i, j + 1));
      edges.emplace_back(id(i, j), id(i + 1, j + 1));
    }
  return build_graph(rows * cols, edges);
}

Graph thickness_graph(int n, int layers, std::uint64_t seed) {
  require(layers >= 1, "thickness needs at least one layer");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int layer = 0; layer < layers; ++layer) {
    const Graph planar = apollonian_graph(n, rng());
    const auto perm = permutation(n, rng);
    for (const auto& [u, v] : planar.edges()) edges.emplace_back(perm[u], perm[v]);
  }
  return build_graph(n, edges);
}

Graph earth_moon_graph(int n, std::uint64_t seed) { return thickness_graph(n, 2, seed); }

Graph random_mad_bounded_graph(int n, const Rational& target, std::uint64_t seed,
                               int max_edges) {
  require(n >= 1, "graph needs n >= 1");
  require(target.numerator() > 0, "density target must be positive");
  std::mt19937_64 rng(seed);
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  for (std::size_t i = pairs.size(); i > 1; --i)
    std::swap(pairs[i - 1], pairs[draw(rng, i)]);
  std::vector<Edge> kept;
  for (const auto& e : pairs) {
    if (max_edges > 0 && static_cast<int>(kept.size()) >= max_edges) break;
    kept.push_back(e);
    if (has_density_at_least(build_graph(n, kept), target)) kept.pop_back();
  }
  return build_graph(n, kept);
}

Graph generate(const GenSpec& spec) {
  switch (spec.family) {
    case Family::Path: return path_graph(spec.n);
    case Family::Cycle: return cycle_graph(spec.n);
    case Family::Complete: return complete_graph(spec.n);
    case Family::CompleteBipartite: return complete_bipartite_graph(spec.n, spec.m);
    case Family::Apollonian: return apollonian_graph(spec.n, spec.seed);
    case Family::TorusGrid:
      return torus_grid_graph(spec.n, spec.m == 0 ? spec.n : spec.m);
    case Family::EarthMoon: return earth_moon_graph(spec.n, spec.seed);
    case Family::Thickness: return thickness_graph(spec.n, spec.layers, spec.seed);
    case Family::RandomMadBounded:
      return random_mad_bounded_graph(spec.n, spec.target, spec.seed, spec.m);
  }
  throw Error(Errc::InvalidSpec, "unknown family");
}

}  // namespace sparsecol
