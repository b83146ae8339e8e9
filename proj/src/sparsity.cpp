#include "sparsecol/sparsity.hpp"

#include <bit>
#include <optional>

#include "sparsecol/flow.hpp"

namespace sparsecol {
namespace {

// Goldberg's construction. With weights a, b >= 0, a cut whose source side
// is S costs n*M + 2(b|S| - a|E(S)|), so a cut below n*M exists iff some
// nonempty S has a|E(S)| - b|S| > 0. The inclusion-minimal min cut maximises
// that quantity.
std::optional<std::vector<Vertex>> denser_set(const Graph& g, std::int64_t a,
                                              std::int64_t b) {
  const int n = g.vertex_count();
  if (n == 0 || g.edge_count() == 0 || a == 0) return std::nullopt;
  const std::int64_t big = a * g.max_degree();
  const int source = n;
  const int sink = n + 1;
  MaxFlow flow(n + 2);
  for (Vertex v = 0; v < n; ++v) {
    flow.add_arc(source, v, big);
    flow.add_arc(v, sink, big + 2 * b - a * g.degree(v));
    for (Vertex w : g.neighbours(v))
      if (v < w) flow.add_arc(v, w, a, a);
  }
  const std::int64_t cut = flow.run(source, sink);
  if (cut >= static_cast<std::int64_t>(n) * big) return std::nullopt;
  const auto side = flow.source_side(source);
  std::vector<Vertex> witness;
  for (Vertex v = 0; v < n; ++v)
    if (side[v]) witness.push_back(v);
  if (witness.empty()) internal_error("min cut below the trivial cut is empty");
  return witness;
}

void require_cap(const Graph& g, int cap) {
  if (cap > 24) cap = 24;
  if (g.vertex_count() > cap) {
    throw Error(Errc::SizeLimitExceeded,
                "exhaustive density search limited to " + std::to_string(cap) +
                    " vertices, graph has " +
                    std::to_string(g.vertex_count()));
  }
}

// Best density among subsets with popcount >= min_size; first mask wins ties.
DensityCertificate enumerate_subsets(const Graph& g, int min_size) {
  const int n = g.vertex_count();
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbours(v)) adj[v] |= 1u << w;

  const std::uint32_t full = n == 0 ? 0u : (n == 32 ? ~0u : (1u << n) - 1u);
  std::vector<std::int32_t> edges(static_cast<std::size_t>(full) + 1, 0);
  std::optional<Rational> best;
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 1; mask != 0 && mask <= full; ++mask) {
    const int low = std::countr_zero(mask);
    const std::uint32_t rest = mask & (mask - 1);
    edges[mask] = edges[rest] + std::popcount(adj[low] & rest);
    const int size = std::popcount(mask);
    if (size < min_size) continue;
    const Rational d(2 * static_cast<std::int64_t>(edges[mask]), size);
    if (!best || d > *best) {
      best = d;
      best_mask = mask;
    }
  }
  DensityCertificate out;
  if (best) {
    out.density = *best;
    for (Vertex v = 0; v < n; ++v)
      if (best_mask >> v & 1u) out.witness.push_back(v);
  }
  return out;
}

}  // namespace

Rational induced_density(const Graph& g, std::span<const Vertex> vertices) {
  if (vertices.empty()) return Rational(0, 1);
  std::vector<bool> in(static_cast<std::size_t>(g.vertex_count()), false);
  for (Vertex v : vertices) in[v] = true;
  return Rational(2 * induced_edge_count(g, in),
                  static_cast<std::int64_t>(vertices.size()));
}

DensityCertificate mad(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw Error(Errc::EmptyGraph, "mad of the null graph");
  if (g.edge_count() == 0) return {{0}, Rational(0, 1)};

  // |E(S)|/|S| for distinct S differ by at least 1/n^2, so the grid t/n^2
  // isolates the optimum: the witness found at the largest feasible t is
  // densest.
  const std::int64_t scale = static_cast<std::int64_t>(n) * n;
  std::int64_t lo = 0;
  std::int64_t hi = (static_cast<std::int64_t>(n) / 2 + 1) * scale;
  auto witness = denser_set(g, scale, 0);
  if (!witness) internal_error("graph with edges has no positive-density set");
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (auto s = denser_set(g, scale, mid)) {
      lo = mid;
      witness = std::move(s);
    } else {
      hi = mid;
    }
  }
  DensityCertificate out;
  out.density = induced_density(g, *witness);
  out.witness = std::move(*witness);
  return out;
}

bool has_density_at_least(const Graph& g, const Rational& threshold) {
  const int n = g.vertex_count();
  if (n == 0) return false;
  if (threshold.numerator() <= 0) return true;
  // Integer x = 2q|E(S)| - p|S| is >= 0 iff (n+1)x + |S| > 0 for 1<=|S|<=n.
  const std::int64_t scale = n + 1;
  return denser_set(g, 2 * threshold.denominator() * scale,
                    threshold.numerator() * scale - 1)
      .has_value();
}

DensityCertificate mad_bruteforce(const Graph& g, int cap) {
  if (g.vertex_count() == 0)
    throw Error(Errc::EmptyGraph, "mad of the null graph");
  require_cap(g, cap);
  return enumerate_subsets(g, 1);
}

DensityCertificate mad_at_least(const Graph& g, int n0, int cap) {
  if (n0 < 1) throw Error(Errc::InvalidSpec, "n0 must be at least 1");
  if (g.vertex_count() < n0) return {{}, Rational(0, 1)};
  require_cap(g, cap);
  return enumerate_subsets(g, n0);
}

}  // namespace sparsecol
