#include "sparsecol/defective.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <string>

#include "sparsecol/flow.hpp"
#include "sparsecol/local_search.hpp"
#include "sparsecol/sparsity.hpp"

namespace sparsecol {
namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

// Peel inside the vertex set marked by `in_u`. With A the vertices peeled so
// far, v is eligible iff d deg_A(v) + deg_U(v) >= (d+1)k; the left side only
// grows as A grows, so a min-heap of eligible ids gives the lowest-id rule.
PeelDecomposition peel_within(const Graph& g, const std::vector<bool>& in_u,
                              int k, int d) {
  const int n = g.vertex_count();
  std::vector<int> deg_u(static_cast<std::size_t>(n), 0);
  std::vector<int> deg_a(static_cast<std::size_t>(n), 0);
  std::vector<char> state(static_cast<std::size_t>(n), 0);  // 1 queued, 2 peeled
  const std::int64_t need = static_cast<std::int64_t>(d + 1) * k;
  auto eligible = [&](Vertex v) {
    return static_cast<std::int64_t>(d) * deg_a[v] + deg_u[v] >= need;
  };
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> heap;
  for (Vertex v = 0; v < n; ++v) {
    if (!in_u[v]) continue;
    for (Vertex w : g.neighbours(v))
      if (in_u[w]) ++deg_u[v];
    if (eligible(v)) {
      state[v] = 1;
      heap.push(v);
    }
  }
  PeelDecomposition out;
  while (!heap.empty()) {
    const Vertex v = heap.top();
    heap.pop();
    state[v] = 2;
    out.layers.push_back({v});
    for (Vertex w : g.neighbours(v)) {
      if (!in_u[w] || state[w] != 0) continue;
      ++deg_a[w];
      if (eligible(w)) {
        state[w] = 1;
        heap.push(w);
      }
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (in_u[v] && state[v] != 2) out.residual.push_back(v);
  out.exhausted = out.residual.empty();
  return out;
}

int defect_within(const Graph& g, const Colouring& colouring,
                  const std::vector<bool>& in_set) {
  int worst = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!in_set[v]) continue;
    int mono = 0;
    for (Vertex w : g.neighbours(v))
      if (in_set[w] && colouring[w] == colouring[v]) ++mono;
    worst = std::max(worst, mono);
  }
  return worst;
}

}  // namespace

int DefectParams::final_defect() const {
  return std::max(static_cast<int>(ceil_div(n0 - 1, k)) - 1, d);
}

Colouring defective_colour(const Graph& g, const ListAssignment& lists, int d,
                           std::uint64_t seed) {
  if (lists.size() != g.vertex_count())
    throw Error(Errc::InvalidSpec, "list assignment does not match the graph");
  if (d < 0) throw Error(Errc::InvalidSpec, "defect must be nonnegative");
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) + 1 >
        static_cast<std::int64_t>(lists.list_size(v)) * (d + 1)) {
      throw PreconditionViolated(
          v, "vertex " + std::to_string(v) + " has degree " +
                 std::to_string(g.degree(v)) + " but only " +
                 std::to_string(lists.list_size(v)) + " colours");
    }
  }
  Colouring colouring = local_min_colouring(g, lists, seed);
  if (defect_of(mono_view(g, colouring)) > d)
    internal_error("local minimum exceeds the defect bound");
  return colouring;
}

PeelDecomposition peel_defective(const Graph& g, int k, int d) {
  if (k < 1 || d < 0) throw Error(Errc::InvalidSpec, "need k >= 1 and d >= 0");
  return peel_within(g, std::vector<bool>(g.vertex_count(), true), k, d);
}

Colouring extend_defective(const Graph& g, const ListAssignment& lists,
                           const std::vector<bool>& in_a,
                           const Colouring& phi_a, int d, int d_prime,
                           std::uint64_t seed) {
  const int n = g.vertex_count();
  if (lists.size() != n || static_cast<int>(in_a.size()) != n ||
      static_cast<int>(phi_a.size()) != n)
    throw Error(Errc::InvalidSpec, "extension inputs do not match the graph");
  if (d < 0 || d > d_prime)
    throw Error(Errc::InvalidSpec, "need 0 <= d <= d'");
  for (Vertex v = 0; v < n; ++v) {
    if (in_a[v] && !lists.contains(v, phi_a[v]))
      throw Error(Errc::InvalidColouring,
                  "vertex " + std::to_string(v) + " is coloured off its list");
  }
  if (defect_within(g, phi_a, in_a) > d_prime)
    throw PreconditionViolated(-1, "colouring of A exceeds the defect bound");

  std::vector<Vertex> b;
  std::vector<std::vector<Colour>> reduced;
  for (Vertex v = 0; v < n; ++v) {
    if (in_a[v]) continue;
    std::vector<Colour> list;
    int deg_b = 0;
    for (Colour c : lists[v]) {
      const bool used = std::ranges::any_of(
          g.neighbours(v), [&](Vertex w) { return in_a[w] && phi_a[w] == c; });
      if (!used) list.push_back(c);
    }
    for (Vertex w : g.neighbours(v))
      if (!in_a[w]) ++deg_b;
    if (deg_b + 1 > static_cast<std::int64_t>(list.size()) * (d + 1)) {
      throw PreconditionViolated(
          v, "vertex " + std::to_string(v) + " keeps " +
                 std::to_string(list.size()) + " colours for " +
                 std::to_string(deg_b) + " neighbours in B");
    }
    b.push_back(v);
    reduced.push_back(std::move(list));
  }

  Colouring out(static_cast<std::size_t>(n), kUncoloured);
  for (Vertex v = 0; v < n; ++v)
    if (in_a[v]) out[v] = phi_a[v];
  if (b.empty()) return out;
  const auto sub = induced_subgraph(g, b);
  const ListAssignment sub_lists(std::move(reduced));
  const Colouring inner = local_min_colouring(sub.graph, sub_lists, seed);
  if (defect_of(mono_view(sub.graph, inner)) > d)
    internal_error("extension colouring exceeds the defect bound");
  for (std::size_t i = 0; i < b.size(); ++i) out[b[i]] = inner[i];
  return out;
}

Colouring balanced_assignment(int n, const ListAssignment& lists,
                              const std::vector<Vertex>& vertices, int k) {
  Colouring out(static_cast<std::size_t>(n), kUncoloured);
  if (vertices.empty()) return out;
  std::map<Colour, int> colour_node;
  for (Vertex v : vertices)
    for (Colour c : lists[v]) colour_node.emplace(c, 0);
  const int count = static_cast<int>(vertices.size());
  int next = count;
  for (auto& [c, node] : colour_node) node = next++;
  const int source = next;
  const int sink = next + 1;
  const std::int64_t capacity = ceil_div(count, k);

  MaxFlow flow(next + 2);
  std::vector<std::vector<std::pair<int, Colour>>> arcs(count);
  for (int i = 0; i < count; ++i) {
    flow.add_arc(source, i, 1);
    for (Colour c : lists[vertices[i]])
      arcs[i].emplace_back(flow.add_arc(i, colour_node[c], 1), c);
  }
  for (const auto& [c, node] : colour_node) flow.add_arc(node, sink, capacity);
  if (flow.run(source, sink) != count)
    internal_error("balanced assignment infeasible although Hall's condition holds");
  for (int i = 0; i < count; ++i) {
    for (const auto& [arc, c] : arcs[i]) {
      if (flow.flow_on(arc) > 0) {
        out[vertices[i]] = c;
        break;
      }
    }
  }
  return out;
}

ColouringResult choose_defective(const Graph& g, const ListAssignment& lists,
                                 const DefectParams& params,
                                 std::uint64_t seed) {
  const int n = g.vertex_count();
  if (params.k < 1 || params.d < 0 || params.n0 < 1)
    throw Error(Errc::InvalidSpec, "need k >= 1, d >= 0 and n0 >= 1");
  if (lists.size() != n)
    throw Error(Errc::InvalidSpec, "list assignment does not match the graph");
  if (n > 0 && lists.min_size() < params.k)
    throw Error(Errc::InvalidSpec, "every list needs at least k colours");
  const int d_prime = params.final_defect();
  const Rational threshold(2 * static_cast<std::int64_t>(params.d + 1) * params.k,
                           params.d + 2);

  // The recursion only descends into the peeled part, so the levels form a
  // chain U_0 = V, U_{i+1} = A(U_i), ending at a small or empty set.
  std::vector<std::vector<bool>> levels;
  std::vector<bool> current(static_cast<std::size_t>(n), true);
  int size = n;
  while (size > 0 && size >= params.n0) {
    auto peel = peel_within(g, current, params.k, params.d);
    if (peel.exhausted) {
      std::vector<Vertex> witness;
      for (Vertex v = 0; v < n; ++v)
        if (current[v]) witness.push_back(v);
      const Rational density = induced_density(g, witness);
      if (density < threshold)
        internal_error("exhausted peel below the density threshold");
      throw DensityViolation(
          {std::move(witness), density}, threshold,
          "subgraph on " + std::to_string(size) +
              " vertices has average degree " + density.to_string() +
              ", at least " + threshold.to_string());
    }
    levels.push_back(current);
    std::vector<bool> next(static_cast<std::size_t>(n), false);
    for (const auto& layer : peel.layers)
      for (Vertex v : layer) next[v] = true;
    current = std::move(next);
    size = static_cast<int>(std::ranges::count(current, true));
  }

  std::vector<Vertex> base;
  for (Vertex v = 0; v < n; ++v)
    if (current[v]) base.push_back(v);
  Colouring colouring = balanced_assignment(n, lists, base, params.k);

  // Each level colours U_i \ U_{i+1} around the colouring of U_{i+1}. Vertices
  // outside U_i are hidden by restricting to the induced subgraph.
  ColouringResult result;
  result.stats.levels = static_cast<std::int64_t>(levels.size());
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    std::vector<Vertex> members;
    for (Vertex v = 0; v < n; ++v)
      if ((*it)[v]) members.push_back(v);
    const auto sub = induced_subgraph(g, members);
    std::vector<bool> in_a(members.size());
    Colouring phi(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      in_a[i] = current[members[i]];
      phi[i] = colouring[members[i]];
    }
    const Colouring extended =
        extend_defective(sub.graph, lists.restricted(members), in_a, phi,
                         params.d, d_prime, seed);
    for (std::size_t i = 0; i < members.size(); ++i)
      colouring[members[i]] = extended[i];
    current = *it;
  }

  result.report = verify(g, lists, colouring, BoundKind::Defect, d_prime);
  if (!result.report.ok) internal_error("defective colouring exceeds its bound");
  result.colouring = std::move(colouring);
  return result;
}

}  // namespace sparsecol
