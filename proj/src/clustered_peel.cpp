#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <string>

#include "clustered_internal.hpp"
#include "sparsecol/local_search.hpp"
#include "sparsecol/sparsity.hpp"

namespace sparsecol {
namespace {

// slack(v) = a_coef deg_A(v) + deg_coef deg_U(v) - list_coef |L(v)|. A single
// is eligible at slack >= 0, an edge when both ends have slack >= -1. Slack
// only grows as A grows, so eligibility is never lost.
class PairPeeler {
 public:
  PairPeeler(const Graph& g, const ListAssignment& lists,
             const std::vector<bool>& in_u, const PeelRule& rule)
      : g_(g),
        in_u_(in_u),
        rule_(rule),
        slack_(static_cast<std::size_t>(g.vertex_count()), 0),
        peeled_(static_cast<std::size_t>(g.vertex_count()), 0),
        queued_(static_cast<std::size_t>(g.vertex_count()), 0),
        ready_(static_cast<std::size_t>(g.vertex_count()), 0),
        ready_nb_(static_cast<std::size_t>(g.vertex_count()), 0) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (!in_u[v]) continue;
      int deg_u = 0;
      for (Vertex w : g.neighbours(v))
        if (in_u[w]) ++deg_u;
      slack_[v] = static_cast<std::int64_t>(rule.deg_coef) * deg_u -
                  static_cast<std::int64_t>(rule.list_coef) * lists.list_size(v);
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (in_u[v]) refresh(v);
  }

  PeelDecomposition run() {
    PeelDecomposition out;
    while (true) {
      while (!singles_.empty() && peeled_[singles_.top()]) singles_.pop();
      if (!singles_.empty()) {
        const Vertex v = singles_.top();
        singles_.pop();
        peel(v);
        out.layers.push_back({v});
        continue;
      }
      if (candidates_.empty()) break;
      const Vertex u = *candidates_.begin();
      Vertex w = -1;
      for (Vertex x : g_.neighbours(u))
        if (in_u_[x] && !peeled_[x] && ready_[x]) {
          w = x;
          break;
        }
      if (w < 0) internal_error("pair candidate without a ready neighbour");
      peel(u);
      peel(w);
      out.layers.push_back({u, w});
    }
    for (Vertex v = 0; v < g_.vertex_count(); ++v)
      if (in_u_[v] && !peeled_[v]) out.residual.push_back(v);
    out.exhausted = out.residual.empty();
    return out;
  }

  std::int64_t slack(Vertex v) const { return slack_[v]; }

 private:
  void refresh(Vertex v) {
    if (slack_[v] >= 0 && !queued_[v]) {
      queued_[v] = 1;
      singles_.push(v);
    }
    if (slack_[v] >= -1 && !ready_[v]) {
      ready_[v] = 1;
      for (Vertex w : g_.neighbours(v)) {
        if (!in_u_[w] || peeled_[w] || !ready_[w]) continue;
        ++ready_nb_[v];
        if (ready_nb_[w]++ == 0) candidates_.insert(w);
      }
      if (ready_nb_[v] > 0) candidates_.insert(v);
    }
  }

  void peel(Vertex v) {
    peeled_[v] = 1;
    candidates_.erase(v);
    for (Vertex w : g_.neighbours(v)) {
      if (!in_u_[w] || peeled_[w]) continue;
      if (ready_[v] && ready_[w] && --ready_nb_[w] == 0) candidates_.erase(w);
    }
    for (Vertex w : g_.neighbours(v)) {
      if (!in_u_[w] || peeled_[w]) continue;
      slack_[w] += rule_.a_coef;
      refresh(w);
    }
  }

  const Graph& g_;
  const std::vector<bool>& in_u_;
  PeelRule rule_;
  std::vector<std::int64_t> slack_;
  std::vector<char> peeled_;
  std::vector<char> queued_;
  std::vector<char> ready_;
  std::vector<int> ready_nb_;
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> singles_;
  std::set<Vertex> candidates_;
};

struct Level {
  std::vector<bool> members;
  std::vector<bool> stable;  // residual vertices at slack -1
};

std::vector<Vertex> marked(const std::vector<bool>& in) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<Vertex>(in.size()); ++v)
    if (in[v]) out.push_back(v);
  return out;
}

[[noreturn]] void density_violation(const Graph& g, const std::vector<bool>& in_u,
                                    const Rational& threshold) {
  auto witness = marked(in_u);
  const Rational density = induced_density(g, witness);
  if (density < threshold)
    internal_error("stuck peel below the density threshold");
  const auto size = witness.size();
  throw DensityViolation({std::move(witness), density}, threshold,
                         "subgraph on " + std::to_string(size) +
                             " vertices has average degree " +
                             density.to_string() + ", at least " +
                             threshold.to_string());
}

// Peels until the current set is below `floor`; the peeled part of each
// level becomes the next level.
std::vector<Level> peel_chain(const Graph& g, const ListAssignment& lists,
                              const PeelRule& rule, int floor,
                              const Rational& threshold, std::vector<bool>& base) {
  std::vector<Level> levels;
  std::vector<bool> current(static_cast<std::size_t>(g.vertex_count()), true);
  std::int64_t size = g.vertex_count();
  while (size > 0 && size >= floor) {
    PairPeeler peeler(g, lists, current, rule);
    const auto peel = peeler.run();
    if (peel.exhausted) density_violation(g, current, threshold);
    Level level{current, std::vector<bool>(current.size(), false)};
    for (Vertex v : peel.residual)
      if (peeler.slack(v) == -1) level.stable[v] = true;
    levels.push_back(std::move(level));
    std::vector<bool> next(current.size(), false);
    for (const auto& layer : peel.layers)
      for (Vertex v : layer) next[v] = true;
    current = std::move(next);
    size = std::ranges::count(current, true);
  }
  base = std::move(current);
  return levels;
}

using Extender = std::function<ColouringResult(
    const Graph&, const ListAssignment&, const std::vector<Vertex>&)>;

// Colours each level's residual B around the colouring of its peeled part,
// with every B-list stripped of the colours on A-neighbours.
void extend_levels(const Graph& g, const ListAssignment& lists,
                   const std::vector<Level>& levels, std::vector<bool> inner,
                   Colouring& colouring, const Extender& extend,
                   PipelineStats& stats) {
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    std::vector<Vertex> b;
    std::vector<std::vector<Colour>> reduced;
    std::vector<Vertex> stable_local;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (!it->members[v] || inner[v]) continue;
      std::vector<Colour> list;
      for (Colour c : lists[v]) {
        const bool used = std::ranges::any_of(g.neighbours(v), [&](Vertex w) {
          return inner[w] && colouring[w] == c;
        });
        if (!used) list.push_back(c);
      }
      if (list.empty()) internal_error("extension list emptied by the peeled part");
      if (it->stable[v]) stable_local.push_back(static_cast<Vertex>(b.size()));
      b.push_back(v);
      reduced.push_back(std::move(list));
    }
    const auto sub = induced_subgraph(g, b);
    const auto part = extend(sub.graph, ListAssignment(std::move(reduced)), stable_local);
    stats.moves += part.stats.moves;
    stats.restarts += part.stats.restarts;
    stats.exchanges += part.stats.exchanges;
    for (std::size_t i = 0; i < b.size(); ++i) colouring[b[i]] = part.colouring[i];
    inner = it->members;
  }
  stats.levels = static_cast<std::int64_t>(levels.size());
}

}  // namespace

PeelDecomposition peel_pairs(const Graph& g, const ListAssignment& lists,
                             const PeelRule& rule) {
  detail::require_lists_match(g, lists);
  const std::vector<bool> all(static_cast<std::size_t>(g.vertex_count()), true);
  return PairPeeler(g, lists, all, rule).run();
}

ColouringResult choose_clustered_mad7_10(const Graph& g,
                                         const ListAssignment& lists,
                                         std::uint64_t seed) {
  detail::require_lists_match(g, lists);
  const int n = g.vertex_count();
  const int k = n == 0 ? 1 : lists.min_size();
  const Rational threshold(10 * static_cast<std::int64_t>(k), 7);

  std::vector<bool> base;
  const auto levels = peel_chain(g, lists, kAbsolutePeel, 10, threshold, base);

  // At most nine vertices remain, so any colouring of them will do.
  Colouring colouring(static_cast<std::size_t>(n), kUncoloured);
  const auto base_vertices = marked(base);
  const auto sub = induced_subgraph(g, base_vertices);
  const auto inner = local_min_colouring(sub.graph, lists.restricted(base_vertices), seed);
  for (std::size_t i = 0; i < base_vertices.size(); ++i)
    colouring[base_vertices[i]] = inner[i];

  ColouringResult result;
  extend_levels(g, lists, levels, base, colouring,
                [&](const Graph& h, const ListAssignment& l, const std::vector<Vertex>& i) {
                  return choose_clustered_absolute(h, l, i, seed);
                },
                result.stats);
  result.report = verify(g, lists, colouring, BoundKind::Clustering, 9);
  if (!result.report.ok) internal_error("clustering exceeds 9");
  result.colouring = std::move(colouring);
  return result;
}

int extension_clustering_bound(int k, int n0) {
  const int small = (n0 - 1 + k - 1) / k;
  return std::max(small, 57 * k - 51);
}

ColouringResult choose_clustered_extension(const Graph& g,
                                           const ListAssignment& lists, int k,
                                           int n0, std::uint64_t seed) {
  detail::require_lists_match(g, lists);
  if (k < 1 || n0 < 1) throw Error(Errc::InvalidSpec, "need k >= 1 and n0 >= 1");
  const int n = g.vertex_count();
  if (n > 0 && lists.min_size() < k)
    throw Error(Errc::InvalidSpec, "every list needs at least k colours");
  const ListAssignment lists_k = lists.truncated(k);
  const int bound = extension_clustering_bound(k, n0);
  const Rational threshold(3 * static_cast<std::int64_t>(k), 2);

  ColouringResult result;
  if (k == 1) {
    Colouring colouring = local_min_colouring(g, lists_k, seed);
    const auto view = mono_view(g, colouring);
    if (clustering_of(view) > bound) {
      const auto worst = std::ranges::max_element(view.component_size) -
                         view.component_size.begin();
      std::vector<bool> in(static_cast<std::size_t>(n), false);
      for (Vertex v = 0; v < n; ++v) in[v] = view.component[v] == worst;
      density_violation(g, in, threshold);
    }
    result.report = verify(g, lists, colouring, BoundKind::Clustering, bound);
    result.colouring = std::move(colouring);
    return result;
  }

  std::vector<bool> base;
  const auto levels = peel_chain(g, lists_k, kExtensionPeel, n0, threshold, base);
  Colouring colouring = balanced_assignment(n, lists_k, marked(base), k);
  extend_levels(g, lists_k, levels, base, colouring,
                [&](const Graph& h, const ListAssignment& l, const std::vector<Vertex>& i) {
                  return stable_set_colour(h, l, i, 3 * k - 1, seed);
                },
                result.stats);
  result.report = verify(g, lists, colouring, BoundKind::Clustering, bound);
  if (!result.report.ok)
    internal_error("clustering exceeds " + std::to_string(bound));
  result.colouring = std::move(colouring);
  return result;
}

}  // namespace sparsecol
