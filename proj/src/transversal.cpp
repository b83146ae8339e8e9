#include "sparsecol/transversal.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace sparsecol {
namespace {

class Search {
 public:
  explicit Search(const TransversalInstance& inst)
      : g_(inst.conflict),
        parts_(inst.parts),
        part_of_(static_cast<std::size_t>(inst.conflict.vertex_count()), -1),
        chosen_(inst.parts.size(), -1) {
    for (std::size_t p = 0; p < parts_.size(); ++p) {
      if (parts_[p].empty())
        throw Error(Errc::NotFound, "part " + std::to_string(p) + " is empty");
      for (Vertex v : parts_[p]) {
        if (v < 0 || v >= g_.vertex_count())
          throw Error(Errc::OutOfRange,
                      "part vertex " + std::to_string(v) + " out of range");
        if (part_of_[v] != -1)
          throw Error(Errc::InvalidSpec,
                      "vertex " + std::to_string(v) + " lies in two parts");
        part_of_[v] = static_cast<int>(p);
      }
    }
  }

  std::optional<std::vector<Vertex>> augmenting() {
    for (std::size_t p = 0; p < parts_.size(); ++p) {
      std::vector<char> visited(parts_.size(), 0);
      visited[p] = 1;
      if (!insert(static_cast<int>(p), visited)) return std::nullopt;
    }
    return chosen_;
  }

  std::optional<std::vector<Vertex>> min_conflicts(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (std::size_t p = 0; p < parts_.size(); ++p)
      if (chosen_[p] < 0) chosen_[p] = parts_[p][rng() % parts_[p].size()];
    const std::int64_t steps = 200 * static_cast<std::int64_t>(parts_.size()) + 1000;
    for (std::int64_t step = 0; step < steps; ++step) {
      std::vector<int> bad;
      for (std::size_t p = 0; p < parts_.size(); ++p)
        if (conflicts(chosen_[p], static_cast<int>(p)) > 0)
          bad.push_back(static_cast<int>(p));
      if (bad.empty()) return chosen_;
      const int p = bad[rng() % bad.size()];
      int best = -1;
      std::vector<Vertex> ties;
      for (Vertex v : parts_[p]) {
        const int c = conflicts(v, p);
        if (best < 0 || c < best) {
          best = c;
          ties.clear();
        }
        if (c == best) ties.push_back(v);
      }
      chosen_[p] = ties[rng() % ties.size()];
    }
    return std::nullopt;
  }

  std::optional<std::vector<Vertex>> exact() {
    alive_.assign(static_cast<std::size_t>(g_.vertex_count()), 1);
    alive_count_.resize(parts_.size());
    for (std::size_t p = 0; p < parts_.size(); ++p)
      alive_count_[p] = static_cast<int>(parts_[p].size());
    std::fill(chosen_.begin(), chosen_.end(), -1);
    if (backtrack(0)) return chosen_;
    return std::nullopt;
  }

 private:
  // Parts whose chosen vertex is adjacent to v, excluding v's own part.
  std::vector<int> blockers(Vertex v, int p) const {
    std::vector<int> out;
    for (Vertex w : g_.neighbours(v)) {
      const int q = part_of_[w];
      if (q >= 0 && q != p && chosen_[q] == w) out.push_back(q);
    }
    return out;
  }

  int conflicts(Vertex v, int p) const {
    return static_cast<int>(blockers(v, p).size());
  }

  // Places part p. A pick blocked by a single part q evicts q's vertex and
  // re-places q; each part is re-placed at most once per insertion.
  bool insert(int p, std::vector<char>& visited) {
    for (Vertex v : parts_[p]) {
      if (blockers(v, p).empty()) {
        chosen_[p] = v;
        return true;
      }
    }
    for (Vertex v : parts_[p]) {
      const auto blocked = blockers(v, p);
      if (blocked.size() != 1 || visited[blocked[0]]) continue;
      const int q = blocked[0];
      visited[q] = 1;
      const Vertex old = chosen_[q];
      chosen_[q] = -1;
      chosen_[p] = v;
      if (insert(q, visited)) return true;
      chosen_[p] = -1;
      chosen_[q] = old;
    }
    return false;
  }

  // Most-constrained part first; picks prune adjacent candidates of the
  // unassigned parts and are undone from a trail.
  bool backtrack(std::size_t assigned) {
    if (assigned == parts_.size()) return true;
    int p = -1;
    for (std::size_t q = 0; q < parts_.size(); ++q) {
      if (chosen_[q] >= 0) continue;
      if (p < 0 || alive_count_[q] < alive_count_[p]) p = static_cast<int>(q);
    }
    for (Vertex v : parts_[p]) {
      if (!alive_[v]) continue;
      chosen_[p] = v;
      std::vector<Vertex> trail;
      bool wiped = false;
      for (Vertex w : g_.neighbours(v)) {
        const int q = part_of_[w];
        if (q < 0 || q == p || chosen_[q] >= 0 || !alive_[w]) continue;
        alive_[w] = 0;
        trail.push_back(w);
        if (--alive_count_[q] == 0) wiped = true;
      }
      if (!wiped && backtrack(assigned + 1)) return true;
      for (Vertex w : trail) {
        alive_[w] = 1;
        ++alive_count_[part_of_[w]];
      }
      chosen_[p] = -1;
    }
    return false;
  }

  const Graph& g_;
  const std::vector<std::vector<Vertex>>& parts_;
  std::vector<int> part_of_;
  std::vector<Vertex> chosen_;
  std::vector<char> alive_;
  std::vector<int> alive_count_;
};

void check_transversal(const TransversalInstance& inst,
                       const std::vector<Vertex>& picks) {
  if (picks.size() != inst.parts.size())
    internal_error("transversal has the wrong number of picks");
  for (std::size_t p = 0; p < picks.size(); ++p) {
    if (std::ranges::find(inst.parts[p], picks[p]) == inst.parts[p].end())
      internal_error("transversal pick outside its part");
    for (std::size_t q = 0; q < p; ++q)
      if (inst.conflict.adjacent(picks[p], picks[q]))
        internal_error("transversal is not independent");
  }
}

std::vector<Vertex> walk(const Graph& h, Vertex start, Vertex next) {
  std::vector<Vertex> order{start};
  Vertex prev = start;
  Vertex cur = next;
  while (cur != -1 && cur != start) {
    order.push_back(cur);
    Vertex step = -1;
    for (Vertex w : h.neighbours(cur))
      if (w != prev) step = w;
    prev = cur;
    cur = step;
  }
  return order;
}

std::vector<Vertex> take(const std::vector<Vertex>& order, std::size_t& pos,
                         int count) {
  std::vector<Vertex> out(order.begin() + static_cast<std::ptrdiff_t>(pos),
                          order.begin() + static_cast<std::ptrdiff_t>(pos + count));
  pos += static_cast<std::size_t>(count);
  return out;
}

}  // namespace

std::vector<Vertex> independent_transversal(const TransversalInstance& inst,
                                            std::uint64_t seed) {
  Search search(inst);
  auto picks = search.augmenting();
  if (!picks) picks = search.min_conflicts(seed);
  if (!picks) picks = search.exact();
  if (!picks)
    throw Error(Errc::NotFound, "no independent transversal exists");
  check_transversal(inst, *picks);
  return *picks;
}

std::optional<std::vector<Vertex>> oracle_transversal(
    const TransversalInstance& inst, std::int64_t cap) {
  std::int64_t product = 1;
  for (const auto& part : inst.parts) {
    if (part.empty()) return std::nullopt;
    product *= static_cast<std::int64_t>(part.size());
    if (product > cap)
      throw Error(Errc::SizeLimitExceeded,
                  "transversal enumeration exceeds " + std::to_string(cap));
  }
  std::vector<Vertex> picks;
  std::vector<std::size_t> index(inst.parts.size(), 0);
  const std::size_t parts = inst.parts.size();
  std::size_t depth = 0;
  while (true) {
    if (depth == parts) return picks;
    bool placed = false;
    while (index[depth] < inst.parts[depth].size()) {
      const Vertex v = inst.parts[depth][index[depth]++];
      const bool clash = std::ranges::any_of(
          picks, [&](Vertex u) { return inst.conflict.adjacent(u, v); });
      if (!clash) {
        picks.push_back(v);
        placed = true;
        break;
      }
    }
    if (placed) {
      ++depth;
      continue;
    }
    if (depth == 0) return std::nullopt;
    index[depth] = 0;
    --depth;
    picks.pop_back();
  }
}

const char* to_string(ComponentShape shape) noexcept {
  switch (shape) {
    case ComponentShape::Cycle: return "cycle";
    case ComponentShape::Path: return "path";
    case ComponentShape::Short: return "short";
  }
  return "?";
}

SegmentPlan plan_segments(const Graph& h, int max_degree) {
  const int delta = max_degree;
  const int seg = 2 * delta - 4;
  const int period = 2 * delta - 3;
  SegmentPlan plan;
  for (const auto& comp : connected_components(h)) {
    ComponentPlan cp;
    const Vertex first = comp.front();
    const bool cycle =
        comp.size() >= 3 &&
        std::ranges::all_of(comp, [&](Vertex v) { return h.degree(v) == 2; });
    if (cycle) {
      const auto nb = h.neighbours(first);
      cp.order = walk(h, first, std::min(nb[0], nb[1]));
    } else {
      Vertex start = first;
      for (Vertex v : comp)
        if (h.degree(v) <= 1) {
          start = v;
          break;
        }
      cp.order = walk(h, start, h.degree(start) == 0 ? -1 : h.neighbours(start)[0]);
    }
    const int size = static_cast<int>(cp.order.size());
    std::size_t pos = 0;
    if (cycle && size >= 8 * delta - 12) {
      cp.shape = ComponentShape::Cycle;
      cp.a = size / period;
      cp.b = size % period;
      for (int i = 0; i < cp.a; ++i) {
        const int extra = cp.b / cp.a + (i < cp.b % cp.a ? 1 : 0);
        cp.a_segments.push_back(take(cp.order, pos, seg));
        cp.b_segments.push_back(take(cp.order, pos, 1 + extra));
      }
    } else if (!cycle && size >= seg) {
      cp.a = (size + 1) / period;
      cp.b = (size + 1) % period;
      // With b < 2 an end block would be empty and an endpoint would sit in
      // an A-segment; merge one period into the end blocks instead.
      if (cp.b < 2) {
        --cp.a;
        cp.b += period;
      }
      if (cp.a >= 1) {
        cp.shape = ComponentShape::Path;
        cp.b_segments.push_back(take(cp.order, pos, (cp.b + 1) / 2));
        for (int i = 1; i <= cp.a; ++i) {
          cp.a_segments.push_back(take(cp.order, pos, seg));
          cp.b_segments.push_back(take(cp.order, pos, i < cp.a ? 1 : cp.b / 2));
        }
      }
    }
    if (cp.shape == ComponentShape::Short) cp.a = cp.b = 0;
    if (cp.shape != ComponentShape::Short && pos != cp.order.size())
      internal_error("segments do not cover the component");
    plan.components.push_back(std::move(cp));
  }
  return plan;
}

StableSetSelection select_stable_set(const Graph& g, const Graph& h,
                                     int max_degree, std::uint64_t seed) {
  if (max_degree < 3)
    throw PreconditionViolated(-1, "segment selection needs Delta >= 3");
  if (h.vertex_count() != g.vertex_count())
    throw PreconditionViolated(-1, "H must span the vertex set of G");
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > max_degree)
      throw PreconditionViolated(v, "vertex " + std::to_string(v) +
                                        " exceeds the degree bound");
    if (h.degree(v) > 2)
      throw PreconditionViolated(v, "vertex " + std::to_string(v) +
                                        " has degree above 2 in H");
    for (Vertex w : h.neighbours(v))
      if (!g.adjacent(v, w))
        throw PreconditionViolated(v, "H is not a subgraph of G");
  }

  StableSetSelection out;
  out.plan = plan_segments(h, max_degree);

  std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<Vertex> members;
  TransversalInstance inst;
  for (const auto& comp : out.plan.components) {
    for (const auto& segment : comp.a_segments) {
      std::vector<Vertex> part;
      for (Vertex v : segment) {
        local[v] = static_cast<int>(members.size());
        part.push_back(local[v]);
        members.push_back(v);
      }
      inst.parts.push_back(std::move(part));
    }
  }
  std::vector<Edge> edges;
  for (Vertex v : members)
    for (Vertex w : g.neighbours(v))
      if (local[w] > local[v] && !h.adjacent(v, w))
        edges.emplace_back(local[v], local[w]);
  inst.conflict = build_graph(static_cast<int>(members.size()), edges);

  for (Vertex pick : independent_transversal(inst, seed))
    out.stable.push_back(members[pick]);
  std::ranges::sort(out.stable);
  for (Vertex s : out.stable)
    if (h.degree(s) != 2) internal_error("selected vertex has H-degree below 2");
  if (!is_stable_set(g, out.stable))
    internal_error("selected set is not stable");
  return out;
}

}  // namespace sparsecol
