#include "sparsecol/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace sparsecol {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::InvalidColouring: return "InvalidColouring";
    case Errc::EmptyGraph: return "EmptyGraph";
    case Errc::SizeLimitExceeded: return "SizeLimitExceeded";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::DensityViolation: return "DensityViolation";
    case Errc::NotFound: return "NotFound";
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::Parse: return "ParseError";
    case Errc::Internal: return "InternalError";
  }
  return "Unknown";
}

void internal_error(const std::string& what) {
  throw Error(Errc::Internal, "internal error: " + what);
}

// ---------------------------------------------------------------- Rational

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw Error(Errc::InvalidSpec, "zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  const std::int64_t g = std::gcd(numerator < 0 ? -numerator : numerator,
                                  denominator);
  num_ = numerator / (g == 0 ? 1 : g);
  den_ = denominator / (g == 0 ? 1 : g);
}

std::int64_t Rational::floor() const noexcept {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::int64_t Rational::ceil() const noexcept {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

std::string Rational::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

__extension__ using Wide = __int128;

std::strong_ordering operator<=>(const Rational& a,
                                 const Rational& b) noexcept {
  const Wide lhs = static_cast<Wide>(a.num_) * b.den_;
  const Wide rhs = static_cast<Wide>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational parse_rational(const std::string& text) {
  try {
    std::size_t used = 0;
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
      const long long v = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return Rational(v, 1);
    }
    const std::string a = text.substr(0, slash);
    const std::string b = text.substr(slash + 1);
    std::size_t used_b = 0;
    const long long p = std::stoll(a, &used);
    const long long q = std::stoll(b, &used_b);
    if (used != a.size() || used_b != b.size()) throw std::invalid_argument(text);
    return Rational(p, q);
  } catch (const std::logic_error&) {
    throw Error(Errc::InvalidSpec, "not a rational: '" + text + "'");
  }
}

// ------------------------------------------------------------------- Graph

Graph::Graph(int n) : adj_(static_cast<std::size_t>(n)) {}

int Graph::max_degree() const noexcept {
  int best = 0;
  for (const auto& nb : adj_) best = std::max(best, static_cast<int>(nb.size()));
  return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edges_));
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph build_graph(int n, std::span<const Edge> edges) {
  if (n < 0) throw Error(Errc::OutOfRange, "negative vertex count");
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw Error(Errc::OutOfRange, "edge (" + std::to_string(u) + "," +
                                        std::to_string(v) +
                                        ") has an endpoint outside [0," +
                                        std::to_string(n) + ")");
    }
    if (u == v)
      throw Error(Errc::SelfLoop, "self-loop at vertex " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  std::int64_t degree_sum = 0;
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    degree_sum += static_cast<std::int64_t>(nb.size());
  }
  g.edges_ = static_cast<int>(degree_sum / 2);
  return g;
}

InducedSubgraph induced_subgraph(const Graph& g,
                                 std::span<const Vertex> vertices) {
  std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    local[vertices[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (Vertex w : g.neighbours(vertices[i]))
      if (local[w] > static_cast<int>(i))
        edges.emplace_back(static_cast<int>(i), local[w]);
  return {build_graph(static_cast<int>(vertices.size()), edges),
          std::vector<Vertex>(vertices.begin(), vertices.end())};
}

std::int64_t induced_edge_count(const Graph& g,
                                const std::vector<bool>& in_set) {
  std::int64_t twice = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!in_set[v]) continue;
    for (Vertex w : g.neighbours(v))
      if (in_set[w]) ++twice;
  }
  return twice / 2;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbours(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_stable_set(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<bool> in(static_cast<std::size_t>(g.vertex_count()), false);
  for (Vertex v : vertices) in[v] = true;
  for (Vertex v : vertices)
    for (Vertex w : g.neighbours(v))
      if (in[w]) return false;
  return true;
}

// ---------------------------------------------------------- ListAssignment

ListAssignment::ListAssignment(std::vector<std::vector<Colour>> lists)
    : lists_(std::move(lists)) {
  for (std::size_t v = 0; v < lists_.size(); ++v) {
    auto& l = lists_[v];
    if (l.empty())
      throw Error(Errc::InvalidSpec,
                  "empty list at vertex " + std::to_string(v));
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    if (l.front() < 0)
      throw Error(Errc::InvalidSpec,
                  "negative colour at vertex " + std::to_string(v));
  }
}

ListAssignment ListAssignment::uniform(int n, std::vector<Colour> colours) {
  return ListAssignment(std::vector<std::vector<Colour>>(
      static_cast<std::size_t>(n), std::move(colours)));
}

bool ListAssignment::contains(Vertex v, Colour c) const {
  const auto& l = lists_[v];
  return std::binary_search(l.begin(), l.end(), c);
}

int ListAssignment::index_of(Vertex v, Colour c) const {
  const auto& l = lists_[v];
  const auto it = std::lower_bound(l.begin(), l.end(), c);
  if (it == l.end() || *it != c) return -1;
  return static_cast<int>(it - l.begin());
}

int ListAssignment::min_size() const noexcept {
  int best = 0;
  for (std::size_t v = 0; v < lists_.size(); ++v) {
    const int s = static_cast<int>(lists_[v].size());
    if (v == 0 || s < best) best = s;
  }
  return best;
}

ListAssignment ListAssignment::restricted(
    std::span<const Vertex> vertices) const {
  ListAssignment out;
  out.lists_.reserve(vertices.size());
  for (Vertex v : vertices) out.lists_.push_back(lists_[v]);
  return out;
}

ListAssignment ListAssignment::truncated(int k) const {
  ListAssignment out = *this;
  for (auto& l : out.lists_)
    if (static_cast<int>(l.size()) > k) l.resize(static_cast<std::size_t>(k));
  return out;
}

// -------------------------------------------------------------- MonoView

MonoView mono_view(const Graph& g, const Colouring& colouring) {
  const int n = g.vertex_count();
  MonoView view;
  view.mono_degree.assign(static_cast<std::size_t>(n), 0);
  view.component.assign(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (view.component[s] != -1) continue;
    const int id = static_cast<int>(view.component_size.size());
    int size = 0;
    view.component[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      ++size;
      for (Vertex w : g.neighbours(v)) {
        if (colouring[w] != colouring[v]) continue;
        ++view.mono_degree[v];
        if (view.component[w] == -1) {
          view.component[w] = id;
          stack.push_back(w);
        }
      }
    }
    view.component_size.push_back(size);
  }
  std::int64_t twice = 0;
  for (int d : view.mono_degree) twice += d;
  view.mono_edge_count = twice / 2;
  return view;
}

Graph monochromatic_subgraph(const Graph& g, const Colouring& colouring) {
  std::vector<Edge> mono;
  for (const auto& [u, v] : g.edges())
    if (colouring[u] == colouring[v]) mono.emplace_back(u, v);
  return build_graph(g.vertex_count(), mono);
}

std::int64_t mono_edge_count(const Graph& g, const Colouring& colouring) {
  std::int64_t count = 0;
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v : g.neighbours(u))
      if (u < v && colouring[u] == colouring[v]) ++count;
  return count;
}

int defect_of(const MonoView& view) {
  int best = 0;
  for (int d : view.mono_degree) best = std::max(best, d);
  return best;
}

int clustering_of(const MonoView& view) {
  int best = 0;
  for (int s : view.component_size) best = std::max(best, s);
  return best;
}

const char* to_string(BoundKind kind) noexcept {
  return kind == BoundKind::Defect ? "defect" : "clustering";
}

bool is_list_colouring(const ListAssignment& lists,
                       const Colouring& colouring) {
  if (static_cast<int>(colouring.size()) != lists.size()) return false;
  for (Vertex v = 0; v < lists.size(); ++v)
    if (!lists.contains(v, colouring[v])) return false;
  return true;
}

Report verify(const Graph& g, const ListAssignment& lists,
              const Colouring& colouring, BoundKind kind, int bound) {
  const int n = g.vertex_count();
  if (lists.size() != n || static_cast<int>(colouring.size()) != n)
    throw Error(Errc::InvalidColouring,
                "colouring/list size does not match the graph");
  for (Vertex v = 0; v < n; ++v) {
    if (!lists.contains(v, colouring[v]))
      throw Error(Errc::InvalidColouring,
                  "vertex " + std::to_string(v) + " has colour " +
                      std::to_string(colouring[v]) + " outside its list");
  }
  const MonoView view = mono_view(g, colouring);
  Report r;
  r.defect = defect_of(view);
  r.clustering = clustering_of(view);
  r.bound = bound;
  r.kind = kind;
  r.ok = (kind == BoundKind::Defect ? r.defect : r.clustering) <= bound;
  return r;
}

}  // namespace sparsecol
