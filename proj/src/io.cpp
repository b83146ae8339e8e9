#include "sparsecol/io.hpp"

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <numeric>
#include <random>
#include <sstream>

namespace sparsecol {
namespace {

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

// Reads all integers on a line; throws on any other token.
std::vector<std::int64_t> integers(const std::string& text, int line_no) {
  std::istringstream in(text);
  std::vector<std::int64_t> out;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    std::int64_t value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size())
      throw ParseError(line_no, "expected an integer, found '" + token + "'");
    out.push_back(value);
  }
  return out;
}

Vertex vertex_in_range(std::int64_t v, int n, int line_no) {
  if (v < 0 || v >= n)
    throw ParseError(line_no, "vertex " + std::to_string(v) + " outside 0.." +
                                  std::to_string(n - 1));
  return static_cast<Vertex>(v);
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Parse, "cannot open '" + path + "'");
  return in;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::int64_t n = -1;
  std::int64_t m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = strip_comment(line);
    if (blank(text)) continue;
    const auto values = integers(text, line_no);
    if (n < 0) {
      if (values.size() != 2 || values[0] < 0 || values[1] < 0)
        throw ParseError(line_no, "header must be 'n m' with n, m >= 0");
      n = values[0];
      m = values[1];
      continue;
    }
    if (values.size() != 2) throw ParseError(line_no, "edge line must be 'u v'");
    const int count = static_cast<int>(n);
    const Vertex u = vertex_in_range(values[0], count, line_no);
    const Vertex v = vertex_in_range(values[1], count, line_no);
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    edges.emplace_back(u, v);
  }
  if (n < 0) throw ParseError(line_no, "missing 'n m' header");
  if (static_cast<std::int64_t>(edges.size()) != m)
    throw ParseError(line_no, "header announces " + std::to_string(m) +
                                  " edges, found " + std::to_string(edges.size()));
  return build_graph(static_cast<int>(n), edges);
}

Graph read_graph_file(const std::string& path) {
  auto in = open(path);
  return parse_graph(in);
}

std::string format_graph(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  for (const auto& [u, v] : g.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::Parse, "cannot write '" + path + "'");
  out << format_graph(g);
}

std::string graph_digest(const Graph& g) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : format_graph(g)) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

ListAssignment random_lists(int n, int k, std::uint64_t seed, int pool) {
  if (pool == 0) pool = 2 * k;
  if (k < 1 || pool < k)
    throw Error(Errc::InvalidSpec, "need 1 <= k <= pool for random lists");
  std::mt19937_64 rng(seed);
  std::vector<Colour> deck(static_cast<std::size_t>(pool));
  std::vector<std::vector<Colour>> lists;
  for (int v = 0; v < n; ++v) {
    std::iota(deck.begin(), deck.end(), 0);
    for (int i = 0; i < k; ++i)
      std::swap(deck[i], deck[i + rng() % static_cast<std::uint64_t>(pool - i)]);
    lists.emplace_back(deck.begin(), deck.begin() + k);
  }
  return ListAssignment(std::move(lists));
}

ListAssignment parse_lists(std::istream& in, int n) {
  std::string line;
  int line_no = 0;
  std::vector<std::vector<Colour>> lists(static_cast<std::size_t>(n));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  bool any = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = strip_comment(line);
    if (blank(text)) continue;
    std::istringstream words(text);
    std::string first;
    words >> first;
    if (first == "uniform") {
      if (any) throw ParseError(line_no, "'uniform' must be the only entry");
      std::string token;
      std::int64_t k = -1;
      std::uint64_t seed = 0;
      std::int64_t pool = 0;
      if (!(words >> k) || k < 1) throw ParseError(line_no, "uniform needs k >= 1");
      while (words >> token) {
        const auto eq = token.find('=');
        const auto key = token.substr(0, eq);
        const auto value = eq == std::string::npos ? std::string() : token.substr(eq + 1);
        try {
          if (key == "seed") seed = std::stoull(value);
          else if (key == "pool") pool = std::stoll(value);
          else throw ParseError(line_no, "unknown option '" + key + "'");
        } catch (const std::logic_error&) {
          throw ParseError(line_no, "bad value in '" + token + "'");
        }
      }
      try {
        return random_lists(n, static_cast<int>(k), seed, static_cast<int>(pool));
      } catch (const Error& e) {
        throw ParseError(line_no, e.what());
      }
    }
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError(line_no, "expected 'v: colours'");
    const auto head = integers(text.substr(0, colon), line_no);
    if (head.size() != 1) throw ParseError(line_no, "expected one vertex before ':'");
    const Vertex v = vertex_in_range(head[0], n, line_no);
    if (seen[v]) throw ParseError(line_no, "vertex " + std::to_string(v) + " listed twice");
    seen[v] = true;
    any = true;
    for (auto c : integers(text.substr(colon + 1), line_no)) {
      if (c < 0) throw ParseError(line_no, "colours must be nonnegative");
      lists[v].push_back(static_cast<Colour>(c));
    }
    if (lists[v].empty()) throw ParseError(line_no, "empty list");
  }
  for (Vertex v = 0; v < n; ++v)
    if (!seen[v]) throw ParseError(line_no, "no list for vertex " + std::to_string(v));
  return ListAssignment(std::move(lists));
}

ListAssignment read_lists_file(const std::string& path, int n) {
  auto in = open(path);
  return parse_lists(in, n);
}

std::string format_lists(const ListAssignment& lists) {
  std::string out;
  for (Vertex v = 0; v < lists.size(); ++v) {
    out += std::to_string(v) + ":";
    for (Colour c : lists[v]) out += " " + std::to_string(c);
    out += "\n";
  }
  return out;
}

std::vector<Vertex> parse_vertex_set(std::istream& in, int n) {
  std::vector<Vertex> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    for (auto v : integers(strip_comment(line), line_no))
      out.push_back(vertex_in_range(v, n, line_no));
  }
  return out;
}

std::vector<Vertex> read_vertex_set_file(const std::string& path, int n) {
  auto in = open(path);
  return parse_vertex_set(in, n);
}

std::vector<std::vector<Vertex>> parse_parts(std::istream& in, int n) {
  std::vector<std::vector<Vertex>> parts;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = strip_comment(line);
    if (blank(text)) continue;
    std::vector<Vertex> part;
    for (auto v : integers(text, line_no)) part.push_back(vertex_in_range(v, n, line_no));
    parts.push_back(std::move(part));
  }
  return parts;
}

std::vector<std::vector<Vertex>> read_parts_file(const std::string& path, int n) {
  auto in = open(path);
  return parse_parts(in, n);
}

Colouring parse_colouring(const std::string& text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && text[start] == '{') {
    try {
      return nlohmann::json::parse(text).at("colours").get<Colouring>();
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::Parse, std::string("colouring JSON: ") + e.what());
    }
  }
  Colouring out;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    for (auto c : integers(strip_comment(line), line_no)) out.push_back(static_cast<Colour>(c));
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  auto in = open(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Colouring read_colouring_file(const std::string& path) {
  return parse_colouring(read_text_file(path));
}

}  // namespace sparsecol
