#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "sparsecol/graph.hpp"

namespace sparsecol {

/// Edge list: a header line "n m" then m lines "u v". Text after '#' is
/// ignored, as are blank lines. Throws ParseError naming the line.
Graph parse_graph(std::istream& in);
Graph read_graph_file(const std::string& path);

/// Canonical form: header, then every edge once as "u v" with u < v in
/// lexicographic order.
std::string format_graph(const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

/// 64-bit FNV-1a of format_graph(g), as 16 lowercase hex digits.
std::string graph_digest(const Graph& g);

/// Either one line "v: c1 c2 ..." per vertex, or a single line
/// "uniform k seed=S [pool=P]" drawing k distinct colours per vertex from
/// 0..P-1 (P defaults to 2k).
ListAssignment parse_lists(std::istream& in, int n);
ListAssignment read_lists_file(const std::string& path, int n);
std::string format_lists(const ListAssignment& lists);

/// k distinct colours per vertex from 0..pool-1 by partial Fisher-Yates.
ListAssignment random_lists(int n, int k, std::uint64_t seed, int pool = 0);

/// Whitespace-separated vertex ids in 0..n-1.
std::vector<Vertex> parse_vertex_set(std::istream& in, int n);
std::vector<Vertex> read_vertex_set_file(const std::string& path, int n);

/// One part per line.
std::vector<std::vector<Vertex>> parse_parts(std::istream& in, int n);
std::vector<std::vector<Vertex>> read_parts_file(const std::string& path, int n);

/// Whitespace-separated colours, or a JSON object with a "colours" array.
Colouring parse_colouring(const std::string& text);
Colouring read_colouring_file(const std::string& path);

std::string read_text_file(const std::string& path);

}  // namespace sparsecol
