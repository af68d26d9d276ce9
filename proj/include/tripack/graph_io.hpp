#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "tripack/graph.hpp"

namespace tripack {

/// Parses the line-oriented graph format (see docs/graph-format.md):
///
///   # comment
///   A: 0 1
///   B: 2 3 4 5
///   C: 6 7 8 9
///   AB: complete
///   AC: complete
///   BC: 2-6 2-7 2-8 3-8 3-9 4-9 5-9
///
/// Throws ParseError (syntax or semantic) with the offending line and column.
/// The returned graph always passes validate().
TripartiteGraph parse_graph(std::string_view text);

/// Inverse of parse_graph. Complete non-empty sides are written as "complete".
std::string serialize_graph(const TripartiteGraph& g);

std::string read_text_file(const std::filesystem::path& path);
TripartiteGraph load_graph(const std::filesystem::path& path);

/// Whitespace-separated "u-v" tokens ('#' starts a comment). Syntax only.
std::vector<Edge> parse_edge_list(std::string_view text);

/// Whitespace-separated "x-y-z" tokens, vertices in any order; each token is
/// assigned to parts of g. Throws ParseError on syntax errors or on a token
/// whose vertices do not span the three parts.
std::vector<Triangle> parse_triangle_list(std::string_view text, const TripartiteGraph& g);

}  // namespace tripack
