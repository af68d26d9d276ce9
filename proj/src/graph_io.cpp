#include "tripack/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "tripack/error.hpp"

namespace tripack {

namespace {

struct Token {
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

using Kind = ParseError::Kind;

[[noreturn]] void fail(Kind kind, const Token& at, const std::string& message) {
  throw ParseError(kind, at.line, at.column, message);
}

// Splits a line into whitespace-separated tokens, dropping a trailing comment.
std::vector<Token> tokenize(std::string_view line, std::size_t line_no, std::size_t offset = 0) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char ch = line[i];
    if (ch == '#') break;
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
           line[i] != '#') {
      ++i;
    }
    out.push_back({line.substr(start, i - start), line_no, offset + start + 1});
  }
  return out;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty() || line_no == 0) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    fn(line, line_no);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
}

std::optional<VertexId> to_vertex(std::string_view s) {
  VertexId v = 0;
  if (s.empty()) return std::nullopt;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// "x-y" or "x-y-z" into vertex ids.
std::vector<VertexId> split_vertices(const Token& tok, std::size_t expected, const char* what) {
  std::vector<VertexId> out;
  std::string_view rest = tok.text;
  for (;;) {
    auto dash = rest.find('-');
    auto v = to_vertex(rest.substr(0, dash));
    if (!v) fail(Kind::Syntax, tok, std::string("malformed ") + what + " '" + std::string(tok.text) + "'");
    out.push_back(*v);
    if (dash == std::string_view::npos) break;
    rest.remove_prefix(dash + 1);
  }
  if (out.size() != expected) {
    fail(Kind::Syntax, tok, std::string("malformed ") + what + " '" + std::string(tok.text) + "'");
  }
  return out;
}

struct SideDecl {
  bool complete = false;
  std::vector<Token> edges;
};

}  // namespace

TripartiteGraph parse_graph(std::string_view text) {
  static const std::map<std::string_view, int> kKeys{{"A", 0}, {"B", 1},  {"C", 2},
                                                     {"AB", 3}, {"AC", 4}, {"BC", 5}};
  std::array<std::optional<std::vector<Token>>, 3> part_decls;
  std::array<SideDecl, 3> side_decls;

  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    std::string_view body = line.substr(0, line.find('#'));
    auto tokens = tokenize(body, line_no);
    if (tokens.empty()) return;
    auto colon = body.find(':');
    if (colon == std::string_view::npos) {
      fail(Kind::Syntax, tokens.front(), "expected '<key>:' at start of line");
    }
    auto key_tokens = tokenize(body.substr(0, colon), line_no);
    if (key_tokens.size() != 1) {
      Token at = key_tokens.empty() ? Token{body, line_no, colon + 1} : key_tokens.back();
      fail(Kind::Syntax, at, "expected exactly one key before ':'");
    }
    const Token& key = key_tokens.front();
    auto found = kKeys.find(key.text);
    if (found == kKeys.end()) {
      fail(Kind::Syntax, key, "unknown key '" + std::string(key.text) + "' (expected A, B, C, AB, AC or BC)");
    }
    auto items = tokenize(body.substr(colon + 1), line_no, colon + 1);

    if (found->second < 3) {
      auto& decl = part_decls[found->second];
      if (decl) fail(Kind::Semantic, key, "part " + std::string(key.text) + " declared twice");
      for (const Token& t : items) {
        if (!to_vertex(t.text)) {
          fail(Kind::Syntax, t, "expected a vertex id, got '" + std::string(t.text) + "'");
        }
      }
      decl = std::move(items);
      return;
    }

    const int s = found->second - 3;
    SideDecl& decl = side_decls[s];
    for (const Token& t : items) {
      if (t.text == "complete") {
        if (decl.complete) fail(Kind::Semantic, t, "side " + std::string(key.text) + " marked complete twice");
        if (!decl.edges.empty()) {
          fail(Kind::Semantic, t, "side " + std::string(key.text) + " mixes 'complete' with an edge list");
        }
        decl.complete = true;
      } else {
        if (decl.complete) {
          fail(Kind::Semantic, t, "side " + std::string(key.text) + " mixes 'complete' with an edge list");
        }
        split_vertices(t, 2, "edge");
        decl.edges.push_back(t);
      }
    }
  });

  std::array<std::vector<VertexId>, 3> parts;
  std::map<VertexId, Part> owner;
  for (auto part : kParts) {
    if (!part_decls[index(part)]) continue;
    for (const Token& t : *part_decls[index(part)]) {
      VertexId v = *to_vertex(t.text);
      auto [it, inserted] = owner.try_emplace(v, part);
      if (!inserted) {
        fail(Kind::Semantic, t, "vertex " + std::to_string(v) + " already declared in part " +
                                    std::string(to_string(it->second)));
      }
      parts[index(part)].push_back(v);
    }
  }

  std::array<std::vector<Edge>, 3> sides;
  for (auto side : kSides) {
    auto [x, y] = side_parts(side);
    const SideDecl& decl = side_decls[index(side)];
    auto& out = sides[index(side)];
    if (decl.complete) {
      for (VertexId u : parts[index(x)]) {
        for (VertexId v : parts[index(y)]) out.emplace_back(u, v);
      }
      continue;
    }
    std::set<Edge> seen;
    for (const Token& t : decl.edges) {
      auto ends = split_vertices(t, 2, "edge");
      for (VertexId v : ends) {
        auto it = owner.find(v);
        if (it == owner.end()) {
          fail(Kind::Semantic, t, "vertex " + std::to_string(v) + " is not declared in any part");
        }
        if (it->second != x && it->second != y) {
          fail(Kind::Semantic, t, "edge " + std::string(t.text) + " has endpoint " +
                                      std::to_string(v) + " in part " +
                                      std::string(to_string(it->second)) + ", outside side " +
                                      std::string(to_string(side)));
        }
      }
      if (owner[ends[0]] == owner[ends[1]]) {
        fail(Kind::Semantic, t, "edge " + std::string(t.text) + " lies within part " +
                                    std::string(to_string(owner[ends[0]])));
      }
      Edge e{ends[0], ends[1]};
      if (!seen.insert(e).second) {
        fail(Kind::Semantic, t, "duplicate edge " + std::string(t.text));
      }
      out.push_back(e);
    }
  }

  TripartiteGraph g(std::move(parts), std::move(sides));
  auto report = validate(g);
  if (!report.valid()) throw ParseError(Kind::Semantic, 0, 0, report.problems.front());
  return g;
}

std::string serialize_graph(const TripartiteGraph& g) {
  std::ostringstream os;
  os << "# tripartite graph: |A|=" << g.p() << " |B|=" << g.q() << " |C|=" << g.r() << '\n';
  for (auto part : kParts) {
    os << to_string(part) << ':';
    for (VertexId v : g.part(part)) os << ' ' << v;
    os << '\n';
  }
  for (auto side : kSides) {
    const Part x = side_parts(side).first;
    os << to_string(side) << ':';
    const auto& es = g.side(side);
    if (!es.empty() && g.side_complete(side)) {
      os << " complete\n";
      continue;
    }
    for (const Edge& e : es) {
      VertexId first = g.part_of(e.u) == x ? e.u : e.v;
      os << ' ' << first << '-' << e.other(first);
    }
    os << '\n';
  }
  return os.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TripartiteGraph load_graph(const std::filesystem::path& path) {
  return parse_graph(read_text_file(path));
}

std::vector<Edge> parse_edge_list(std::string_view text) {
  std::vector<Edge> out;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    for (const Token& t : tokenize(line, line_no)) {
      auto ends = split_vertices(t, 2, "edge");
      out.emplace_back(ends[0], ends[1]);
    }
  });
  return out;
}

std::vector<Triangle> parse_triangle_list(std::string_view text, const TripartiteGraph& g) {
  std::vector<Triangle> out;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    for (const Token& t : tokenize(line, line_no)) {
      auto vs = split_vertices(t, 3, "triangle");
      auto tri = make_triangle(g, vs[0], vs[1], vs[2]);
      if (!tri) {
        fail(Kind::Semantic, t, "triangle " + std::string(t.text) + " does not have one vertex in each part");
      }
      out.push_back(*tri);
    }
  });
  return out;
}

}  // namespace tripack
