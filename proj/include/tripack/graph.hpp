#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace tripack {

using VertexId = std::uint32_t;

enum class Part : std::uint8_t { A = 0, B = 1, C = 2 };
enum class Side : std::uint8_t { AB = 0, AC = 1, BC = 2 };

inline constexpr std::array<Part, 3> kParts{Part::A, Part::B, Part::C};
inline constexpr std::array<Side, 3> kSides{Side::AB, Side::AC, Side::BC};

constexpr std::size_t index(Part p) { return static_cast<std::size_t>(p); }
constexpr std::size_t index(Side s) { return static_cast<std::size_t>(s); }

/// The two parts joined by a side, in (first, second) order.
constexpr std::pair<Part, Part> side_parts(Side s) {
  switch (s) {
    case Side::AB:
      return {Part::A, Part::B};
    case Side::AC:
      return {Part::A, Part::C};
    case Side::BC:
      return {Part::B, Part::C};
  }
  return {Part::B, Part::C};
}

std::string_view to_string(Part p);
std::string_view to_string(Side s);

/// Undirected edge, stored with u <= v so that equal edges compare equal.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  constexpr Edge() = default;
  constexpr Edge(VertexId x, VertexId y) : u(std::min(x, y)), v(std::max(x, y)) {}

  constexpr bool touches(VertexId x) const { return u == x || v == x; }
  constexpr VertexId other(VertexId x) const { return x == u ? v : u; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

/// A triangle of a tripartite graph: one vertex per part.
struct Triangle {
  VertexId a = 0;
  VertexId b = 0;
  VertexId c = 0;

  constexpr std::array<Edge, 3> edges() const { return {Edge{a, b}, Edge{a, c}, Edge{b, c}}; }

  friend constexpr auto operator<=>(const Triangle&, const Triangle&) = default;
};

std::string to_string(const Triangle& t);

struct Transversal {
  std::vector<Edge> edges;

  std::size_t size() const { return edges.size(); }
  friend bool operator==(const Transversal&, const Transversal&) = default;
};

struct Packing {
  std::vector<Triangle> triangles;

  std::size_t size() const { return triangles.size(); }
  friend bool operator==(const Packing&, const Packing&) = default;
};

/// A tripartite graph G = (A, B, C; E) with its three side edge sets.
///
/// Construction never throws on structural problems; it stores what it is
/// given (parts sorted, edges canonicalized and sorted) so that validate()
/// can report every violation. Operations that need a valid graph check it.
class TripartiteGraph {
 public:
  TripartiteGraph() = default;
  TripartiteGraph(std::array<std::vector<VertexId>, 3> parts,
                  std::array<std::vector<Edge>, 3> sides);

  const std::vector<VertexId>& part(Part p) const { return parts_[index(p)]; }
  const std::vector<Edge>& side(Side s) const { return sides_[index(s)]; }

  std::size_t p() const { return parts_[0].size(); }
  std::size_t q() const { return parts_[1].size(); }
  std::size_t r() const { return parts_[2].size(); }
  std::size_t vertex_count() const { return p() + q() + r(); }
  std::size_t edge_count() const;

  std::optional<Part> part_of(VertexId v) const;
  bool has_edge(VertexId x, VertexId y) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  /// All edges of all three sides, sorted.
  std::vector<Edge> edges() const;

  /// True when the side holds every pair between its two parts.
  bool side_complete(Side s) const;

  /// True when both sides incident to A are complete (A is an apex).
  bool bilaterally_complete() const {
    return side_complete(Side::AB) && side_complete(Side::AC);
  }

  friend bool operator==(const TripartiteGraph& x, const TripartiteGraph& y) {
    return x.parts_ == y.parts_ && x.sides_ == y.sides_;
  }

 private:
  static std::uint64_t key(VertexId x, VertexId y) {
    Edge e{x, y};
    return (static_cast<std::uint64_t>(e.u) << 32) | e.v;
  }

  std::array<std::vector<VertexId>, 3> parts_;
  std::array<std::vector<Edge>, 3> sides_;
  std::unordered_map<VertexId, Part> part_of_;
  std::unordered_set<std::uint64_t> edge_keys_;
};

struct ValidationReport {
  bool parts_disjoint = true;
  bool edges_respect_parts = true;
  bool simple = true;  // no self-loops, no duplicate edges
  std::array<bool, 3> side_complete{true, true, true};
  std::vector<std::string> problems;

  bool valid() const { return parts_disjoint && edges_respect_parts && simple; }
  explicit operator bool() const { return valid(); }
};

ValidationReport validate(const TripartiteGraph& g);

/// Throws ValidationError listing the first problem when g is invalid.
void require_valid(const TripartiteGraph& g);

/// Assignment of input parts to roles: roles[k] is the input part that
/// plays role k (A, B, C) after relabelling.
struct Orientation {
  std::array<Part, 3> roles{Part::A, Part::B, Part::C};

  Part apex() const { return roles[0]; }
  bool is_identity() const { return roles == std::array{Part::A, Part::B, Part::C}; }
  friend bool operator==(const Orientation&, const Orientation&) = default;
};

/// Chooses an apex part whose two incident sides are complete, preferring the
/// smallest such part and then input order. The other two parts keep their
/// input order. Returns nullopt when no part qualifies.
std::optional<Orientation> detect_orientation(const TripartiteGraph& g);

/// Relabels parts so that roles[k] becomes part k.
TripartiteGraph apply_orientation(const TripartiteGraph& g, const Orientation& o);

/// Builds a Triangle from three vertices given in any order, assigning each
/// to its part. Returns nullopt when they do not span all three parts.
std::optional<Triangle> make_triangle(const TripartiteGraph& g, VertexId x, VertexId y,
                                      VertexId z);

/// All triangles, sorted by (a, b, c).
std::vector<Triangle> enumerate_triangles(const TripartiteGraph& g);

/// True iff every triangle of g contains an edge of `edges`.
/// Throws PreconditionError if some edge is not in g.
bool is_transversal(const TripartiteGraph& g, std::span<const Edge> edges);
inline bool is_transversal(const TripartiteGraph& g, const Transversal& t) {
  return is_transversal(g, t.edges);
}

/// True iff the triangles are pairwise edge-disjoint.
/// Throws PreconditionError if some triangle is not in g.
bool is_packing(const TripartiteGraph& g, std::span<const Triangle> triangles);
inline bool is_packing(const TripartiteGraph& g, const Packing& p) {
  return is_packing(g, p.triangles);
}

}  // namespace tripack
