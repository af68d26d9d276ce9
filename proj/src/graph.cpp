#include "tripack/graph.hpp"

#include <set>

#include "tripack/error.hpp"

namespace tripack {

std::string_view to_string(Part p) {
  switch (p) {
    case Part::A:
      return "A";
    case Part::B:
      return "B";
    case Part::C:
      return "C";
  }
  return "?";
}

std::string_view to_string(Side s) {
  switch (s) {
    case Side::AB:
      return "AB";
    case Side::AC:
      return "AC";
    case Side::BC:
      return "BC";
  }
  return "?";
}

std::string to_string(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

std::string to_string(const Triangle& t) {
  return std::to_string(t.a) + "-" + std::to_string(t.b) + "-" + std::to_string(t.c);
}

TripartiteGraph::TripartiteGraph(std::array<std::vector<VertexId>, 3> parts,
                                 std::array<std::vector<Edge>, 3> sides)
    : parts_(std::move(parts)), sides_(std::move(sides)) {
  for (auto part : kParts) {
    auto& vs = parts_[index(part)];
    std::sort(vs.begin(), vs.end());
    for (VertexId v : vs) part_of_.try_emplace(v, part);
  }
  for (auto& es : sides_) {
    std::sort(es.begin(), es.end());
    for (const Edge& e : es) edge_keys_.insert(key(e.u, e.v));
  }
}

std::size_t TripartiteGraph::edge_count() const {
  return sides_[0].size() + sides_[1].size() + sides_[2].size();
}

std::optional<Part> TripartiteGraph::part_of(VertexId v) const {
  auto it = part_of_.find(v);
  if (it == part_of_.end()) return std::nullopt;
  return it->second;
}

bool TripartiteGraph::has_edge(VertexId x, VertexId y) const {
  return edge_keys_.contains(key(x, y));
}

std::vector<Edge> TripartiteGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (const auto& es : sides_) out.insert(out.end(), es.begin(), es.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool TripartiteGraph::side_complete(Side s) const {
  auto [x, y] = side_parts(s);
  std::set<Edge> distinct(sides_[index(s)].begin(), sides_[index(s)].end());
  return distinct.size() == part(x).size() * part(y).size();
}

ValidationReport validate(const TripartiteGraph& g) {
  ValidationReport report;

  std::unordered_map<VertexId, Part> seen;
  for (auto part : kParts) {
    const auto& vs = g.part(part);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      auto [it, inserted] = seen.try_emplace(vs[i], part);
      if (!inserted) {
        report.parts_disjoint = false;
        report.problems.push_back("vertex " + std::to_string(vs[i]) + " appears in part " +
                                  std::string(to_string(it->second)) + " and part " +
                                  std::string(to_string(part)));
      }
    }
  }

  for (auto side : kSides) {
    auto [x, y] = side_parts(side);
    const auto& es = g.side(side);
    const std::string where = " in side " + std::string(to_string(side));
    for (std::size_t i = 0; i < es.size(); ++i) {
      const Edge& e = es[i];
      if (e.u == e.v) {
        report.simple = false;
        report.problems.push_back("self-loop " + to_string(e) + where);
        continue;
      }
      if (i > 0 && es[i - 1] == e) {
        report.simple = false;
        report.problems.push_back("duplicate edge " + to_string(e) + where);
      }
      auto pu = g.part_of(e.u);
      auto pv = g.part_of(e.v);
      if (!pu || !pv) {
        report.edges_respect_parts = false;
        report.problems.push_back("edge " + to_string(e) + where + " has an undeclared endpoint");
        continue;
      }
      if (*pu == *pv) {
        report.edges_respect_parts = false;
        report.problems.push_back("edge " + to_string(e) + " lies within part " +
                                  std::string(to_string(*pu)));
        continue;
      }
      bool matches = (*pu == x && *pv == y) || (*pu == y && *pv == x);
      if (!matches) {
        report.edges_respect_parts = false;
        report.problems.push_back("edge " + to_string(e) + where + " joins parts " +
                                  std::string(to_string(*pu)) + " and " +
                                  std::string(to_string(*pv)));
      }
    }
    report.side_complete[index(side)] = g.side_complete(side);
  }
  return report;
}

void require_valid(const TripartiteGraph& g) {
  auto report = validate(g);
  if (!report.valid()) throw ValidationError(report.problems.front());
}

std::optional<Orientation> detect_orientation(const TripartiteGraph& g) {
  std::optional<Orientation> best;
  std::size_t best_size = 0;
  for (auto apex : kParts) {
    // Sides incident to each part: A -> {AB, AC}, B -> {AB, BC}, C -> {AC, BC}.
    Side s1 = apex == Part::C ? Side::AC : Side::AB;
    Side s2 = apex == Part::A ? Side::AC : Side::BC;
    if (!g.side_complete(s1) || !g.side_complete(s2)) continue;
    std::size_t size = g.part(apex).size();
    if (best && size >= best_size) continue;
    Orientation o;
    o.roles[0] = apex;
    std::size_t k = 1;
    for (auto other : kParts) {
      if (other != apex) o.roles[k++] = other;
    }
    best = o;
    best_size = size;
  }
  return best;
}

TripartiteGraph apply_orientation(const TripartiteGraph& g, const Orientation& o) {
  if (o.is_identity()) return g;
  std::array<std::vector<VertexId>, 3> parts;
  for (std::size_t k = 0; k < 3; ++k) parts[k] = g.part(o.roles[k]);

  // Route every edge to the side joining its endpoints' new roles.
  std::array<Part, 3> role_of{};
  for (std::size_t k = 0; k < 3; ++k) role_of[index(o.roles[k])] = kParts[k];
  std::array<std::vector<Edge>, 3> sides;
  for (auto side : kSides) {
    auto [x, y] = side_parts(side);
    Part nx = role_of[index(x)];
    Part ny = role_of[index(y)];
    Side target = (nx != Part::A && ny != Part::A) ? Side::BC
                  : (nx == Part::B || ny == Part::B) ? Side::AB
                                                     : Side::AC;
    const auto& es = g.side(side);
    sides[index(target)].insert(sides[index(target)].end(), es.begin(), es.end());
  }
  return TripartiteGraph(std::move(parts), std::move(sides));
}

std::optional<Triangle> make_triangle(const TripartiteGraph& g, VertexId x, VertexId y,
                                      VertexId z) {
  std::array<std::optional<VertexId>, 3> slot;
  for (VertexId v : {x, y, z}) {
    auto part = g.part_of(v);
    if (!part || slot[index(*part)]) return std::nullopt;
    slot[index(*part)] = v;
  }
  return Triangle{*slot[0], *slot[1], *slot[2]};
}

std::vector<Triangle> enumerate_triangles(const TripartiteGraph& g) {
  std::vector<Triangle> out;
  for (const Edge& e : g.side(Side::BC)) {
    VertexId b = g.part_of(e.u) == Part::B ? e.u : e.v;
    VertexId c = e.other(b);
    for (VertexId a : g.part(Part::A)) {
      if (g.has_edge(a, b) && g.has_edge(a, c)) out.push_back({a, b, c});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_transversal(const TripartiteGraph& g, std::span<const Edge> edges) {
  std::set<Edge> chosen;
  for (const Edge& e : edges) {
    if (!g.has_edge(e)) throw PreconditionError("edge " + to_string(e) + " is not in the graph");
    chosen.insert(e);
  }
  for (const Triangle& t : enumerate_triangles(g)) {
    auto es = t.edges();
    if (std::none_of(es.begin(), es.end(), [&](const Edge& e) { return chosen.contains(e); })) {
      return false;
    }
  }
  return true;
}

bool is_packing(const TripartiteGraph& g, std::span<const Triangle> triangles) {
  std::set<Edge> used;
  bool disjoint = true;
  for (const Triangle& t : triangles) {
    bool roles_ok = g.part_of(t.a) == Part::A && g.part_of(t.b) == Part::B &&
                    g.part_of(t.c) == Part::C;
    auto es = t.edges();
    if (!roles_ok || !std::all_of(es.begin(), es.end(), [&](const Edge& e) { return g.has_edge(e); })) {
      throw PreconditionError("triangle " + to_string(t) + " is not in the graph");
    }
    for (const Edge& e : es) {
      if (!used.insert(e).second) disjoint = false;
    }
  }
  return disjoint;
}

}  // namespace tripack
