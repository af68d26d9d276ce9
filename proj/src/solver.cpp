#include "tripack/solver.hpp"

#include <algorithm>

#include "tripack/error.hpp"

namespace tripack {

Transversal separator_to_transversal(const Separator& sep, const NetworkGraph& h,
                                     const TripartiteGraph& oriented) {
  if (!separates(h, sep.nodes)) {
    throw PreconditionError("separator_to_transversal: nodes do not separate s from t");
  }
  const auto& apex = oriented.part(Part::A);
  Transversal out;
  for (NodeIndex n : sep.nodes) {
    const NetNode& node = h.node(n);
    switch (node.kind) {
      case NodeKind::EdgeNode:
        out.edges.push_back(node.edge);
        break;
      case NodeKind::BCopy:
      case NodeKind::CCopy:
        out.edges.emplace_back(apex.at(node.copy - 1), node.vertex);
        break;
      default:
        throw PreconditionError("separator_to_transversal: separator contains s or t");
    }
  }
  std::sort(out.edges.begin(), out.edges.end());
  if (std::adjacent_find(out.edges.begin(), out.edges.end()) != out.edges.end() ||
      out.size() != sep.size()) {
    throw InvariantViolation("separator nodes mapped to coinciding edges");
  }
  if (!is_transversal(oriented, out)) {
    throw InvariantViolation("separator did not map to a transversal");
  }
  return out;
}

Packing assemble_packing(const EdgeColouring& colouring, const TripartiteGraph& oriented) {
  const auto& apex = oriented.part(Part::A);
  if (colouring.colour_count() > apex.size()) {
    throw PreconditionError("assemble_packing: " + std::to_string(colouring.colour_count()) +
                            " colour classes but only " + std::to_string(apex.size()) +
                            " apex vertices");
  }
  Packing out;
  for (std::size_t i = 0; i < colouring.classes.size(); ++i) {
    for (const Edge& e : colouring.classes[i]) {
      VertexId b = oriented.part_of(e.u) == Part::B ? e.u : e.v;
      out.triangles.push_back({apex[i], b, e.other(b)});
    }
  }
  std::sort(out.triangles.begin(), out.triangles.end());
  return out;
}

SolveTrace solve_traced(const TripartiteGraph& g) {
  require_valid(g);
  auto orientation = detect_orientation(g);
  if (!orientation) throw NotBilaterallyComplete();

  SolveTrace trace;
  trace.orientation = *orientation;
  trace.oriented = apply_orientation(g, *orientation);
  trace.network = build_network(trace.oriented);
  trace.flow = max_flow(trace.network);
  trace.paths = decompose_flow(trace.network, trace.flow);
  trace.separator = min_separator(trace.network, trace.flow);
  if (trace.paths.value() != trace.separator.size()) {
    throw InvariantViolation("path count differs from separator size");
  }

  trace.subgraph = extract_subgraph(trace.paths, trace.network);
  trace.colouring = edge_colour(trace.subgraph);

  Certificate& cert = trace.certificate;
  cert.transversal = separator_to_transversal(trace.separator, trace.network, trace.oriented);
  Packing packing = assemble_packing(trace.colouring, trace.oriented);
  for (const Triangle& t : packing.triangles) {
    auto relabelled = make_triangle(g, t.a, t.b, t.c);
    if (!relabelled) throw InvariantViolation("packed triangle does not span three parts");
    cert.packing.triangles.push_back(*relabelled);
  }
  std::sort(cert.packing.triangles.begin(), cert.packing.triangles.end());

  cert.value = cert.transversal.size();
  cert.transversal_verified = is_transversal(g, cert.transversal);
  cert.packing_verified = is_packing(g, cert.packing);
  cert.sizes_equal = cert.transversal.size() == cert.packing.size();
  if (!cert.verified()) {
    throw InvariantViolation("solver certificate failed verification");
  }
  return trace;
}

Certificate solve(const TripartiteGraph& g) { return solve_traced(g).certificate; }

}  // namespace tripack
