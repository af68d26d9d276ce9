#include "tripack/network.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "tripack/error.hpp"

namespace tripack {

std::string NetNode::label() const {
  switch (kind) {
    case NodeKind::Source:
      return "s";
    case NodeKind::Sink:
      return "t";
    case NodeKind::BCopy:
      return "B" + std::to_string(copy) + ":" + std::to_string(vertex);
    case NodeKind::CCopy:
      return "C" + std::to_string(copy) + ":" + std::to_string(vertex);
    case NodeKind::EdgeNode:
      return "E:" + to_string(edge);
  }
  return "?";
}

NodeIndex NetworkGraph::b_copy(std::uint32_t copy, VertexId b) const {
  auto it = b_pos_.find(b);
  if (copy < 1 || copy > copies_ || it == b_pos_.end()) {
    throw std::out_of_range("no copy " + std::to_string(copy) + " of B vertex " +
                            std::to_string(b));
  }
  return static_cast<NodeIndex>(1 + (copy - 1) * b_vertices_.size() + it->second);
}

NodeIndex NetworkGraph::c_copy(std::uint32_t copy, VertexId c) const {
  auto it = c_pos_.find(c);
  if (copy < 1 || copy > copies_ || it == c_pos_.end()) {
    throw std::out_of_range("no copy " + std::to_string(copy) + " of C vertex " +
                            std::to_string(c));
  }
  return static_cast<NodeIndex>(first_c_copy_ + (copy - 1) * c_vertices_.size() + it->second);
}

NodeIndex NetworkGraph::edge_node(const Edge& e) const {
  auto it = std::lower_bound(bc_edges_.begin(), bc_edges_.end(), e);
  if (it == bc_edges_.end() || *it != e) {
    throw std::out_of_range("no edge node for " + to_string(e));
  }
  return static_cast<NodeIndex>(first_edge_node_ + (it - bc_edges_.begin()));
}

std::size_t NetworkGraph::structural_arc_count() const {
  std::size_t total = 0;
  for (const auto& succ : successors_) total += succ.size();
  return total;
}

std::uint32_t NetworkGraph::in_half(NodeIndex n) const {
  return n == source() ? 0 : 2 * n - 1;
}

std::uint32_t NetworkGraph::out_half(NodeIndex n) const {
  if (n == source()) return 0;
  return n == sink() ? 2 * n - 1 : 2 * n;
}

NodeIndex NetworkGraph::add_node(NetNode n) {
  nodes_.push_back(n);
  successors_.emplace_back();
  return static_cast<NodeIndex>(nodes_.size() - 1);
}

void NetworkGraph::add_structural_arc(NodeIndex tail, NodeIndex head) {
  successors_[tail].push_back(head);
  arcs_.push_back({out_half(tail), in_half(head), structural_capacity_});
}

std::string NetworkGraph::half_label(std::uint32_t h) const {
  NodeIndex n = node_of_half(h);
  if (n == source() || n == sink()) return nodes_[n].label();
  return nodes_[n].label() + (h == in_half(n) ? "/in" : "/out");
}

void NetworkGraph::write_arcs(std::ostream& os) const {
  for (const FlowArc& a : arcs_) {
    os << half_label(a.tail) << ' ' << half_label(a.head) << ' ' << a.capacity << '\n';
  }
}

NetworkGraph build_network(const TripartiteGraph& g) {
  require_valid(g);
  if (!g.bilaterally_complete()) {
    throw PreconditionError("build_network: sides AB and AC must be complete");
  }

  NetworkGraph h;
  const std::size_t p = g.p();
  h.copies_ = p;
  h.b_vertices_ = g.part(Part::B);
  h.c_vertices_ = g.part(Part::C);
  h.bc_edges_ = g.side(Side::BC);
  for (std::size_t i = 0; i < h.b_vertices_.size(); ++i) h.b_pos_[h.b_vertices_[i]] = i;
  for (std::size_t i = 0; i < h.c_vertices_.size(); ++i) h.c_pos_[h.c_vertices_[i]] = i;
  const std::size_t m = h.bc_edges_.size();
  h.structural_capacity_ = static_cast<std::int64_t>(p * m + 1);

  h.add_node({NodeKind::Source});
  for (std::uint32_t i = 1; i <= p; ++i) {
    for (VertexId b : h.b_vertices_) h.add_node({NodeKind::BCopy, i, b});
  }
  h.first_edge_node_ = h.nodes_.size();
  for (const Edge& e : h.bc_edges_) h.add_node({NodeKind::EdgeNode, 0, 0, e});
  h.first_c_copy_ = h.nodes_.size();
  for (std::uint32_t i = 1; i <= p; ++i) {
    for (VertexId c : h.c_vertices_) h.add_node({NodeKind::CCopy, i, c});
  }
  h.add_node({NodeKind::Sink});

  // Unit split arcs for every internal node.
  for (NodeIndex n = 1; n < h.sink(); ++n) h.arcs_.push_back({h.in_half(n), h.out_half(n), 1});

  const NodeIndex s = h.source();
  const NodeIndex t = h.sink();
  for (std::uint32_t i = 1; i <= p; ++i) {
    for (VertexId b : h.b_vertices_) h.add_structural_arc(s, h.b_copy(i, b));
  }
  for (const Edge& e : h.bc_edges_) {
    VertexId b = g.part_of(e.u) == Part::B ? e.u : e.v;
    VertexId c = e.other(b);
    NodeIndex en = h.edge_node(e);
    for (std::uint32_t i = 1; i <= p; ++i) h.add_structural_arc(h.b_copy(i, b), en);
    for (std::uint32_t j = 1; j <= p; ++j) h.add_structural_arc(en, h.c_copy(j, c));
  }
  for (std::uint32_t j = 1; j <= p; ++j) {
    for (VertexId c : h.c_vertices_) h.add_structural_arc(h.c_copy(j, c), t);
  }
  for (auto& succ : h.successors_) std::sort(succ.begin(), succ.end());
  return h;
}

}  // namespace tripack
