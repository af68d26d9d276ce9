#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "tripack/graph.hpp"

namespace tripack {

using NodeIndex = std::uint32_t;

enum class NodeKind : std::uint8_t { Source, Sink, BCopy, CCopy, EdgeNode };

/// A node of the network before vertex splitting.
struct NetNode {
  NodeKind kind = NodeKind::Source;
  std::uint32_t copy = 0;  // 1..p for BCopy / CCopy, 0 otherwise
  VertexId vertex = 0;     // the B or C vertex a copy stands for
  Edge edge{};             // the BC edge of an EdgeNode

  /// Short token used in exports: "s", "t", "B1:2", "C2:9", "E:3-8".
  std::string label() const;

  friend bool operator==(const NetNode&, const NetNode&) = default;
};

/// An arc of the split network.
struct FlowArc {
  std::uint32_t tail = 0;
  std::uint32_t head = 0;
  std::int64_t capacity = 0;
};

/// The directed s-t network built from G[B u C]: p copies of B and of C,
/// one node per BC edge, a source feeding every B copy and a sink fed by
/// every C copy.
///
/// Nodes are numbered s = 0, then B copies (copy-major, vertex id order),
/// edge nodes (sorted edge order), C copies, and t last. The flow view
/// splits every internal node k into an In half (2k - 1) and an Out half
/// (2k) joined by a unit arc; s is half 0 and t is the last half.
class NetworkGraph {
 public:
  std::size_t copies() const { return copies_; }
  const std::vector<VertexId>& b_vertices() const { return b_vertices_; }
  const std::vector<VertexId>& c_vertices() const { return c_vertices_; }
  const std::vector<Edge>& bc_edges() const { return bc_edges_; }

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t internal_node_count() const { return nodes_.size() - 2; }
  const std::vector<NetNode>& nodes() const { return nodes_; }
  const NetNode& node(NodeIndex n) const { return nodes_.at(n); }
  NodeIndex source() const { return 0; }
  NodeIndex sink() const { return static_cast<NodeIndex>(nodes_.size() - 1); }

  /// Lookups by identity; copy is 1-based. Throw std::out_of_range if absent.
  NodeIndex b_copy(std::uint32_t copy, VertexId b) const;
  NodeIndex c_copy(std::uint32_t copy, VertexId c) const;
  NodeIndex edge_node(const Edge& e) const;

  /// Unsplit structure.
  const std::vector<NodeIndex>& successors(NodeIndex n) const { return successors_.at(n); }
  std::size_t structural_arc_count() const;

  /// Split (flow) structure.
  std::uint32_t half_count() const { return static_cast<std::uint32_t>(2 * nodes_.size() - 2); }
  std::uint32_t in_half(NodeIndex n) const;
  std::uint32_t out_half(NodeIndex n) const;
  NodeIndex node_of_half(std::uint32_t h) const { return (h + 1) / 2; }
  const std::vector<FlowArc>& arcs() const { return arcs_; }
  std::int64_t structural_capacity() const { return structural_capacity_; }

  /// One arc per line: "tail head capacity", split halves labelled
  /// "<node>/in" and "<node>/out".
  void write_arcs(std::ostream& os) const;

 private:
  friend NetworkGraph build_network(const TripartiteGraph& g);

  NodeIndex add_node(NetNode n);
  void add_structural_arc(NodeIndex tail, NodeIndex head);
  std::string half_label(std::uint32_t h) const;

  std::size_t copies_ = 0;
  std::vector<VertexId> b_vertices_;
  std::vector<VertexId> c_vertices_;
  std::vector<Edge> bc_edges_;
  std::vector<NetNode> nodes_;
  std::vector<std::vector<NodeIndex>> successors_;
  std::vector<FlowArc> arcs_;
  std::int64_t structural_capacity_ = 1;
  std::unordered_map<VertexId, std::size_t> b_pos_;
  std::unordered_map<VertexId, std::size_t> c_pos_;
  std::size_t first_edge_node_ = 0;
  std::size_t first_c_copy_ = 0;
};

/// Builds the network for a valid graph whose part A is an apex (sides AB
/// and AC complete). Throws ValidationError for an invalid graph and
/// PreconditionError when A is not an apex.
NetworkGraph build_network(const TripartiteGraph& g);

}  // namespace tripack
