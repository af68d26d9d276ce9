#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tripack/network.hpp"

namespace tripack {

/// An integral flow on the split network: one value per NetworkGraph::arcs() entry.
struct FlowState {
  std::int64_t value = 0;
  std::vector<std::int64_t> arc_flow;
};

/// Internally vertex-disjoint s-t paths, each s -> BCopy -> EdgeNode -> CCopy -> t.
struct PathSet {
  std::vector<std::vector<NodeIndex>> paths;

  std::size_t value() const { return paths.size(); }
};

/// Internal network nodes whose removal disconnects s from t.
struct Separator {
  std::vector<NodeIndex> nodes;  // sorted

  std::size_t size() const { return nodes.size(); }
};

/// Maximum s-t flow by shortest augmenting paths.
FlowState max_flow(const NetworkGraph& h);

/// Splits an integral flow into unit s-t paths, sorted by node sequence.
PathSet decompose_flow(const NetworkGraph& h, const FlowState& flow);

/// A maximum family of internally vertex-disjoint s-t paths.
PathSet max_disjoint_paths(const NetworkGraph& h);

/// Nodes whose In half is residual-reachable from s and whose Out half is not.
/// `flow` must be maximum.
Separator min_separator(const NetworkGraph& h, const FlowState& flow);

/// True iff no directed s-t path survives after deleting `removed` (which
/// must not contain s or t).
bool separates(const NetworkGraph& h, std::span<const NodeIndex> removed);

/// True iff every path is a directed s-t path of h and no internal node is
/// shared between two paths.
bool is_disjoint_path_family(const NetworkGraph& h, const PathSet& paths);

}  // namespace tripack
