#pragma once

#include <chrono>
#include <cstddef>
#include <span>
#include <vector>

#include "tripack/graph.hpp"

namespace tripack {

/// Size limits for the exponential oracles. Instances over a limit are
/// refused with BudgetExceeded; the time limit aborts a running search.
struct OracleBudget {
  std::size_t max_triangles = 40;     // packing and transversal search
  std::size_t max_bc_edges = 14;      // subset loop of the uniform minimum
  std::size_t max_bc_vertices = 14;   // |B| + |C| for the subset-pair minimum
  std::chrono::milliseconds time_limit{30'000};
};

struct PackingResult {
  std::size_t value = 0;
  Packing witness;
};

struct TransversalResult {
  std::size_t value = 0;
  Transversal witness;
  /// Every minimum transversal; filled only in enumeration mode.
  std::vector<Transversal> all_minimum;
};

struct UniformResult {
  std::size_t value = 0;
  std::vector<Edge> bc_edges;   // E'_BC at the minimum
  std::vector<VertexId> cover;  // minimum vertex cover W of the other BC edges
};

struct SubsetPairResult {
  std::size_t value = 0;
  std::vector<VertexId> b_kept;  // B'' at the minimum
  std::vector<VertexId> c_kept;  // C'' at the minimum
};

/// Maximum number of edge-disjoint triangles, by branch and bound over the
/// BC edges (each triangle owns exactly one). Works on any valid graph.
PackingResult brute_max_packing(const TripartiteGraph& g, const OracleBudget& budget = {});

/// Minimum transversal by branch and bound: take the lowest-index uncovered
/// triangle and branch on its three edges. With `enumerate_all`, collects
/// every minimum transversal exactly once. Works on any valid graph.
TransversalResult brute_min_transversal(const TripartiteGraph& g,
                                        const OracleBudget& budget = {},
                                        bool enumerate_all = false);

/// min over E'_BC of |E'_BC| + p * (minimum vertex cover of the remaining BC
/// edges). Requires a bilaterally-complete graph.
UniformResult uniform_transversal_min(const TripartiteGraph& g, const OracleBudget& budget = {});

/// min over B'' in B, C'' in C of |E(B'', C'')| + p * (|B| + |C| - |B''| - |C''|),
/// where E(B'', C'') are the BC edges with both ends kept. Requires a
/// bilaterally-complete graph.
SubsetPairResult mao_cheng_min(const TripartiteGraph& g, const OracleBudget& budget = {});

/// Maximum matching and the minimum vertex cover derived from it by
/// alternating reachability (König-Egerváry).
struct BipartiteCover {
  std::vector<Edge> matching;
  std::vector<VertexId> cover;
};

BipartiteCover min_vertex_cover(std::span<const VertexId> left, std::span<const VertexId> right,
                                std::span<const Edge> edges);

}  // namespace tripack
