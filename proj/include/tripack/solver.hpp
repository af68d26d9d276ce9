#pragma once

#include <cstddef>

#include "tripack/graph.hpp"
#include "tripack/koenig.hpp"
#include "tripack/menger.hpp"
#include "tripack/network.hpp"

namespace tripack {

/// A transversal and a packing of equal size, each checked against the graph.
/// Together they prove that the minimum transversal and maximum packing sizes
/// coincide for the instance.
struct Certificate {
  Transversal transversal;
  Packing packing;
  std::size_t value = 0;
  bool transversal_verified = false;
  bool packing_verified = false;
  bool sizes_equal = false;

  bool verified() const { return transversal_verified && packing_verified && sizes_equal; }
};

/// Maps a separator of h (built from `oriented`) to a transversal of the same
/// size: edge nodes give BC edges, and the copy-i nodes of B and C give a
/// vertex set W_i that is joined to the i-th A vertex (ascending id order).
/// Throws PreconditionError if `sep` does not separate s from t.
Transversal separator_to_transversal(const Separator& sep, const NetworkGraph& h,
                                     const TripartiteGraph& oriented);

/// Joins the i-th colour class to the i-th A vertex (ascending id order).
/// Throws PreconditionError if there are more classes than A vertices.
Packing assemble_packing(const EdgeColouring& colouring, const TripartiteGraph& oriented);

/// Every intermediate product of one solver run.
struct SolveTrace {
  Orientation orientation;
  TripartiteGraph oriented;
  NetworkGraph network;
  FlowState flow;
  PathSet paths;
  Separator separator;
  BipartiteSubgraph subgraph;
  EdgeColouring colouring;
  Certificate certificate;
};

/// Runs the whole pipeline and keeps the intermediate results.
/// Throws ValidationError, NotBilaterallyComplete, or InvariantViolation.
SolveTrace solve_traced(const TripartiteGraph& g);

/// Minimum transversal and maximum packing of a bilaterally-complete graph.
/// Triangles in the packing are labelled by the parts of `g`, not of the
/// oriented copy.
Certificate solve(const TripartiteGraph& g);

}  // namespace tripack
