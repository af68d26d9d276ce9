#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tripack/graph.hpp"
#include "tripack/menger.hpp"
#include "tripack/network.hpp"

namespace tripack {

/// A simple bipartite graph between B vertices (left) and C vertices (right).
struct BipartiteSubgraph {
  std::vector<VertexId> left;
  std::vector<VertexId> right;
  std::vector<Edge> edges;

  std::size_t max_degree() const;
};

/// Edge partition into matchings. Classes are sorted by size (largest first),
/// then by smallest edge; edges within a class are sorted.
struct EdgeColouring {
  std::vector<std::vector<Edge>> classes;

  std::size_t colour_count() const { return classes.size(); }
};

/// Partitions the edges into exactly max_degree() matchings.
/// Throws PreconditionError if the input is not simple bipartite.
EdgeColouring edge_colour(const BipartiteSubgraph& f);

/// The BC edges used by a path family, with their endpoints.
BipartiteSubgraph extract_subgraph(const PathSet& paths, const NetworkGraph& h);

bool is_matching(std::span<const Edge> edges);

}  // namespace tripack
