#include "tripack/koenig.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "tripack/error.hpp"

namespace tripack {

std::size_t BipartiteSubgraph::max_degree() const {
  std::unordered_map<VertexId, std::size_t> degree;
  std::size_t best = 0;
  for (const Edge& e : edges) {
    best = std::max({best, ++degree[e.u], ++degree[e.v]});
  }
  return best;
}

bool is_matching(std::span<const Edge> edges) {
  std::set<VertexId> used;
  for (const Edge& e : edges) {
    if (!used.insert(e.u).second || !used.insert(e.v).second) return false;
  }
  return true;
}

namespace {

constexpr int kFree = -1;

struct Endpoints {
  int left;
  int right;
};

}  // namespace

EdgeColouring edge_colour(const BipartiteSubgraph& f) {
  std::unordered_map<VertexId, int> slot;
  for (VertexId v : f.left) {
    if (!slot.try_emplace(v, static_cast<int>(slot.size())).second) {
      throw PreconditionError("edge_colour: vertex " + std::to_string(v) + " listed twice");
    }
  }
  const int left_count = static_cast<int>(slot.size());
  for (VertexId v : f.right) {
    if (!slot.try_emplace(v, static_cast<int>(slot.size())).second) {
      throw PreconditionError("edge_colour: vertex " + std::to_string(v) + " listed twice");
    }
  }

  std::vector<Edge> edges = f.edges;
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw PreconditionError("edge_colour: duplicate edge");
  }
  std::vector<Endpoints> ends;
  ends.reserve(edges.size());
  for (const Edge& e : edges) {
    auto iu = slot.find(e.u);
    auto iv = slot.find(e.v);
    if (iu == slot.end() || iv == slot.end()) {
      throw PreconditionError("edge_colour: edge " + to_string(e) + " has an unlisted endpoint");
    }
    int x = iu->second;
    int y = iv->second;
    if ((x < left_count) == (y < left_count)) {
      throw PreconditionError("edge_colour: edge " + to_string(e) + " is not bipartite");
    }
    ends.push_back(x < left_count ? Endpoints{x, y} : Endpoints{y, x});
  }

  const std::size_t delta = f.max_degree();
  if (delta == 0) return {};

  // at[v][c] = neighbour of v along its colour-c edge, or kFree.
  std::vector<std::vector<int>> at(slot.size(), std::vector<int>(delta, kFree));
  auto first_free = [&](int v) {
    return static_cast<std::size_t>(std::find(at[v].begin(), at[v].end(), kFree) - at[v].begin());
  };

  for (const auto& [u, v] : ends) {
    std::size_t common = delta;
    for (std::size_t c = 0; c < delta; ++c) {
      if (at[u][c] == kFree && at[v][c] == kFree) {
        common = c;
        break;
      }
    }
    if (common == delta) {
      std::size_t alpha = first_free(u);
      std::size_t beta = first_free(v);
      // Swap colours along the alpha/beta alternating path leaving v. The path
      // cannot reach u, so afterwards alpha is free at both ends.
      struct Step {
        int from;
        int to;
        std::size_t colour;
      };
      std::vector<Step> path;
      int x = v;
      std::size_t colour = alpha;
      while (at[x][colour] != kFree) {
        int y = at[x][colour];
        path.push_back({x, y, colour});
        x = y;
        colour = colour == alpha ? beta : alpha;
      }
      for (const auto& step : path) {
        at[step.from][step.colour] = kFree;
        at[step.to][step.colour] = kFree;
      }
      for (const auto& step : path) {
        std::size_t swapped = step.colour == alpha ? beta : alpha;
        at[step.from][swapped] = step.to;
        at[step.to][swapped] = step.from;
      }
      common = alpha;
    }
    at[u][common] = v;
    at[v][common] = u;
  }

  std::vector<VertexId> id_of(slot.size());
  for (const auto& [id, s] : slot) id_of[s] = id;

  EdgeColouring out;
  out.classes.resize(delta);
  for (int u = 0; u < left_count; ++u) {
    for (std::size_t c = 0; c < delta; ++c) {
      if (at[u][c] != kFree) out.classes[c].push_back(Edge{id_of[u], id_of[at[u][c]]});
    }
  }
  for (auto& cls : out.classes) std::sort(cls.begin(), cls.end());
  std::sort(out.classes.begin(), out.classes.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() > y.size();
    return x < y;
  });
  return out;
}

BipartiteSubgraph extract_subgraph(const PathSet& paths, const NetworkGraph& h) {
  BipartiteSubgraph f;
  for (const auto& path : paths.paths) {
    if (path.size() != 5) throw InvariantViolation("network path does not have five nodes");
    const NetNode& b = h.node(path[1]);
    const NetNode& e = h.node(path[2]);
    const NetNode& c = h.node(path[3]);
    if (b.kind != NodeKind::BCopy || e.kind != NodeKind::EdgeNode || c.kind != NodeKind::CCopy ||
        e.edge != Edge{b.vertex, c.vertex}) {
      throw InvariantViolation("network path is not s -> B copy -> edge -> C copy -> t");
    }
    f.left.push_back(b.vertex);
    f.right.push_back(c.vertex);
    f.edges.push_back(e.edge);
  }
  for (auto* vs : {&f.left, &f.right}) {
    std::sort(vs->begin(), vs->end());
    vs->erase(std::unique(vs->begin(), vs->end()), vs->end());
  }
  std::sort(f.edges.begin(), f.edges.end());
  if (std::adjacent_find(f.edges.begin(), f.edges.end()) != f.edges.end()) {
    throw InvariantViolation("two paths share an edge node");
  }
  return f;
}

}  // namespace tripack
