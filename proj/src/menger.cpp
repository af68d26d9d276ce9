#include "tripack/menger.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "tripack/error.hpp"

namespace tripack {

namespace {

// Residual graph with paired forward/backward entries; entry 2k is the
// forward copy of arc k and 2k + 1 its reverse.
class Residual {
 public:
  explicit Residual(const NetworkGraph& h) : out_(h.half_count()) {
    const auto& arcs = h.arcs();
    to_.reserve(2 * arcs.size());
    cap_.reserve(2 * arcs.size());
    for (std::size_t k = 0; k < arcs.size(); ++k) {
      out_[arcs[k].tail].push_back(to_.size());
      to_.push_back(arcs[k].head);
      cap_.push_back(arcs[k].capacity);
      out_[arcs[k].head].push_back(to_.size());
      to_.push_back(arcs[k].tail);
      cap_.push_back(0);
    }
  }

  void apply(const FlowState& flow) {
    for (std::size_t k = 0; k < flow.arc_flow.size(); ++k) {
      cap_[2 * k] -= flow.arc_flow[k];
      cap_[2 * k + 1] += flow.arc_flow[k];
    }
  }

  // BFS from `from`; returns the entry used to reach each half, or npos.
  std::vector<std::size_t> search(std::uint32_t from) {
    std::vector<std::size_t> via(out_.size(), kNone);
    std::vector<bool> seen(out_.size(), false);
    std::deque<std::uint32_t> queue{from};
    seen[from] = true;
    while (!queue.empty()) {
      auto v = queue.front();
      queue.pop_front();
      for (std::size_t e : out_[v]) {
        auto w = to_[e];
        if (cap_[e] > 0 && !seen[w]) {
          seen[w] = true;
          via[w] = e;
          queue.push_back(w);
        }
      }
    }
    reached_ = std::move(seen);
    return via;
  }

  bool reached(std::uint32_t v) const { return reached_[v]; }

  std::int64_t augment(std::uint32_t from, std::uint32_t to, const std::vector<std::size_t>& via) {
    std::int64_t bottleneck = std::numeric_limits<std::int64_t>::max();
    for (auto v = to; v != from; v = to_[via[v] ^ 1]) bottleneck = std::min(bottleneck, cap_[via[v]]);
    for (auto v = to; v != from; v = to_[via[v] ^ 1]) {
      cap_[via[v]] -= bottleneck;
      cap_[via[v] ^ 1] += bottleneck;
    }
    return bottleneck;
  }

  std::int64_t flow_on(std::size_t arc) const { return cap_[2 * arc + 1]; }

  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

 private:
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::uint32_t> to_;
  std::vector<std::int64_t> cap_;
  std::vector<bool> reached_;
};

}  // namespace

FlowState max_flow(const NetworkGraph& h) {
  Residual residual(h);
  const auto s = h.out_half(h.source());
  const auto t = h.in_half(h.sink());
  FlowState state;
  for (;;) {
    auto via = residual.search(s);
    if (!residual.reached(t)) break;
    state.value += residual.augment(s, t, via);
  }
  state.arc_flow.resize(h.arcs().size());
  for (std::size_t k = 0; k < h.arcs().size(); ++k) state.arc_flow[k] = residual.flow_on(k);
  return state;
}

PathSet decompose_flow(const NetworkGraph& h, const FlowState& flow) {
  const auto& arcs = h.arcs();
  std::vector<std::vector<std::size_t>> out(h.half_count());
  for (std::size_t k = 0; k < arcs.size(); ++k) out[arcs[k].tail].push_back(k);
  std::vector<std::int64_t> remaining = flow.arc_flow;

  const auto s = h.out_half(h.source());
  const auto t = h.in_half(h.sink());
  PathSet result;
  for (std::int64_t unit = 0; unit < flow.value; ++unit) {
    std::vector<NodeIndex> path{h.source()};
    auto v = s;
    while (v != t) {
      auto it = std::find_if(out[v].begin(), out[v].end(),
                             [&](std::size_t k) { return remaining[k] > 0; });
      if (it == out[v].end()) throw InvariantViolation("flow is not conserved at a network node");
      --remaining[*it];
      v = arcs[*it].head;
      NodeIndex n = h.node_of_half(v);
      if (n != path.back()) path.push_back(n);
    }
    result.paths.push_back(std::move(path));
  }
  if (std::any_of(remaining.begin(), remaining.end(), [](std::int64_t f) { return f != 0; })) {
    throw InvariantViolation("flow decomposition left residual flow");
  }
  std::sort(result.paths.begin(), result.paths.end());
  return result;
}

PathSet max_disjoint_paths(const NetworkGraph& h) { return decompose_flow(h, max_flow(h)); }

Separator min_separator(const NetworkGraph& h, const FlowState& flow) {
  Residual residual(h);
  residual.apply(flow);
  residual.search(h.out_half(h.source()));
  if (residual.reached(h.in_half(h.sink()))) {
    throw PreconditionError("min_separator: flow is not maximum");
  }
  Separator sep;
  for (NodeIndex n = 1; n < h.sink(); ++n) {
    if (residual.reached(h.in_half(n)) && !residual.reached(h.out_half(n))) sep.nodes.push_back(n);
  }
  return sep;
}

bool separates(const NetworkGraph& h, std::span<const NodeIndex> removed) {
  std::vector<bool> gone(h.node_count(), false);
  for (NodeIndex n : removed) {
    if (n == h.source() || n == h.sink()) {
      throw PreconditionError("a separator may not contain s or t");
    }
    gone.at(n) = true;
  }
  std::vector<bool> seen(h.node_count(), false);
  std::vector<NodeIndex> stack{h.source()};
  seen[h.source()] = true;
  while (!stack.empty()) {
    NodeIndex v = stack.back();
    stack.pop_back();
    if (v == h.sink()) return false;
    for (NodeIndex w : h.successors(v)) {
      if (!gone[w] && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return true;
}

bool is_disjoint_path_family(const NetworkGraph& h, const PathSet& paths) {
  std::vector<bool> used(h.node_count(), false);
  for (const auto& path : paths.paths) {
    if (path.size() < 2 || path.front() != h.source() || path.back() != h.sink()) return false;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      const auto& succ = h.successors(path[i]);
      if (!std::binary_search(succ.begin(), succ.end(), path[i + 1])) return false;
    }
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      if (used[path[i]]) return false;
      used[path[i]] = true;
    }
  }
  return true;
}

}  // namespace tripack
