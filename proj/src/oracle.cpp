#include "tripack/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <unordered_map>

#include "tripack/error.hpp"

namespace tripack {

namespace {

class Deadline {
 public:
  explicit Deadline(std::chrono::milliseconds limit)
      : end_(std::chrono::steady_clock::now() + limit) {}

  // Checks the clock on the first call and every 4096th after.
  void tick() {
    if ((calls_++ & 0xfff) == 0 && std::chrono::steady_clock::now() > end_) {
      throw BudgetExceeded("oracle time limit exceeded");
    }
  }

 private:
  std::chrono::steady_clock::time_point end_;
  std::uint64_t calls_ = 0;
};

// Triangles with their edges replaced by dense indices.
struct IndexedTriangles {
  std::vector<Triangle> triangles;
  std::vector<Edge> edges;                        // index -> edge
  std::vector<std::array<std::size_t, 3>> owns;   // per triangle: ab, ac, bc
};

IndexedTriangles index_triangles(const TripartiteGraph& g, const OracleBudget& budget) {
  require_valid(g);
  IndexedTriangles ix;
  ix.triangles = enumerate_triangles(g);
  if (ix.triangles.size() > budget.max_triangles) {
    throw BudgetExceeded("instance has " + std::to_string(ix.triangles.size()) +
                         " triangles; budget allows " + std::to_string(budget.max_triangles));
  }
  std::map<Edge, std::size_t> id;
  for (const Triangle& t : ix.triangles) {
    for (const Edge& e : t.edges()) id.try_emplace(e, 0);
  }
  for (auto& [e, k] : id) {
    k = ix.edges.size();
    ix.edges.push_back(e);
  }
  for (const Triangle& t : ix.triangles) {
    auto es = t.edges();
    ix.owns.push_back({id[es[0]], id[es[1]], id[es[2]]});
  }
  return ix;
}

class PackingSearch {
 public:
  PackingSearch(const IndexedTriangles& ix, const OracleBudget& budget)
      : ix_(ix), deadline_(budget.time_limit), used_(ix.edges.size(), false) {
    // Group triangles by their BC edge; enumeration order keeps groups sorted.
    std::map<std::size_t, std::vector<std::size_t>> by_bc;
    for (std::size_t t = 0; t < ix.triangles.size(); ++t) by_bc[ix.owns[t][2]].push_back(t);
    for (auto& [bc, members] : by_bc) groups_.push_back(std::move(members));
  }

  std::vector<std::size_t> run() {
    greedy();
    descend(0);
    return best_;
  }

 private:
  bool available(std::size_t t) const {
    const auto& o = ix_.owns[t];
    return !used_[o[0]] && !used_[o[1]] && !used_[o[2]];
  }

  void mark(std::size_t t, bool on) {
    for (std::size_t e : ix_.owns[t]) used_[e] = on;
  }

  void greedy() {
    for (std::size_t t = 0; t < ix_.triangles.size(); ++t) {
      if (available(t)) {
        mark(t, true);
        best_.push_back(t);
      }
    }
    for (std::size_t t : best_) mark(t, false);
  }

  // Every further triangle needs a distinct BC edge, a distinct AB edge and
  // a distinct AC edge that are still free.
  std::size_t upper_bound(std::size_t from) const {
    std::size_t live_groups = 0;
    std::vector<bool> ab(ix_.edges.size(), false);
    std::vector<bool> ac(ix_.edges.size(), false);
    std::size_t ab_count = 0;
    std::size_t ac_count = 0;
    for (std::size_t k = from; k < groups_.size(); ++k) {
      bool live = false;
      for (std::size_t t : groups_[k]) {
        if (!available(t)) continue;
        live = true;
        if (!ab[ix_.owns[t][0]]) ab[ix_.owns[t][0]] = true, ++ab_count;
        if (!ac[ix_.owns[t][1]]) ac[ix_.owns[t][1]] = true, ++ac_count;
      }
      live_groups += live;
    }
    return std::min({live_groups, ab_count, ac_count});
  }

  void descend(std::size_t k) {
    deadline_.tick();
    if (current_.size() > best_.size()) best_ = current_;
    if (k == groups_.size()) return;
    if (current_.size() + upper_bound(k) <= best_.size()) return;
    for (std::size_t t : groups_[k]) {
      if (!available(t)) continue;
      mark(t, true);
      current_.push_back(t);
      descend(k + 1);
      current_.pop_back();
      mark(t, false);
    }
    descend(k + 1);
  }

  const IndexedTriangles& ix_;
  Deadline deadline_;
  std::vector<bool> used_;
  std::vector<std::vector<std::size_t>> groups_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

class TransversalSearch {
 public:
  TransversalSearch(const IndexedTriangles& ix, const OracleBudget& budget, bool enumerate_all)
      : ix_(ix),
        deadline_(budget.time_limit),
        enumerate_all_(enumerate_all),
        chosen_(ix.edges.size(), 0),
        excluded_(ix.edges.size(), 0) {}

  void run() {
    // One edge per triangle is always a transversal; start from that bound.
    std::vector<char> pick(ix_.edges.size(), 0);
    for (std::size_t t = 0; t < ix_.triangles.size(); ++t) {
      const auto& o = ix_.owns[t];
      if (!pick[o[0]] && !pick[o[1]] && !pick[o[2]]) pick[o[2]] = 1;
    }
    for (std::size_t e = 0; e < pick.size(); ++e) {
      if (pick[e]) best_.push_back(e);
    }
    descend();
  }

  const std::vector<std::size_t>& best() const { return best_; }
  const std::vector<std::vector<std::size_t>>& all() const { return all_; }

 private:
  bool covered(std::size_t t) const {
    const auto& o = ix_.owns[t];
    return chosen_[o[0]] || chosen_[o[1]] || chosen_[o[2]];
  }

  // Greedy set of pairwise edge-disjoint uncovered triangles: each needs its
  // own transversal edge.
  std::size_t lower_bound(std::size_t from) const {
    std::vector<char> taken(ix_.edges.size(), 0);
    std::size_t count = 0;
    for (std::size_t t = from; t < ix_.triangles.size(); ++t) {
      if (covered(t)) continue;
      const auto& o = ix_.owns[t];
      if (taken[o[0]] || taken[o[1]] || taken[o[2]]) continue;
      taken[o[0]] = taken[o[1]] = taken[o[2]] = 1;
      ++count;
    }
    return count;
  }

  void descend() {
    deadline_.tick();
    std::size_t first = 0;
    while (first < ix_.triangles.size() && covered(first)) ++first;
    if (first == ix_.triangles.size()) {
      record();
      return;
    }
    std::size_t bound = current_.size() + lower_bound(first);
    if (enumerate_all_ ? bound > best_.size() : bound >= best_.size()) return;

    // Branch k takes edge k and forbids edges 0..k-1 of this triangle, so each
    // transversal is reached along exactly one branch.
    const auto& o = ix_.owns[first];
    std::vector<std::size_t> newly_excluded;
    for (std::size_t e : o) {
      if (excluded_[e]) continue;
      chosen_[e] = 1;
      current_.push_back(e);
      descend();
      current_.pop_back();
      chosen_[e] = 0;
      excluded_[e] = 1;
      newly_excluded.push_back(e);
    }
    for (std::size_t e : newly_excluded) excluded_[e] = 0;
  }

  void record() {
    std::vector<std::size_t> sorted = current_;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.size() < best_.size()) {
      best_ = sorted;
      all_.clear();
    }
    if (enumerate_all_ && sorted.size() == best_.size()) all_.push_back(sorted);
  }

  const IndexedTriangles& ix_;
  Deadline deadline_;
  bool enumerate_all_;
  std::vector<char> chosen_;
  std::vector<char> excluded_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
  std::vector<std::vector<std::size_t>> all_;
};

Transversal to_transversal(const IndexedTriangles& ix, const std::vector<std::size_t>& ids) {
  Transversal t;
  for (std::size_t e : ids) t.edges.push_back(ix.edges[e]);
  std::sort(t.edges.begin(), t.edges.end());
  return t;
}

TripartiteGraph oriented_copy(const TripartiteGraph& g) {
  require_valid(g);
  auto orientation = detect_orientation(g);
  if (!orientation) throw NotBilaterallyComplete();
  return apply_orientation(g, *orientation);
}

// Maximum matching size of a bipartite graph given as left-vertex rows of
// right-vertex bitmasks.
class BitMatcher {
 public:
  explicit BitMatcher(std::size_t right_count) : match_(right_count) {}

  std::size_t size(std::span<const std::uint64_t> rows) {
    std::fill(match_.begin(), match_.end(), -1);
    std::size_t total = 0;
    for (std::size_t b = 0; b < rows.size(); ++b) {
      if (rows[b] == 0) continue;
      std::uint64_t visited = 0;
      if (augment(rows, static_cast<int>(b), visited)) ++total;
    }
    return total;
  }

 private:
  bool augment(std::span<const std::uint64_t> rows, int b, std::uint64_t& visited) {
    for (std::uint64_t cand = rows[b] & ~visited; cand != 0; cand &= cand - 1) {
      int c = std::countr_zero(cand);
      visited |= std::uint64_t{1} << c;
      if (match_[c] < 0 || augment(rows, match_[c], visited)) {
        match_[c] = b;
        return true;
      }
    }
    return false;
  }

  std::vector<int> match_;
};

}  // namespace

PackingResult brute_max_packing(const TripartiteGraph& g, const OracleBudget& budget) {
  auto ix = index_triangles(g, budget);
  PackingSearch search(ix, budget);
  PackingResult result;
  for (std::size_t t : search.run()) result.witness.triangles.push_back(ix.triangles[t]);
  std::sort(result.witness.triangles.begin(), result.witness.triangles.end());
  result.value = result.witness.size();
  return result;
}

TransversalResult brute_min_transversal(const TripartiteGraph& g, const OracleBudget& budget,
                                        bool enumerate_all) {
  auto ix = index_triangles(g, budget);
  TransversalSearch search(ix, budget, enumerate_all);
  search.run();
  TransversalResult result;
  result.witness = to_transversal(ix, search.best());
  result.value = result.witness.size();
  for (const auto& ids : search.all()) result.all_minimum.push_back(to_transversal(ix, ids));
  std::sort(result.all_minimum.begin(), result.all_minimum.end(),
            [](const Transversal& x, const Transversal& y) { return x.edges < y.edges; });
  if (enumerate_all && !result.all_minimum.empty()) result.witness = result.all_minimum.front();
  return result;
}

UniformResult uniform_transversal_min(const TripartiteGraph& g, const OracleBudget& budget) {
  const TripartiteGraph oriented = oriented_copy(g);
  const auto& bc = oriented.side(Side::BC);
  const std::size_t m = bc.size();
  if (m > budget.max_bc_edges || m > 62) {
    throw BudgetExceeded("instance has " + std::to_string(m) + " BC edges; budget allows " +
                         std::to_string(std::min<std::size_t>(budget.max_bc_edges, 62)));
  }
  const std::size_t p = oriented.p();

  std::unordered_map<VertexId, std::size_t> b_row;
  std::unordered_map<VertexId, std::size_t> c_bit;
  std::vector<std::pair<std::size_t, std::uint64_t>> edge_bits;  // (row, bit) per edge
  for (const Edge& e : bc) {
    VertexId b = oriented.part_of(e.u) == Part::B ? e.u : e.v;
    VertexId c = e.other(b);
    auto rb = b_row.try_emplace(b, b_row.size()).first->second;
    auto cb = c_bit.try_emplace(c, c_bit.size()).first->second;
    edge_bits.emplace_back(rb, std::uint64_t{1} << cb);
  }

  std::vector<std::uint64_t> rows(b_row.size(), 0);
  for (const auto& [row, bit] : edge_bits) rows[row] |= bit;
  BitMatcher matcher(c_bit.size());
  Deadline deadline(budget.time_limit);

  // Gray-code walk over E'_BC: step i toggles edge countr_zero(i) out of or
  // back into the remaining graph.
  std::uint64_t removed = 0;
  std::size_t best = p * matcher.size(rows);
  std::uint64_t best_removed = 0;
  const std::uint64_t steps = std::uint64_t{1} << m;
  for (std::uint64_t i = 1; i < steps; ++i) {
    deadline.tick();
    int k = std::countr_zero(i);
    removed ^= std::uint64_t{1} << k;
    rows[edge_bits[k].first] ^= edge_bits[k].second;
    std::size_t removed_count = static_cast<std::size_t>(std::popcount(removed));
    if (removed_count >= best) continue;
    std::size_t value = removed_count + p * matcher.size(rows);
    if (value < best || (value == best && removed < best_removed)) {
      best = value;
      best_removed = removed;
    }
  }

  UniformResult result;
  result.value = best;
  std::vector<Edge> remaining;
  for (std::size_t k = 0; k < m; ++k) {
    ((best_removed >> k) & 1 ? result.bc_edges : remaining).push_back(bc[k]);
  }
  auto cover = min_vertex_cover(oriented.part(Part::B), oriented.part(Part::C), remaining);
  result.cover = std::move(cover.cover);
  if (result.bc_edges.size() + p * result.cover.size() != result.value) {
    throw InvariantViolation("vertex cover size differs from matching size");
  }
  return result;
}

SubsetPairResult mao_cheng_min(const TripartiteGraph& g, const OracleBudget& budget) {
  const TripartiteGraph oriented = oriented_copy(g);
  const auto& bs = oriented.part(Part::B);
  const auto& cs = oriented.part(Part::C);
  const std::size_t q = bs.size();
  const std::size_t r = cs.size();
  if (q + r > budget.max_bc_vertices || q > 31 || r > 31) {
    throw BudgetExceeded("instance has |B| + |C| = " + std::to_string(q + r) +
                         "; budget allows " + std::to_string(budget.max_bc_vertices));
  }
  const std::size_t p = oriented.p();

  std::vector<std::uint32_t> rows(q, 0);
  for (const Edge& e : oriented.side(Side::BC)) {
    VertexId b = oriented.part_of(e.u) == Part::B ? e.u : e.v;
    VertexId c = e.other(b);
    auto bi = std::lower_bound(bs.begin(), bs.end(), b) - bs.begin();
    auto ci = std::lower_bound(cs.begin(), cs.end(), c) - cs.begin();
    rows[bi] |= std::uint32_t{1} << ci;
  }

  Deadline deadline(budget.time_limit);
  std::size_t best = p * (q + r);
  std::uint32_t best_b = 0;
  std::uint32_t best_c = 0;
  for (std::uint32_t kb = 0; kb < (std::uint32_t{1} << q); ++kb) {
    std::vector<std::uint32_t> kept;
    for (std::size_t i = 0; i < q; ++i) {
      if ((kb >> i) & 1) kept.push_back(rows[i]);
    }
    for (std::uint32_t kc = 0; kc < (std::uint32_t{1} << r); ++kc) {
      deadline.tick();
      std::size_t inside = 0;
      for (std::uint32_t row : kept) inside += static_cast<std::size_t>(std::popcount(row & kc));
      std::size_t dropped = q + r - static_cast<std::size_t>(std::popcount(kb)) -
                            static_cast<std::size_t>(std::popcount(kc));
      std::size_t value = inside + p * dropped;
      if (value < best) {
        best = value;
        best_b = kb;
        best_c = kc;
      }
    }
  }

  SubsetPairResult result;
  result.value = best;
  for (std::size_t i = 0; i < q; ++i) {
    if ((best_b >> i) & 1) result.b_kept.push_back(bs[i]);
  }
  for (std::size_t i = 0; i < r; ++i) {
    if ((best_c >> i) & 1) result.c_kept.push_back(cs[i]);
  }
  return result;
}

BipartiteCover min_vertex_cover(std::span<const VertexId> left, std::span<const VertexId> right,
                                std::span<const Edge> edges) {
  std::unordered_map<VertexId, std::size_t> li;
  std::unordered_map<VertexId, std::size_t> ri;
  for (VertexId v : left) li.try_emplace(v, li.size());
  for (VertexId v : right) ri.try_emplace(v, ri.size());
  std::vector<std::vector<std::size_t>> adj(li.size());
  for (const Edge& e : edges) {
    auto lu = li.find(e.u);
    bool forward = lu != li.end();
    auto l = forward ? lu : li.find(e.v);
    auto r = ri.find(forward ? e.v : e.u);
    if (l == li.end() || r == ri.end()) {
      throw PreconditionError("min_vertex_cover: edge " + to_string(e) + " is not left-right");
    }
    adj[l->second].push_back(r->second);
  }
  std::vector<VertexId> left_id(li.size());
  std::vector<VertexId> right_id(ri.size());
  for (const auto& [v, k] : li) left_id[k] = v;
  for (const auto& [v, k] : ri) right_id[k] = v;

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> match_l(li.size(), kNone);
  std::vector<std::size_t> match_r(ri.size(), kNone);
  std::vector<char> seen;
  auto augment = [&](auto&& self, std::size_t u) -> bool {
    for (std::size_t w : adj[u]) {
      if (seen[w]) continue;
      seen[w] = 1;
      if (match_r[w] == kNone || self(self, match_r[w])) {
        match_l[u] = w;
        match_r[w] = u;
        return true;
      }
    }
    return false;
  };
  for (std::size_t u = 0; u < li.size(); ++u) {
    seen.assign(ri.size(), 0);
    augment(augment, u);
  }

  // Z = vertices reachable from unmatched left vertices by alternating paths;
  // the cover is (left \ Z) plus (right inside Z).
  std::vector<char> zl(li.size(), 0);
  std::vector<char> zr(ri.size(), 0);
  std::vector<std::size_t> stack;
  for (std::size_t u = 0; u < li.size(); ++u) {
    if (match_l[u] == kNone) {
      zl[u] = 1;
      stack.push_back(u);
    }
  }
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t w : adj[u]) {
      if (zr[w] || match_l[u] == w) continue;
      zr[w] = 1;
      std::size_t next = match_r[w];
      if (next != kNone && !zl[next]) {
        zl[next] = 1;
        stack.push_back(next);
      }
    }
  }

  BipartiteCover out;
  for (std::size_t u = 0; u < li.size(); ++u) {
    if (match_l[u] != kNone) out.matching.emplace_back(left_id[u], right_id[match_l[u]]);
    if (!zl[u]) out.cover.push_back(left_id[u]);
  }
  for (std::size_t w = 0; w < ri.size(); ++w) {
    if (zr[w]) out.cover.push_back(right_id[w]);
  }
  std::sort(out.matching.begin(), out.matching.end());
  std::sort(out.cover.begin(), out.cover.end());
  return out;
}

}  // namespace tripack
