#include "expkit/matching.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "expkit/detail/subset_scan.hpp"

namespace expkit {

namespace {

constexpr int kFree = -1;

// Hopcroft-Karp state over a bipartite graph.
class HopcroftKarp {
 public:
  explicit HopcroftKarp(const BipartiteGraph& b)
      : b_(b), match_in_(b.inputs(), kFree), match_out_(b.outputs(), kFree), dist_(b.inputs()) {}

  int run() {
    int size = 0;
    while (bfs()) {
      for (Vertex u = 0; u < b_.inputs(); ++u)
        if (match_in_[u] == kFree && dfs(u)) ++size;
    }
    return size;
  }

  const std::vector<int>& match_in() const { return match_in_; }
  const std::vector<int>& match_out() const { return match_out_; }

 private:
  bool bfs() {
    std::deque<Vertex> queue;
    bool found = false;
    for (Vertex u = 0; u < b_.inputs(); ++u) {
      if (match_in_[u] == kFree) {
        dist_[u] = 0;
        queue.push_back(u);
      } else {
        dist_[u] = std::numeric_limits<int>::max();
      }
    }
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex o : b_.out_neighbors(u)) {
        Vertex w = match_out_[o];
        if (w == kFree) {
          found = true;
        } else if (dist_[w] == std::numeric_limits<int>::max()) {
          dist_[w] = dist_[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return found;
  }

  bool dfs(Vertex u) {
    for (Vertex o : b_.out_neighbors(u)) {
      Vertex w = match_out_[o];
      if (w == kFree || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        match_in_[u] = o;
        match_out_[o] = u;
        return true;
      }
    }
    dist_[u] = std::numeric_limits<int>::max();
    return false;
  }

  const BipartiteGraph& b_;
  std::vector<int> match_in_, match_out_, dist_;
};

Matching from_match_in(const std::vector<int>& match_in) {
  Matching m;
  for (Vertex u = 0; u < static_cast<int>(match_in.size()); ++u)
    if (match_in[u] != kFree) m.pairs.emplace_back(u, match_in[u]);
  return m;
}

// Alternating reachability from `start`: inputs reached via non-matching
// edges to outputs and matching edges back.
VertexSet alternating_inputs(const BipartiteGraph& b, const std::vector<int>& match_out, Vertex start) {
  std::vector<char> seen_in(b.inputs(), 0), seen_out(b.outputs(), 0);
  std::deque<Vertex> queue{start};
  seen_in[start] = 1;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex o : b.out_neighbors(u)) {
      if (seen_out[o]) continue;
      seen_out[o] = 1;
      Vertex w = match_out[o];
      if (w != kFree && !seen_in[w]) {
        seen_in[w] = 1;
        queue.push_back(w);
      }
    }
  }
  VertexSet out;
  for (Vertex u = 0; u < b.inputs(); ++u)
    if (seen_in[u]) out.push_back(u);
  return out;
}

}  // namespace

bool is_matching(const BipartiteGraph& b, const Matching& m) {
  std::vector<char> used_in(b.inputs(), 0), used_out(b.outputs(), 0);
  for (auto [i, o] : m.pairs) {
    if (i < 0 || i >= b.inputs() || o < 0 || o >= b.outputs()) return false;
    if (!b.has_edge(i, o) || used_in[i] || used_out[o]) return false;
    used_in[i] = used_out[o] = 1;
  }
  return true;
}

Matching maximum_matching(const BipartiteGraph& b) {
  HopcroftKarp hk(b);
  hk.run();
  return from_match_in(hk.match_in());
}

std::optional<VertexSet> hall_violator(const BipartiteGraph& b) {
  HopcroftKarp hk(b);
  if (hk.run() == b.inputs()) return std::nullopt;
  const auto& match_in = hk.match_in();
  Vertex start = static_cast<Vertex>(std::find(match_in.begin(), match_in.end(), kFree) - match_in.begin());
  return alternating_inputs(b, hk.match_out(), start);
}

std::optional<Matching> lex_least_input_matching(const BipartiteGraph& b) {
  HopcroftKarp hk(b);
  if (hk.run() != b.inputs()) return std::nullopt;
  std::vector<int> match_in = hk.match_in();
  std::vector<int> match_out = hk.match_out();
  std::vector<char> fixed(b.inputs(), 0);
  std::vector<char> visited(b.outputs(), 0);

  // Kuhn augmentation that never disturbs fixed inputs.
  auto augment = [&](auto&& self, Vertex u) -> bool {
    for (Vertex o : b.out_neighbors(u)) {
      if (visited[o]) continue;
      visited[o] = 1;
      Vertex w = match_out[o];
      if (w != kFree && fixed[w]) continue;
      if (w == kFree || self(self, w)) {
        match_in[u] = o;
        match_out[o] = u;
        return true;
      }
    }
    return false;
  };

  for (Vertex i = 0; i < b.inputs(); ++i) {
    for (Vertex o : b.out_neighbors(i)) {
      if (o == match_in[i]) break;
      Vertex owner = match_out[o];
      if (owner != kFree && fixed[owner]) continue;
      // Tentatively move i to o and try to re-seat the displaced owner.
      auto saved_in = match_in;
      auto saved_out = match_out;
      match_out[match_in[i]] = kFree;
      match_in[i] = o;
      match_out[o] = i;
      fixed[i] = 1;
      bool ok = true;
      if (owner != kFree) {
        match_in[owner] = kFree;
        std::fill(visited.begin(), visited.end(), 0);
        ok = augment(augment, owner);
      }
      fixed[i] = 0;
      if (ok) break;
      match_in = std::move(saved_in);
      match_out = std::move(saved_out);
    }
    fixed[i] = 1;
  }
  return from_match_in(match_in);
}

BigamistResult bigamist_matching(const BipartiteGraph& b) {
  BipartiteGraph doubled(2 * b.inputs(), b.outputs());
  for (auto [i, o] : b.edges()) {
    doubled.add_edge(2 * i, o);
    doubled.add_edge(2 * i + 1, o);
  }
  HopcroftKarp hk(doubled);
  BigamistResult result;
  if (hk.run() == doubled.inputs()) {
    Matching plus, minus;
    for (Vertex i = 0; i < b.inputs(); ++i) {
      plus.pairs.emplace_back(i, hk.match_in()[2 * i]);
      minus.pairs.emplace_back(i, hk.match_in()[2 * i + 1]);
    }
    result.matchings.emplace(std::move(plus), std::move(minus));
    return result;
  }
  const auto& match_in = hk.match_in();
  Vertex start = static_cast<Vertex>(std::find(match_in.begin(), match_in.end(), kFree) - match_in.begin());
  for (Vertex twin : alternating_inputs(doubled, hk.match_out(), start))
    if (result.violator.empty() || result.violator.back() != twin / 2) result.violator.push_back(twin / 2);
  return result;
}

std::vector<std::vector<Vertex>> koenig_decomposition(const BipartiteGraph& b, int k) {
  if (b.inputs() != b.outputs()) throw ContractError("koenig_decomposition: sides differ in size");
  if (!b.is_regular(k)) throw ContractError("koenig_decomposition: graph is not " + std::to_string(k) + "-regular");
  BipartiteGraph rest = b;
  std::vector<std::vector<Vertex>> perms;
  for (int t = 0; t < k; ++t) {
    HopcroftKarp hk(rest);
    if (hk.run() != rest.inputs()) throw std::logic_error("regular bipartite graph without perfect matching");
    perms.push_back(hk.match_in());
    BipartiteGraph next(rest.inputs(), rest.outputs());
    for (auto [i, o] : rest.edges())
      if (perms.back()[i] != o) next.add_edge(i, o);
    rest = std::move(next);
  }
  return perms;
}

bool has_two_sided_expansion(const BipartiteGraph& b) {
  if (b.inputs() != b.outputs()) throw ContractError("has_two_sided_expansion: sides differ in size");
  const int n = b.inputs();
  for (bool outputs_side : {false, true}) {
    bool ok = true;
    detail::SubsetScanner(b, outputs_side).run([&](const detail::SubsetScanner::State& s) {
      if (2 * s.size <= n && s.boundary < s.size) ok = false;
      return ok;
    });
    if (!ok) return false;
  }
  return true;
}

bool is_latin_rectangle(const std::vector<std::vector<Vertex>>& rows, int n) {
  std::vector<std::vector<char>> column_seen(n, std::vector<char>(n, 0));
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int j = 0; j < n; ++j) {
      Vertex v = row[j];
      if (v < 0 || v >= n || seen[v] || column_seen[j][v]) return false;
      seen[v] = column_seen[j][v] = 1;
    }
  }
  return true;
}

}  // namespace expkit
