#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "expkit/graph.hpp"

namespace expkit::detail {

inline constexpr int kMaxBruteForce = 24;

inline VertexSet mask_to_set(std::uint32_t mask) {
  VertexSet out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

/**
 * Gray-code walk over all nonempty subsets A of a ground set, maintaining
 * |A|, the boundary size and (for graphs) the number of cut edges.
 *
 * For a Graph the ground set is V and the boundary excludes A. For a
 * BipartiteGraph the ground set is one side and the boundary lives on the
 * other side. Each visit costs O(degree of the flipped vertex).
 */
class SubsetScanner {
 public:
  struct State {
    std::uint32_t mask;
    int size;
    int boundary;
    long long cut;  // edges leaving A; graphs only
  };

  /// Scan subsets of V(g).
  explicit SubsetScanner(const Graph& g) : ground_(g.order()), other_(g.order()), same_space_(true) {
    adj_.resize(ground_);
    for (Vertex v = 0; v < ground_; ++v) adj_[v] = g.neighbors(v);
  }

  /// Scan subsets of the inputs (or outputs when `outputs_side`) of b.
  SubsetScanner(const BipartiteGraph& b, bool outputs_side) : same_space_(false) {
    ground_ = outputs_side ? b.outputs() : b.inputs();
    other_ = outputs_side ? b.inputs() : b.outputs();
    adj_.resize(ground_);
    for (Vertex v = 0; v < ground_; ++v) adj_[v] = outputs_side ? b.in_neighbors(v) : b.out_neighbors(v);
  }

  int ground_size() const { return ground_; }

  /// Calls f(const State&) for every nonempty subset; stops early when f returns false.
  template <class F>
  void run(F&& f) const {
    if (ground_ > kMaxBruteForce)
      throw ContractError("brute-force subset scan limited to " + std::to_string(kMaxBruteForce) +
                          " vertices, got " + std::to_string(ground_));
    std::vector<int> count(other_, 0);
    std::vector<char> in_a(ground_, 0);
    State s{0, 0, 0, 0};
    const std::uint64_t total = std::uint64_t{1} << ground_;
    for (std::uint64_t step = 1; step < total; ++step) {
      const int x = std::countr_zero(step);
      if (!in_a[x]) {
        if (same_space_) {
          if (count[x] > 0) --s.boundary;
          s.cut += static_cast<long long>(adj_[x].size()) - 2 * count[x];
        }
        in_a[x] = 1;
        for (Vertex w : adj_[x])
          if (count[w]++ == 0 && !(same_space_ && in_a[w])) ++s.boundary;
        s.mask |= 1u << x;
        ++s.size;
      } else {
        for (Vertex w : adj_[x])
          if (--count[w] == 0 && !(same_space_ && in_a[w])) --s.boundary;
        in_a[x] = 0;
        if (same_space_) {
          if (count[x] > 0) ++s.boundary;
          s.cut -= static_cast<long long>(adj_[x].size()) - 2 * count[x];
        }
        s.mask &= ~(1u << x);
        --s.size;
      }
      if (!f(static_cast<const State&>(s))) return;
    }
  }

 private:
  int ground_ = 0;
  int other_ = 0;
  bool same_space_ = true;
  std::vector<std::vector<Vertex>> adj_;
};

}  // namespace expkit::detail
