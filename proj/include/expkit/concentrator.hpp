#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "expkit/expansion.hpp"
#include "expkit/graph.hpp"

namespace expkit {

/// Bipartite graph whose input sets of size <= alpha*n have at least as many neighbours.
struct Concentrator {
  BipartiteGraph graph;
  int n = 0;
  Rational theta;      ///< outputs / inputs
  Rational k_density;  ///< edges / inputs
  Rational alpha{1, 2};
};

/**
 * Inputs 0..m-1 are wired to the outputs through the bi-expander `b` (m x m);
 * inputs m..m+m/r-1 each get a private block of r consecutive outputs.
 * Requires r >= 2 and r | m. When `check_expansion` is set the bi-expansion
 * constant of `b` is brute-forced and must be at least 1/(r-1).
 */
Concentrator build_bounded_concentrator(const BipartiteGraph& b, int r, bool check_expansion = true);

struct ConcentratorCheck {
  bool ok = true;
  bool exhaustive = true;
  std::uint64_t sets_checked = 0;
  VertexSet violator;  ///< input set with fewer neighbours than elements
};

/**
 * Every input set A with 2|A| <= n has |boundary(A)| >= |A|. Exhaustive up to
 * 24 inputs; above that `samples` random sets are matched into the outputs.
 */
ConcentratorCheck verify_concentrator(const BipartiteGraph& g, std::uint64_t samples = 10000,
                                      std::uint64_t seed = 1);

/// Directed graph with integer edge capacities and BFS augmenting-path max flow.
class FlowNetwork {
 public:
  explicit FlowNetwork(int n);
  int add_vertex();
  void add_edge(int from, int to, int capacity);
  int order() const noexcept { return static_cast<int>(head_.size()); }
  /// Value of a maximum s-t flow. Resets previous flow.
  long long max_flow(int s, int t);

 private:
  struct Arc {
    int to;
    int cap;
    int next;
  };
  std::vector<int> head_;
  std::vector<Arc> arcs_;
  std::vector<int> initial_cap_;
};

/// Directed acyclic network with n inputs and n outputs.
struct SuperconcentratorDAG {
  int vertex_count = 0;
  std::vector<Vertex> inputs;
  std::vector<Vertex> outputs;
  std::vector<Edge> edges;  ///< directed (from, to)
  std::vector<std::vector<Vertex>> layers;

  struct Level {
    int n = 0;
    long long concentrator_edges = 0;  ///< per side
    long long pairing_edges = 0;
    long long inner_edges = 0;
    long long total_edges = 0;
  };
  /// Edge accounting from the outermost level inwards; the last entry is the base.
  std::vector<Level> levels;
};

/// Supplies an m x m bi-expander of degree <= k with constant >= 1/(r-1).
using BiExpanderSupplier = std::function<BipartiteGraph(int m, int k, int r)>;

/**
 * Random k-regular bipartite graphs (unions of k random permutations) whose
 * bi-expansion constant is brute-forced; falls back to K_{m,m}.
 */
BiExpanderSupplier random_bi_expander_supplier(std::uint64_t seed);

/// (2k+3)r + 1, the edge density kept constant by the recursion.
int superconcentrator_density(int k, int r);

/**
 * Recursive superconcentrator: inputs feed a bounded concentrator into n r/(r+1)
 * middle inputs, a mirrored concentrator feeds the outputs, the middle is
 * built recursively and input i is joined to output i. Sizes at or below
 * `base_size` (default: the density) use the complete bipartite graph.
 */
SuperconcentratorDAG build_superconcentrator(int n, int r, int k, std::optional<int> base_size = std::nullopt,
                                             const BiExpanderSupplier& supplier = random_bi_expander_supplier(1));

struct SuperconcentratorCheck {
  bool ok = true;
  bool exhaustive = true;
  std::uint64_t pairs_checked = 0;
  std::uint64_t pairs_total = 0;
  /// Counterexample: sets of r inputs and r outputs with fewer than r disjoint paths.
  VertexSet bad_inputs, bad_outputs;
  long long bad_flow = 0;
};

/// Maximum number of vertex-disjoint paths from `sources` to `sinks`.
long long vertex_disjoint_paths(const SuperconcentratorDAG& dag, std::span<const Vertex> sources,
                                std::span<const Vertex> sinks);

/**
 * Checks r vertex-disjoint paths for every pair of r-sets of inputs and
 * outputs. When more than `exhaustive_limit` pairs exist, `samples` seeded
 * random pairs are checked instead.
 */
SuperconcentratorCheck verify_superconcentrator(const SuperconcentratorDAG& dag,
                                                std::uint64_t exhaustive_limit = 1000000,
                                                std::uint64_t samples = 10000, std::uint64_t seed = 1);

bool is_acyclic(const SuperconcentratorDAG& dag);

std::string serialize_dag(const SuperconcentratorDAG& dag);
SuperconcentratorDAG parse_dag(std::string_view text);

}  // namespace expkit
