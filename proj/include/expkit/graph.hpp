#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace expkit {

using Vertex = int;
/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition of an operation was violated (non-regular input, bad sizes, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/**
 * Simple undirected graph on vertices 0..n-1.
 *
 * Adjacency lists are kept sorted; loops and parallel edges are rejected.
 */
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Builds a graph from an edge list. Throws on loops or out-of-range endpoints;
  /// repeated edges are merged.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }
  int max_degree() const noexcept;
  int min_degree() const noexcept;
  bool has_edge(Vertex u, Vertex v) const;

  /// Inserts uv; returns false if the edge was already present.
  bool add_edge(Vertex u, Vertex v);
  bool remove_edge(Vertex u, Vertex v);
  /// Appends isolated vertices; returns the id of the first new vertex.
  Vertex add_vertices(int count);

  /// All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  /// Handshake and symmetry check; throws std::logic_error on corruption.
  void validate() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

/// Undirected multigraph; loops and repeated edges are allowed.
struct Multigraph {
  int n = 0;
  std::vector<Edge> edges;

  struct Collapse {
    Graph graph;
    int loops_dropped = 0;
    int duplicates_dropped = 0;
  };
  /// Keeps one copy of every edge and drops loops.
  Collapse collapse() const;
};

/// Bipartite graph with inputs 0..n_in-1 and outputs 0..n_out-1.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(int n_in, int n_out);

  int inputs() const noexcept { return static_cast<int>(in_adj_.size()); }
  int outputs() const noexcept { return static_cast<int>(out_adj_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool add_edge(Vertex input, Vertex output);
  bool has_edge(Vertex input, Vertex output) const;

  /// Outputs adjacent to an input (sorted).
  const std::vector<Vertex>& out_neighbors(Vertex input) const { return in_adj_.at(input); }
  /// Inputs adjacent to an output (sorted).
  const std::vector<Vertex>& in_neighbors(Vertex output) const { return out_adj_.at(output); }

  int input_degree(Vertex input) const { return static_cast<int>(in_adj_.at(input).size()); }
  int output_degree(Vertex output) const { return static_cast<int>(out_adj_.at(output).size()); }

  /// True when every vertex on both sides has degree k.
  bool is_regular(int k) const;

  std::vector<Edge> edges() const;

  /// Same graph with the roles of inputs and outputs exchanged.
  BipartiteGraph transposed() const;

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

 private:
  std::vector<std::vector<Vertex>> in_adj_;
  std::vector<std::vector<Vertex>> out_adj_;
  std::size_t edge_count_ = 0;
};

/// Partition of 0..n-1 into parts.
class Partition {
 public:
  Partition() = default;
  /// part_of[v] is the part label of v; labels must cover 0..max contiguously.
  explicit Partition(std::vector<int> part_of);

  int ground_size() const noexcept { return static_cast<int>(part_of_.size()); }
  int part_count() const noexcept { return static_cast<int>(parts_.size()); }
  int part_of(Vertex v) const { return part_of_.at(v); }
  const std::vector<VertexSet>& parts() const noexcept { return parts_; }
  bool is_equitable() const noexcept;

  static Partition singletons(int n);

 private:
  std::vector<int> part_of_;
  std::vector<VertexSet> parts_;
};

// ---------------------------------------------------------------------------
// Basic queries

/// Open neighbourhood of a set: vertices outside A adjacent to some vertex of A.
VertexSet boundary(const Graph& g, std::span<const Vertex> a);

/// Outputs adjacent to a set of inputs.
VertexSet boundary(const BipartiteGraph& b, std::span<const Vertex> inputs);

/// BFS distances from a source; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Largest pairwise distance, or nullopt when the graph is disconnected.
std::optional<int> diameter(const Graph& g);

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Two-colouring (0/1 per vertex) when the graph is bipartite.
std::optional<std::vector<int>> bipartition(const Graph& g);

Graph complement(const Graph& g);
bool is_k_regular(const Graph& g, int k);

/// Subgraph induced on `keep` (relabelled 0..|keep|-1 in the given order).
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

/// True when every edge of `sub` is an edge of `g` (sub.order() <= g.order()).
bool is_subgraph(const Graph& sub, const Graph& g);

// ---------------------------------------------------------------------------
// Text formats

struct ParsedGraph {
  Graph graph;
  int duplicate_edges = 0;
};

/// "n m" header followed by m lines "u v".
ParsedGraph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

/// "n_in n_out m" header followed by m lines "input output".
BipartiteGraph parse_bipartite_edge_list(std::string_view text);
std::string serialize_bipartite_edge_list(const BipartiteGraph& b);

/// "n" header followed by n part labels.
Partition parse_partition(std::string_view text);

std::string to_dot(const Graph& g, std::string_view name = "G");

}  // namespace expkit
