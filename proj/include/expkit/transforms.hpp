#pragma once

#include "expkit/expansion.hpp"
#include "expkit/graph.hpp"

namespace expkit {

/**
 * Splits every vertex v of a k-regular graph into an input v- and an output
 * v+, joining v- to v+ and to w+ for every edge vw. The result is
 * (k+1)-regular with n inputs and n outputs.
 */
BipartiteGraph fixed_to_bi(const Graph& x);

struct GluedGraph {
  Graph graph;
  /// Matching edges v- v+ that would have become loops.
  int loops_dropped = 0;
};

/**
 * Glues each input of a k-regular bipartite graph to the output it is paired
 * with by the lexicographically least perfect matching; vw is an edge when
 * v- w+ or w- v+ is.
 */
GluedGraph bi_to_fixed(const BipartiteGraph& b);

/// One vertex per part; two parts are adjacent when some edge joins them.
Graph quotient_graph(const Graph& g, const Partition& p);

/// m x m grid wrapping around both sides; vertex (i, j) has id i*m + j.
Graph torus_graph(int m);

/// (i, j) goes to part (i + j(j+1)/2) mod m.
Partition torus_shear_partition(int m);

struct TorusCheeger {
  int m = 0;
  /// Routing lower bound and best rectangle cut.
  BigRational lower;
  BigRational upper;
  VertexSet witness;
  bool exact() const { return lower == upper; }
};

/// Cheeger constant of the m x m torus, bracketed without subset enumeration.
TorusCheeger torus_cheeger(int m);

}  // namespace expkit
