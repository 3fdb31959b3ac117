#pragma once

#include "expkit/expansion.hpp"
#include "expkit/graph.hpp"

namespace expkit {

/**
 * k-regular graph on n vertices placed on a circle: each vertex is joined to
 * its k/2 nearest vertices on either side, plus the antipodal vertex when k
 * is odd. Requires 0 < k < n and nk even.
 */
Graph circulant_regular(int n, int k);

/**
 * Graph on a+b vertices where vertices 0..a-1 have degree k and a..a+b-1
 * have degree k-1. Requires 0 < k < a+b and ak + b(k-1) even.
 */
Graph almost_regular(int a, int b, int k);

struct RegularizationReport {
  Graph output;
  int added_vertices = 0;
  int added_edges = 0;
  /// Input edges all present in the output on the same vertex ids.
  bool contains_input = false;
};

/**
 * Embeds a graph of maximum degree <= k into a k-regular graph by adding
 * edges and at most k+2 vertices (k+1 when k is even). Original vertices keep
 * their ids; new vertices follow. When the input is connected the output is
 * the component containing it.
 */
RegularizationReport make_k_regular(const Graph& g, int k);

/**
 * Adds edges to a k'-regular graph until it is k-regular, using Hamiltonian
 * cycles of the complement and a final perfect matching when k - k' is odd.
 * Requires k' < k, nk even and 2k <= n.
 */
Graph raise_regular_degree(const Graph& g, int k);

/**
 * Hamiltonian cycle of a graph with minimum degree >= n/2 and n >= 3, found by
 * path extension and rotation. Returns the vertex order of the cycle.
 */
std::vector<Vertex> dirac_hamiltonian_cycle(const Graph& g);

struct RegularizedConstant {
  /// Smallest n for which regularization keeps a fixed constant c/(k+3).
  long long threshold = 0;
  Rational c_new;
};

/// ceil(2(k+3)^2 / (c(k+2))) and c/(k+3). Requires 0 < c <= 1.
RegularizedConstant regularized_expander_constant(int k, const Rational& c);

}  // namespace expkit
