#pragma once

#include "expkit/graph.hpp"
#include "expkit/rng.hpp"

namespace expkit {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph petersen_graph();
BipartiteGraph complete_bipartite(int n_in, int n_out);

/// Each pair joined independently with probability p.
Graph random_graph(int n, double p, Rng& rng);

/// Random graph with maximum degree <= k: `attempts` random pairs, each added when both ends have room.
Graph random_bounded_degree_graph(int n, int k, int attempts, Rng& rng);

/// Random k-regular graph built by pairing free degree slots without loops or repeats.
Graph random_regular_graph(int n, int k, Rng& rng);

BipartiteGraph random_bipartite(int n_in, int n_out, double p, Rng& rng);

}  // namespace expkit
