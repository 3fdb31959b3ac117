#pragma once

#include "expkit/graph.hpp"

namespace fixtures {

// 3-regular bipartite graph on 7 + 7 vertices whose glued graph has degrees 2, 3 and 4.
inline expkit::BipartiteGraph seven_by_seven() {
  const int rows[7][3] = {{0, 1, 2}, {1, 3, 5}, {2, 4, 6}, {0, 3, 5}, {0, 4, 6}, {1, 3, 5}, {2, 4, 6}};
  expkit::BipartiteGraph b(7, 7);
  for (int i = 0; i < 7; ++i)
    for (int o : rows[i]) b.add_edge(i, o);
  return b;
}

// Inputs 1..4 (stored 0..3), input n joined to outputs 2n and 2n+1 among 2..9 (stored 0..7).
inline expkit::BipartiteGraph doubling_graph() {
  expkit::BipartiteGraph b(4, 8);
  for (int n = 1; n <= 4; ++n) {
    b.add_edge(n - 1, 2 * n - 2);
    b.add_edge(n - 1, 2 * n + 1 - 2);
  }
  return b;
}

}  // namespace fixtures
