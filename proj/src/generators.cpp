#include "expkit/generators.hpp"


namespace expkit {

Graph path_graph(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw ContractError("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

BipartiteGraph complete_bipartite(int n_in, int n_out) {
  BipartiteGraph b(n_in, n_out);
  for (Vertex i = 0; i < n_in; ++i)
    for (Vertex o = 0; o < n_out; ++o) b.add_edge(i, o);
  return b;
}

Graph random_graph(int n, double p, Rng& rng) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.unit() < p) g.add_edge(u, v);
  return g;
}

Graph random_bounded_degree_graph(int n, int k, int attempts, Rng& rng) {
  Graph g(n);
  if (n < 2) return g;
  for (int t = 0; t < attempts; ++t) {
    auto u = static_cast<Vertex>(rng.below(n));
    auto v = static_cast<Vertex>(rng.below(n));
    if (u != v && g.degree(u) < k && g.degree(v) < k) g.add_edge(u, v);
  }
  return g;
}

Graph random_regular_graph(int n, int k, Rng& rng) {
  if (k < 0 || k >= n || (static_cast<long long>(n) * k) % 2 != 0)
    throw ContractError("no " + std::to_string(k) + "-regular graph on " + std::to_string(n) + " vertices");
  // Pair random free points, skipping pairs that would create loops or repeats
  // and restarting when no admissible pair is left.
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Graph g(n);
    std::vector<Vertex> points;
    for (Vertex v = 0; v < n; ++v)
      for (int i = 0; i < k; ++i) points.push_back(v);
    bool stuck = false;
    while (!points.empty() && !stuck) {
      bool placed = false;
      for (int tries = 0; tries < 50 && !placed; ++tries) {
        auto i = static_cast<std::size_t>(rng.below(points.size()));
        auto j = static_cast<std::size_t>(rng.below(points.size()));
        Vertex u = points[i], v = points[j];
        if (u == v || g.has_edge(u, v)) continue;
        g.add_edge(u, v);
        if (i < j) std::swap(i, j);
        points.erase(points.begin() + static_cast<std::ptrdiff_t>(i));
        points.erase(points.begin() + static_cast<std::ptrdiff_t>(j));
        placed = true;
      }
      if (placed) continue;
      stuck = true;
      for (std::size_t i = 0; i < points.size() && stuck; ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
          if (points[i] != points[j] && !g.has_edge(points[i], points[j])) {
            stuck = false;
            break;
          }
    }
    if (!stuck) return g;
  }
  throw Error("random_regular_graph: failed to pair points");
}

BipartiteGraph random_bipartite(int n_in, int n_out, double p, Rng& rng) {
  BipartiteGraph b(n_in, n_out);
  for (Vertex i = 0; i < n_in; ++i)
    for (Vertex o = 0; o < n_out; ++o)
      if (rng.unit() < p) b.add_edge(i, o);
  return b;
}

}  // namespace expkit
