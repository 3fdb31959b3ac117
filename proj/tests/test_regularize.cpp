#include <doctest.h>

#include <algorithm>

#include "expkit/generators.hpp"
#include "expkit/regularize.hpp"

using namespace expkit;

namespace {

std::vector<int> sorted_degrees(const Graph& g) {
  std::vector<int> d;
  for (Vertex v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

// Seven-vertex input: 5-cycle x0..x4 with chords x1x3, x2x4, path v0 v1, edge x0 v1.
Graph worked_example() {
  std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 3}, {2, 4}, {5, 6}, {0, 6}};
  return Graph::from_edges(7, e);
}

// n-1 vertices of degree k and one of degree k-2, by removing a cherry from a k-regular graph.
Graph cherry_family(int n, int k, Rng& rng) {
  while (true) {
    Graph g = random_regular_graph(n, k, rng);
    for (Vertex v = 0; v < n; ++v) {
      const auto nb = g.neighbors(v);
      for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
          if (!g.has_edge(nb[i], nb[j])) {
            g.remove_edge(v, nb[i]);
            g.remove_edge(v, nb[j]);
            g.add_edge(nb[i], nb[j]);
            return g;
          }
    }
  }
}

}  // namespace

TEST_CASE("circulant_regular") {
  Graph c = circulant_regular(9, 4);
  CHECK(is_k_regular(c, 4));
  for (Vertex v = 0; v < 9; ++v)
    for (int s : {1, 2, 7, 8}) CHECK(c.has_edge(v, (v + s) % 9));
  CHECK(circulant_regular(4, 3) == complete_graph(4));
  CHECK_THROWS_AS(circulant_regular(5, 3), ContractError);
  CHECK_THROWS_AS(circulant_regular(4, 4), ContractError);
}

TEST_CASE("existence parity laws") {
  for (int n = 2; n <= 14; ++n)
    for (int k = 1; k < n; ++k) {
      bool even = (n * k) % 2 == 0;
      if (even) {
        Graph g = circulant_regular(n, k);
        CHECK(is_k_regular(g, k));
        if (k > 1) {
          for (Vertex v = 0; v < n; ++v) CHECK(g.has_edge(v, (v + 1) % n));
        }
      } else {
        CHECK_THROWS_AS(circulant_regular(n, k), ContractError);
      }
      for (int a = 0; a <= n; ++a) {
        int b = n - a;
        bool ok = (a * k + b * (k - 1)) % 2 == 0;
        if (!ok) {
          CHECK_THROWS_AS(almost_regular(a, b, k), ContractError);
          continue;
        }
        Graph h = almost_regular(a, b, k);
        REQUIRE(h.order() == n);
        for (Vertex v = 0; v < n; ++v) CHECK(h.degree(v) == (v < a ? k : k - 1));
      }
    }
}

TEST_CASE("almost_regular examples") {
  CHECK(sorted_degrees(almost_regular(2, 2, 2)) == std::vector<int>{1, 1, 2, 2});
  CHECK(almost_regular(6, 0, 3) == circulant_regular(6, 3));
  CHECK(sorted_degrees(almost_regular(1, 2, 2)) == std::vector<int>{1, 1, 2});
}

TEST_CASE("make_k_regular examples") {
  auto p3 = make_k_regular(path_graph(3), 2);
  CHECK(p3.added_vertices == 0);
  CHECK(p3.output == complete_graph(3));

  auto single = make_k_regular(Graph(1), 3);
  CHECK(single.added_vertices == 3);
  CHECK(single.output == complete_graph(4));

  auto fig = make_k_regular(worked_example(), 3);
  CHECK(fig.added_vertices == 3);
  CHECK(is_k_regular(fig.output, 3));
  CHECK(fig.contains_input);

  CHECK_THROWS_AS(make_k_regular(complete_graph(4), 2), ContractError);
}

TEST_CASE("make_k_regular on random bounded-degree graphs") {
  Rng rng(30);
  for (int t = 0; t < 300; ++t) {
    int n = 1 + static_cast<int>(rng.below(30));
    int k = 1 + static_cast<int>(rng.below(6));
    Graph g = random_bounded_degree_graph(n, k, static_cast<int>(rng.below(4 * n + 1)), rng);
    auto r = make_k_regular(g, k);
    CHECK(is_k_regular(r.output, k));
    CHECK(r.contains_input);
    CHECK(r.added_vertices <= (k % 2 == 0 ? k + 1 : k + 2));
    if (is_connected(g)) CHECK(is_connected(r.output));
  }
}

TEST_CASE("sharpness families need the full bound") {
  Rng rng(31);
  for (int k : {4, 6}) {
    for (int n : {k + 3, 2 * k + 1, 3 * k}) {
      if ((n * k) % 2) continue;
      Graph g = cherry_family(n, k, rng);
      auto r = make_k_regular(g, k);
      CHECK(r.added_vertices == k + 1);
    }
  }
  for (int k : {3, 5}) {
    for (int n : {k + 2, 2 * k + 1, 3 * k + 2}) {
      if (n % 2 == 0) continue;
      Graph g = almost_regular(n - 1, 1, k);
      auto r = make_k_regular(g, k);
      CHECK(r.added_vertices == k + 2);
    }
  }
}

TEST_CASE("dirac_hamiltonian_cycle") {
  Rng rng(32);
  for (int t = 0; t < 100; ++t) {
    int n = 3 + static_cast<int>(rng.below(20));
    Graph g = random_graph(n, 0.7, rng);
    if (2 * g.min_degree() < n) continue;
    auto cycle = dirac_hamiltonian_cycle(g);
    REQUIRE(static_cast<int>(cycle.size()) == n);
    auto sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i) CHECK(sorted[i] == i);
    for (int i = 0; i < n; ++i) CHECK(g.has_edge(cycle[i], cycle[(i + 1) % n]));
  }
}

TEST_CASE("raise_regular_degree") {
  Graph c8 = cycle_graph(8);
  Graph r4 = raise_regular_degree(c8, 4);
  CHECK(is_k_regular(r4, 4));
  CHECK(is_subgraph(c8, r4));
  CHECK(r4.order() == 8);

  Graph e6 = raise_regular_degree(Graph(6), 2);
  CHECK(is_k_regular(e6, 2));

  Graph r3 = raise_regular_degree(c8, 3);
  CHECK(is_k_regular(r3, 3));
  CHECK(r3.edge_count() == c8.edge_count() + 4);

  CHECK_THROWS_AS(raise_regular_degree(cycle_graph(7), 3), ContractError);
  CHECK_THROWS_AS(raise_regular_degree(c8, 5), ContractError);

  Rng rng(33);
  for (int t = 0; t < 60; ++t) {
    int n = 4 + 2 * static_cast<int>(rng.below(10));
    int k0 = static_cast<int>(rng.below(n / 2));
    int k = k0 + 1 + static_cast<int>(rng.below(n / 2 - k0));
    Graph g = k0 == 0 ? Graph(n) : random_regular_graph(n, k0, rng);
    Graph r = raise_regular_degree(g, k);
    CHECK(r.order() == n);
    CHECK(is_k_regular(r, k));
    CHECK(is_subgraph(g, r));
  }
}

TEST_CASE("regularized_expander_constant") {
  auto r = regularized_expander_constant(3, Rational(1));
  CHECK(r.threshold == 15);
  CHECK(r.c_new == Rational(1, 6));
  CHECK(regularized_expander_constant(4, Rational(1, 2)).threshold == 33);
  CHECK_THROWS_AS(regularized_expander_constant(3, Rational(0)), ContractError);
  CHECK_THROWS_AS(regularized_expander_constant(3, Rational(3, 2)), ContractError);
}
