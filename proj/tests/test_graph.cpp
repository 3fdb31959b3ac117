#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "expkit/generators.hpp"
#include "expkit/graph.hpp"

using namespace expkit;

namespace {

// Floyd-Warshall reference for diameter.
int reference_diameter(const Graph& g) {
  const int n = g.order();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  int best = 0;
  for (auto& row : d)
    for (int x : row) best = std::max(best, x);
  return best >= inf ? -1 : best;
}

bool isomorphic_small(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> p(a.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : a.edges())
      if (!b.has_edge(p[u], p[v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace

TEST_CASE("parse_edge_list") {
  auto tri = parse_edge_list("3 3\n0 1\n1 2\n0 2");
  CHECK(tri.graph == complete_graph(3));
  CHECK(tri.duplicate_edges == 0);

  auto empty = parse_edge_list("2 0");
  CHECK(empty.graph.order() == 2);
  CHECK(empty.graph.edge_count() == 0);

  auto dup = parse_edge_list("3 2\n0 1\n0 1");
  CHECK(dup.graph.edge_count() == 1);
  CHECK(dup.graph.has_edge(0, 1));
  CHECK(dup.graph.degree(2) == 0);
  CHECK(dup.duplicate_edges == 1);
}

TEST_CASE("parse errors name the offending line") {
  auto line_of = [](const char* text) {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("3 2\n0 1\n1 1\n") == 3);
  CHECK(line_of("3 2\n0 1\n1 7\n") == 3);
  CHECK(line_of("3 1\n0 x\n") == 2);
  CHECK(line_of("3 1\n0 1 2\n") == 2);
  CHECK(line_of("3 2\n0 1") == 2);
  CHECK(line_of("3 2\n0 1\n") == 3);
  CHECK(line_of("three\n") == 1);
  CHECK(line_of("") == 1);
}

TEST_CASE("serialize round trip") {
  Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    Graph g = random_graph(12, 0.3, rng);
    auto parsed = parse_edge_list(serialize_edge_list(g));
    CHECK(parsed.graph == g);
    CHECK(parsed.duplicate_edges == 0);
  }
  BipartiteGraph b = random_bipartite(5, 7, 0.4, rng);
  CHECK(parse_bipartite_edge_list(serialize_bipartite_edge_list(b)) == b);
}

TEST_CASE("boundary") {
  Graph k3 = complete_graph(3);
  CHECK(boundary(k3, std::vector<Vertex>{0}) == VertexSet{1, 2});
  Graph c6 = cycle_graph(6);
  CHECK(boundary(c6, std::vector<Vertex>{0, 1, 2}) == VertexSet{3, 5});
  CHECK(boundary(c6, std::vector<Vertex>{0, 1, 2, 3, 4, 5}).empty());
  CHECK_THROWS_AS(boundary(c6, std::vector<Vertex>{6}), ContractError);

  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    Graph g = random_graph(10, 0.3, rng);
    VertexSet a;
    for (Vertex v = 0; v < 10; ++v)
      if (rng.below(2)) a.push_back(v);
    VertexSet d = boundary(g, a);
    VertexSet expected;
    for (Vertex v = 0; v < 10; ++v) {
      if (std::binary_search(a.begin(), a.end(), v)) continue;
      for (Vertex u : a)
        if (g.has_edge(u, v)) {
          expected.push_back(v);
          break;
        }
    }
    CHECK(d == expected);
  }
}

TEST_CASE("diameter") {
  CHECK(diameter(complete_graph(4)) == 1);
  CHECK(diameter(cycle_graph(6)) == 3);
  std::vector<Edge> two{{0, 1}, {2, 3}};
  CHECK_FALSE(diameter(Graph::from_edges(4, two)).has_value());
  Rng rng(9);
  for (int t = 0; t < 30; ++t) {
    Graph g = random_graph(9, 0.35, rng);
    auto d = diameter(g);
    CHECK(d.value_or(-1) == reference_diameter(g));
  }
}

TEST_CASE("complement") {
  CHECK(complement(complete_graph(4)).edge_count() == 0);
  CHECK(complement(Graph(5)) == complete_graph(5));
  Graph c5 = cycle_graph(5);
  CHECK(complement(c5) != c5);
  CHECK(isomorphic_small(complement(c5), c5));
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    Graph g = random_graph(11, 0.5, rng);
    CHECK(complement(complement(g)) == g);
    CHECK(g.edge_count() + complement(g).edge_count() == 55u);
  }
}

TEST_CASE("is_k_regular") {
  CHECK(is_k_regular(cycle_graph(6), 2));
  CHECK_FALSE(is_k_regular(path_graph(3), 2));
  Graph p = petersen_graph();
  CHECK(p.edge_count() == 15u);
  CHECK(is_k_regular(p, 3));
  CHECK(diameter(p) == 2);
}

TEST_CASE("handshake holds after construction") {
  Rng rng(21);
  for (int t = 0; t < 20; ++t) {
    Graph g = random_bounded_degree_graph(15, 4, 60, rng);
    CHECK_NOTHROW(g.validate());
    CHECK(g.max_degree() <= 4);
    Graph r = random_regular_graph(12, 3, rng);
    CHECK(is_k_regular(r, 3));
    CHECK_NOTHROW(r.validate());
  }
}

TEST_CASE("multigraph collapse") {
  Multigraph m{4, {{0, 1}, {1, 0}, {2, 2}, {2, 3}, {0, 1}}};
  auto c = m.collapse();
  CHECK(c.graph.edge_count() == 2u);
  CHECK(c.loops_dropped == 1);
  CHECK(c.duplicates_dropped == 2);
}

TEST_CASE("partition") {
  Partition p(std::vector<int>{0, 1, 0, 1});
  CHECK(p.part_count() == 2);
  CHECK(p.is_equitable());
  CHECK(p.parts()[1] == VertexSet{1, 3});
  CHECK_FALSE(Partition(std::vector<int>{0, 0, 1}).is_equitable());
  CHECK_THROWS_AS(Partition(std::vector<int>{0, 2}), ContractError);
  CHECK(parse_partition("4\n0 1\n0 1\n").parts() == p.parts());
}

TEST_CASE("components and bipartition") {
  std::vector<Edge> e{{0, 1}, {2, 3}, {3, 4}};
  Graph g = Graph::from_edges(5, e);
  auto comps = connected_components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[1] == VertexSet{2, 3, 4});
  CHECK(bipartition(cycle_graph(6)).has_value());
  CHECK_FALSE(bipartition(cycle_graph(5)).has_value());
}

TEST_CASE("dot export") {
  std::string dot = to_dot(path_graph(2));
  CHECK(dot == "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n");
}
