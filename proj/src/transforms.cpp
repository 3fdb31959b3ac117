#include "expkit/transforms.hpp"

#include "expkit/matching.hpp"

namespace expkit {

BipartiteGraph fixed_to_bi(const Graph& x) {
  const int n = x.order();
  if (n > 0 && !is_k_regular(x, x.degree(0))) throw ContractError("fixed_to_bi: input graph is not regular");
  BipartiteGraph b(n, n);
  for (Vertex v = 0; v < n; ++v) {
    b.add_edge(v, v);
    for (Vertex w : x.neighbors(v)) b.add_edge(v, w);
  }
  return b;
}

GluedGraph bi_to_fixed(const BipartiteGraph& b) {
  if (b.inputs() != b.outputs()) throw ContractError("bi_to_fixed: sides differ in size");
  const int n = b.inputs();
  if (n > 0 && !b.is_regular(b.input_degree(0))) throw ContractError("bi_to_fixed: bipartite graph is not regular");
  auto matching = lex_least_input_matching(b);
  if (!matching) throw std::logic_error("regular bipartite graph without perfect matching");
  // twin[o] = input glued to output o.
  std::vector<Vertex> twin(n);
  for (auto [i, o] : matching->pairs) twin[o] = i;
  GluedGraph out{Graph(n), 0};
  for (auto [i, o] : b.edges()) {
    Vertex w = twin[o];
    if (w == i)
      ++out.loops_dropped;
    else
      out.graph.add_edge(i, w);
  }
  out.graph.validate();
  return out;
}

Graph quotient_graph(const Graph& g, const Partition& p) {
  if (p.ground_size() != g.order()) throw ContractError("quotient_graph: partition size differs from vertex count");
  Graph q(p.part_count());
  for (auto [u, v] : g.edges()) {
    int a = p.part_of(u), b = p.part_of(v);
    if (a != b) q.add_edge(a, b);
  }
  return q;
}

Graph torus_graph(int m) {
  if (m < 3) throw ContractError("torus_graph: m must be at least 3");
  Graph g(m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      g.add_edge(i * m + j, i * m + (j + 1) % m);
      g.add_edge(i * m + j, ((i + 1) % m) * m + j);
    }
  g.validate();
  return g;
}

Partition torus_shear_partition(int m) {
  if (m < 3) throw ContractError("torus_shear_partition: m must be at least 3");
  std::vector<int> part(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      long long shear = static_cast<long long>(j) * (j + 1) / 2;
      part[i * m + j] = static_cast<int>((i + shear) % m);
    }
  return Partition(std::move(part));
}

TorusCheeger torus_cheeger(int m) {
  Graph g = torus_graph(m);
  TorusCheeger out;
  out.m = m;
  out.lower = cheeger_routing_lower_bound(g);
  bool first = true;
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= m; ++b) {
      if (2 * a * b > m * m) continue;
      VertexSet rect;
      for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) rect.push_back(i * m + j);
      Rational r = cut_ratio(g, rect);
      BigRational big(r.numerator(), r.denominator());
      if (first || big < out.upper) {
        out.upper = big;
        out.witness = rect;
        first = false;
      }
    }
  return out;
}

}  // namespace expkit
