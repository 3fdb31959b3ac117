#include "expkit/regularize.hpp"

#include <algorithm>
#include <numeric>

namespace expkit {

namespace {

Graph circulant_even(int n, int k) {
  Graph g(n);
  for (Vertex v = 0; v < n; ++v)
    for (int s = 1; s <= k / 2; ++s) g.add_edge(v, (v + s) % n);
  return g;
}

}  // namespace

Graph circulant_regular(int n, int k) {
  if (k <= 0 || k >= n) throw ContractError("circulant_regular: need 0 < k < n");
  if ((static_cast<long long>(n) * k) % 2 != 0)
    throw ContractError("no " + std::to_string(k) + "-regular graph on " + std::to_string(n) +
                        " vertices: nk is odd");
  Graph g = circulant_even(n, k);
  if (k % 2 == 1)
    for (Vertex v = 0; v < n / 2; ++v) g.add_edge(v, v + n / 2);
  g.validate();
  return g;
}

Graph almost_regular(int a, int b, int k) {
  const int n = a + b;
  if (a < 0 || b < 0 || k <= 0 || k >= n) throw ContractError("almost_regular: need a, b >= 0 and 0 < k < a+b");
  if ((static_cast<long long>(a) * k + static_cast<long long>(b) * (k - 1)) % 2 != 0)
    throw ContractError("almost_regular: ak + b(k-1) is odd");
  if (b == 0) return circulant_regular(n, k);
  if (a == 0) return k == 1 ? Graph(n) : circulant_regular(n, k - 1);

  Graph g(n);
  if (k == 1) {
    for (Vertex v = 0; v + 1 < a; v += 2) g.add_edge(v, v + 1);
  } else if ((static_cast<long long>(n) * k) % 2 == 0) {
    // Hamiltonian k-regular graph minus alternate cycle edges covering b vertices.
    g = circulant_regular(n, k);
    for (Vertex v = 0; v + 1 < b; v += 2) g.remove_edge(v, v + 1);
  } else {
    // (k-1)-regular graph plus a complement matching covering a vertices.
    g = circulant_even(n, k - 1);
    const int h = (n - 1) / 2;
    for (Vertex v = 0; v < a / 2; ++v) g.add_edge(v, v + h);
  }
  // Move the vertices of degree k to the front.
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_partition(order.begin(), order.end(), [&](Vertex v) { return g.degree(v) == k; });
  Graph out = induced_subgraph(g, order);
  out.validate();
  return out;
}

std::vector<Vertex> dirac_hamiltonian_cycle(const Graph& g) {
  const int n = g.order();
  if (n < 3) throw ContractError("dirac_hamiltonian_cycle: need at least 3 vertices");
  if (2 * g.min_degree() < n) throw ContractError("dirac_hamiltonian_cycle: minimum degree below n/2");

  std::vector<Vertex> path{0};
  std::vector<char> on_path(n, 0);
  on_path[0] = 1;

  auto extend = [&] {
    for (bool grew = true; grew;) {
      grew = false;
      for (Vertex w : g.neighbors(path.back()))
        if (!on_path[w]) {
          path.push_back(w);
          on_path[w] = 1;
          grew = true;
          break;
        }
      if (grew) continue;
      for (Vertex w : g.neighbors(path.front()))
        if (!on_path[w]) {
          path.insert(path.begin(), w);
          on_path[w] = 1;
          grew = true;
          break;
        }
    }
  };

  while (true) {
    extend();
    // Rotate the maximal path into a cycle through the same vertices.
    const int len = static_cast<int>(path.size());
    const Vertex first = path.front(), last = path.back();
    int pivot = -1;
    for (int i = 0; i + 1 < len; ++i)
      if (g.has_edge(first, path[i + 1]) && g.has_edge(last, path[i])) {
        pivot = i;
        break;
      }
    if (pivot < 0) throw std::logic_error("dirac_hamiltonian_cycle: rotation failed");
    std::vector<Vertex> cycle(path.begin(), path.begin() + pivot + 1);
    cycle.insert(cycle.end(), path.rbegin(), path.rend() - (pivot + 1));
    if (len == n) return cycle;
    // Open the cycle next to a vertex with a neighbour outside it.
    bool opened = false;
    for (int i = 0; i < len && !opened; ++i)
      for (Vertex w : g.neighbors(cycle[i]))
        if (!on_path[w]) {
          path.assign(1, w);
          for (int s = 0; s < len; ++s) path.push_back(cycle[(i + s) % len]);
          on_path[w] = 1;
          opened = true;
          break;
        }
    if (!opened) throw std::logic_error("dirac_hamiltonian_cycle: graph is disconnected");
  }
}

Graph raise_regular_degree(const Graph& g, int k) {
  const int n = g.order();
  const int k0 = n > 0 ? g.degree(0) : 0;
  if (!is_k_regular(g, k0)) throw ContractError("raise_regular_degree: input is not regular");
  if (k <= k0) throw ContractError("raise_regular_degree: target degree must exceed current degree");
  if ((static_cast<long long>(n) * k) % 2 != 0) throw ContractError("raise_regular_degree: nk is odd");
  if (2 * k > n) throw ContractError("raise_regular_degree: need k <= n/2");

  Graph out = g;
  int degree = k0;
  while (degree < k) {
    Graph comp = complement(out);
    std::vector<Vertex> cycle = n == 2 ? std::vector<Vertex>{0, 1} : dirac_hamiltonian_cycle(comp);
    if (k - degree >= 2) {
      for (int i = 0; i < n; ++i) out.add_edge(cycle[i], cycle[(i + 1) % n]);
      degree += 2;
    } else {
      for (int i = 0; i + 1 < n; i += 2) out.add_edge(cycle[i], cycle[i + 1]);
      degree += 1;
    }
  }
  if (!is_k_regular(out, k)) throw std::logic_error("raise_regular_degree: result is not regular");
  return out;
}

RegularizationReport make_k_regular(const Graph& g, int k) {
  const int n = g.order();
  if (k < 0) throw ContractError("make_k_regular: negative degree");
  if (g.max_degree() > k)
    throw ContractError("make_k_regular: maximum degree " + std::to_string(g.max_degree()) + " exceeds k = " +
                        std::to_string(k));
  Graph x = g;

  // Raise one maximum-degree vertex to degree k.
  if (n > k && n > 0 && x.max_degree() < k) {
    Vertex top = 0;
    for (Vertex v = 1; v < n; ++v)
      if (x.degree(v) > x.degree(top)) top = v;
    for (Vertex w = 0; w < n && x.degree(top) < k; ++w)
      if (w != top && !x.has_edge(top, w)) x.add_edge(top, w);
  }

  // Join deficient vertices until they form a clique, lowest pairs first.
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n && x.degree(u) < k; ++v)
      if (x.degree(v) < k && !x.has_edge(u, v)) x.add_edge(u, v);

  std::vector<Vertex> deficient;
  for (Vertex v = 0; v < n; ++v)
    if (x.degree(v) < k) deficient.push_back(v);

  if (deficient.size() == 1 && x.degree(deficient[0]) == 0) {
    // Isolated vertex: attach a complete graph on k new vertices.
    Vertex first = x.add_vertices(k);
    for (int i = 0; i < k; ++i) {
      x.add_edge(deficient[0], first + i);
      for (int j = i + 1; j < k; ++j) x.add_edge(first + i, first + j);
    }
  } else if (!deficient.empty()) {
    long long missing = 0;
    int widest = 0;
    for (Vertex v : deficient) {
      missing += k - x.degree(v);
      widest = std::max(widest, k - x.degree(v));
    }
    // Smallest m with m >= delta, m > k - floor(l/m) > 0 and (n+m)k even.
    int m = 0;
    for (int cand = std::max(widest, 1); cand <= k + 2 && m == 0; ++cand) {
      long long rest = k - missing / cand;
      if (cand > rest && rest > 0 && ((static_cast<long long>(n) + cand) * k) % 2 == 0) m = cand;
    }
    if (m == 0) throw std::logic_error("make_k_regular: no admissible number of new vertices");

    std::stable_sort(deficient.begin(), deficient.end(),
                     [&](Vertex a, Vertex b) { return x.degree(a) < x.degree(b); });
    std::vector<int> need(deficient.size());
    for (std::size_t j = 0; j < deficient.size(); ++j) need[j] = k - x.degree(deficient[j]);

    const Vertex first = x.add_vertices(m);
    long long index = 1;
    for (std::size_t j = 0; j < deficient.size(); ++j)
      for (int e = 0; e < need[j]; ++e, ++index) x.add_edge(deficient[j], first + static_cast<int>(index % m));

    // Overlay an almost-regular graph bringing the new vertices to degree k.
    const int d = static_cast<int>(missing / m) + 1;
    std::vector<Vertex> low, high;  // new vertices of degree d-1 and d
    for (int i = 0; i < m; ++i) (x.degree(first + i) == d ? high : low).push_back(first + i);
    Graph overlay = almost_regular(static_cast<int>(low.size()), static_cast<int>(high.size()), k - d + 1);
    std::vector<Vertex> place = low;
    place.insert(place.end(), high.begin(), high.end());
    for (auto [u, v] : overlay.edges()) x.add_edge(place[u], place[v]);
  }

  if (n > 0 && is_connected(g)) {
    VertexSet keep;
    for (const auto& comp : connected_components(x))
      if (comp.front() == 0) keep = comp;
    if (static_cast<int>(keep.size()) < x.order()) x = induced_subgraph(x, keep);
  }

  x.validate();
  if (!is_k_regular(x, k)) throw std::logic_error("make_k_regular: output is not regular");
  RegularizationReport report;
  report.added_vertices = x.order() - n;
  report.added_edges = static_cast<int>(x.edge_count() - g.edge_count());
  report.contains_input = is_subgraph(g, x);
  report.output = std::move(x);
  return report;
}

RegularizedConstant regularized_expander_constant(int k, const Rational& c) {
  if (k < 1) throw ContractError("regularized_expander_constant: degree must be positive");
  if (c <= 0 || c > 1) throw ContractError("regularized_expander_constant: need 0 < c <= 1");
  const long long num = 2LL * (k + 3) * (k + 3) * c.denominator();
  const long long den = c.numerator() * (k + 2);
  return {(num + den - 1) / den, c / (k + 3)};
}

}  // namespace expkit
