#include "expkit/expansion.hpp"

#include <algorithm>

#include "expkit/detail/subset_scan.hpp"

namespace expkit {

namespace {

using detail::SubsetScanner;

// Running minimum of num/den over positive denominators.
struct MinRatio {
  long long num = 0;
  long long den = 0;
  std::uint32_t mask = 0;

  void offer(long long n, long long d, std::uint32_t m) {
    if (den == 0 || n * den < num * d) {
      num = n;
      den = d;
      mask = m;
    }
  }
};

void require_order(const Graph& g, const char* what) {
  if (g.order() < 2) throw ContractError(std::string(what) + ": need at least 2 vertices");
  if (g.order() > detail::kMaxBruteForce)
    throw ContractError(std::string(what) + ": brute force limited to " +
                        std::to_string(detail::kMaxBruteForce) + " vertices");
}

// Smallest component, for disconnected graphs where every constant is 0.
std::optional<VertexSet> isolated_part(const Graph& g) {
  auto comps = connected_components(g);
  if (comps.size() <= 1) return std::nullopt;
  return *std::min_element(comps.begin(), comps.end(),
                           [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
}

template <class Ratio>
ExpansionCertificate graph_minimum(const Graph& g, ExpanderKind kind, const char* what, Ratio ratio) {
  require_order(g, what);
  ExpansionCertificate cert{kind, Rational(0), true, {}};
  if (auto part = isolated_part(g)) {
    cert.witness = *part;
    return cert;
  }
  const long long n = g.order();
  MinRatio best;
  SubsetScanner(g).run([&](const SubsetScanner::State& s) {
    if (2LL * s.size <= n) {
      auto [num, den] = ratio(n, s);
      best.offer(num, den, s.mask);
    }
    return true;
  });
  cert.c = Rational(best.num, best.den);
  cert.witness = detail::mask_to_set(best.mask);
  return cert;
}

}  // namespace

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_string(ExpanderKind kind) {
  switch (kind) {
    case ExpanderKind::expander: return "expander";
    case ExpanderKind::fixed: return "fixed";
    case ExpanderKind::bi: return "bi";
  }
  return "?";
}

ExpanderKind parse_expander_kind(const std::string& name) {
  if (name == "expander") return ExpanderKind::expander;
  if (name == "fixed") return ExpanderKind::fixed;
  if (name == "bi") return ExpanderKind::bi;
  throw ContractError("unknown expander kind '" + name + "'");
}

ExpansionCertificate expander_certificate(const Graph& g) {
  return graph_minimum(g, ExpanderKind::expander, "expander_constant", [](long long n, const SubsetScanner::State& s) {
    return std::pair<long long, long long>(s.boundary * n, (n - s.size) * s.size);
  });
}

Rational expander_constant(const Graph& g) { return expander_certificate(g).c; }

ExpansionCertificate fixed_expander_certificate(const Graph& g) {
  return graph_minimum(g, ExpanderKind::fixed, "fixed_expander_constant", [](long long, const SubsetScanner::State& s) {
    return std::pair<long long, long long>(s.boundary, s.size);
  });
}

Rational fixed_expander_constant(const Graph& g) { return fixed_expander_certificate(g).c; }

ExpansionCertificate bi_expander_certificate(const BipartiteGraph& b) {
  if (b.inputs() != b.outputs()) throw ContractError("bi_expander_constant: sides differ in size");
  if (b.inputs() < 2) throw ContractError("bi_expander_constant: need at least 2 inputs");
  const long long n = b.inputs();
  MinRatio best;
  SubsetScanner(b, false).run([&](const SubsetScanner::State& s) {
    if (2LL * s.size <= n) best.offer(s.boundary - s.size, s.size, s.mask);
    return true;
  });
  return {ExpanderKind::bi, Rational(best.num, best.den), true, detail::mask_to_set(best.mask)};
}

Rational bi_expander_constant(const BipartiteGraph& b) { return bi_expander_certificate(b).c; }

Rational cheeger_h(const Graph& g) {
  return graph_minimum(g, ExpanderKind::expander, "cheeger_h", [](long long, const SubsetScanner::State& s) {
           return std::pair<long long, long long>(s.cut, s.size);
         }).c;
}

Rational cheeger_h_prime(const Graph& g) {
  return graph_minimum(g, ExpanderKind::expander, "cheeger_h_prime", [](long long n, const SubsetScanner::State& s) {
           return std::pair<long long, long long>(s.cut * n, s.size * (n - s.size));
         }).c;
}

ExpansionCertificate certify_expansion(const Graph& g, ExpanderKind kind, const Rational& c) {
  if (kind == ExpanderKind::bi) throw ContractError("bi-expansion is defined for bipartite graphs");
  ExpansionCertificate best = kind == ExpanderKind::expander ? expander_certificate(g) : fixed_expander_certificate(g);
  ExpansionCertificate out{kind, c, best.c >= c, {}};
  if (!out.holds) out.witness = best.witness;
  return out;
}

ExpansionCertificate certify_expansion(const BipartiteGraph& b, const Rational& c) {
  ExpansionCertificate best = bi_expander_certificate(b);
  ExpansionCertificate out{ExpanderKind::bi, c, best.c >= c, {}};
  if (!out.holds) out.witness = best.witness;
  return out;
}

Rational cut_ratio(const Graph& g, std::span<const Vertex> a) {
  const int n = g.order();
  std::vector<char> in(n, 0);
  for (Vertex v : a) in.at(v) = 1;
  long long s = std::count(in.begin(), in.end(), 1);
  if (s == 0 || s == n) throw ContractError("cut_ratio: set must be proper and nonempty");
  long long cut = 0;
  for (Vertex v = 0; v < n; ++v)
    if (in[v])
      for (Vertex w : g.neighbors(v)) cut += !in[w];
  return Rational(cut, std::min(s, n - s));
}

std::vector<BigRational> edge_betweenness(const Graph& g) {
  using boost::multiprecision::cpp_int;
  if (!is_connected(g)) throw ContractError("edge_betweenness: graph must be connected");
  const int n = g.order();
  const auto edges = g.edges();
  auto edge_id = [&](Vertex u, Vertex v) {
    Edge e = u < v ? Edge(u, v) : Edge(v, u);
    return std::lower_bound(edges.begin(), edges.end(), e) - edges.begin();
  };
  std::vector<BigRational> bt(edges.size());
  for (Vertex s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1);
    std::vector<cpp_int> sigma(n);
    std::vector<Vertex> order{s};
    dist[s] = 0;
    sigma[s] = 1;
    for (std::size_t head = 0; head < order.size(); ++head) {
      Vertex v = order[head];
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          order.push_back(w);
        }
        if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
      }
    }
    std::vector<BigRational> delta(n);
    for (std::size_t i = order.size(); i-- > 1;) {
      Vertex w = order[i];
      for (Vertex v : g.neighbors(w)) {
        if (dist[v] != dist[w] - 1) continue;
        BigRational c = BigRational(sigma[v], sigma[w]) * (1 + delta[w]);
        bt[edge_id(v, w)] += c;
        delta[v] += c;
      }
    }
  }
  return bt;
}

BigRational cheeger_routing_lower_bound(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw ContractError("cheeger_routing_lower_bound: need at least 2 vertices");
  if (!is_connected(g)) return 0;
  auto bt = edge_betweenness(g);
  BigRational worst = *std::max_element(bt.begin(), bt.end());
  return BigRational(2 * ((n + 1) / 2)) / worst;
}

Rational convert_constant(ExpanderKind from, ExpanderKind to, int n, int k, const Rational& c) {
  if (k < 1) throw ContractError("convert_constant: degree must be positive");
  if (n < 1) throw ContractError("convert_constant: vertex count must be positive");
  if (from == to && from != ExpanderKind::bi) return c;
  if (from == ExpanderKind::expander && to == ExpanderKind::fixed) return c / 2;
  if (from == ExpanderKind::fixed && to == ExpanderKind::expander) return c / k;
  throw ContractError("convert_constant: unsupported conversion " + to_string(from) + " -> " + to_string(to));
}

}  // namespace expkit
