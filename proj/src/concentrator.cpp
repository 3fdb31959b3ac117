#include "expkit/concentrator.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>

#include "expkit/detail/subset_scan.hpp"
#include "expkit/matching.hpp"
#include "expkit/rng.hpp"

namespace expkit {

namespace {

// Advances a sorted r-combination of 0..n-1; false after the last one.
bool next_combination(std::vector<int>& c, int n) {
  const int r = static_cast<int>(c.size());
  int i = r - 1;
  while (i >= 0 && c[i] == n - r + i) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
  return true;
}

std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t b = 1;
  for (int i = 1; i <= r; ++i) b = b * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  return b;
}

VertexSet random_subset(int n, int size, Rng& rng) {
  auto perm = rng.permutation(n);
  VertexSet s(perm.begin(), perm.begin() + size);
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// Bounded concentrators

Concentrator build_bounded_concentrator(const BipartiteGraph& b, int r, bool check_expansion) {
  const int m = b.inputs();
  if (b.outputs() != m) throw ContractError("build_bounded_concentrator: bi-expander sides differ");
  if (r < 2) throw ContractError("build_bounded_concentrator: need r >= 2");
  if (m == 0 || m % r != 0) throw ContractError("build_bounded_concentrator: r must divide m");
  if (check_expansion) {
    Rational c = bi_expander_constant(b);
    if (c < Rational(1, r - 1))
      throw ContractError("build_bounded_concentrator: bi-expansion constant " + to_string(c) + " below 1/(r-1)");
  }
  const int n = m + m / r;
  Concentrator out;
  out.graph = BipartiteGraph(n, m);
  for (auto [i, o] : b.edges()) out.graph.add_edge(i, o);
  for (int s = 0; s < m / r; ++s)
    for (int j = 0; j < r; ++j) out.graph.add_edge(m + s, s * r + j);
  out.n = n;
  out.theta = Rational(m, n);
  out.k_density = Rational(static_cast<long long>(out.graph.edge_count()), n);
  return out;
}

ConcentratorCheck verify_concentrator(const BipartiteGraph& g, std::uint64_t samples, std::uint64_t seed) {
  const int n = g.inputs();
  ConcentratorCheck check;
  if (n <= detail::kMaxBruteForce) {
    detail::SubsetScanner(g, false).run([&](const detail::SubsetScanner::State& s) {
      if (2 * s.size > n) return true;
      ++check.sets_checked;
      if (s.boundary < s.size) {
        check.ok = false;
        check.violator = detail::mask_to_set(s.mask);
        return false;
      }
      return true;
    });
    return check;
  }
  check.exhaustive = false;
  Rng rng(seed);
  for (std::uint64_t t = 0; t < samples; ++t) {
    int size = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n / 2)));
    VertexSet a = random_subset(n, size, rng);
    BipartiteGraph sub(size, g.outputs());
    for (int i = 0; i < size; ++i)
      for (Vertex o : g.out_neighbors(a[i])) sub.add_edge(i, o);
    ++check.sets_checked;
    if (auto v = hall_violator(sub)) {
      check.ok = false;
      for (Vertex i : *v) check.violator.push_back(a[i]);
      return check;
    }
  }
  return check;
}

// ---------------------------------------------------------------------------
// Flow

FlowNetwork::FlowNetwork(int n) : head_(n, -1) {}

int FlowNetwork::add_vertex() {
  head_.push_back(-1);
  return order() - 1;
}

void FlowNetwork::add_edge(int from, int to, int capacity) {
  arcs_.push_back({to, capacity, head_.at(from)});
  head_[from] = static_cast<int>(arcs_.size()) - 1;
  arcs_.push_back({from, 0, head_.at(to)});
  head_[to] = static_cast<int>(arcs_.size()) - 1;
  initial_cap_.push_back(capacity);
  initial_cap_.push_back(0);
}

long long FlowNetwork::max_flow(int s, int t) {
  for (std::size_t a = 0; a < arcs_.size(); ++a) arcs_[a].cap = initial_cap_[a];
  long long flow = 0;
  std::vector<int> via(order());
  while (true) {
    std::fill(via.begin(), via.end(), -1);
    std::deque<int> queue{s};
    via[s] = -2;
    while (!queue.empty() && via[t] == -1) {
      int u = queue.front();
      queue.pop_front();
      for (int a = head_[u]; a >= 0; a = arcs_[a].next)
        if (arcs_[a].cap > 0 && via[arcs_[a].to] == -1) {
          via[arcs_[a].to] = a;
          queue.push_back(arcs_[a].to);
        }
    }
    if (via[t] == -1) return flow;
    int push = std::numeric_limits<int>::max();
    for (int v = t; v != s; v = arcs_[via[v] ^ 1].to) push = std::min(push, arcs_[via[v]].cap);
    for (int v = t; v != s; v = arcs_[via[v] ^ 1].to) {
      arcs_[via[v]].cap -= push;
      arcs_[via[v] ^ 1].cap += push;
    }
    flow += push;
  }
}

// ---------------------------------------------------------------------------
// Superconcentrators

int superconcentrator_density(int k, int r) { return (2 * k + 3) * r + 1; }

BiExpanderSupplier random_bi_expander_supplier(std::uint64_t seed) {
  return [seed](int m, int k, int r) {
    const Rational need(1, r - 1);
    if (k < m && m <= detail::kMaxBruteForce) {
      Rng rng(seed ^ (static_cast<std::uint64_t>(m) << 32));
      for (int attempt = 0; attempt < 50; ++attempt) {
        BipartiteGraph b(m, m);
        for (int t = 0; t < k; ++t) {
          auto p = rng.permutation(m);
          for (int i = 0; i < m; ++i) b.add_edge(i, p[i]);
        }
        if (bi_expander_constant(b) >= need) return b;
      }
    }
    BipartiteGraph full(m, m);
    for (int i = 0; i < m; ++i)
      for (int o = 0; o < m; ++o) full.add_edge(i, o);
    return full;
  };
}

namespace {

struct Builder {
  int r, k, base;
  const BiExpanderSupplier& supplier;
  SuperconcentratorDAG dag;

  std::vector<Vertex> fresh(int count) {
    std::vector<Vertex> ids(count);
    for (int i = 0; i < count; ++i) ids[i] = dag.vertex_count++;
    return ids;
  }

  // Builds an n-superconcentrator; returns (inputs, outputs) and appends its layers.
  std::pair<std::vector<Vertex>, std::vector<Vertex>> build(int n, std::vector<std::vector<Vertex>>& layers) {
    const std::size_t level_index = dag.levels.size();
    dag.levels.push_back({n, 0, 0, 0, 0});
    if (n <= base) {
      auto in = fresh(n), out = fresh(n);
      for (Vertex i : in)
        for (Vertex o : out) dag.edges.emplace_back(i, o);
      layers.push_back(in);
      layers.push_back(out);
      dag.levels[level_index].total_edges = static_cast<long long>(n) * n;
      return {in, out};
    }
    if (n % (r + 1) != 0)
      throw ContractError("build_superconcentrator: " + std::to_string(n) + " is not divisible by r+1 = " +
                          std::to_string(r + 1));
    const int m = n / (r + 1) * r;
    Concentrator conc = build_bounded_concentrator(supplier(m, k, r), r, m <= detail::kMaxBruteForce);

    auto in = fresh(n);
    layers.push_back(in);
    std::vector<std::vector<Vertex>> inner_layers;
    auto [mid_in, mid_out] = build(m, inner_layers);
    layers.insert(layers.end(), inner_layers.begin(), inner_layers.end());
    auto out = fresh(n);
    layers.push_back(out);

    const auto conc_edges = conc.graph.edges();
    for (auto [i, o] : conc_edges) {
      dag.edges.emplace_back(in[i], mid_in[o]);
      dag.edges.emplace_back(mid_out[o], out[i]);
    }
    for (int i = 0; i < n; ++i) dag.edges.emplace_back(in[i], out[i]);

    auto& level = dag.levels[level_index];
    level.concentrator_edges = static_cast<long long>(conc_edges.size());
    level.pairing_edges = n;
    level.inner_edges = dag.levels[level_index + 1].total_edges;
    level.total_edges = 2 * level.concentrator_edges + level.pairing_edges + level.inner_edges;
    return {in, out};
  }
};

}  // namespace

SuperconcentratorDAG build_superconcentrator(int n, int r, int k, std::optional<int> base_size,
                                             const BiExpanderSupplier& supplier) {
  if (n < 1) throw ContractError("build_superconcentrator: need n >= 1");
  if (r < 2) throw ContractError("build_superconcentrator: need r >= 2");
  if (k < 1) throw ContractError("build_superconcentrator: need k >= 1");
  Builder b{r, k, base_size.value_or(superconcentrator_density(k, r)), supplier, {}};
  if (b.base < 1) throw ContractError("build_superconcentrator: base size must be positive");
  std::vector<std::vector<Vertex>> layers;
  auto [in, out] = b.build(n, layers);
  b.dag.inputs = std::move(in);
  b.dag.outputs = std::move(out);
  b.dag.layers = std::move(layers);
  return std::move(b.dag);
}

namespace {

// Split-vertex network: v_in = 2v, v_out = 2v+1, source 2V, sink 2V+1.
struct SplitNetwork {
  FlowNetwork net;
  int source, sink;

  explicit SplitNetwork(const SuperconcentratorDAG& dag, std::span<const Vertex> sources,
                        std::span<const Vertex> sinks)
      : net(2 * dag.vertex_count + 2), source(2 * dag.vertex_count), sink(2 * dag.vertex_count + 1) {
    for (Vertex v = 0; v < dag.vertex_count; ++v) net.add_edge(2 * v, 2 * v + 1, 1);
    for (auto [u, v] : dag.edges) net.add_edge(2 * u + 1, 2 * v, 1);
    for (Vertex a : sources) net.add_edge(source, 2 * a, 1);
    for (Vertex b : sinks) net.add_edge(2 * b + 1, sink, 1);
  }
};

}  // namespace

long long vertex_disjoint_paths(const SuperconcentratorDAG& dag, std::span<const Vertex> sources,
                                std::span<const Vertex> sinks) {
  SplitNetwork s(dag, sources, sinks);
  return s.net.max_flow(s.source, s.sink);
}

SuperconcentratorCheck verify_superconcentrator(const SuperconcentratorDAG& dag, std::uint64_t exhaustive_limit,
                                                std::uint64_t samples, std::uint64_t seed) {
  const int n = static_cast<int>(dag.inputs.size());
  if (static_cast<int>(dag.outputs.size()) != n) throw ContractError("verify_superconcentrator: |inputs| != |outputs|");
  SuperconcentratorCheck check;
  for (int r = 1; r <= n; ++r) {
    std::uint64_t c = binomial(n, r);
    check.pairs_total += c * c;
  }

  auto test = [&](const std::vector<int>& ai, const std::vector<int>& bi) {
    VertexSet a, b;
    for (int i : ai) a.push_back(dag.inputs[i]);
    for (int i : bi) b.push_back(dag.outputs[i]);
    ++check.pairs_checked;
    long long flow = vertex_disjoint_paths(dag, a, b);
    if (flow < static_cast<long long>(a.size())) {
      check.ok = false;
      check.bad_inputs = a;
      check.bad_outputs = b;
      check.bad_flow = flow;
      return false;
    }
    return true;
  };

  if (check.pairs_total <= exhaustive_limit) {
    for (int r = 1; r <= n; ++r) {
      std::vector<int> a(r);
      for (int i = 0; i < r; ++i) a[i] = i;
      do {
        std::vector<int> b(r);
        for (int i = 0; i < r; ++i) b[i] = i;
        do {
          if (!test(a, b)) return check;
        } while (next_combination(b, n));
      } while (next_combination(a, n));
    }
    return check;
  }

  check.exhaustive = false;
  Rng rng(seed);
  for (std::uint64_t t = 0; t < samples; ++t) {
    int r = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    VertexSet a = random_subset(n, r, rng), b = random_subset(n, r, rng);
    if (!test(a, b)) return check;
  }
  return check;
}

bool is_acyclic(const SuperconcentratorDAG& dag) {
  std::vector<int> indegree(dag.vertex_count, 0);
  std::vector<std::vector<Vertex>> out(dag.vertex_count);
  for (auto [u, v] : dag.edges) {
    out.at(u).push_back(v);
    ++indegree.at(v);
  }
  std::vector<Vertex> ready;
  for (Vertex v = 0; v < dag.vertex_count; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  int seen = 0;
  while (!ready.empty()) {
    Vertex u = ready.back();
    ready.pop_back();
    ++seen;
    for (Vertex v : out[u])
      if (--indegree[v] == 0) ready.push_back(v);
  }
  return seen == dag.vertex_count;
}

// ---------------------------------------------------------------------------
// Text format

std::string serialize_dag(const SuperconcentratorDAG& dag) {
  std::ostringstream os;
  auto list = [&](const char* tag, const std::vector<Vertex>& ids) {
    os << tag;
    for (Vertex v : ids) os << ' ' << v;
    os << '\n';
  };
  os << "vertices " << dag.vertex_count << '\n';
  list("inputs", dag.inputs);
  list("outputs", dag.outputs);
  for (const auto& layer : dag.layers) list("layer", layer);
  os << "edges " << dag.edges.size() << '\n';
  for (auto [u, v] : dag.edges) os << u << ' ' << v << '\n';
  return os.str();
}

SuperconcentratorDAG parse_dag(std::string_view text) {
  SuperconcentratorDAG dag;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  long long edges_expected = -1;
  bool have_vertices = false;

  auto read_ids = [&](std::istringstream& ls) {
    std::vector<Vertex> ids;
    long long v;
    while (ls >> v) {
      if (v < 0 || v >= dag.vertex_count) throw ParseError(line_no, "vertex " + std::to_string(v) + " out of range");
      ids.push_back(static_cast<Vertex>(v));
    }
    if (!ls.eof()) throw ParseError(line_no, "expected vertex ids");
    return ids;
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (edges_expected >= 0 && static_cast<long long>(dag.edges.size()) < edges_expected) {
      long long u, v;
      std::string extra;
      if (!(ls >> u)) continue;
      if (!(ls >> v) || (ls >> extra)) throw ParseError(line_no, "edge line must be 'from to'");
      if (u < 0 || v < 0 || u >= dag.vertex_count || v >= dag.vertex_count)
        throw ParseError(line_no, "edge endpoint out of range");
      dag.edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
      continue;
    }
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "vertices") {
      long long n;
      if (!(ls >> n) || n < 0) throw ParseError(line_no, "expected 'vertices <count>'");
      dag.vertex_count = static_cast<int>(n);
      have_vertices = true;
    } else if (!have_vertices) {
      throw ParseError(line_no, "first section must be 'vertices <count>'");
    } else if (tag == "inputs") {
      dag.inputs = read_ids(ls);
    } else if (tag == "outputs") {
      dag.outputs = read_ids(ls);
    } else if (tag == "layer") {
      dag.layers.push_back(read_ids(ls));
    } else if (tag == "edges") {
      if (!(ls >> edges_expected) || edges_expected < 0) throw ParseError(line_no, "expected 'edges <count>'");
    } else {
      throw ParseError(line_no, "unknown section '" + tag + "'");
    }
  }
  if (!have_vertices) throw ParseError(std::max(line_no, 1), "missing 'vertices' section");
  if (edges_expected < 0) throw ParseError(line_no, "missing 'edges' section");
  if (static_cast<long long>(dag.edges.size()) != edges_expected)
    throw ParseError(line_no, "expected " + std::to_string(edges_expected) + " edges, found " +
                                  std::to_string(dag.edges.size()));
  return dag;
}

}  // namespace expkit
