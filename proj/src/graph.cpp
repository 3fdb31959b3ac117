#include "expkit/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <sstream>

namespace expkit {

namespace {

bool sorted_insert(std::vector<Vertex>& list, Vertex v) {
  auto it = std::lower_bound(list.begin(), list.end(), v);
  if (it != list.end() && *it == v) return false;
  list.insert(it, v);
  return true;
}

bool sorted_erase(std::vector<Vertex>& list, Vertex v) {
  auto it = std::lower_bound(list.begin(), list.end(), v);
  if (it == list.end() || *it != v) return false;
  list.erase(it);
  return true;
}

bool sorted_contains(const std::vector<Vertex>& list, Vertex v) {
  return std::binary_search(list.begin(), list.end(), v);
}

// Line-oriented tokenizer for the text formats.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  // Next non-blank line split into integer fields. Returns false at end of input.
  bool next(std::vector<long long>& fields) {
    while (!done_) {
      std::size_t end = text_.find('\n', pos_);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view line = text_.substr(pos_, end - pos_);
      if (end == text_.size()) done_ = true;
      else pos_ = end + 1;
      ++line_no_;
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      fields.clear();
      std::size_t i = 0;
      bool any = false;
      while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        if (i >= line.size()) break;
        std::size_t j = i;
        while (j < line.size() && !is_space(line[j])) ++j;
        long long value = 0;
        auto token = line.substr(i, j - i);
        auto res = std::from_chars(token.data(), token.data() + token.size(), value);
        if (res.ec != std::errc() || res.ptr != token.data() + token.size())
          throw ParseError(line_no_, "expected integer, got '" + std::string(token) + "'");
        fields.push_back(value);
        any = true;
        i = j;
      }
      if (any) return true;
    }
    return false;
  }

  int line() const { return line_no_; }

 private:
  static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_no_ = 0;
  bool done_ = false;
};

}  // namespace

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(int n) {
  if (n < 0) throw ContractError("negative vertex count");
  adj_.resize(n);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order())
    throw ContractError("vertex " + std::to_string(v) + " out of range [0," +
                        std::to_string(order()) + ")");
}

int Graph::max_degree() const noexcept {
  int d = 0;
  for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

int Graph::min_degree() const noexcept {
  if (adj_.empty()) return 0;
  int d = order();
  for (const auto& a : adj_) d = std::min(d, static_cast<int>(a.size()));
  return d;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return sorted_contains(adj_[u], v);
}

bool Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw ContractError("loop at vertex " + std::to_string(u));
  if (!sorted_insert(adj_[u], v)) return false;
  sorted_insert(adj_[v], u);
  ++edge_count_;
  return true;
}

bool Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (!sorted_erase(adj_[u], v)) return false;
  sorted_erase(adj_[v], u);
  --edge_count_;
  return true;
}

Vertex Graph::add_vertices(int count) {
  if (count < 0) throw ContractError("negative vertex count");
  Vertex first = order();
  adj_.resize(adj_.size() + count);
  return first;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::validate() const {
  std::size_t degree_sum = 0;
  for (Vertex u = 0; u < order(); ++u) {
    const auto& a = adj_[u];
    degree_sum += a.size();
    if (a.size() > static_cast<std::size_t>(std::max(order() - 1, 0)))
      throw std::logic_error("degree exceeds n-1");
    for (std::size_t i = 0; i < a.size(); ++i) {
      Vertex v = a[i];
      if (v == u || v < 0 || v >= order()) throw std::logic_error("bad neighbour");
      if (i > 0 && a[i - 1] >= v) throw std::logic_error("adjacency not strictly sorted");
      if (!sorted_contains(adj_[v], u)) throw std::logic_error("asymmetric adjacency");
    }
  }
  if (degree_sum != 2 * edge_count_) throw std::logic_error("handshake violated");
}

// ---------------------------------------------------------------------------
// Multigraph

Multigraph::Collapse Multigraph::collapse() const {
  Collapse out{Graph(n), 0, 0};
  for (auto [u, v] : edges) {
    if (u == v) {
      ++out.loops_dropped;
    } else if (!out.graph.add_edge(u, v)) {
      ++out.duplicates_dropped;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// BipartiteGraph

BipartiteGraph::BipartiteGraph(int n_in, int n_out) {
  if (n_in < 0 || n_out < 0) throw ContractError("negative part size");
  in_adj_.resize(n_in);
  out_adj_.resize(n_out);
}

bool BipartiteGraph::add_edge(Vertex input, Vertex output) {
  if (input < 0 || input >= inputs()) throw ContractError("input " + std::to_string(input) + " out of range");
  if (output < 0 || output >= outputs())
    throw ContractError("output " + std::to_string(output) + " out of range");
  if (!sorted_insert(in_adj_[input], output)) return false;
  sorted_insert(out_adj_[output], input);
  ++edge_count_;
  return true;
}

bool BipartiteGraph::has_edge(Vertex input, Vertex output) const {
  return sorted_contains(in_adj_.at(input), output);
}

bool BipartiteGraph::is_regular(int k) const {
  for (const auto& a : in_adj_)
    if (static_cast<int>(a.size()) != k) return false;
  for (const auto& a : out_adj_)
    if (static_cast<int>(a.size()) != k) return false;
  return true;
}

std::vector<Edge> BipartiteGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex i = 0; i < inputs(); ++i)
    for (Vertex o : in_adj_[i]) out.emplace_back(i, o);
  return out;
}

BipartiteGraph BipartiteGraph::transposed() const {
  BipartiteGraph t;
  t.in_adj_ = out_adj_;
  t.out_adj_ = in_adj_;
  t.edge_count_ = edge_count_;
  return t;
}

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> part_of) : part_of_(std::move(part_of)) {
  int parts = 0;
  for (int p : part_of_) {
    if (p < 0) throw ContractError("negative part label");
    parts = std::max(parts, p + 1);
  }
  parts_.resize(parts);
  for (Vertex v = 0; v < ground_size(); ++v) parts_[part_of_[v]].push_back(v);
  for (const auto& p : parts_)
    if (p.empty()) throw ContractError("part labels are not contiguous");
}

bool Partition::is_equitable() const noexcept {
  for (const auto& p : parts_)
    if (p.size() != parts_.front().size()) return false;
  return true;
}

Partition Partition::singletons(int n) {
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i;
  return Partition(std::move(labels));
}

// ---------------------------------------------------------------------------
// Queries

VertexSet boundary(const Graph& g, std::span<const Vertex> a) {
  std::vector<char> in_a(g.order(), 0), seen(g.order(), 0);
  for (Vertex v : a) {
    if (v < 0 || v >= g.order()) throw ContractError("vertex " + std::to_string(v) + " out of range");
    in_a[v] = 1;
  }
  VertexSet out;
  for (Vertex v : a)
    for (Vertex w : g.neighbors(v))
      if (!in_a[w] && !seen[w]) {
        seen[w] = 1;
        out.push_back(w);
      }
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet boundary(const BipartiteGraph& b, std::span<const Vertex> inputs) {
  std::vector<char> seen(b.outputs(), 0);
  VertexSet out;
  for (Vertex i : inputs) {
    if (i < 0 || i >= b.inputs()) throw ContractError("input " + std::to_string(i) + " out of range");
    for (Vertex o : b.out_neighbors(i))
      if (!seen[o]) {
        seen[o] = 1;
        out.push_back(o);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), -1);
  std::deque<Vertex> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

std::optional<int> diameter(const Graph& g) {
  int best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    for (int d : bfs_distances(g, s)) {
      if (d < 0) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<int> comp(g.order(), -1);
  std::vector<VertexSet> out;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    VertexSet members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < members.size(); ++i)
      for (Vertex w : g.neighbors(members[i]))
        if (comp[w] < 0) {
          comp[w] = comp[s];
          members.push_back(w);
        }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> colour(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[u];
          queue.push_back(w);
        } else if (colour[w] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto& nb = g.neighbors(u);
    auto it = nb.begin();
    for (Vertex v = u + 1; v < g.order(); ++v) {
      while (it != nb.end() && *it < v) ++it;
      if (it == nb.end() || *it != v) out.add_edge(u, v);
    }
  }
  return out;
}

bool is_k_regular(const Graph& g, int k) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != k) return false;
  return true;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index.at(keep[i]) = static_cast<int>(i);
  Graph out(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (Vertex w : g.neighbors(keep[i]))
      if (index[w] > static_cast<int>(i)) out.add_edge(static_cast<int>(i), index[w]);
  return out;
}

bool is_subgraph(const Graph& sub, const Graph& g) {
  if (sub.order() > g.order()) return false;
  for (auto [u, v] : sub.edges())
    if (!g.has_edge(u, v)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Text formats

ParsedGraph parse_edge_list(std::string_view text) {
  LineReader reader(text);
  std::vector<long long> f;
  if (!reader.next(f)) throw ParseError(reader.line() == 0 ? 1 : reader.line(), "missing header 'n m'");
  if (f.size() != 2 || f[0] < 0 || f[1] < 0 || f[0] > 100'000'000)
    throw ParseError(reader.line(), "header must be 'n m' with non-negative integers");
  const int n = static_cast<int>(f[0]);
  const long long m = f[1];
  ParsedGraph out{Graph(n), 0};
  for (long long e = 0; e < m; ++e) {
    if (!reader.next(f))
      throw ParseError(reader.line(), "expected " + std::to_string(m) + " edges, found " + std::to_string(e));
    if (f.size() != 2) throw ParseError(reader.line(), "edge line must be 'u v'");
    for (long long x : f)
      if (x < 0 || x >= n) throw ParseError(reader.line(), "vertex " + std::to_string(x) + " out of range");
    if (f[0] == f[1]) throw ParseError(reader.line(), "loop at vertex " + std::to_string(f[0]));
    if (!out.graph.add_edge(static_cast<Vertex>(f[0]), static_cast<Vertex>(f[1]))) ++out.duplicate_edges;
  }
  if (reader.next(f)) throw ParseError(reader.line(), "unexpected trailing content");
  return out;
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

BipartiteGraph parse_bipartite_edge_list(std::string_view text) {
  LineReader reader(text);
  std::vector<long long> f;
  if (!reader.next(f)) throw ParseError(1, "missing header 'n_in n_out m'");
  if (f.size() != 3 || f[0] < 0 || f[1] < 0 || f[2] < 0 || f[0] > 100'000'000 || f[1] > 100'000'000)
    throw ParseError(reader.line(), "header must be 'n_in n_out m'");
  BipartiteGraph b(static_cast<int>(f[0]), static_cast<int>(f[1]));
  const long long m = f[2];
  for (long long e = 0; e < m; ++e) {
    if (!reader.next(f))
      throw ParseError(reader.line(), "expected " + std::to_string(m) + " edges, found " + std::to_string(e));
    if (f.size() != 2) throw ParseError(reader.line(), "edge line must be 'input output'");
    if (f[0] < 0 || f[0] >= b.inputs()) throw ParseError(reader.line(), "input out of range");
    if (f[1] < 0 || f[1] >= b.outputs()) throw ParseError(reader.line(), "output out of range");
    b.add_edge(static_cast<Vertex>(f[0]), static_cast<Vertex>(f[1]));
  }
  if (reader.next(f)) throw ParseError(reader.line(), "unexpected trailing content");
  return b;
}

std::string serialize_bipartite_edge_list(const BipartiteGraph& b) {
  std::ostringstream os;
  os << b.inputs() << ' ' << b.outputs() << ' ' << b.edge_count() << '\n';
  for (auto [i, o] : b.edges()) os << i << ' ' << o << '\n';
  return os.str();
}

Partition parse_partition(std::string_view text) {
  LineReader reader(text);
  std::vector<long long> f;
  if (!reader.next(f) || f.size() != 1 || f[0] < 0) throw ParseError(std::max(reader.line(), 1), "missing header 'n'");
  const long long n = f[0];
  std::vector<int> labels;
  labels.reserve(n);
  while (static_cast<long long>(labels.size()) < n && reader.next(f))
    for (long long x : f) {
      if (x < 0) throw ParseError(reader.line(), "negative part label");
      labels.push_back(static_cast<int>(x));
    }
  if (static_cast<long long>(labels.size()) != n)
    throw ParseError(reader.line(), "expected " + std::to_string(n) + " part labels");
  try {
    return Partition(std::move(labels));
  } catch (const ContractError& e) {
    throw ParseError(reader.line(), e.what());
  }
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace expkit
