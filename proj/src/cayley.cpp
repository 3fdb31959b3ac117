#include "expkit/cayley.hpp"

#include <algorithm>
#include <deque>

#include "expkit/matching.hpp"
#include "expkit/rng.hpp"

namespace expkit {

MatrixModM::MatrixModM(int n, long long m) : n_(n), m_(m), data_(std::size_t(n) * n, 0) {
  if (n < 1) throw ContractError("matrix dimension must be positive");
  if (m < 0 || m == 1) throw ContractError("modulus must be 0 or at least 2");
}

MatrixModM MatrixModM::identity(int n, long long m) {
  MatrixModM id(n, m);
  for (int i = 0; i < n; ++i) id.set(i, i, 1);
  return id;
}

long long MatrixModM::reduce(long long x) const {
  if (m_ == 0) return x;
  x %= m_;
  return x < 0 ? x + m_ : x;
}

void MatrixModM::set(int i, int j, long long value) { data_.at(std::size_t(i) * n_ + j) = reduce(value); }

MatrixModM MatrixModM::reduced(long long m) const {
  MatrixModM r(n_, m);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.set(i, j, at(i, j));
  return r;
}

long long MatrixModM::determinant() const {
  // Bareiss elimination over Z on the stored representatives.
  std::vector<__int128> a(data_.begin(), data_.end());
  auto cell = [&](int i, int j) -> __int128& { return a[std::size_t(i) * n_ + j]; };
  __int128 prev = 1;
  int sign = 1;
  for (int k = 0; k < n_ - 1; ++k) {
    if (cell(k, k) == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n_; ++i)
        if (cell(i, k) != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      for (int j = 0; j < n_; ++j) std::swap(cell(k, j), cell(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n_; ++i)
      for (int j = k + 1; j < n_; ++j) cell(i, j) = (cell(i, j) * cell(k, k) - cell(i, k) * cell(k, j)) / prev;
    prev = cell(k, k);
  }
  return reduce(static_cast<long long>(sign * cell(n_ - 1, n_ - 1)));
}

std::vector<long long> MatrixModM::apply(const std::vector<long long>& x) const {
  if (static_cast<int>(x.size()) != n_) throw ContractError("vector length does not match dimension");
  std::vector<long long> y(n_, 0);
  for (int i = 0; i < n_; ++i) {
    long long s = 0;
    for (int j = 0; j < n_; ++j) s = reduce(s + at(i, j) * x[j]);
    y[i] = s;
  }
  return y;
}

MatrixModM operator*(const MatrixModM& a, const MatrixModM& b) {
  if (a.n_ != b.n_ || a.m_ != b.m_) throw ContractError("matrix dimensions or moduli differ");
  MatrixModM c(a.n_, a.m_);
  for (int i = 0; i < a.n_; ++i)
    for (int j = 0; j < a.n_; ++j) {
      long long s = 0;
      for (int l = 0; l < a.n_; ++l) s = c.reduce(s + a.at(i, l) * b.at(l, j));
      c.data_[std::size_t(i) * a.n_ + j] = s;
    }
  return c;
}

MatrixModM sl_generator_a(int n) {
  if (n < 2) throw ContractError("SL_n generators need n >= 2");
  auto a = MatrixModM::identity(n, 0);
  a.set(0, 1, 1);
  return a;
}

MatrixModM sl_generator_b(int n) {
  if (n < 2) throw ContractError("SL_n generators need n >= 2");
  MatrixModM b(n, 0);
  for (int i = 0; i + 1 < n; ++i) b.set(i, i + 1, 1);
  b.set(n - 1, 0, (n - 1) % 2 ? -1 : 1);
  return b;
}

GeneratorSet sl_generators(int n) {
  auto a = sl_generator_a(n);
  auto a_inv = MatrixModM::identity(n, 0);
  a_inv.set(0, 1, -1);
  auto b = sl_generator_b(n);
  MatrixModM b_inv(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b_inv.set(i, j, b.at(j, i));
  return {a, a_inv, b, b_inv};
}

CayleyGraph cayley_graph(const GeneratorSet& generators, long long modulus, int cap) {
  if (generators.empty()) throw ContractError("empty generator set");
  const int n = generators.front().dim();
  const auto id = MatrixModM::identity(n, modulus);
  CayleyGraph cg;
  for (const auto& s : generators) {
    auto r = s.reduced(modulus);
    if (r == id) continue;
    if (std::find(cg.effective_generators.begin(), cg.effective_generators.end(), r) ==
        cg.effective_generators.end())
      cg.effective_generators.push_back(r);
  }
  for (const auto& s : cg.effective_generators) {
    bool has_inverse = std::any_of(cg.effective_generators.begin(), cg.effective_generators.end(),
                                   [&](const MatrixModM& t) { return s * t == id; });
    if (!has_inverse) throw ContractError("generator set is not closed under inverses");
  }
  cg.degree = static_cast<int>(cg.effective_generators.size());

  cg.elements.push_back(id);
  cg.index.emplace(id, 0);
  for (std::size_t head = 0; head < cg.elements.size(); ++head) {
    for (const auto& s : cg.effective_generators) {
      auto y = cg.elements[head] * s;
      if (cg.index.count(y)) continue;
      if (static_cast<int>(cg.elements.size()) >= cap)
        throw ContractError("group has more than " + std::to_string(cap) + " elements");
      cg.index.emplace(y, static_cast<Vertex>(cg.elements.size()));
      cg.elements.push_back(std::move(y));
    }
  }
  cg.graph = Graph(static_cast<int>(cg.elements.size()));
  for (std::size_t x = 0; x < cg.elements.size(); ++x)
    for (const auto& s : cg.effective_generators)
      cg.graph.add_edge(static_cast<Vertex>(x), cg.index.at(cg.elements[x] * s));
  return cg;
}

std::vector<long long> group_algebra_multiply(const CayleyGraph& cg, const std::vector<long long>& a,
                                              const std::vector<long long>& b) {
  const std::size_t n = cg.elements.size();
  if (a.size() != n || b.size() != n) throw ContractError("coefficient vector size differs from group order");
  std::vector<long long> out(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    if (a[x] == 0) continue;
    for (std::size_t y = 0; y < n; ++y) {
      if (b[y] == 0) continue;
      out[cg.index.at(cg.elements[x] * cg.elements[y])] += a[x] * b[y];
    }
  }
  return out;
}

std::vector<long long> group_algebra_laplacian(const CayleyGraph& cg) {
  std::vector<long long> l(cg.elements.size(), 0);
  l[0] = cg.degree;
  for (const auto& s : cg.effective_generators) l[cg.index.at(s)] -= 1;
  return l;
}

Vertex znp_vertex(const std::vector<long long>& x, long long p) {
  long long id = 0;
  for (std::size_t i = x.size(); i-- > 0;) id = id * p + x[i];
  if (id == 0) throw ContractError("zero vector is not a vertex");
  return static_cast<Vertex>(id - 1);
}

std::vector<long long> znp_vector(Vertex v, int n, long long p) {
  std::vector<long long> x(n);
  long long id = static_cast<long long>(v) + 1;
  for (int i = 0; i < n; ++i) {
    x[i] = id % p;
    id /= p;
  }
  return x;
}

namespace {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

GeneratorSet znp_generators(int n, long long p) {
  if (!is_prime(p)) throw ContractError("p must be prime");
  GeneratorSet gens;
  for (const auto& s : sl_generators(n)) gens.push_back(s.reduced(p));
  return gens;
}

}  // namespace

Graph znp_graph(int n, long long p) {
  auto gens = znp_generators(n, p);
  long long size = 1;
  for (int i = 0; i < n; ++i) {
    size *= p;
    if (size > 100001) throw ContractError("Z(n, p) has more than 10^5 vertices");
  }
  Graph g(static_cast<int>(size - 1));
  for (Vertex v = 0; v < g.order(); ++v) {
    auto x = znp_vector(v, n, p);
    for (const auto& s : gens) {
      Vertex w = znp_vertex(s.apply(x), p);
      if (w != v) g.add_edge(v, w);
    }
  }
  return g;
}

YnCounterexample yn_counterexample(int n, long long p) {
  if (n < 8) throw ContractError("Y_n counterexample needs n >= 8");
  auto gens = znp_generators(n, p);
  YnCounterexample out;
  std::vector<std::vector<long long>> members;
  for (int j = 3; j <= n / 2; ++j) {
    std::vector<long long> e(n, 0);
    e[j - 1] = 1;
    out.y.push_back(znp_vertex(e, p));
    members.push_back(std::move(e));
  }
  std::sort(out.y.begin(), out.y.end());
  for (const auto& e : members) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      auto image = gens[g].apply(e);
      // gens[0], gens[1] are A and A^-1.
      if (g < 2 && image != e) throw std::logic_error("A does not fix Y pointwise");
      Vertex w = znp_vertex(image, p);
      if (!std::binary_search(out.y.begin(), out.y.end(), w)) out.boundary.push_back(w);
    }
  }
  std::sort(out.boundary.begin(), out.boundary.end());
  out.boundary.erase(std::unique(out.boundary.begin(), out.boundary.end()), out.boundary.end());
  const long long ys = static_cast<long long>(out.y.size());
  const long long bs = static_cast<long long>(out.boundary.size());
  out.ratio = Rational(bs, ys);
  out.within_bound = n * bs <= 10 * ys;
  return out;
}

BipartiteGraph PermutationBigraph::collapsed() const {
  BipartiteGraph b(n, n);
  for (auto [j, o] : edges) b.add_edge(j, o);
  return b;
}

PermutationBigraph permutation_bigraph(int n, std::vector<std::vector<Vertex>> perms) {
  PermutationBigraph pb;
  pb.n = n;
  for (const auto& p : perms) {
    if (static_cast<int>(p.size()) != n) throw ContractError("permutation length differs from n");
    auto sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i)
      if (sorted[i] != i) throw ContractError("row is not a permutation");
  }
  for (int j = 0; j < n; ++j)
    for (const auto& p : perms) pb.edges.emplace_back(j, p[j]);
  pb.is_latin = is_latin_rectangle(perms, n);
  pb.perms = std::move(perms);
  return pb;
}

PermutationBigraph random_permutation_bigraph(int n, int k, std::uint64_t seed) {
  if (k < 1 || k >= n) throw ContractError("need 1 <= k < n");
  Rng rng(seed);
  std::vector<std::vector<Vertex>> perms;
  for (int t = 0; t < k; ++t) perms.push_back(rng.permutation(n));
  return permutation_bigraph(n, std::move(perms));
}

}  // namespace expkit
