#include "expkit/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace expkit {

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

std::vector<long long> IntMatrix::apply(const std::vector<long long>& x) const {
  if (static_cast<int>(x.size()) != cols_) throw ContractError("vector size does not match matrix");
  std::vector<long long> y(rows_, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
  return y;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw ContractError("matrix shapes do not match");
  IntMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int l = 0; l < a.cols_; ++l) {
      long long x = a.at(i, l);
      if (x == 0) continue;
      for (int j = 0; j < b.cols_; ++j) c.at(i, j) += x * b.at(l, j);
    }
  return c;
}

DenseSymMatrix::DenseSymMatrix(int order, std::vector<double> entries)
    : order_(order), data_(std::move(entries)) {
  if (order < 0 || data_.size() != std::size_t(order) * order)
    throw ContractError("matrix entry count does not match order");
  for (int i = 0; i < order; ++i)
    for (int j = i + 1; j < order; ++j)
      if (std::abs(at(i, j) - at(j, i)) > 1e-12)
        throw ContractError("matrix is not symmetric at (" + std::to_string(i) + ", " +
                            std::to_string(j) + ")");
}

DenseSymMatrix DenseSymMatrix::from_int(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw ContractError("matrix is not square");
  std::vector<double> e(std::size_t(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) e[std::size_t(i) * m.cols() + j] = double(m.at(i, j));
  return DenseSymMatrix(m.rows(), std::move(e));
}

Orientation random_orientation(const Graph& g, Rng& rng) {
  Orientation o(g.edge_count());
  for (std::size_t i = 0; i < o.size(); ++i) o[i] = rng.below(2) == 1;
  return o;
}

IntMatrix incidence_matrix(const Graph& g, const Orientation& orientation) {
  auto edges = g.edges();
  if (orientation.size() != edges.size()) throw ContractError("orientation size differs from edge count");
  IntMatrix d(static_cast<int>(edges.size()), g.order());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [tail, head] = edges[e];
    if (orientation[e]) std::swap(tail, head);
    d.at(int(e), head) = 1;
    d.at(int(e), tail) = -1;
  }
  return d;
}

IntMatrix adjacency_matrix(const Graph& g) {
  IntMatrix a(g.order(), g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex w : g.neighbors(v)) a.at(v, w) = 1;
  return a;
}

IntMatrix laplacian_matrix(const Graph& g) {
  IntMatrix l(g.order(), g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    l.at(v, v) = g.degree(v);
    for (Vertex w : g.neighbors(v)) l.at(v, w) = -1;
  }
  return l;
}

DenseSymMatrix laplacian(const Graph& g) { return DenseSymMatrix::from_int(laplacian_matrix(g)); }

std::vector<double> eigenvalues(const DenseSymMatrix& m) {
  int n = m.order();
  if (n == 0) return {};
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = m.at(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error("eigensolver did not converge");
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(out.begin(), out.end());
  return out;
}

double lambda1(const Graph& g, VertexSet* witness) {
  if (g.order() < 2) throw ContractError("lambda1 needs at least two vertices");
  auto comps = connected_components(g);
  if (comps.size() > 1) {
    if (witness) {
      *witness = *std::min_element(comps.begin(), comps.end(),
                                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
    }
    return 0.0;
  }
  // Eigenvalue 0 is simple for a connected graph.
  return eigenvalues(laplacian(g))[1];
}

double markov_second_norm(const Graph& g) {
  int n = g.order();
  if (n < 2) throw ContractError("markov_second_norm needs at least two vertices");
  int k = g.max_degree();
  if (!is_k_regular(g, k) || k == 0) throw ContractError("markov_second_norm needs a regular graph");
  if (!is_connected(g)) throw ContractError("markov_second_norm needs a connected graph");
  auto mu = eigenvalues(DenseSymMatrix::from_int(adjacency_matrix(g)));
  for (double& x : mu) x /= k;
  // Ascending order: the top eigenvalue is 1, the bottom one is -1 when bipartite.
  std::size_t lo = bipartition(g) ? 1 : 0;
  std::size_t hi = mu.size() - 1;
  double best = 0.0;
  for (std::size_t i = lo; i < hi; ++i) best = std::max(best, std::abs(mu[i]));
  return best;
}

TreeWalkState::TreeWalkState(int k_) : k(k_), prob{BigRational(1)} {
  if (k < 2) throw ContractError("tree degree must be at least 2");
}

void TreeWalkState::step() {
  BigRational up(k - 1, k);
  BigRational down(1, k);
  std::vector<BigRational> next(prob.size() + 1);
  for (std::size_t d = 0; d < prob.size(); ++d) {
    if (prob[d] == 0) continue;
    if (d == 0) {
      next[1] += prob[0];
    } else {
      next[d + 1] += prob[d] * up;
      next[d - 1] += prob[d] * down;
    }
  }
  while (next.size() > 1 && next.back() == 0) next.pop_back();
  prob = std::move(next);
}

std::vector<BigRational> tree_return_probabilities(int k, int n) {
  if (n < 0) throw ContractError("time must be non-negative");
  TreeWalkState s(k);
  std::vector<BigRational> r{s.at_origin()};
  for (int t = 1; t <= n; ++t) {
    s.step();
    r.push_back(s.at_origin());
  }
  return r;
}

BigRational tree_return_probability(int k, int n) { return tree_return_probabilities(k, n).back(); }

std::vector<BigRational> tree_first_passage_probabilities(int k, int n) {
  if (k < 2) throw ContractError("tree degree must be at least 2");
  if (n < 0) throw ContractError("time must be non-negative");
  BigRational up(k - 1, k);
  BigRational down(1, k);
  // prob[d] for d >= 1; the origin absorbs.
  std::vector<BigRational> prob{BigRational(0), BigRational(1)};
  std::vector<BigRational> t{BigRational(0)};
  for (int time = 1; time <= n; ++time) {
    std::vector<BigRational> next(prob.size() + 1);
    for (std::size_t d = 1; d < prob.size(); ++d) {
      if (prob[d] == 0) continue;
      next[d + 1] += prob[d] * up;
      next[d - 1] += prob[d] * down;
    }
    t.push_back(next[0]);
    next[0] = 0;
    prob = std::move(next);
  }
  return t;
}

double tree_norm(int k) {
  if (k < 2) throw ContractError("tree degree must be at least 2");
  return 2.0 * std::sqrt(double(k - 1)) / k;
}

double tree_branch_point(int k) {
  if (k < 2) throw ContractError("tree degree must be at least 2");
  return k / (2.0 * std::sqrt(double(k - 1)));
}

double tree_first_passage_gf(int k, double z) {
  if (z <= 0 || z > tree_branch_point(k)) throw ContractError("z outside (0, branch point]");
  double disc = double(k) * k - 4.0 * (k - 1) * z * z;
  return (k - std::sqrt(std::max(disc, 0.0))) / (2.0 * (k - 1) * z);
}

std::vector<double> markov_norm_estimate(int k, int n) {
  if (n < 1) throw ContractError("estimate length must be positive");
  auto r = tree_return_probabilities(k, 2 * n);
  std::vector<double> out;
  for (int j = 1; j <= n; ++j) out.push_back(std::pow(r[2 * j].convert_to<double>(), 1.0 / (2 * j)));
  return out;
}

double alon_boppana_lower_bound(const Graph& g) {
  int k = g.max_degree();
  if (k < 2 || !is_k_regular(g, k)) throw ContractError("Alon-Boppana bound needs a regular graph of degree >= 2");
  auto diam = diameter(g);
  if (!diam) throw ContractError("Alon-Boppana bound needs a connected graph");
  if (*diam < 4)
    throw ContractError("diameter " + std::to_string(*diam) + " too small; need at least 4");
  int r = (*diam - 2) / 2;
  double r2 = tree_return_probability(k, 2 * r).convert_to<double>();
  return std::pow(r2, 1.0 / (2 * r));
}

}  // namespace expkit
