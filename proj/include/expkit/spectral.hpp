#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "expkit/expansion.hpp"
#include "expkit/graph.hpp"
#include "expkit/rng.hpp"

namespace expkit {

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, 0) {}

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  long long& at(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
  long long at(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }

  IntMatrix transposed() const;
  std::vector<long long> apply(const std::vector<long long>& x) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<long long> data_;
};

/// Real symmetric matrix; construction rejects asymmetry above 1e-12.
class DenseSymMatrix {
 public:
  DenseSymMatrix() = default;
  DenseSymMatrix(int order, std::vector<double> entries);
  static DenseSymMatrix from_int(const IntMatrix& m);

  int order() const noexcept { return order_; }
  double at(int i, int j) const { return data_[std::size_t(i) * order_ + j]; }
  const std::vector<double>& entries() const noexcept { return data_; }

 private:
  int order_ = 0;
  std::vector<double> data_;
};

/// One flag per edge of g.edges(): false orients u -> v (u < v), true v -> u.
using Orientation = std::vector<bool>;

Orientation random_orientation(const Graph& g, Rng& rng);

/// |E| x n matrix d with (df)(e) = f(head) - f(tail).
IntMatrix incidence_matrix(const Graph& g, const Orientation& orientation);
IntMatrix adjacency_matrix(const Graph& g);
/// D - A as an exact integer matrix.
IntMatrix laplacian_matrix(const Graph& g);
DenseSymMatrix laplacian(const Graph& g);

/// All eigenvalues in ascending order.
std::vector<double> eigenvalues(const DenseSymMatrix& m);

/// Smallest nonzero Laplacian eigenvalue. For a disconnected graph returns 0
/// and, if requested, stores the smallest component in `witness`.
double lambda1(const Graph& g, VertexSet* witness = nullptr);

/// Largest |mu| over eigenvalues of A/k orthogonal to the (per-part) constants.
double markov_second_norm(const Graph& g);

/// Distance-from-origin distribution of the simple random walk on the k-regular tree.
struct TreeWalkState {
  int k = 0;
  std::vector<BigRational> prob;

  explicit TreeWalkState(int k);
  void step();
  const BigRational& at_origin() const { return prob[0]; }
};

/// r_0..r_n: probabilities of being at the origin at each time.
std::vector<BigRational> tree_return_probabilities(int k, int n);
BigRational tree_return_probability(int k, int n);

/// t_0..t_n: probability of first reaching the origin at each time from distance 1.
std::vector<BigRational> tree_first_passage_probabilities(int k, int n);

double tree_norm(int k);
/// Closed form of the first-passage generating function, 0 < z < branch point.
double tree_first_passage_gf(int k, double z);
double tree_branch_point(int k);

/// (r_{2j})^{1/(2j)} for j = 1..n.
std::vector<double> markov_norm_estimate(int k, int n);

/// Tree-walk lower bound on markov_second_norm for a connected regular graph
/// with diameter at least 4.
double alon_boppana_lower_bound(const Graph& g);

}  // namespace expkit
