#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "expkit/expansion.hpp"
#include "expkit/graph.hpp"

namespace expkit {

/// Square integer matrix, reduced mod m when m > 0 (m == 0 means over Z).
class MatrixModM {
 public:
  MatrixModM() = default;
  MatrixModM(int n, long long m);
  static MatrixModM identity(int n, long long m);

  int dim() const noexcept { return n_; }
  long long modulus() const noexcept { return m_; }
  long long at(int i, int j) const { return data_[std::size_t(i) * n_ + j]; }
  void set(int i, int j, long long value);
  const std::vector<long long>& entries() const noexcept { return data_; }

  /// Same matrix reduced mod m.
  MatrixModM reduced(long long m) const;
  long long determinant() const;
  std::vector<long long> apply(const std::vector<long long>& x) const;

  friend MatrixModM operator*(const MatrixModM& a, const MatrixModM& b);
  friend bool operator==(const MatrixModM&, const MatrixModM&) = default;
  friend auto operator<=>(const MatrixModM& a, const MatrixModM& b) { return a.data_ <=> b.data_; }

 private:
  long long reduce(long long x) const;

  int n_ = 0;
  long long m_ = 0;
  std::vector<long long> data_;
};

/// Generators closed under inverses.
using GeneratorSet = std::vector<MatrixModM>;

/// A_n = I + E_{0,1}; B_n has B[i][i+1] = 1 and B[n-1][0] = (-1)^(n-1).
MatrixModM sl_generator_a(int n);
MatrixModM sl_generator_b(int n);
/// {A, A^-1, B, B^-1} over Z.
GeneratorSet sl_generators(int n);

struct CayleyGraph {
  Graph graph;
  /// Distinct non-identity generators mod m; the regular degree.
  int degree = 0;
  /// elements[v] is the group element at vertex v; elements[0] is the identity.
  std::vector<MatrixModM> elements;
  /// Reduced generators that contribute edges, in input order.
  GeneratorSet effective_generators;
  std::map<MatrixModM, Vertex> index;
};

/// Cayley graph of the group generated mod `modulus`; x ~ xs for s in S.
/// Throws ContractError when the group has more than `cap` elements.
CayleyGraph cayley_graph(const GeneratorSet& generators, long long modulus, int cap);

/// Product in the integral group algebra; coefficient vectors are indexed like cg.elements.
std::vector<long long> group_algebra_multiply(const CayleyGraph& cg, const std::vector<long long>& a,
                                              const std::vector<long long>& b);
/// k e - sum of the effective generators.
std::vector<long long> group_algebra_laplacian(const CayleyGraph& cg);

/// Vertex id of a nonzero vector of F_p^n: sum x_i p^i, minus one.
Vertex znp_vertex(const std::vector<long long>& x, long long p);
std::vector<long long> znp_vector(Vertex v, int n, long long p);

/// Nonzero vectors of F_p^n, x ~ A^{+-1} x and B^{+-1} x.
Graph znp_graph(int n, long long p);

struct YnCounterexample {
  VertexSet y;
  VertexSet boundary;
  Rational ratio;
  /// |boundary| <= (10 / n) |Y|.
  bool within_bound = false;
};

/// Y = {e_3, ..., e_{floor(n/2)}} (1-based) in Z(n, p); computed from neighbours of Y only.
YnCounterexample yn_counterexample(int n, long long p);

struct PermutationBigraph {
  int n = 0;
  /// perms[t][j] = pi_t(j).
  std::vector<std::vector<Vertex>> perms;
  /// Input j joined to pi_1(j), ..., pi_k(j), with repeats.
  std::vector<Edge> edges;
  bool is_latin = false;

  BipartiteGraph collapsed() const;
};

PermutationBigraph random_permutation_bigraph(int n, int k, std::uint64_t seed);
/// Same construction from given permutations.
PermutationBigraph permutation_bigraph(int n, std::vector<std::vector<Vertex>> perms);

}  // namespace expkit
