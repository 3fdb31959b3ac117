#include <doctest.h>

#include <cmath>
#include <numbers>

#include "expkit/expansion.hpp"
#include "expkit/generators.hpp"
#include "expkit/spectral.hpp"
#include "expkit/transforms.hpp"

using namespace expkit;

namespace {

// Plain cyclic Jacobi rotations.
std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
  const int n = static_cast<int>(a.size());
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) off += a[i][j] * a[i][j];
    if (std::sqrt(off) < 1e-12) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        double t = (theta >= 0 ? 1 : -1) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(a[i][i]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<double>> rows_of(const IntMatrix& m) {
  std::vector<std::vector<double>> r(m.rows(), std::vector<double>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r[i][j] = double(m.at(i, j));
  return r;
}

double det(const std::vector<std::vector<double>>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 1) return m[0][0];
  double total = 0;
  for (int j = 0; j < n; ++j) {
    std::vector<std::vector<double>> minor;
    for (int i = 1; i < n; ++i) {
      std::vector<double> row;
      for (int l = 0; l < n; ++l)
        if (l != j) row.push_back(m[i][l]);
      minor.push_back(row);
    }
    total += (j % 2 ? -1 : 1) * m[0][j] * det(minor);
  }
  return total;
}

double char_poly(std::vector<std::vector<double>> m, double x) {
  for (std::size_t i = 0; i < m.size(); ++i) m[i][i] -= x;
  return det(m);
}

long long dot(const std::vector<long long>& a, const std::vector<long long>& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Closed walks from the root of the k-regular tree, counted on an explicit ball.
std::vector<long long> tree_closed_walks(int k, int max_len) {
  int radius = max_len / 2;
  std::vector<std::vector<int>> adj{{}};
  std::vector<int> depth{0};
  std::vector<int> frontier{0};
  for (int d = 1; d <= radius; ++d) {
    std::vector<int> next;
    for (int v : frontier) {
      int children = v == 0 ? k : k - 1;
      for (int c = 0; c < children; ++c) {
        int w = static_cast<int>(adj.size());
        adj.push_back({v});
        adj[v].push_back(w);
        depth.push_back(d);
        next.push_back(w);
      }
    }
    frontier = next;
  }
  std::vector<long long> ways(adj.size(), 0), counts{1};
  ways[0] = 1;
  for (int t = 1; t <= max_len; ++t) {
    std::vector<long long> nw(adj.size(), 0);
    for (std::size_t v = 0; v < adj.size(); ++v)
      for (int w : adj[v]) nw[w] += ways[v];
    ways = nw;
    counts.push_back(ways[0]);
  }
  return counts;
}

BigRational big_pow(long long base, int e) {
  BigRational r(1);
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

TEST_CASE("Laplacian examples") {
  auto l2 = laplacian_matrix(complete_graph(2));
  CHECK(l2.at(0, 0) == 1);
  CHECK(l2.at(0, 1) == -1);
  CHECK(l2.at(1, 0) == -1);
  CHECK(l2.at(1, 1) == 1);

  auto c4 = eigenvalues(laplacian(cycle_graph(4)));
  std::vector<double> want{0, 2, 2, 4};
  for (int i = 0; i < 4; ++i) CHECK(c4[i] == doctest::Approx(want[i]).epsilon(1e-10));

  auto i3 = eigenvalues(DenseSymMatrix(3, {1, 0, 0, 0, 1, 0, 0, 0, 1}));
  for (double x : i3) CHECK(x == doctest::Approx(1.0));
}

TEST_CASE("Laplacian equals d^T d for any orientation") {
  Rng rng(7);
  std::vector<Graph> graphs{cycle_graph(5), petersen_graph(), complete_graph(5), torus_graph(3)};
  for (int i = 0; i < 5; ++i) graphs.push_back(random_graph(9, 0.4, rng));
  for (const auto& g : graphs) {
    auto lap = laplacian_matrix(g);
    for (int trial = 0; trial < 100; ++trial) {
      auto d = incidence_matrix(g, random_orientation(g, rng));
      CHECK(d.transposed() * d == lap);
    }
    for (int trial = 0; trial < 20; ++trial) {
      auto d = incidence_matrix(g, random_orientation(g, rng));
      std::vector<long long> f(g.order()), h(g.order());
      for (auto& x : f) x = rng.between(-20, 20);
      for (auto& x : h) x = rng.between(-20, 20);
      CHECK(dot(f, lap.apply(h)) == dot(d.apply(f), d.apply(h)));
    }
  }
}

TEST_CASE("eigenvalues against characteristic polynomial for small orders") {
  Rng rng(11);
  for (int n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<double> e(n * n);
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) e[i * n + j] = e[j * n + i] = double(rng.between(-5, 5));
      DenseSymMatrix m(n, e);
      std::vector<std::vector<double>> rows(n, std::vector<double>(n));
      double trace = 0, frob = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          rows[i][j] = e[i * n + j];
          frob += e[i * n + j] * e[i * n + j];
        }
      for (int i = 0; i < n; ++i) trace += rows[i][i];
      auto ev = eigenvalues(m);
      REQUIRE(ev.size() == std::size_t(n));
      CHECK(std::is_sorted(ev.begin(), ev.end()));
      double sum = 0, sq = 0;
      for (double x : ev) {
        sum += x;
        sq += x * x;
        CHECK(std::abs(char_poly(rows, x)) < 1e-6);
      }
      CHECK(sum == doctest::Approx(trace).epsilon(1e-10));
      CHECK(sq == doctest::Approx(frob).epsilon(1e-10));
    }
}

TEST_CASE("eigenvalues agree with a Jacobi oracle") {
  Rng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = random_graph(12 + trial, 0.3, rng);
    auto lap = laplacian_matrix(g);
    auto ev = eigenvalues(DenseSymMatrix::from_int(lap));
    auto ref = jacobi_eigenvalues(rows_of(lap));
    for (std::size_t i = 0; i < ev.size(); ++i) CHECK(std::abs(ev[i] - ref[i]) < 1e-8);
  }
  auto k4 = eigenvalues(laplacian(complete_graph(4)));
  CHECK(std::abs(k4[0]) < 1e-10);
  for (int i = 1; i < 4; ++i) CHECK(std::abs(k4[i] - 4) < 1e-10);

  std::vector<double> c6;
  for (int j = 0; j < 6; ++j) c6.push_back(2 - 2 * std::cos(2 * std::numbers::pi * j / 6));
  std::sort(c6.begin(), c6.end());
  auto got = eigenvalues(laplacian(cycle_graph(6)));
  for (int i = 0; i < 6; ++i) CHECK(std::abs(got[i] - c6[i]) < 1e-10);
}

TEST_CASE("asymmetric input is rejected") {
  CHECK_THROWS_AS(DenseSymMatrix(2, {0, 1, 2, 0}), ContractError);
}

TEST_CASE("zero multiplicity counts components; spectrum is non-negative") {
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_graph(10, 0.15, rng);
    auto ev = eigenvalues(laplacian(g));
    std::size_t zeros = 0;
    for (double x : ev) {
      CHECK(x > -1e-9);
      zeros += std::abs(x) < 1e-8;
    }
    CHECK(zeros == connected_components(g).size());
  }
}

TEST_CASE("regular graphs: Laplacian is kI - A and spectra correspond") {
  Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    int k = 2 + trial % 3;
    Graph g = random_regular_graph(10 + 2 * (trial % 4), k, rng);
    auto lap = laplacian_matrix(g);
    auto adj = adjacency_matrix(g);
    for (int i = 0; i < g.order(); ++i)
      for (int j = 0; j < g.order(); ++j) CHECK(lap.at(i, j) == (i == j ? k : 0) - adj.at(i, j));
    auto lev = eigenvalues(DenseSymMatrix::from_int(lap));
    auto aev = eigenvalues(DenseSymMatrix::from_int(adj));
    const int n = g.order();
    for (int i = 0; i < n; ++i) CHECK(std::abs(lev[i] - (k - k * (aev[n - 1 - i] / k))) < 1e-8);
  }
}

TEST_CASE("lambda1") {
  CHECK(lambda1(complete_graph(4)) == doctest::Approx(4.0));
  CHECK(lambda1(cycle_graph(6)) == doctest::Approx(1.0));
  CHECK(lambda1(torus_graph(5)) == doctest::Approx(2 - 2 * std::cos(2 * std::numbers::pi / 5)));

  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(3, 4);
  VertexSet w;
  CHECK(lambda1(g, &w) == 0.0);
  CHECK(w == VertexSet{3, 4});
}

TEST_CASE("Cheeger direction h^2 <= 2k lambda1 on small regular graphs") {
  Rng rng(21);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    int k = 2 + trial % 4;
    int n = 6 + trial % 9;
    if (n * k % 2 || k >= n) continue;
    Graph g = random_regular_graph(n, k, rng);
    if (!is_connected(g)) continue;
    Rational h = cheeger_h(g);
    double hd = double(h.numerator()) / double(h.denominator());
    CHECK(hd * hd <= 2 * k * lambda1(g) + 1e-8);
    ++checked;
  }
  CHECK(checked > 30);
}

TEST_CASE("markov_second_norm") {
  CHECK(markov_second_norm(complete_graph(4)) == doctest::Approx(1.0 / 3));
  CHECK(markov_second_norm(cycle_graph(6)) == doctest::Approx(0.5));
  double pet = markov_second_norm(petersen_graph());
  CHECK(pet == doctest::Approx(2.0 / 3));
  CHECK(pet <= tree_norm(3) + 1e-9);
  Graph k33(6);
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) k33.add_edge(i, j);
  CHECK(std::abs(markov_second_norm(k33)) < 1e-9);
  CHECK_THROWS_AS(markov_second_norm(path_graph(4)), ContractError);
}

TEST_CASE("tree return probabilities") {
  for (int k = 2; k <= 6; ++k) CHECK(tree_return_probability(k, 2) == BigRational(1, k));
  CHECK(tree_return_probability(2, 4) == BigRational(3, 8));
  for (int k = 2; k <= 4; ++k) {
    auto walks = tree_closed_walks(k, 10);
    auto r = tree_return_probabilities(k, 10);
    for (int n = 0; n <= 10; ++n) CHECK(r[n] == BigRational(walks[n]) / big_pow(k, n));
  }
  for (int n = 1; n <= 30; n += 2) CHECK(tree_return_probability(3, n) == 0);

  TreeWalkState s(4);
  for (int t = 0; t < 25; ++t) {
    s.step();
    BigRational total(0);
    for (const auto& p : s.prob) total += p;
    CHECK(total == 1);
  }
}

TEST_CASE("line walk matches central binomials") {
  auto r = tree_return_probabilities(2, 40);
  BigRational binom(1);
  for (int n = 1; n <= 20; ++n) {
    binom = binom * (2 * n) * (2 * n - 1) / (n * n);
    CHECK(r[2 * n] == binom / big_pow(4, n));
  }
}

TEST_CASE("first passage series and generating function") {
  for (int k = 2; k <= 5; ++k) {
    auto t = tree_first_passage_probabilities(k, 40);
    auto r = tree_return_probabilities(k, 40);
    // R = 1 / (1 - z T): r_n = sum_{j>=1} t_{j-1} r_{n-j}
    for (int n = 1; n <= 40; ++n) {
      BigRational s(0);
      for (int j = 1; j <= n; ++j) s += t[j - 1] * r[n - j];
      CHECK(s == r[n]);
    }
  }
  for (int k = 3; k <= 6; ++k) {
    auto t = tree_first_passage_probabilities(k, 300);
    for (double z : {0.2, 0.5, 0.8}) {
      double series = 0;
      for (int n = 300; n >= 0; --n) series = series * z + t[n].convert_to<double>();
      double closed = tree_first_passage_gf(k, z);
      CHECK(series == doctest::Approx(closed).epsilon(1e-9));
      CHECK(closed == doctest::Approx(z / k + double(k - 1) / k * z * closed * closed).epsilon(1e-12));
    }
  }
}

TEST_CASE("tree norm") {
  CHECK(tree_norm(2) == doctest::Approx(1.0));
  CHECK(tree_norm(3) == doctest::Approx(0.9428090).epsilon(1e-7));
  CHECK(tree_norm(4) == doctest::Approx(0.8660254).epsilon(1e-7));
  for (int k = 2; k <= 10; ++k) CHECK(std::abs(1 / tree_branch_point(k) - tree_norm(k)) < 1e-12);
}

TEST_CASE("markov_norm_estimate") {
  auto e3 = markov_norm_estimate(3, 30);
  CHECK(e3[0] == doctest::Approx(std::sqrt(1.0 / 3)));
  CHECK(std::abs(e3.back() - tree_norm(3)) < 0.08);
  for (double x : e3) CHECK(x <= tree_norm(3) + 1e-12);

  auto e2 = markov_norm_estimate(2, 20);
  for (std::size_t i = 1; i < e2.size(); ++i) CHECK(e2[i] > e2[i - 1]);
  CHECK(e2.back() < 1.0);
  CHECK(e2.back() > 0.9);

  // r_{2n} k^{2n} <= (4(k-1))^n, exactly.
  for (int k = 2; k <= 6; ++k) {
    auto r = tree_return_probabilities(k, 40);
    for (int n = 1; n <= 20; ++n) CHECK(r[2 * n] * big_pow(k, 2 * n) <= big_pow(4 * (k - 1), n));
    for (int a = 1; 2 * a <= 40; a *= 2) CHECK(r[a] * r[a] <= r[2 * a]);
  }
}

TEST_CASE("Alon-Boppana lower bound") {
  CHECK(alon_boppana_lower_bound(cycle_graph(8)) == doctest::Approx(std::sqrt(0.5)));
  CHECK(markov_second_norm(cycle_graph(8)) == doctest::Approx(std::cos(std::numbers::pi / 4)));
  CHECK_THROWS_AS(alon_boppana_lower_bound(petersen_graph()), ContractError);

  Rng rng(17);
  int eligible = 0;
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_regular_graph(20 + 2 * trial, 3, rng);
    auto d = diameter(g);
    if (!d || *d < 4) continue;
    ++eligible;
    double bound = alon_boppana_lower_bound(g);
    CHECK(markov_second_norm(g) + 1e-8 >= bound);
    CHECK(bound <= tree_norm(3));
  }
  CHECK(eligible > 20);
}
