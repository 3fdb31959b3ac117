#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>

#include "expkit/generators.hpp"
#include "expkit/matching.hpp"
#include "fixtures.hpp"

using namespace expkit;

namespace {

// Maximum matching size by memoised search over used-output masks.
int reference_matching_size(const BipartiteGraph& b) {
  std::map<std::pair<int, unsigned>, int> memo;
  std::function<int(int, unsigned)> go = [&](int i, unsigned used) -> int {
    if (i == b.inputs()) return 0;
    auto key = std::make_pair(i, used);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int best = go(i + 1, used);
    for (Vertex o : b.out_neighbors(i))
      if (!(used >> o & 1)) best = std::max(best, 1 + go(i + 1, used | 1u << o));
    return memo[key] = best;
  };
  return go(0, 0);
}

// Exhaustive Hall check over all input subsets.
bool reference_hall(const BipartiteGraph& b) {
  for (unsigned mask = 1; mask < (1u << b.inputs()); ++mask) {
    VertexSet a;
    for (int i = 0; i < b.inputs(); ++i)
      if (mask >> i & 1) a.push_back(i);
    if (boundary(b, a).size() < a.size()) return false;
  }
  return true;
}

bool covers_inputs(const BipartiteGraph& b, const Matching& m) {
  return is_matching(b, m) && static_cast<int>(m.size()) == b.inputs();
}

}  // namespace

TEST_CASE("maximum_matching") {
  CHECK(maximum_matching(complete_bipartite(3, 3)).size() == 3);
  CHECK(maximum_matching(fixtures::doubling_graph()).size() == 4);
  CHECK(maximum_matching(complete_bipartite(1, 5)).size() == 1);

  Rng rng(1);
  for (int t = 0; t < 200; ++t) {
    auto b = random_bipartite(1 + static_cast<int>(rng.below(8)), 1 + static_cast<int>(rng.below(8)), 0.3, rng);
    Matching m = maximum_matching(b);
    CHECK(is_matching(b, m));
    CHECK(static_cast<int>(m.size()) == reference_matching_size(b));
  }
}

TEST_CASE("hall_violator") {
  BipartiteGraph c4(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int o = 0; o < 2; ++o) c4.add_edge(i, o);
  CHECK_FALSE(hall_violator(c4).has_value());

  BipartiteGraph pigeon(2, 1);
  pigeon.add_edge(0, 0);
  pigeon.add_edge(1, 0);
  CHECK(hall_violator(pigeon) == VertexSet{0, 1});

  auto doubling = fixtures::doubling_graph();
  CHECK_FALSE(hall_violator(doubling).has_value());
  CHECK(hall_violator(doubling.transposed()).has_value());

  Rng rng(2);
  for (int t = 0; t < 300; ++t) {
    auto b = random_bipartite(1 + static_cast<int>(rng.below(8)), 1 + static_cast<int>(rng.below(8)), 0.3, rng);
    auto v = hall_violator(b);
    CHECK(v.has_value() != reference_hall(b));
    if (v) CHECK(boundary(b, *v).size() < v->size());
  }
}

TEST_CASE("lex-least input matching") {
  auto m = lex_least_input_matching(fixtures::seven_by_seven());
  REQUIRE(m.has_value());
  for (int i = 0; i < 7; ++i) CHECK(m->pairs[i] == Edge{i, i});

  // Exhaustive comparison against all permutations on small random graphs.
  Rng rng(4);
  for (int t = 0; t < 100; ++t) {
    int n = 2 + static_cast<int>(rng.below(5));
    auto b = random_bipartite(n, n, 0.6, rng);
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::optional<std::vector<int>> best;
    do {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) ok = b.has_edge(i, p[i]);
      if (ok) {
        best = p;
        break;
      }
    } while (std::next_permutation(p.begin(), p.end()));
    auto got = lex_least_input_matching(b);
    REQUIRE(got.has_value() == best.has_value());
    if (got)
      for (int i = 0; i < n; ++i) CHECK(got->pairs[i].second == (*best)[i]);
  }
}

TEST_CASE("bigamist_matching") {
  auto r = bigamist_matching(complete_bipartite(2, 4));
  REQUIRE(r.matchings.has_value());
  auto& [plus, minus] = *r.matchings;
  CHECK(covers_inputs(complete_bipartite(2, 4), plus));
  CHECK(covers_inputs(complete_bipartite(2, 4), minus));
  std::vector<int> outs;
  for (auto [i, o] : plus.pairs) outs.push_back(o);
  for (auto [i, o] : minus.pairs) outs.push_back(o);
  std::sort(outs.begin(), outs.end());
  CHECK(std::adjacent_find(outs.begin(), outs.end()) == outs.end());

  auto bad = bigamist_matching(complete_bipartite(2, 3));
  CHECK_FALSE(bad.matchings.has_value());
  CHECK(bad.violator == VertexSet{0, 1});

  BipartiteGraph single(1, 2);
  single.add_edge(0, 0);
  single.add_edge(0, 1);
  auto s = bigamist_matching(single);
  REQUIRE(s.matchings.has_value());
  CHECK(s.matchings->first.pairs[0].second != s.matchings->second.pairs[0].second);

  Rng rng(6);
  for (int t = 0; t < 200; ++t) {
    auto b = random_bipartite(1 + static_cast<int>(rng.below(5)), 1 + static_cast<int>(rng.below(9)), 0.5, rng);
    auto res = bigamist_matching(b);
    // Doubled Hall condition: every A has |dA| >= 2|A|.
    bool doubled_hall = true;
    for (unsigned mask = 1; mask < (1u << b.inputs()); ++mask) {
      VertexSet a;
      for (int i = 0; i < b.inputs(); ++i)
        if (mask >> i & 1) a.push_back(i);
      if (boundary(b, a).size() < 2 * a.size()) doubled_hall = false;
    }
    CHECK(res.matchings.has_value() == doubled_hall);
    if (res.matchings) {
      CHECK(covers_inputs(b, res.matchings->first));
      CHECK(covers_inputs(b, res.matchings->second));
      for (auto [i, o] : res.matchings->first.pairs)
        for (auto [j, q] : res.matchings->second.pairs) CHECK(o != q);
    } else {
      CHECK(boundary(b, res.violator).size() < 2 * res.violator.size());
    }
  }
}

TEST_CASE("koenig_decomposition") {
  auto check = [](const BipartiteGraph& b, int k) {
    auto perms = koenig_decomposition(b, k);
    REQUIRE(static_cast<int>(perms.size()) == k);
    CHECK(is_latin_rectangle(perms, b.inputs()));
    for (int j = 0; j < b.inputs(); ++j) {
      VertexSet nb;
      for (const auto& p : perms) nb.push_back(p[j]);
      std::sort(nb.begin(), nb.end());
      CHECK(nb == b.out_neighbors(j));
    }
  };
  BipartiteGraph c4(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int o = 0; o < 2; ++o) c4.add_edge(i, o);
  check(c4, 2);
  check(complete_bipartite(3, 3), 3);
  check(fixtures::seven_by_seven(), 3);
  CHECK_THROWS_AS(koenig_decomposition(fixtures::doubling_graph(), 2), ContractError);

  // Random regular bipartite graphs as unions of permutation matchings.
  Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    int n = 2 + static_cast<int>(rng.below(9));
    int k = 1 + static_cast<int>(rng.below(std::min(n, 4)));
    BipartiteGraph b(n, n);
    // Circulant support shifted by a random permutation keeps regularity.
    auto perm = rng.permutation(n);
    for (int i = 0; i < n; ++i)
      for (int s = 0; s < k; ++s) b.add_edge(i, perm[(i + s) % n]);
    check(b, k);
  }
}

TEST_CASE("has_two_sided_expansion") {
  CHECK(has_two_sided_expansion(complete_bipartite(4, 4)));
  BipartiteGraph m(4, 4);
  for (int i = 0; i < 4; ++i) m.add_edge(i, i);
  CHECK(has_two_sided_expansion(m));
  BipartiteGraph iso(4, 4);
  for (int i = 1; i < 4; ++i)
    for (int o = 0; o < 4; ++o) iso.add_edge(i, o);
  CHECK_FALSE(has_two_sided_expansion(iso));
  CHECK_THROWS_AS(has_two_sided_expansion(complete_bipartite(2, 3)), ContractError);

  // Two-sided expansion implies a perfect matching when n is even.
  Rng rng(10);
  int expanding = 0;
  for (int t = 0; t < 300; ++t) {
    int n = 2 * (1 + static_cast<int>(rng.below(5)));
    auto b = random_bipartite(n, n, 0.35, rng);
    if (has_two_sided_expansion(b)) {
      ++expanding;
      CHECK(static_cast<int>(maximum_matching(b).size()) == n);
    }
  }
  CHECK(expanding > 20);
}

TEST_CASE("two-sided expansion with odd n does not force a perfect matching") {
  // Sets of size (n+1)/2 escape both one-sided checks.
  BipartiteGraph b(3, 3);
  b.add_edge(0, 0);
  b.add_edge(1, 0);
  b.add_edge(2, 1);
  b.add_edge(2, 2);
  CHECK(has_two_sided_expansion(b));
  CHECK(maximum_matching(b).size() == 2);
}
