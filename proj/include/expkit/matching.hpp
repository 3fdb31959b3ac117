#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "expkit/graph.hpp"

namespace expkit {

/// Set of (input, output) pairs, sorted by input.
struct Matching {
  std::vector<Edge> pairs;

  std::size_t size() const noexcept { return pairs.size(); }
  friend bool operator==(const Matching&, const Matching&) = default;
};

/// True when `m` uses only edges of `b` and repeats no input or output.
bool is_matching(const BipartiteGraph& b, const Matching& m);

/// Maximum-cardinality matching (Hopcroft-Karp).
Matching maximum_matching(const BipartiteGraph& b);

/**
 * Set A of inputs with |boundary(A)| < |A|, or nullopt when some matching
 * covers every input. A is the alternating-reachability set of the
 * lowest-index input left unmatched by a maximum matching.
 */
std::optional<VertexSet> hall_violator(const BipartiteGraph& b);

/**
 * Matching covering all inputs whose output sequence (by input index) is
 * lexicographically least, or nullopt when none exists.
 */
std::optional<Matching> lex_least_input_matching(const BipartiteGraph& b);

struct BigamistResult {
  /// Two input-covering matchings with disjoint output sets, when they exist.
  std::optional<std::pair<Matching, Matching>> matchings;
  /// Otherwise a set A of inputs with |boundary(A)| < 2|A|.
  VertexSet violator;
};

/// Matches every input to two distinct outputs, or reports why that is impossible.
BigamistResult bigamist_matching(const BipartiteGraph& b);

/**
 * Splits a k-regular bipartite graph with equal sides into k perfect
 * matchings. Entry [t][j] is the output matched to input j by matching t.
 */
std::vector<std::vector<Vertex>> koenig_decomposition(const BipartiteGraph& b, int k);

/// Every set A on either side with 2|A| <= n satisfies |boundary(A)| >= |A|.
bool has_two_sided_expansion(const BipartiteGraph& b);

/// Rows are permutations of 0..n-1 and no column repeats a value.
bool is_latin_rectangle(const std::vector<std::vector<Vertex>>& rows, int n);

}  // namespace expkit
