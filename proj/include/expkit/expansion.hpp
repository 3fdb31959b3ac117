#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <span>
#include <string>
#include <vector>

#include "expkit/graph.hpp"

namespace expkit {

using Rational = boost::rational<long long>;
using BigRational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& r);

enum class ExpanderKind { expander, fixed, bi };

std::string to_string(ExpanderKind kind);
ExpanderKind parse_expander_kind(const std::string& name);

/**
 * Result of an exhaustive expansion computation or check.
 *
 * For constant computations `witness` is a set attaining the minimum. For
 * certification against a claimed constant, `holds` is false and `witness`
 * violates the inequality when the claim fails.
 */
struct ExpansionCertificate {
  ExpanderKind kind = ExpanderKind::expander;
  Rational c;
  bool holds = true;
  VertexSet witness;
};

// All functions below enumerate subsets exhaustively and throw ContractError
// for more than 24 vertices (per side for bipartite graphs).

/// Largest c with |dA| >= c (1 - |A|/n) |A| for all 0 < |A|, 2|A| <= n.
ExpansionCertificate expander_certificate(const Graph& g);
Rational expander_constant(const Graph& g);

/// Largest c with |dA| >= c |A| for all 0 < |A|, 2|A| <= n.
ExpansionCertificate fixed_expander_certificate(const Graph& g);
Rational fixed_expander_constant(const Graph& g);

/// min over input sets 0 < |A|, 2|A| <= n of (|dA| - |A|) / |A|.
ExpansionCertificate bi_expander_certificate(const BipartiteGraph& b);
Rational bi_expander_constant(const BipartiteGraph& b);

/// min over cuts of |E(A,B)| / min(|A|,|B|).
Rational cheeger_h(const Graph& g);
/// min over cuts of |E(A,B)| (1/|A| + 1/|B|).
Rational cheeger_h_prime(const Graph& g);

/// Checks a claimed constant; on failure the witness violates the inequality.
ExpansionCertificate certify_expansion(const Graph& g, ExpanderKind kind, const Rational& c);
ExpansionCertificate certify_expansion(const BipartiteGraph& b, const Rational& c);

/// |E(A, V - A)| / min(|A|, n - |A|) for a proper nonempty subset A.
Rational cut_ratio(const Graph& g, std::span<const Vertex> a);

/// For each edge of g.edges(): sum over ordered pairs (s, t) of the fraction of
/// shortest s-t paths through it. Connected graphs only.
std::vector<BigRational> edge_betweenness(const Graph& g);

/**
 * Lower bound on cheeger_h valid at any size: a cut (A, B) carries all shortest-path
 * flow between A and B, so |E(A,B)| >= 2|A||B| / max betweenness.
 */
BigRational cheeger_routing_lower_bound(const Graph& g);

/// Converts between the expander and fixed-expander notions for degree k.
Rational convert_constant(ExpanderKind from, ExpanderKind to, int n, int k, const Rational& c);

}  // namespace expkit
