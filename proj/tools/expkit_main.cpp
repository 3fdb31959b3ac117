#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "expkit/cayley.hpp"
#include "expkit/concentrator.hpp"
#include "expkit/expansion.hpp"
#include "expkit/generators.hpp"
#include "expkit/graph.hpp"
#include "expkit/hurwitz.hpp"
#include "expkit/matching.hpp"
#include "expkit/regularize.hpp"
#include "expkit/so3_free.hpp"
#include "expkit/spectral.hpp"
#include "expkit/transforms.hpp"

#ifndef EXPKIT_VERSION
#define EXPKIT_VERSION "0.0.0"
#endif

using namespace expkit;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

Graph read_graph(const std::string& path) { return parse_edge_list(read_input(path)).graph; }
BipartiteGraph read_bigraph(const std::string& path) { return parse_bipartite_edge_list(read_input(path)); }

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt(const BigRational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

std::string join(const VertexSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + std::to_string(s[i]);
  return out;
}

std::string csv_preamble(const std::string& header, std::uint64_t seed) {
  return header + "\n# seed=" + std::to_string(seed) + " version=" EXPKIT_VERSION "\n";
}

struct Context {
  std::string out_path;
  std::ostringstream out;
  int status = kOk;
};

// ---------------------------------------------------------------------------
// gen

void setup_gen(CLI::App& app, Context& ctx) {
  auto* gen = app.add_subcommand("gen", "Generate a graph as an edge list")->require_subcommand(1);

  static int n = 0, k = 0, m = 0, cap = 200000;
  static long long modulus = 0, p = 0;
  static std::uint64_t seed = 0;

  auto* cayley = gen->add_subcommand("cayley", "Cayley graph of SL_n(Z/m) on the standard generators");
  cayley->add_option("--n", n, "Matrix size")->required()->check(CLI::Range(2, 8));
  cayley->add_option("--mod", modulus, "Modulus")->required()->check(CLI::Range(2LL, 1000LL));
  cayley->add_option("--cap", cap, "Largest group order to enumerate");
  cayley->callback([&] {
    auto cg = cayley_graph(sl_generators(n), modulus, cap);
    ctx.out << serialize_edge_list(cg.graph);
  });

  auto* znp = gen->add_subcommand("znp", "Action graph on nonzero vectors of F_p^n");
  znp->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  znp->add_option("--p", p)->required()->check(CLI::PositiveNumber);
  znp->callback([&] { ctx.out << serialize_edge_list(znp_graph(n, p)); });

  auto* randperm = gen->add_subcommand("randperm", "Bipartite union of k random permutations");
  randperm->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  randperm->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  randperm->add_option("--seed", seed)->required();
  randperm->callback([&] {
    ctx.out << serialize_bipartite_edge_list(random_permutation_bigraph(n, k, seed).collapsed());
  });

  auto* regular = gen->add_subcommand("regular", "Random k-regular graph");
  regular->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  regular->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
  regular->add_option("--seed", seed)->required();
  regular->callback([&] {
    Rng rng(seed);
    ctx.out << serialize_edge_list(random_regular_graph(n, k, rng));
  });

  auto* bounded = gen->add_subcommand("bounded", "Random graph of maximum degree <= k");
  static int attempts = 0;
  bounded->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  bounded->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
  bounded->add_option("--attempts", attempts, "Random pairs tried (default 2n)");
  bounded->add_option("--seed", seed)->required();
  bounded->callback([&] {
    Rng rng(seed);
    ctx.out << serialize_edge_list(random_bounded_degree_graph(n, k, attempts > 0 ? attempts : 2 * n, rng));
  });

  auto* cycle = gen->add_subcommand("cycle");
  cycle->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  cycle->callback([&] { ctx.out << serialize_edge_list(cycle_graph(n)); });

  auto* complete = gen->add_subcommand("complete");
  complete->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  complete->callback([&] { ctx.out << serialize_edge_list(complete_graph(n)); });

  gen->add_subcommand("petersen")->callback([&] { ctx.out << serialize_edge_list(petersen_graph()); });

  auto* circulant = gen->add_subcommand("circulant", "k-regular circulant graph");
  circulant->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  circulant->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  circulant->callback([&] { ctx.out << serialize_edge_list(circulant_regular(n, k)); });

  auto* torus = gen->add_subcommand("torus", "m x m torus grid");
  torus->add_option("--m", m)->required()->check(CLI::Range(1, 1000));
  torus->callback([&] { ctx.out << serialize_edge_list(torus_graph(m)); });
}

// ---------------------------------------------------------------------------
// metrics

std::string expansion_csv(const Graph& g) {
  std::ostringstream os;
  os << "n,k_max,c_expander,c_fixed,h,h_prime\n";
  os << g.order() << ',' << g.max_degree() << ',' << to_string(expander_constant(g)) << ','
     << to_string(fixed_expander_constant(g)) << ',' << to_string(cheeger_h(g)) << ','
     << to_string(cheeger_h_prime(g)) << '\n';
  return os.str();
}

std::string spectral_csv(const Graph& g) {
  std::ostringstream os;
  os << "n,k,lambda1,second_norm,tree_norm,ab_lower_bound,is_ramanujan\n";
  int k = g.max_degree();
  bool regular = is_k_regular(g, k) && k >= 2 && is_connected(g);
  os << g.order() << ',' << k << ',' << fmt(lambda1(g)) << ',';
  if (!regular) {
    // Markov quantities are only defined for connected regular graphs.
    os << ",,,\n";
    return os.str();
  }
  double second = markov_second_norm(g);
  double tn = tree_norm(k);
  auto diam = diameter(g);
  os << fmt(second) << ',' << fmt(tn) << ',';
  if (diam && *diam >= 4) os << fmt(alon_boppana_lower_bound(g));
  os << ',' << (second <= tn + 1e-9 ? "true" : "false") << '\n';
  return os.str();
}

void setup_metrics(CLI::App& app, Context& ctx) {
  auto* metrics = app.add_subcommand("metrics", "Expansion and spectral measurements of a graph");
  static bool cheeger = false, expansion = false, spectral = false;
  static std::string path;
  auto* c = metrics->add_flag("--cheeger", cheeger, "Cheeger constants h and h'");
  auto* e = metrics->add_flag("--expansion", expansion, "Expander and fixed-expander constants");
  metrics->add_flag("--spectral", spectral, "Laplacian and Markov spectrum")->excludes(c)->excludes(e);
  metrics->add_option("graph", path, "Edge-list file or - for stdin")->required();
  metrics->callback([&] {
    Graph g = read_graph(path);
    if (spectral)
      ctx.out << spectral_csv(g);
    else
      ctx.out << expansion_csv(g);
  });
}

// ---------------------------------------------------------------------------
// transform

void setup_transform(CLI::App& app, Context& ctx) {
  auto* transform = app.add_subcommand("transform", "Expander transformations and quotients")->require_subcommand(1);
  static std::string path, partition_path;
  static int m = 0;
  static bool shear = false, cheeger = false;

  auto* f2b = transform->add_subcommand("fixed-to-bi", "Split a regular graph into a bipartite graph");
  f2b->add_option("graph", path)->required();
  f2b->callback([&] { ctx.out << serialize_bipartite_edge_list(fixed_to_bi(read_graph(path))); });

  auto* b2f = transform->add_subcommand("bi-to-fixed", "Glue a regular bipartite graph along a perfect matching");
  b2f->add_option("bigraph", path)->required();
  b2f->callback([&] {
    auto glued = bi_to_fixed(read_bigraph(path));
    ctx.out << "# loops_dropped=" << glued.loops_dropped << '\n' << serialize_edge_list(glued.graph);
  });

  auto* quotient = transform->add_subcommand("quotient", "Quotient of a graph by a partition");
  quotient->add_option("graph", path)->required();
  quotient->add_option("--partition", partition_path, "Partition file")->required();
  quotient->callback([&] {
    Graph g = read_graph(path);
    Partition part = parse_partition(read_input(partition_path));
    if (part.ground_size() != g.order()) throw UsageError("partition size does not match the graph");
    ctx.out << serialize_edge_list(quotient_graph(g, part));
  });

  auto* torus = transform->add_subcommand("torus", "Torus grid, its shear quotient or its Cheeger bracket");
  torus->add_option("--m", m)->required()->check(CLI::Range(2, 1000));
  auto* s = torus->add_flag("--shear", shear, "Emit the quotient by the shear partition");
  torus->add_flag("--cheeger", cheeger, "Emit lower and upper Cheeger bounds as JSON")->excludes(s);
  torus->callback([&] {
    if (cheeger) {
      auto tc = torus_cheeger(m);
      json j{{"m", m}, {"lower", fmt(tc.lower)}, {"upper", fmt(tc.upper)}, {"exact", tc.exact()},
             {"witness_size", tc.witness.size()}};
      ctx.out << j.dump(2) << '\n';
    } else if (shear) {
      ctx.out << serialize_edge_list(quotient_graph(torus_graph(m), torus_shear_partition(m)));
    } else {
      ctx.out << serialize_edge_list(torus_graph(m));
    }
  });
}

// ---------------------------------------------------------------------------
// regularize

void setup_regularize(CLI::App& app, Context& ctx) {
  auto* reg = app.add_subcommand("regularize", "Embed a graph into a k-regular graph");
  static int k = 0;
  static std::string path;
  static bool raise = false;
  reg->add_option("--k", k, "Target degree")->required()->check(CLI::PositiveNumber);
  reg->add_flag("--raise", raise, "Input is regular; add edges only");
  reg->add_option("graph", path)->required();
  reg->callback([&] {
    Graph g = read_graph(path);
    if (raise) {
      Graph out = raise_regular_degree(g, k);
      ctx.out << "# added_vertices=0 added_edges=" << out.edge_count() - g.edge_count() << '\n'
              << to_dot(out, "regularized");
      return;
    }
    auto report = make_k_regular(g, k);
    ctx.out << "# added_vertices=" << report.added_vertices << " added_edges=" << report.added_edges
            << " contains_input=" << (report.contains_input ? "true" : "false")
            << " order=" << report.output.order() << '\n'
            << to_dot(report.output, "regularized");
  });
}

// ---------------------------------------------------------------------------
// build

void setup_build(CLI::App& app, Context& ctx) {
  auto* build = app.add_subcommand("build", "Build concentrator networks")->require_subcommand(1);
  static int n = 0, r = 0, k = 0, base = 0;
  static std::uint64_t seed = 0;
  static std::string path;
  static bool unchecked = false;

  auto* sc = build->add_subcommand("superconcentrator", "Recursive superconcentrator DAG");
  sc->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  sc->add_option("--r", r)->required()->check(CLI::Range(2, 64));
  sc->add_option("--k", k, "Degree of the bi-expanders")->required()->check(CLI::PositiveNumber);
  sc->add_option("--base", base, "Largest size built as a complete bipartite graph");
  sc->add_option("--seed", seed)->required();
  sc->callback([&] {
    auto dag = build_superconcentrator(n, r, k, base > 0 ? std::optional<int>(base) : std::nullopt,
                                       random_bi_expander_supplier(seed));
    ctx.out << serialize_dag(dag);
  });

  auto* bc = build->add_subcommand("concentrator", "Bounded concentrator from an m x m bi-expander");
  bc->add_option("bigraph", path)->required();
  bc->add_option("--r", r)->required()->check(CLI::Range(2, 64));
  bc->add_flag("--unchecked", unchecked, "Skip the brute-force expansion check of the input");
  bc->callback([&] {
    auto c = build_bounded_concentrator(read_bigraph(path), r, !unchecked);
    ctx.out << "# n=" << c.n << " theta=" << to_string(c.theta) << " density=" << to_string(c.k_density)
            << '\n'
            << serialize_bipartite_edge_list(c.graph);
  });
}

// ---------------------------------------------------------------------------
// verify

json word_json(const std::optional<Word>& w) { return w ? json(to_string(*w)) : json(nullptr); }

void setup_verify(CLI::App& app, Context& ctx) {
  auto* verify = app.add_subcommand("verify", "Certify a property; exit 1 with a counterexample on failure")
                     ->require_subcommand(1);
  static int max_length = 0;
  static bool residue = false;
  static std::string path, kind_name = "expander", claim;
  static std::uint64_t samples = 10000, seed = 1;

  auto* so3 = verify->add_subcommand("so3-free", "Freeness of the two rotations up to a word length");
  so3->add_option("--max-length", max_length)->required()->check(CLI::Range(1, 39));
  so3->add_flag("--residue", residue, "Track coordinates mod 3 instead of exact integers");
  so3->callback([&] {
    auto cert = certify_free(max_length, residue ? CertifyMode::residue : CertifyMode::exact);
    json j{{"max_length", cert.max_length},
           {"mode", residue ? "residue" : "exact"},
           {"words_checked", cert.words_checked},
           {"passed", cert.passed},
           {"failure", word_json(cert.failure)}};
    ctx.out << j.dump(2) << '\n';
    if (!cert.passed) ctx.status = kFailed;
  });

  auto* sc = verify->add_subcommand("superconcentrator", "Disjoint paths between all equal-size terminal sets");
  sc->add_option("dag", path)->required();
  sc->add_option("--samples", samples, "Random pairs when exhaustive checking is too large");
  sc->add_option("--seed", seed);
  sc->callback([&] {
    auto dag = parse_dag(read_input(path));
    auto check = verify_superconcentrator(dag, 1000000, samples, seed);
    json j{{"inputs", dag.inputs.size()},
           {"edges", dag.edges.size()},
           {"exhaustive", check.exhaustive},
           {"pairs_checked", check.pairs_checked},
           {"pairs_total", check.pairs_total},
           {"passed", check.ok}};
    if (!check.ok) {
      j["bad_inputs"] = check.bad_inputs;
      j["bad_outputs"] = check.bad_outputs;
      j["flow"] = check.bad_flow;
      ctx.status = kFailed;
    }
    ctx.out << j.dump(2) << '\n';
  });

  auto* conc = verify->add_subcommand("concentrator", "Every small input set has enough neighbours");
  conc->add_option("bigraph", path)->required();
  conc->add_option("--samples", samples);
  conc->add_option("--seed", seed);
  conc->callback([&] {
    auto check = verify_concentrator(read_bigraph(path), samples, seed);
    json j{{"exhaustive", check.exhaustive}, {"sets_checked", check.sets_checked}, {"passed", check.ok}};
    if (!check.ok) {
      j["violator"] = check.violator;
      ctx.status = kFailed;
    }
    ctx.out << j.dump(2) << '\n';
  });

  auto* hall = verify->add_subcommand("hall", "Hall's condition for the inputs of a bipartite graph");
  hall->add_option("bigraph", path)->required();
  hall->callback([&] {
    auto b = read_bigraph(path);
    auto violator = hall_violator(b);
    json j{{"inputs", b.inputs()}, {"matching", maximum_matching(b).size()}, {"passed", !violator}};
    if (violator) {
      j["violator"] = *violator;
      j["neighbours"] = boundary(b, *violator);
      ctx.status = kFailed;
    }
    ctx.out << j.dump(2) << '\n';
  });

  auto* exp = verify->add_subcommand("expansion", "Check a claimed expansion constant by brute force");
  exp->add_option("graph", path)->required();
  exp->add_option("--kind", kind_name, "expander, fixed or bi")->check(CLI::IsMember({"expander", "fixed", "bi"}));
  exp->add_option("--c", claim, "Claimed constant, p/q")->required();
  exp->callback([&] {
    Rational c;
    std::istringstream is(claim);
    if (!(is >> c) || !is.eof()) {
      // boost::rational reads "p/q" only
      long long whole = 0;
      std::istringstream again(claim);
      if (!(again >> whole) || !again.eof()) throw UsageError("bad constant " + claim);
      c = whole;
    }
    auto kind = parse_expander_kind(kind_name);
    auto cert = kind == ExpanderKind::bi ? certify_expansion(read_bigraph(path), c)
                                         : certify_expansion(read_graph(path), kind, c);
    json j{{"kind", kind_name}, {"c", to_string(c)}, {"passed", cert.holds}};
    if (!cert.holds) {
      j["witness"] = cert.witness;
      ctx.status = kFailed;
    }
    ctx.out << j.dump(2) << '\n';
  });
}

// ---------------------------------------------------------------------------
// decompose

void setup_decompose(CLI::App& app, Context& ctx) {
  auto* decompose = app.add_subcommand("decompose", "Graph decompositions")->require_subcommand(1);
  static std::string path;
  static int k = 0;
  auto* koenig = decompose->add_subcommand("koenig", "Split a k-regular bipartite graph into perfect matchings");
  koenig->add_option("bigraph", path)->required();
  koenig->add_option("--k", k, "Degree (default: degree of input 0)");
  koenig->callback([&] {
    auto b = read_bigraph(path);
    int degree = k > 0 ? k : (b.inputs() > 0 ? b.input_degree(0) : 0);
    for (const auto& row : koenig_decomposition(b, degree)) ctx.out << join(row) << '\n';
  });
}

// ---------------------------------------------------------------------------
// quaternion

long long jacobi_count(long long p, int k) {
  long long sum = 0, pk = 1;
  for (int j = 0; j <= k; ++j, pk *= p) sum += pk;
  return 8 * sum;
}

void setup_quaternion(CLI::App& app, Context& ctx) {
  auto* q = app.add_subcommand("quaternion", "Integral and Hurwitz quaternion counts")->require_subcommand(1);
  static long long norm = 0, p = 0;
  static int k = 1;
  static std::string ring = "integral";
  static bool list = false;

  auto* count = q->add_subcommand("count", "Number of elements of a given norm");
  count->add_option("--norm", norm)->required()->check(CLI::Range(1LL, 10000LL));
  count->add_option("--ring", ring)->check(CLI::IsMember({"integral", "hurwitz"}));
  count->add_flag("--list", list, "Print the elements");
  count->callback([&] {
    auto elems = enumerate_norm(norm, ring == "hurwitz" ? QuaternionRing::hurwitz : QuaternionRing::integral);
    ctx.out << elems.size() << '\n';
    if (list)
      for (const auto& e : elems) ctx.out << to_string(e) << '\n';
  });

  auto* jac = q->add_subcommand("jacobi", "Integral count at norm p^k against 8(1 + p + ... + p^k)");
  jac->add_option("--p", p)->required()->check(CLI::Range(3LL, 10000LL));
  jac->add_option("--k", k)->check(CLI::Range(1, 20));
  jac->callback([&] {
    long long n = 1;
    for (int j = 0; j < k; ++j) {
      n *= p;
      if (n > 10000) throw UsageError("p^k exceeds 10000");
    }
    auto got = static_cast<long long>(enumerate_norm(n, QuaternionRing::integral).size());
    ctx.out << got << '\n';
    if (got != jacobi_count(p, k)) {
      std::cerr << "expected " << jacobi_count(p, k) << '\n';
      ctx.status = kFailed;
    }
  });

  auto* census = q->add_subcommand("census", "Singular matrices and left ideals of M_2(F_p)");
  census->add_option("--p", p)->required()->check(CLI::Range(3LL, 13LL));
  census->callback([&] {
    auto c = m2fp_ideal_census(p);
    json j{{"p", p},
           {"singular_nonzero", c.singular_nonzero},
           {"ideals", c.ideals},
           {"orbit_size", c.orbit_size},
           {"orbits_uniform", c.orbits_uniform}};
    ctx.out << j.dump(2) << '\n';
    if (c.singular_nonzero != (p + 1) * (p * p - 1) || c.ideals != p + 1 || c.orbit_size != p * p - 1)
      ctx.status = kFailed;
  });
}

// ---------------------------------------------------------------------------
// experiment

void setup_experiment(CLI::App& app, Context& ctx) {
  auto* exp = app.add_subcommand("experiment", "Seeded Monte-Carlo runs emitting CSV")->require_subcommand(1);
  static int n = 0, k = 0, trials = 1;
  static std::uint64_t seed = 0;

  auto* randperm = exp->add_subcommand("randperm", "Latin and expansion statistics of permutation bigraphs");
  randperm->add_option("--n", n)->required()->check(CLI::Range(2, 24));
  randperm->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  randperm->add_option("--trials", trials)->check(CLI::PositiveNumber);
  randperm->add_option("--seed", seed)->required();
  randperm->callback([&] {
    ctx.out << csv_preamble("seed,n,k,is_latin,c_fixed", seed);
    for (int t = 0; t < trials; ++t) {
      std::uint64_t s = seed + static_cast<std::uint64_t>(t);
      auto pb = random_permutation_bigraph(n, k, s);
      ctx.out << s << ',' << n << ',' << k << ',' << (pb.is_latin ? "true" : "false") << ','
              << to_string(bi_expander_constant(pb.collapsed())) << '\n';
    }
  });

  auto* regular = exp->add_subcommand("regular", "Spectral statistics of random regular graphs");
  regular->add_option("--n", n)->required()->check(CLI::Range(3, 2000));
  regular->add_option("--k", k)->required()->check(CLI::Range(2, 64));
  regular->add_option("--trials", trials)->check(CLI::PositiveNumber);
  regular->add_option("--seed", seed)->required();
  regular->callback([&] {
    ctx.out << csv_preamble("seed,trial,n,k,connected,second_norm,tree_norm,is_ramanujan", seed);
    Rng rng(seed);
    double tn = tree_norm(k);
    for (int t = 0; t < trials; ++t) {
      Graph g = random_regular_graph(n, k, rng);
      bool connected = is_connected(g);
      ctx.out << seed << ',' << t << ',' << n << ',' << k << ',' << (connected ? "true" : "false") << ',';
      if (connected) {
        double second = markov_second_norm(g);
        ctx.out << fmt(second) << ',' << fmt(tn) << ',' << (second <= tn + 1e-9 ? "true" : "false");
      } else {
        ctx.out << ',' << fmt(tn) << ',';
      }
      ctx.out << '\n';
    }
  });
}

int emit(Context& ctx) {
  if (ctx.out_path.empty()) {
    std::cout << ctx.out.str();
    return ctx.status;
  }
  std::ofstream file(ctx.out_path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot write " << ctx.out_path << '\n';
    return kUsage;
  }
  file << ctx.out.str();
  return ctx.status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Expander graph toolkit", "expkit"};
  app.set_version_flag("--version", EXPKIT_VERSION);
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx;
  app.add_option("--out", ctx.out_path, "Write output to a file instead of stdout");

  setup_gen(app, ctx);
  setup_metrics(app, ctx);
  setup_transform(app, ctx);
  setup_regularize(app, ctx);
  setup_build(app, ctx);
  setup_verify(app, ctx);
  setup_decompose(app, ctx);
  setup_quaternion(app, ctx);
  setup_experiment(app, ctx);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ContractError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return emit(ctx);
}
