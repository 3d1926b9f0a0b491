#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "pmst/bicriterion.hpp"
#include "pmst/construct.hpp"
#include "pmst/error.hpp"
#include "pmst/graph_io.hpp"
#include "pmst/oracle.hpp"
#include "pmst/random_graphs.hpp"
#include "pmst/svg_plot.hpp"
#include "pmst/sweep.hpp"

using namespace pmst;

namespace {

constexpr int kVerificationFailed = 1;
constexpr int kInputError = 2;

// Input or output problems; reported with exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit_graph(const ParametricGraph& g, const std::string& out) {
  if (out.empty()) {
    std::cout << graph_to_json(g).dump(1) << "\n";
  } else {
    write_graph_file(g, out);
  }
}

// Summary lines go to stderr when the graph itself is written to stdout.
std::ostream& info(const std::string& out) { return out.empty() ? std::cerr : std::cout; }

std::string tree_text(const SpanningTree& t) {
  std::string s = "{";
  for (std::size_t i = 0; i < t.edge_ids.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(t.edge_ids[i]);
  }
  return s + "}";
}

int run_construct(int level, const std::string& out) {
  if (level < 0) throw UsageError("--level must be nonnegative");
  const RecursiveWeights rw = recursive_weights_report(level);
  emit_graph(rw.graph, out);
  info(out) << "T_" << level << ": " << rw.graph.vertex_count() << " vertices, "
            << rw.graph.edge_count() << " edges\n";
  for (const auto& l : rw.levels) {
    info(out) << "level " << l.level << ": eps=" << l.eps << " delta=" << l.delta << "\n";
  }
  return 0;
}

int run_pack(const std::string& in, int k, const std::string& out) {
  const PackResult p = pack(read_graph_file(in), k);
  emit_graph(p.graph, out);
  info(out) << "packed graph: " << p.graph.vertex_count() << " vertices, " << p.graph.edge_count()
            << " edges, k=" << p.k << ", source sequence length " << p.source_sequence_length
            << "\nguaranteed length: " << p.guaranteed_length << "\n";
  return 0;
}

int run_theorem(int n, int m, const std::string& out) {
  const TheoremInstance t = theorem_instance(n, m);
  emit_graph(t.graph, out);
  std::ostream& os = info(out);
  os << "instance: " << t.graph.vertex_count() << " vertices, " << t.graph.edge_count()
     << " edges";
  if (t.level) os << ", packs T_" << *t.level << " with k=" << t.k;
  os << ", " << t.leaves << " leaves, " << t.padding_edges << " padding edges\n"
     << "guaranteed length (2kT): " << t.guaranteed_length << "\n";
  return 0;
}

int run_enumerate(const std::string& in, const std::string& method, bool as_json) {
  const ParametricGraph g = read_graph_file(in);
  TreeSequence ts;
  if (method == "midpoint") {
    ts = enumerate_by_midpoints(g);
  } else {
    try {
      ts = enumerate_by_swaps(g);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kDegenerateCrossings) throw;
      std::cerr << "note: crossings are not simple, using the midpoint sweep\n";
      ts = enumerate_by_midpoints(g);
    }
  }
  if (as_json) {
    std::cout << sequence_to_json(ts).dump(1) << "\n";
    return 0;
  }
  std::cout << "sequence length: " << sequence_length(ts) << "\n"
            << "distinct trees: " << distinct_tree_count(ts) << "\n"
            << "breakpoints:";
  for (const auto& b : ts.breakpoints()) std::cout << " " << b;
  std::cout << "\n";
  return 0;
}

int run_verify(int level_max) {
  if (level_max < 0) throw UsageError("--level-max must be nonnegative");
  bool ok = true;
  std::printf("%-4s %8s %9s %10s %10s  %s\n", "i", "edges", "vertices", "observed", "bound",
              "status");
  for (int i = 0; i <= level_max; ++i) {
    const ParametricGraph g = recursive_weights(i);
    const bool sizes = g.edge_count() == two_tree_edge_count(i) &&
                       g.vertex_count() == two_tree_vertex_count(i);
    const std::size_t observed = sequence_length(enumerate(g));
    const std::int64_t bound = lower_bound_value(i);
    const bool row_ok = sizes && static_cast<std::int64_t>(observed) >= bound &&
                        verify_crossing_order(g);
    ok = ok && row_ok;
    std::printf("i=%-2d %8d %9d %10s %10lld  %s\n", i, g.edge_count(), g.vertex_count(),
                ("observed=" + std::to_string(observed)).c_str(), static_cast<long long>(bound),
                row_ok ? "ok" : "VIOLATED");
    std::fflush(stdout);
  }
  return ok ? 0 : kVerificationFailed;
}

int run_oracle_check(int trials, std::uint64_t seed, int max_vertices) {
  if (trials < 0 || max_vertices < 2) throw UsageError("need --trials >= 0 and --max-vertices >= 2");
  std::mt19937_64 rng(seed);
  int mismatches = 0;
  int swaps = 0;
  for (int trial = 0; trial < trials; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, max_vertices)(rng);
    const int m = std::uniform_int_distribution<int>(n - 1, std::min(10, n * (n - 1) / 2))(rng);
    const ParametricGraph g = random_connected_graph(rng, n, m, 20);
    const TreeSequence mid = enumerate_by_midpoints(g);
    bool same = mid == oracle_sequence(g);
    try {
      same = same && enumerate_by_swaps(g) == mid;
      ++swaps;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kDegenerateCrossings) throw;
    }
    if (!same) {
      ++mismatches;
      std::cout << "mismatch in trial " << trial << ": " << graph_to_json(g).dump() << "\n";
    }
  }
  std::cout << trials << " trials, " << swaps << " with swap sweep, " << mismatches
            << " mismatches\n";
  return mismatches == 0 ? 0 : kVerificationFailed;
}

int run_lemma2_check(int trials, std::uint64_t seed) {
  if (trials <= 0) throw UsageError("--trials must be positive");
  const TriangleLemmaReport r = check_triangle_lemma(trials, seed);
  for (const auto& w : r.witnesses) std::cout << "failure: " << w << "\n";
  std::cout << r.trials << " trials, " << r.failures << " failures\n";
  return r.failures == 0 ? 0 : kVerificationFailed;
}

int run_bicriterion(const std::string& in, const std::string& objective) {
  const BiWeightedGraph bg = from_parametric(read_graph_file(in));
  TreeObjective better;
  if (objective == "ratio") better = ratio_objective();
  if (objective == "min-cost") better = min_cost_objective();
  if (objective == "max-profit") better = max_profit_objective();
  const TreePoint p = optimize(bg, better);
  std::cout << "tree: " << tree_text(p.tree) << "\n"
            << "cost: " << p.total_cost << "\n"
            << "profit: " << p.total_profit << "\n";
  if (!p.total_cost.is_zero()) std::cout << "ratio: " << p.total_profit / p.total_cost << "\n";
  return 0;
}

int run_plot(const std::string& in, const std::string& out) {
  const ParametricGraph g = read_graph_file(in);
  const std::string svg = arrangement_svg(g, enumerate(g));
  std::ofstream file(out);
  if (!file) throw UsageError("cannot write '" + out + "'");
  file << svg;
  if (!file) throw UsageError("write to '" + out + "' failed");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parametric minimum spanning tree constructions and sweeps"};
  app.require_subcommand(1);

  int level = 0;
  int level_max = 4;
  int k = 1;
  int n = 0;
  int m = 0;
  int trials = 100;
  int max_vertices = 6;
  std::uint64_t seed = 1;
  std::string in;
  std::string out;
  std::string method = "swap";
  std::string objective = "ratio";
  bool as_json = false;

  auto* construct = app.add_subcommand("construct", "T_i with the recursive weights");
  construct->add_option("--level", level, "recursion level i")->required();
  construct->add_option("--out", out, "output graph file (default stdout)");

  auto* pack_cmd = app.add_subcommand("pack", "dense instance packing k copies of a graph");
  pack_cmd->add_option("--in", in, "input graph file")->required();
  pack_cmd->add_option("--k", k, "number of copies")->required();
  pack_cmd->add_option("--out", out, "output graph file (default stdout)");

  auto* theorem = app.add_subcommand("theorem", "instance with exactly n vertices and m edges");
  theorem->add_option("--n", n, "vertex count")->required();
  theorem->add_option("--m", m, "edge count")->required();
  theorem->add_option("--out", out, "output graph file (default stdout)");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "sequence of parametric minimum spanning trees");
  enumerate_cmd->add_option("--in", in, "input graph file")->required();
  enumerate_cmd->add_option("--method", method, "midpoint or swap")
      ->check(CLI::IsMember({"midpoint", "swap"}));
  enumerate_cmd->add_flag("--json", as_json, "print the full sequence as JSON");

  auto* verify = app.add_subcommand("verify", "sweep lengths against the guaranteed counts");
  verify->add_option("--level-max", level_max, "largest level to check");

  auto* oracle_check = app.add_subcommand("oracle-check", "sweeps against brute force on random graphs");
  oracle_check->add_option("--trials", trials, "number of random graphs");
  oracle_check->add_option("--seed", seed, "random seed");
  oracle_check->add_option("--max-vertices", max_vertices, "largest vertex count");

  auto* lemma2 = app.add_subcommand("lemma2-check", "triangle contraction property test");
  lemma2->add_option("--trials", trials, "number of trials");
  lemma2->add_option("--seed", seed, "random seed");

  auto* bicriterion = app.add_subcommand("bicriterion", "optimize over the hull trees (a = cost, b = profit)");
  bicriterion->add_option("--in", in, "input graph file")->required();
  bicriterion->add_option("--objective", objective, "ratio, min-cost or max-profit")
      ->check(CLI::IsMember({"ratio", "min-cost", "max-profit"}));

  auto* plot = app.add_subcommand("plot", "SVG drawing of the weight lines");
  plot->add_option("--in", in, "input graph file")->required();
  plot->add_option("--out", out, "output SVG file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*construct) return run_construct(level, out);
    if (*pack_cmd) return run_pack(in, k, out);
    if (*theorem) return run_theorem(n, m, out);
    if (*enumerate_cmd) return run_enumerate(in, method, as_json);
    if (*verify) return run_verify(level_max);
    if (*oracle_check) return run_oracle_check(trials, seed, max_vertices);
    if (*lemma2) return run_lemma2_check(trials, seed);
    if (*bicriterion) return run_bicriterion(in, objective);
    if (*plot) return run_plot(in, out);
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
