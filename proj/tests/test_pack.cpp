#include <random>

#include "doctest.h"
#include "pmst/construct.hpp"
#include "pmst/error.hpp"
#include "pmst/random_graphs.hpp"
#include "pmst/sweep.hpp"

using namespace pmst;

namespace {

ErrorCode error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kDisconnected;
}

bool is_ab(PackRole r) { return r == PackRole::kAB || r == PackRole::kBACross; }
bool is_bc(PackRole r) { return r == PackRole::kBC || r == PackRole::kBCCross; }

bool is_padding(const ParametricGraph& g, int id) { return g.has_meta() && g.meta(id).padding; }

}  // namespace

TEST_CASE("pack sizes") {
  std::mt19937_64 rng(4);
  const ParametricGraph g = random_connected_graph(rng, 4, 4, 9);
  const PackResult p = pack(g, 3);
  CHECK(p.graph.vertex_count() == 16);
  CHECK(p.graph.edge_count() == 32);
  CHECK(p.source_vertices == 4);
  CHECK(p.source_edges == 4);

  const PackResult t1 = pack(recursive_weights(1), 3);
  CHECK(t1.graph.vertex_count() == 12);
  CHECK(t1.graph.edge_count() == 24);
  CHECK(t1.source_sequence_length == 3);
  CHECK(t1.guaranteed_length == 18);
  CHECK(sequence_length(enumerate(t1.graph)) >= 18);
}

TEST_CASE("pack rejects k outside 1..M") {
  const ParametricGraph g = recursive_weights(1);
  CHECK(error_of([&] { pack(g, 0); }) == ErrorCode::kBadK);
  CHECK(error_of([&] { pack(g, 4); }) == ErrorCode::kBadK);
}

TEST_CASE("pack metadata and subdivisions") {
  const ParametricGraph g = recursive_weights(2);
  const PackResult single = pack(g, 1);
  CHECK(is_subdivision(single.graph, g, 1));

  const PackResult p = pack(g, 3);
  for (int j = 1; j <= 3; ++j) CHECK(is_subdivision(p.graph, g, j));
  CHECK_FALSE(is_subdivision(p.graph, g, 4));
  CHECK_FALSE(is_subdivision(p.graph, recursive_weights(1), 1));

  std::vector<int> per_subgraph(4, 0);
  for (const auto& md : p.graph.meta()) ++per_subgraph[static_cast<std::size_t>(*md.subgraph)];
  CHECK(per_subgraph == std::vector<int>{18, 18, 18, 18});
}

TEST_CASE("spokes and b-c edges are in every tree while a-b edges of H_j cross") {
  const ParametricGraph g = recursive_weights(1);
  const PackResult p = pack(g, 3);
  for (int j = 1; j <= 3; ++j) {
    std::optional<Rational> lo;
    std::optional<Rational> hi;
    for (const auto& e : p.graph.edges()) {
      for (const auto& f : p.graph.edges()) {
        const EdgeMeta& me = p.graph.meta(e.id);
        const EdgeMeta& mf = p.graph.meta(f.id);
        if (f.id <= e.id || me.subgraph != j || mf.subgraph != j) continue;
        if (!is_ab(*me.role) || !is_ab(*mf.role)) continue;
        const Crossing c = crossing_lambda(e.weight, f.weight);
        if (!c.at()) continue;
        if (!lo || c.lambda < *lo) lo = c.lambda;
        if (!hi || *hi < c.lambda) hi = c.lambda;
      }
    }
    REQUIRE(lo);
    std::vector<Rational> cuts;
    for (const auto& x : breakpoint_candidates(p.graph)) {
      if (*lo <= x && x <= *hi) cuts.push_back(x);
    }
    int checked = 0;
    for (std::size_t i = 1; i < cuts.size(); ++i) {
      const SpanningTree t = mst_at(p.graph, (cuts[i - 1] + cuts[i]) / 2);
      ++checked;
      for (const auto& e : p.graph.edges()) {
        const EdgeMeta& md = p.graph.meta(e.id);
        if (*md.subgraph == 0 || (md.subgraph == j && is_bc(*md.role))) CHECK(t.contains(e.id));
      }
    }
    CHECK(checked >= 2);
  }
}

TEST_CASE("theorem instance for n = 9, m = 15") {
  const TheoremInstance t = theorem_instance(9, 15);
  CHECK(t.graph.vertex_count() == 9);
  CHECK(t.graph.edge_count() == 15);
  CHECK(sequence_length(enumerate(t.graph)) >= static_cast<std::size_t>(t.guaranteed_length));
}

TEST_CASE("theorem instances have the requested size and keep padding out of every tree") {
  std::mt19937_64 rng(50);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 30)(rng);
    const int lo = std::max(0, 2 * n - 3);
    const int m = std::uniform_int_distribution<int>(lo, n * (n - 1) / 2)(rng);
    CAPTURE(n);
    CAPTURE(m);
    const TheoremInstance t = theorem_instance(n, m);
    CHECK(t.graph.vertex_count() == n);
    CHECK(t.graph.edge_count() == m);
    if (n > 20) continue;  // sweeps of the larger instances run in the acceptance suite
    const TreeSequence ts = enumerate(t.graph);
    CHECK(sequence_length(ts) >= static_cast<std::size_t>(t.guaranteed_length));
    for (const auto& iv : ts.intervals) {
      for (int id : iv.tree.edge_ids) CHECK_FALSE(is_padding(t.graph, id));
    }
  }
}

TEST_CASE("theorem instance picks the largest fitting level") {
  const TheoremInstance t = theorem_instance(40, 200);
  // T_2: 6 + 27 <= 40 and 36 <= 200; T_3 would need 15 + 81 vertices.
  REQUIRE(t.level);
  CHECK(*t.level == 2);
  CHECK(t.k >= 2);
  CHECK(t.guaranteed_length == 2 * t.k * 12);
  CHECK(t.leaves == 40 - 33);
}

TEST_CASE("theorem instance rejects impossible sizes") {
  CHECK(error_of([] { theorem_instance(0, 0); }) == ErrorCode::kBadRange);
  CHECK(error_of([] { theorem_instance(6, 8); }) == ErrorCode::kBadRange);
  CHECK(error_of([] { theorem_instance(6, 16); }) == ErrorCode::kBadRange);
}
