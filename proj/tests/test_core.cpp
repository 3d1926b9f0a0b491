#include <algorithm>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "pmst/construct.hpp"
#include "pmst/error.hpp"
#include "pmst/graph.hpp"
#include "pmst/random_graphs.hpp"
#include "pmst/sweep.hpp"
#include "support.hpp"

using namespace pmst;

TEST_CASE("evaluate") {
  CHECK(evaluate({0, 5}, 7) == 5);
  CHECK(evaluate({1, 0}, Rational(3, 2)) == Rational(3, 2));
  CHECK(evaluate({-2, 3}, Rational(1, 3)) == Rational(7, 3));
}

TEST_CASE("crossing_lambda") {
  const Crossing c = crossing_lambda({1, 0}, {-1, 2});
  CHECK(c.kind == CrossingKind::kAt);
  CHECK(c.lambda == 1);
  CHECK(crossing_lambda({2, 0}, {2, 1}).kind == CrossingKind::kNone);
  CHECK(crossing_lambda({1, 1}, {1, 1}).kind == CrossingKind::kEverywhere);
}

TEST_CASE("affine helpers") {
  const LinearWeight w{3, -1};
  CHECK(w + LinearWeight{1, 1} == LinearWeight{4, 0});
  CHECK(Rational(1, 3) * w == LinearWeight{1, Rational(-1, 3)});
  // w(2x + 5) = 6x + 14
  CHECK(substitute(w, 2, 5) == LinearWeight{6, 14});
}

TEST_CASE("graph construction rejects bad edges") {
  ParametricGraph g(3);
  CHECK_THROWS_AS(g.add_edge(1, 1, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 3, {0, 0}), std::invalid_argument);
  CHECK(g.add_edge(0, 1, {0, 0}) == 0);
  CHECK(g.add_edge(0, 1, {0, 1}) == 1);  // parallel edges are allowed
  CHECK_FALSE(g.connected());
}

TEST_CASE("mst_at on constant triangles") {
  CHECK(mst_at(support::constant_triangle(1, 2, 3), 0).edge_ids == std::vector<int>{0, 1});
  CHECK(mst_at(support::constant_triangle(1, 1, 1), 0).edge_ids == std::vector<int>{0, 1});
  CHECK(mst_at(support::constant_triangle(3, 2, 1), 0).edge_ids == std::vector<int>{1, 2});
}

TEST_CASE("mst_at on T_1 left of all crossings matches exhaustive search") {
  const ParametricGraph g = recursive_weights(1);
  const auto cuts = breakpoint_candidates(g);
  REQUIRE_FALSE(cuts.empty());
  const Rational left = cuts.front() - 1;
  CHECK(support::brute_trees(g).size() == 3);
  CHECK(mst_at(g, left) == support::brute_mst(g, left));
}

TEST_CASE("mst_at reports disconnected graphs") {
  ParametricGraph g(3);
  g.add_edge(0, 1, {0, 1});
  try {
    mst_at(g, 0);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDisconnected);
  }
}

TEST_CASE("monotonicity of increasing weight functions") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Rational slope = random_rational(rng, 20);
    if (!(slope > 0)) slope = slope.abs() + 1;
    const LinearWeight w{slope, random_rational(rng, 20)};
    Rational a = random_rational(rng, 20);
    Rational b = random_rational(rng, 20);
    if (a == b) b += 1;
    if (b < a) std::swap(a, b);
    CHECK(evaluate(w, a) < evaluate(w, b));
  }
}

TEST_CASE("cut rule and cycle rule on random graphs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 8)(rng);
    const int m = std::uniform_int_distribution<int>(n - 1, n * (n - 1) / 2)(rng);
    // Small coefficients make ties frequent.
    const ParametricGraph g = random_connected_graph(rng, n, m, 2);
    const Rational lambda = random_rational(rng, 3);
    const SpanningTree t = mst_at(g, lambda);
    auto key = [&](int id) { return std::pair{evaluate(g.edge(id).weight, lambda), id}; };

    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
      std::optional<int> lightest;
      for (const auto& e : g.edges()) {
        const bool su = mask >> e.u & 1u;
        const bool sv = mask >> e.v & 1u;
        if (su == sv) continue;
        if (!lightest || key(e.id) < key(*lightest)) lightest = e.id;
      }
      REQUIRE(lightest);
      CHECK(t.contains(*lightest));
    }
    for (const auto& e : g.edges()) {
      if (t.contains(e.id)) continue;
      for (int id : support::tree_path(g, t, e.u, e.v)) CHECK(key(id) < key(e.id));
    }
    CHECK(t == support::brute_mst(g, lambda));
  }
}

TEST_CASE("mst_at does not depend on the order edges were listed in") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 7)(rng);
    const int m = std::uniform_int_distribution<int>(n - 1, n * (n - 1) / 2)(rng);
    const ParametricGraph g = random_connected_graph(rng, n, m, 20);
    const Rational lambda = random_rational(rng, 5);

    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    // Listing position i holds original edge perm[i], keyed by (weight, original id).
    ParametricGraph shuffled(n);
    std::vector<std::pair<Rational, int>> keys;
    for (int id : perm) {
      shuffled.add_edge(g.edge(id).u, g.edge(id).v, g.edge(id).weight);
      keys.emplace_back(evaluate(g.edge(id).weight, lambda), id);
    }
    std::vector<int> rank(static_cast<std::size_t>(m));
    std::vector<int> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return keys[static_cast<std::size_t>(a)] < keys[static_cast<std::size_t>(b)]; });
    for (int r = 0; r < m; ++r) rank[static_cast<std::size_t>(order[static_cast<std::size_t>(r)])] = r;
    std::vector<Rational> rank_values;
    for (int pos = 0; pos < m; ++pos) rank_values.emplace_back(rank[static_cast<std::size_t>(pos)]);

    SpanningTree mapped;
    for (int pos : mst_for_values(shuffled, rank_values).edge_ids) {
      mapped.edge_ids.push_back(perm[static_cast<std::size_t>(pos)]);
    }
    std::sort(mapped.edge_ids.begin(), mapped.edge_ids.end());
    CHECK(mapped == mst_at(g, lambda));
  }
}
