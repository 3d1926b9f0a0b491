#include <algorithm>
#include <random>
#include <string>

#include "doctest.h"
#include "pmst/construct.hpp"
#include "pmst/error.hpp"
#include "pmst/oracle.hpp"
#include "pmst/random_graphs.hpp"
#include "support.hpp"

using namespace pmst;

namespace {

ParametricGraph complete_graph(int n) {
  ParametricGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v, {0, 0});
  }
  return g;
}

const std::string* argmin_tag(const std::vector<TaggedLine<std::string>>& lines,
                              const Rational& lambda) {
  const TaggedLine<std::string>* best = nullptr;
  Rational best_value;
  for (const auto& l : lines) {
    const Rational v = evaluate(l.line, lambda);
    if (!best || v < best_value || (v == best_value && l.tag < best->tag)) {
      best = &l;
      best_value = v;
    }
  }
  return &best->tag;
}

}  // namespace

TEST_CASE("spanning tree counts") {
  CHECK(all_spanning_trees(support::constant_triangle(1, 2, 3)).size() == 3);
  CHECK(matrix_tree_count(complete_graph(4)) == 16);
  CHECK(all_spanning_trees(complete_graph(4)).size() == 16);

  // Determinant of the reduced Laplacian of T_2, computed separately with
  // exact fractions.
  const ParametricGraph t2 = complete_2tree(2);
  CHECK(matrix_tree_count(t2) == 54);
  CHECK(all_spanning_trees(t2).size() == 54);

  ParametricGraph parallel(2);
  parallel.add_edge(0, 1, {0, 0});
  parallel.add_edge(0, 1, {0, 1});
  parallel.add_edge(0, 1, {0, 2});
  CHECK(matrix_tree_count(parallel) == 3);
  CHECK(all_spanning_trees(parallel).size() == 3);
}

TEST_CASE("enumeration agrees with the determinant and with exhaustive search") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 7)(rng);
    const int m = std::uniform_int_distribution<int>(std::max(0, n - 1), n * (n - 1) / 2)(rng);
    const ParametricGraph g = random_connected_graph(rng, n, m, 3);
    const auto trees = all_spanning_trees(g);
    CHECK(mpz_class(trees.size()) == matrix_tree_count(g));
    CHECK(trees == support::brute_trees(g));
  }
  // Up to twelve vertices the count still matches the determinant.
  for (int trial = 0; trial < 5; ++trial) {
    const ParametricGraph g = random_connected_graph(rng, 12, 14, 3);
    CHECK(mpz_class(all_spanning_trees(g).size()) == matrix_tree_count(g));
  }
}

TEST_CASE("enumeration errors") {
  try {
    all_spanning_trees(complete_graph(6), 100);  // 6^4 = 1296 trees
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kCapExceeded);
  }
  ParametricGraph split(4);
  split.add_edge(0, 1, {0, 0});
  split.add_edge(2, 3, {0, 0});
  try {
    all_spanning_trees(split);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDisconnected);
  }
}

TEST_CASE("tree weight lines") {
  ParametricGraph g(3);
  g.add_edge(0, 1, {1, 0});
  g.add_edge(1, 2, {0, 5});
  CHECK(tree_weight_line(g, {{0, 1}}) == LinearWeight{1, 5});

  CHECK(tree_weight_line(support::constant_triangle(4, 5, 6), {{0, 2}}).slope == 0);

  std::mt19937_64 rng(3);
  const ParametricGraph r = random_connected_graph(rng, 6, 10, 20);
  for (const auto& t : all_spanning_trees(r)) {
    const LinearWeight line = tree_weight_line(r, t);
    for (int s = 0; s < 3; ++s) {
      const Rational lambda = random_rational(rng, 20);
      Rational sum;
      for (int id : t.edge_ids) sum += evaluate(r.edge(id).weight, lambda);
      CHECK(evaluate(line, lambda) == sum);
    }
  }
}

TEST_CASE("lower envelope examples") {
  using Line = TaggedLine<std::string>;
  const auto env =
      lower_envelope(std::vector<Line>{{{1, 0}, "up"}, {{-1, 2}, "down"}, {{0, 10}, "flat"}});
  REQUIRE(env.size() == 2);
  CHECK(env[0].tag == "up");
  CHECK_FALSE(env[0].lo);
  CHECK(*env[0].hi == 1);
  CHECK(env[1].tag == "down");
  CHECK(*env[1].lo == 1);
  CHECK_FALSE(env[1].hi);

  const auto single = lower_envelope(std::vector<Line>{{{3, 4}, "only"}});
  REQUIRE(single.size() == 1);
  CHECK_FALSE(single[0].lo);
  CHECK_FALSE(single[0].hi);

  // Identical lines resolve to the smaller tag.
  const auto tied = lower_envelope(std::vector<Line>{{{1, 1}, "b"}, {{1, 1}, "a"}});
  REQUIRE(tied.size() == 1);
  CHECK(tied[0].tag == "a");
}

TEST_CASE("lower envelope of random lines matches sampled argmin") {
  std::mt19937_64 rng(20);
  std::vector<TaggedLine<std::string>> lines;
  for (int i = 0; i < 20; ++i) {
    lines.push_back({{random_rational(rng, 20), random_rational(rng, 20)}, std::to_string(100 + i)});
  }
  const auto env = lower_envelope(lines);
  for (std::size_t i = 1; i < env.size(); ++i) {
    CHECK(*env[i - 1].hi == *env[i].lo);
    CHECK(*env[i].lo < (env[i].hi ? *env[i].hi : *env[i].lo + 1));
  }
  for (int s = 0; s < 1000; ++s) {
    const Rational lambda = random_rational(rng, 40) * 2;
    const auto it = std::find_if(env.begin(), env.end(), [&](const auto& p) {
      return (!p.lo || *p.lo < lambda) && (!p.hi || lambda < *p.hi);
    });
    if (it == env.end()) continue;  // exactly on a breakpoint
    CHECK(it->tag == *argmin_tag(lines, lambda));
  }
}

TEST_CASE("oracle sequences of the constructions") {
  CHECK(sequence_length(oracle_sequence(recursive_weights(1))) == 3);
  CHECK(sequence_length(oracle_sequence(recursive_weights(2))) == 12);

  std::mt19937_64 rng(4);
  ParametricGraph star(6);
  for (int v = 1; v < 6; ++v) star.add_edge(0, v, {random_rational(rng, 9), random_rational(rng, 9)});
  CHECK(sequence_length(oracle_sequence(star)) == 1);
}

TEST_CASE("oracle resolves tied tree lines like the greedy rule") {
  const ParametricGraph ties = support::constant_triangle(1, 1, 1);
  CHECK(oracle_sequence(ties) == enumerate_by_midpoints(ties));
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const ParametricGraph g = random_connected_graph(rng, 5, 7, 1);
    CHECK(oracle_sequence(g) == enumerate_by_midpoints(g));
  }
}
