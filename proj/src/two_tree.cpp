#include <algorithm>
#include <stdexcept>

#include "pmst/construct.hpp"

namespace pmst {

namespace {

std::int64_t pow3(int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= 3;
  return r;
}

}  // namespace

std::int64_t two_tree_edge_count(int level) { return pow3(level); }
std::int64_t two_tree_vertex_count(int level) { return (pow3(level) + 3) / 2; }

ParametricGraph complete_2tree(int level) {
  if (level < 0) throw std::invalid_argument("negative 2-tree level");
  ParametricGraph g(2);
  g.add_edge(0, 1, {0, 0});
  g.set_level(0);
  for (int i = 1; i <= level; ++i) {
    ParametricGraph next(g.vertex_count());
    for (const auto& e : g.edges()) {
      const int p = std::min(e.u, e.v);
      const int q = std::max(e.u, e.v);
      const int r = next.add_vertex();
      EdgeMeta meta;
      meta.parent = e.id;
      meta.triangle = e.id;
      meta.apex = r;
      meta.color = Color::kGreen;
      next.add_edge(p, q, {0, 0}, meta);
      meta.color = Color::kRed;
      next.add_edge(p, r, {0, 0}, meta);
      meta.color = Color::kBlue;
      next.add_edge(q, r, {0, 0}, meta);
    }
    next.set_level(i);
    g = std::move(next);
  }
  return g;
}

std::int64_t lower_bound_value(int level) {
  if (level < 0 || level > 35) throw std::out_of_range("level outside [0, 35]");
  const std::int64_t p = pow3(level);
  return (2 * level * p + p + 3) / 4;
}

std::int64_t lower_bound_by_recurrence(int level) {
  if (level < 0 || level > 35) throw std::out_of_range("level outside [0, 35]");
  std::int64_t n = 1;
  for (int i = 1; i <= level; ++i) n = 3 * n + (pow3(i) - 3) / 2;
  return n;
}

}  // namespace pmst
