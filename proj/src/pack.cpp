#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "pmst/construct.hpp"
#include "pmst/error.hpp"

namespace pmst {

namespace {

constexpr int kMaxHalvings = 256;

struct Window {
  Rational lo;
  Rational hi;
};

Rational max_at(const std::vector<LinearWeight>& lines, const Rational& x) {
  Rational best = evaluate(lines.front(), x);
  for (const auto& w : lines) best = max(best, evaluate(w, x));
  return best;
}

Rational min_at(const std::vector<LinearWeight>& lines, const Rational& x) {
  Rational best = evaluate(lines.front(), x);
  for (const auto& w : lines) best = min(best, evaluate(w, x));
  return best;
}

// below lies strictly under above on the whole window. max(below) - min(above)
// is convex, so the endpoints decide.
bool strictly_below(const std::vector<LinearWeight>& below,
                    const std::vector<LinearWeight>& above, const Window& w) {
  return max_at(below, w.lo) < min_at(above, w.lo) && max_at(below, w.hi) < min_at(above, w.hi);
}

// Chain side j (1-based) has slope k+1-2j over [2(j-1), 2j]; the chain
// starts at height 0.
LinearWeight chain_side(int k, int j) {
  Rational height = 0;
  for (int s = 1; s < j; ++s) height += Rational(2 * (k + 1 - 2 * s));
  const Rational slope = k + 1 - 2 * j;
  const Rational left = 2 * (j - 1);
  return {slope, height - slope * left};
}

struct Placement {
  std::vector<std::vector<LinearWeight>> bundles;  // per j: A lines then B lines
  std::vector<Window> windows;                     // per j: A window, B window
};

// Weights for H_1..H_k, or nothing when some dominance check fails.
std::optional<Placement> place_bundles(const std::vector<LinearWeight>& source, int k,
                                       const Rational& eps) {
  const Normalization g = normalize_lines(source, eps);

  // a-b copies near 3 - x crossing in [1, 2]; b-c copies near x - 3 crossing in [4, 5].
  std::vector<LinearWeight> a_lines;
  std::vector<LinearWeight> b_lines;
  for (const auto& f : g.lines) {
    a_lines.push_back(substitute(f, 1, -1) + LinearWeight{-1, 3});
    b_lines.push_back(substitute(f, 1, -4) + LinearWeight{1, -3});
  }
  const Window a_window{Rational(1, 2), Rational(5, 2)};
  const Window b_window{Rational(7, 2), Rational(11, 2)};
  if (!strictly_below(b_lines, a_lines, a_window) || !strictly_below(a_lines, b_lines, b_window)) {
    return std::nullopt;
  }

  std::vector<LinearWeight> combined = a_lines;
  combined.insert(combined.end(), b_lines.begin(), b_lines.end());
  const Normalization flat = normalize_lines(combined, eps);
  auto to_unit = [&](const Rational& x) { return (x - flat.lambda_shift) / flat.lambda_scale; };

  Placement out;
  for (int j = 1; j <= k; ++j) {
    const LinearWeight side = chain_side(k, j);
    const Rational offset = Rational(2 * (j - 1)) + Rational(1, 2);
    std::vector<LinearWeight> bundle;
    for (const auto& c : flat.lines) bundle.push_back(substitute(c, 1, -offset) + side);
    out.bundles.push_back(std::move(bundle));
    out.windows.push_back({to_unit(a_window.lo) + offset, to_unit(a_window.hi) + offset});
    out.windows.push_back({to_unit(b_window.lo) + offset, to_unit(b_window.hi) + offset});
  }

  // Inside its windows every H_j line is below every other bundle.
  for (int j = 0; j < k; ++j) {
    std::vector<LinearWeight> others;
    for (int o = 0; o < k; ++o) {
      if (o != j) others.insert(others.end(), out.bundles[o].begin(), out.bundles[o].end());
    }
    if (others.empty()) continue;
    for (int w = 0; w < 2; ++w) {
      if (!strictly_below(out.bundles[j], others, out.windows[2 * j + w])) return std::nullopt;
    }
  }
  return out;
}

}  // namespace

PackResult pack(const ParametricGraph& g, int k) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (k < 1 || k > m) {
    throw Error(ErrorCode::kBadK, "k = " + std::to_string(k) + " outside [1, " +
                                      std::to_string(m) + "]");
  }

  PackResult out;
  out.source_vertices = n;
  out.source_edges = m;
  out.k = k;
  out.source_sequence_length = sequence_length(enumerate(g));
  out.guaranteed_length = 2 * static_cast<std::int64_t>(k) *
                          static_cast<std::int64_t>(out.source_sequence_length);

  std::vector<LinearWeight> source;
  for (const auto& e : g.edges()) source.push_back(e.weight);
  std::optional<Placement> placement;
  Rational eps(1, 4);
  for (;; eps /= 2, ++out.eps_halvings) {
    if (out.eps_halvings > kMaxHalvings) throw std::logic_error("packing search did not terminate");
    placement = place_bundles(source, k, eps);
    if (placement) break;
  }
  out.eps = eps;

  // Spokes stay below every bundle line across all windows.
  std::vector<LinearWeight> all_bundles;
  for (const auto& b : placement->bundles) all_bundles.insert(all_bundles.end(), b.begin(), b.end());
  Rational floor_value = min_at(all_bundles, placement->windows.front().lo);
  for (const auto& w : placement->windows) {
    floor_value = min(floor_value, min_at(all_bundles, w.lo));
    floor_value = min(floor_value, min_at(all_bundles, w.hi));
  }
  const Rational spoke_base = Rational(mpq_class(floor_value.floor())) - 1;

  // Vertices: G's, then a_l, b_l, c_l at n + 3l, n + 3l + 1, n + 3l + 2.
  ParametricGraph h(n + 3 * m);
  auto a = [&](int l) { return n + 3 * l; };
  auto b = [&](int l) { return n + 3 * l + 1; };
  auto c = [&](int l) { return n + 3 * l + 2; };
  int spoke = 0;
  for (int l = 0; l < m; ++l) {
    const Edge& e = g.edge(l);
    EdgeMeta meta;
    meta.subgraph = 0;
    meta.source = l;
    meta.role = PackRole::kUA;
    h.add_edge(e.u, a(l), {0, spoke_base - spoke++}, meta);
    meta.role = PackRole::kCV;
    h.add_edge(c(l), e.v, {0, spoke_base - spoke++}, meta);
  }
  for (int j = 1; j <= k; ++j) {
    const auto& bundle = placement->bundles[static_cast<std::size_t>(j - 1)];
    for (int i = 0; i < m; ++i) {
      const int l = (i + j - 1) % m;
      EdgeMeta meta;
      meta.subgraph = j;
      meta.source = l;
      meta.role = j == 1 ? PackRole::kAB : PackRole::kBACross;
      h.add_edge(b(i), a(l), bundle[static_cast<std::size_t>(l)], meta);
      meta.role = j == 1 ? PackRole::kBC : PackRole::kBCCross;
      h.add_edge(b(i), c(l), bundle[static_cast<std::size_t>(m + l)], meta);
    }
  }
  out.graph = std::move(h);
  return out;
}

bool is_subdivision(const ParametricGraph& packed, const ParametricGraph& source, int j) {
  const int n = source.vertex_count();
  const int m = source.edge_count();
  if (!packed.has_meta() || packed.vertex_count() != n + 3 * m) return false;

  // Per source edge: the four path edges, keyed by role within the path.
  std::vector<std::map<std::string, const Edge*>> paths(static_cast<std::size_t>(m));
  std::vector<int> degree(static_cast<std::size_t>(packed.vertex_count()), 0);
  int used = 0;
  for (const auto& e : packed.edges()) {
    const EdgeMeta& md = packed.meta(e.id);
    if (!md.subgraph || !md.source || !md.role) return false;
    if (*md.subgraph != 0 && *md.subgraph != j) continue;
    if (*md.source < 0 || *md.source >= m) return false;
    std::string slot;
    switch (*md.role) {
      case PackRole::kUA: slot = "ua"; break;
      case PackRole::kCV: slot = "cv"; break;
      case PackRole::kAB: case PackRole::kBACross: slot = "ab"; break;
      case PackRole::kBC: case PackRole::kBCCross: slot = "bc"; break;
    }
    auto& path = paths[static_cast<std::size_t>(*md.source)];
    if (path.count(slot)) return false;
    path[slot] = &e;
    ++degree[static_cast<std::size_t>(e.u)];
    ++degree[static_cast<std::size_t>(e.v)];
    ++used;
  }
  if (used != 4 * m) return false;

  std::set<int> interior;
  for (int l = 0; l < m; ++l) {
    const auto& path = paths[static_cast<std::size_t>(l)];
    if (path.size() != 4) return false;
    const Edge& se = source.edge(l);
    const Edge* ua = path.at("ua");
    const Edge* ab = path.at("ab");
    const Edge* bc = path.at("bc");
    const Edge* cv = path.at("cv");
    if (ua->u != se.u || cv->v != se.v) return false;
    const int av = ua->v;
    const int cvx = cv->u;
    const int bv = ab->u;
    if (ab->v != av || bc->u != bv || bc->v != cvx) return false;
    for (int x : {av, bv, cvx}) {
      if (x < n || degree[static_cast<std::size_t>(x)] != 2 || !interior.insert(x).second) return false;
    }
  }
  return static_cast<int>(interior.size()) == 3 * m;
}

TheoremInstance theorem_instance(int n, int m) {
  const long max_m = static_cast<long>(n) * (n - 1) / 2;
  if (n <= 0 || m < 2L * n - 3 || m > max_m) {
    throw Error(ErrorCode::kBadRange, "need n > 0 and 2n-3 <= m <= n(n-1)/2, got n = " +
                                          std::to_string(n) + ", m = " + std::to_string(m));
  }
  TheoremInstance out;

  std::optional<int> level;
  for (int i = 0;; ++i) {
    const std::int64_t big_m = two_tree_edge_count(i);
    if (two_tree_vertex_count(i) + 3 * big_m > n || 4 * big_m > m) break;
    level = i;
  }

  ParametricGraph g;
  if (!level) {
    g = ParametricGraph(n);
    for (int v = 1; v < n; ++v) g.add_edge(v - 1, v, {0, v});
  } else {
    const int big_n = static_cast<int>(two_tree_vertex_count(*level));
    const int big_m = static_cast<int>(two_tree_edge_count(*level));
    const int leaves = n - big_n - 3 * big_m;
    // Largest k that leaves room for the leaf bridges.
    int k = std::min(big_m, (m - leaves) / (2 * big_m) - 1);
    PackResult packed = pack(recursive_weights(*level), k);
    g = std::move(packed.graph);
    out.level = level;
    out.k = k;
    out.guaranteed_length = packed.guaranteed_length;
    if (big_m == big_n - 1) {
      // Acyclic source: the packed graph is itself a tree, so only one
      // spanning tree exists and flat weights keep padding out of it.
      for (int id = 0; id < g.edge_count(); ++id) g.set_weight(id, {0, id});
      out.guaranteed_length = 1;
    }

    Rational low = 0;
    for (const auto& e : g.edges()) low = min(low, min(evaluate(e.weight, 0), e.weight.intercept));
    for (int t = 0; t < leaves; ++t) {
      const int leaf = g.add_vertex();
      EdgeMeta meta;
      meta.bridge = true;
      g.add_edge(0, leaf, {0, low - 1 - t}, meta);
    }
    out.leaves = leaves;
  }

  // Padding edges: constants above every line at both ends of the active
  // range. With a rising bundle and a falling bundle each spanning the graph,
  // every tree path is bounded above by its value there.
  const auto cuts = breakpoint_candidates(g);
  const Rational lo = cuts.empty() ? Rational(0) : cuts.front();
  const Rational hi = cuts.empty() ? Rational(0) : cuts.back();
  Rational top = 0;
  for (const auto& e : g.edges()) {
    top = max(top, max(evaluate(e.weight, lo), evaluate(e.weight, hi)));
  }
  const Rational pad_base = Rational(mpq_class(top.floor())) + 1;

  std::set<std::pair<int, int>> adjacent;
  for (const auto& e : g.edges()) adjacent.insert(std::minmax(e.u, e.v));
  int padding = 0;
  const int needed = m - g.edge_count();
  for (int x = 0; x < n && padding < needed; ++x) {
    for (int y = x + 1; y < n && padding < needed; ++y) {
      if (adjacent.count({x, y})) continue;
      EdgeMeta meta;
      meta.padding = true;
      g.add_edge(x, y, {0, pad_base + padding}, meta);
      ++padding;
    }
  }
  out.padding_edges = padding;
  out.graph = std::move(g);
  return out;
}

}  // namespace pmst
