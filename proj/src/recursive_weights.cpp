#include <algorithm>
#include <stdexcept>

#include "pmst/construct.hpp"
#include "pmst/error.hpp"

namespace pmst {

namespace {

constexpr int kMaxHalvings = 256;

// Largest power of two p with p * magnitude <= eps.
Rational power_of_two_below(const Rational& magnitude, const Rational& eps) {
  if (magnitude.is_zero()) return 1;
  const Rational target = eps / magnitude;
  long exp = 0;
  Rational p = 1;
  while (p > target) {
    p /= 2;
    --exp;
  }
  while (p * 2 <= target) {
    p *= 2;
    ++exp;
  }
  return pow2(exp);
}

// Position of a colour pair in the left-to-right crossing order.
int crossing_block(Color a, Color b) {
  if (a > b) std::swap(a, b);
  // Color order is red < green < blue.
  if (a == Color::kGreen && b == Color::kBlue) return 0;
  if (a == Color::kBlue && b == Color::kBlue) return 1;
  if (a == Color::kRed && b == Color::kBlue) return 2;
  if (a == Color::kRed && b == Color::kRed) return 3;
  if (a == Color::kRed && b == Color::kGreen) return 4;
  return 5;  // green-green
}

struct PairLambda {
  int e;
  int f;
  Rational lambda;
};

std::vector<PairLambda> all_crossings(const ParametricGraph& g, bool* identical = nullptr) {
  std::vector<PairLambda> out;
  const auto& edges = g.edges();
  for (int i = 0; i < g.edge_count(); ++i) {
    for (int j = i + 1; j < g.edge_count(); ++j) {
      Crossing c = crossing_lambda(edges[static_cast<std::size_t>(i)].weight,
                                   edges[static_cast<std::size_t>(j)].weight);
      if (c.kind == CrossingKind::kEverywhere && identical) *identical = true;
      if (c.at()) out.push_back({i, j, std::move(c.lambda)});
    }
  }
  return out;
}

// Each line's crossings keep their relative order, ignoring crossings that
// shared a lambda before.
bool per_line_order_preserved(const ParametricGraph& before, const ParametricGraph& after) {
  const int m = before.edge_count();
  for (int e = 0; e < m; ++e) {
    std::vector<std::pair<Rational, Rational>> seq;  // (old, new)
    for (int f = 0; f < m; ++f) {
      if (f == e) continue;
      Crossing old_c = crossing_lambda(before.edge(e).weight, before.edge(f).weight);
      if (!old_c.at()) continue;
      Crossing new_c = crossing_lambda(after.edge(e).weight, after.edge(f).weight);
      if (!new_c.at()) return false;
      seq.emplace_back(std::move(old_c.lambda), std::move(new_c.lambda));
    }
    std::sort(seq.begin(), seq.end());
    std::size_t group = 0;
    std::optional<Rational> prev_group_max;
    while (group < seq.size()) {
      std::size_t end = group;
      Rational lo = seq[group].second;
      Rational hi = seq[group].second;
      while (end < seq.size() && seq[end].first == seq[group].first) {
        lo = min(lo, seq[end].second);
        hi = max(hi, seq[end].second);
        ++end;
      }
      if (prev_group_max && !(*prev_group_max < lo)) return false;
      prev_group_max = hi;
      group = end;
    }
  }
  return true;
}

}  // namespace

Normalization normalize_lines(const std::vector<LinearWeight>& lines, const Rational& eps) {
  if (!(eps > 0)) throw std::invalid_argument("normalize needs eps > 0");
  Normalization out;
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const Crossing c = crossing_lambda(lines[i], lines[j]);
      if (!c.at()) continue;
      if (!lo || c.lambda < *lo) lo = c.lambda;
      if (!hi || *hi < c.lambda) hi = c.lambda;
    }
  }
  out.had_crossings = lo.has_value();
  if (lo) {
    if (*lo < *hi) {
      out.lambda_scale = *hi - *lo;
      out.lambda_shift = *lo;
    } else {
      out.lambda_shift = *lo - Rational(1, 2);
    }
  }
  out.lines.reserve(lines.size());
  Rational magnitude = 0;
  for (const auto& w : lines) {
    LinearWeight moved = substitute(w, out.lambda_scale, out.lambda_shift);
    magnitude = max(magnitude, evaluate(moved, -1).abs());
    magnitude = max(magnitude, evaluate(moved, 2).abs());
    out.lines.push_back(std::move(moved));
  }
  out.weight_factor = power_of_two_below(magnitude, eps);
  for (auto& w : out.lines) w = out.weight_factor * w;
  return out;
}

NormalizedGraph normalize(const ParametricGraph& g, const Rational& eps) {
  std::vector<LinearWeight> lines;
  for (const auto& e : g.edges()) lines.push_back(e.weight);
  Normalization n = normalize_lines(lines, eps);
  NormalizedGraph out{g, n.had_crossings};
  for (int id = 0; id < g.edge_count(); ++id) {
    out.graph.set_weight(id, n.lines[static_cast<std::size_t>(id)]);
  }
  return out;
}

ParametricGraph recursion_candidate(const ParametricGraph& previous, const Rational& eps) {
  const ParametricGraph flat = normalize(previous, eps).graph;
  const int level = previous.level().value_or(0) + 1;
  ParametricGraph g = complete_2tree(level);
  if (g.edge_count() != 3 * flat.edge_count()) {
    throw std::invalid_argument("previous graph is not the weighted T_{i-1}");
  }
  for (int e = 0; e < flat.edge_count(); ++e) {
    const LinearWeight& f = flat.edge(e).weight;
    // green f(x - 9/2) + 3, red f(15/4 - x) + x - 1, blue f(x - 5/4) + 4 - x
    g.set_weight(3 * e, substitute(f, 1, Rational(-9, 2)) + LinearWeight{0, 3});
    g.set_weight(3 * e + 1, substitute(f, -1, Rational(15, 4)) + LinearWeight{1, -1});
    g.set_weight(3 * e + 2, substitute(f, 1, Rational(-5, 4)) + LinearWeight{-1, 4});
  }
  return g;
}

bool verify_crossing_order(const ParametricGraph& g) {
  bool identical = false;
  const auto crossings = all_crossings(g, &identical);
  if (identical) return false;
  if (crossings.empty()) return true;
  if (!g.has_meta()) return false;

  std::array<std::optional<std::pair<Rational, Rational>>, 6> range;
  for (const auto& c : crossings) {
    const auto& ca = g.meta(c.e).color;
    const auto& cb = g.meta(c.f).color;
    if (!ca || !cb) return false;
    auto& r = range[static_cast<std::size_t>(crossing_block(*ca, *cb))];
    if (!r) {
      r.emplace(c.lambda, c.lambda);
    } else {
      r->first = min(r->first, c.lambda);
      r->second = max(r->second, c.lambda);
    }
  }
  std::optional<Rational> prev_max;
  for (const auto& r : range) {
    if (!r) continue;
    if (prev_max && !(*prev_max < r->first)) return false;
    prev_max = r->second;
  }
  return true;
}

bool has_simple_crossings(const ParametricGraph& g) {
  bool identical = false;
  auto crossings = all_crossings(g, &identical);
  if (identical) return false;
  std::sort(crossings.begin(), crossings.end(),
            [](const PairLambda& a, const PairLambda& b) { return a.lambda < b.lambda; });
  for (std::size_t i = 1; i < crossings.size(); ++i) {
    if (crossings[i].lambda == crossings[i - 1].lambda) return false;
  }
  return true;
}

PerturbResult perturb_simple(const ParametricGraph& g) {
  const int m = g.edge_count();
  const auto crossings = all_crossings(g);

  std::vector<Rational> lambdas;
  lambdas.reserve(crossings.size());
  for (const auto& c : crossings) lambdas.push_back(c.lambda);
  std::sort(lambdas.begin(), lambdas.end());
  lambdas.erase(std::unique(lambdas.begin(), lambdas.end()), lambdas.end());
  Rational gap = 1;
  for (std::size_t i = 1; i < lambdas.size(); ++i) {
    const Rational d = lambdas[i] - lambdas[i - 1];
    if (i == 1 || d < gap) gap = d;
  }

  std::optional<Rational> slope_gap;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const Rational d = (g.edge(i).weight.slope - g.edge(j).weight.slope).abs();
      if (!d.is_zero() && (!slope_gap || d < *slope_gap)) slope_gap = d;
    }
  }

  // A crossing moves by at most delta * (m - 1) / slope_gap.
  Rational delta = gap * slope_gap.value_or(1) / Rational(1024 * std::max(1, m - 1));
  for (int halvings = 0; halvings < kMaxHalvings; ++halvings, delta /= 2) {
    ParametricGraph out = g;
    for (int id = 0; id < m; ++id) {
      LinearWeight w = g.edge(id).weight;
      w.intercept += delta * id;
      out.set_weight(id, w);
    }
    if (has_simple_crossings(out) && per_line_order_preserved(g, out)) {
      return {std::move(out), delta, halvings};
    }
  }
  throw Error(ErrorCode::kUnperturbable, "no perturbation separates all crossings");
}

RecursiveWeights recursive_weights_report(int level) {
  if (level < 0) throw std::invalid_argument("negative level");
  RecursiveWeights out{complete_2tree(0), {}};  // constant 0 on the single edge
  for (int i = 1; i <= level; ++i) {
    LevelReport report;
    report.level = i;
    Rational eps(1, 4);
    ParametricGraph candidate;
    for (;; eps /= 2, ++report.eps_halvings) {
      if (report.eps_halvings > kMaxHalvings) {
        throw std::logic_error("crossing order search did not terminate");
      }
      candidate = recursion_candidate(out.graph, eps);
      if (verify_crossing_order(candidate)) break;
    }
    report.eps = eps;
    report.order_before_perturb = true;
    PerturbResult perturbed = perturb_simple(candidate);
    report.delta = perturbed.delta;
    report.order_after_perturb = verify_crossing_order(perturbed.graph);
    out.graph = std::move(perturbed.graph);
    out.levels.push_back(std::move(report));
  }
  return out;
}

ParametricGraph recursive_weights(int level) { return recursive_weights_report(level).graph; }

}  // namespace pmst
