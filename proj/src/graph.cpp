#include "pmst/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pmst/error.hpp"

namespace pmst {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDisconnected: return "DISCONNECTED";
    case ErrorCode::kDegenerateCrossings: return "DEGENERATE_CROSSINGS";
    case ErrorCode::kCapExceeded: return "CAP_EXCEEDED";
    case ErrorCode::kUnperturbable: return "UNPERTURBABLE";
    case ErrorCode::kBadK: return "BAD_K";
    case ErrorCode::kBadRange: return "BAD_RANGE";
    case ErrorCode::kDivisionByZero: return "DIVISION_BY_ZERO";
  }
  return "UNKNOWN";
}

Rational evaluate(const LinearWeight& w, const Rational& lambda) {
  return w.slope * lambda + w.intercept;
}

LinearWeight operator+(const LinearWeight& a, const LinearWeight& b) {
  return {a.slope + b.slope, a.intercept + b.intercept};
}

LinearWeight operator*(const Rational& s, const LinearWeight& w) {
  return {s * w.slope, s * w.intercept};
}

LinearWeight substitute(const LinearWeight& w, const Rational& scale, const Rational& shift) {
  return {w.slope * scale, w.slope * shift + w.intercept};
}

Crossing crossing_lambda(const LinearWeight& w1, const LinearWeight& w2) {
  if (w1.slope == w2.slope) {
    return {w1.intercept == w2.intercept ? CrossingKind::kEverywhere : CrossingKind::kNone, {}};
  }
  return {CrossingKind::kAt, (w2.intercept - w1.intercept) / (w1.slope - w2.slope)};
}

const char* to_string(Color c) {
  switch (c) {
    case Color::kRed: return "red";
    case Color::kGreen: return "green";
    case Color::kBlue: return "blue";
  }
  return "?";
}

const char* to_string(PackRole r) {
  switch (r) {
    case PackRole::kUA: return "u-a";
    case PackRole::kAB: return "a-b";
    case PackRole::kBC: return "b-c";
    case PackRole::kCV: return "c-v";
    case PackRole::kBACross: return "b-a_cross";
    case PackRole::kBCCross: return "b-c_cross";
  }
  return "?";
}

std::optional<Color> parse_color(const std::string& s) {
  for (Color c : {Color::kRed, Color::kGreen, Color::kBlue}) {
    if (s == to_string(c)) return c;
  }
  return std::nullopt;
}

std::optional<PackRole> parse_pack_role(const std::string& s) {
  for (PackRole r : {PackRole::kUA, PackRole::kAB, PackRole::kBC, PackRole::kCV,
                     PackRole::kBACross, PackRole::kBCCross}) {
    if (s == to_string(r)) return r;
  }
  return std::nullopt;
}

ParametricGraph::ParametricGraph(int vertex_count) : vertex_count_(vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
}

void ParametricGraph::add_vertices(int count) {
  if (count < 0) throw std::invalid_argument("negative vertex count");
  vertex_count_ += count;
}

int ParametricGraph::add_edge(int u, int v, LinearWeight weight, std::optional<EdgeMeta> meta) {
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_) {
    throw std::invalid_argument("edge endpoint out of range");
  }
  const int id = edge_count();
  edges_.push_back({id, u, v, std::move(weight)});
  if (meta) {
    meta_.resize(static_cast<std::size_t>(id));
    meta_.push_back(std::move(*meta));
  } else if (!meta_.empty()) {
    meta_.emplace_back();
  }
  return id;
}

void ParametricGraph::set_weight(int id, LinearWeight weight) {
  edges_.at(static_cast<std::size_t>(id)).weight = std::move(weight);
}

void ParametricGraph::set_meta(int id, EdgeMeta meta) {
  if (id < 0 || id >= edge_count()) throw std::out_of_range("edge id");
  meta_.resize(edges_.size());
  meta_[static_cast<std::size_t>(id)] = std::move(meta);
}

bool ParametricGraph::connected() const {
  if (vertex_count_ <= 1) return true;
  UnionFind uf(vertex_count_);
  for (const auto& e : edges_) uf.unite(e.u, e.v);
  return uf.components() == 1;
}

bool SpanningTree::contains(int id) const {
  return std::binary_search(edge_ids.begin(), edge_ids.end(), id);
}

UnionFind::UnionFind(int n)
    : parent_(static_cast<std::size_t>(n)), rank_(static_cast<std::size_t>(n), 0), components_(n) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int UnionFind::find(int x) {
  auto idx = static_cast<std::size_t>(x);
  while (parent_[idx] != static_cast<int>(idx)) {
    parent_[idx] = parent_[static_cast<std::size_t>(parent_[idx])];
    idx = static_cast<std::size_t>(parent_[idx]);
  }
  return static_cast<int>(idx);
}

bool UnionFind::unite(int x, int y) {
  int rx = find(x);
  int ry = find(y);
  if (rx == ry) return false;
  auto& rank_x = rank_[static_cast<std::size_t>(rx)];
  auto& rank_y = rank_[static_cast<std::size_t>(ry)];
  if (rank_x < rank_y) std::swap(rx, ry);
  parent_[static_cast<std::size_t>(ry)] = rx;
  if (rank_x == rank_y) ++rank_[static_cast<std::size_t>(rx)];
  --components_;
  return true;
}

SpanningTree mst_for_values(const ParametricGraph& g, const std::vector<Rational>& values) {
  std::vector<int> order(static_cast<std::size_t>(g.edge_count()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto c = values[static_cast<std::size_t>(a)] <=> values[static_cast<std::size_t>(b)];
    return c != 0 ? c < 0 : a < b;
  });

  UnionFind uf(g.vertex_count());
  SpanningTree tree;
  const auto want = static_cast<std::size_t>(std::max(0, g.vertex_count() - 1));
  tree.edge_ids.reserve(want);
  for (int id : order) {
    if (tree.edge_ids.size() == want) break;
    const Edge& e = g.edge(id);
    if (uf.unite(e.u, e.v)) tree.edge_ids.push_back(id);
  }
  if (tree.edge_ids.size() != want) {
    throw Error(ErrorCode::kDisconnected, "graph has no spanning tree");
  }
  std::sort(tree.edge_ids.begin(), tree.edge_ids.end());
  return tree;
}

SpanningTree mst_at(const ParametricGraph& g, const Rational& lambda) {
  std::vector<Rational> values;
  values.reserve(g.edges().size());
  for (const auto& e : g.edges()) values.push_back(evaluate(e.weight, lambda));
  return mst_for_values(g, values);
}

}  // namespace pmst
