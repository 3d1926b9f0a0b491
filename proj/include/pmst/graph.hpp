#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pmst/rational.hpp"

namespace pmst {

/// Edge weight as a function of the parameter: w(lambda) = slope * lambda + intercept.
struct LinearWeight {
  Rational slope;
  Rational intercept;

  friend bool operator==(const LinearWeight&, const LinearWeight&) = default;
};

Rational evaluate(const LinearWeight& w, const Rational& lambda);

LinearWeight operator+(const LinearWeight& a, const LinearWeight& b);
LinearWeight operator*(const Rational& s, const LinearWeight& w);

/// Substitutes lambda <- scale * lambda + shift into w.
LinearWeight substitute(const LinearWeight& w, const Rational& scale, const Rational& shift);

enum class CrossingKind { kNone, kAt, kEverywhere };

/// Where two weight lines meet. `lambda` is meaningful only for kAt.
struct Crossing {
  CrossingKind kind = CrossingKind::kNone;
  Rational lambda;

  bool at() const { return kind == CrossingKind::kAt; }
};

Crossing crossing_lambda(const LinearWeight& w1, const LinearWeight& w2);

enum class Color { kRed, kGreen, kBlue };

/// Which of the six edge kinds of the packing construction an edge plays.
enum class PackRole { kUA, kAB, kBC, kCV, kBACross, kBCCross };

const char* to_string(Color c);
const char* to_string(PackRole r);
std::optional<Color> parse_color(const std::string& s);
std::optional<PackRole> parse_pack_role(const std::string& s);

/// Construction annotations. Every field is optional; generators fill the
/// ones they know about.
struct EdgeMeta {
  std::optional<Color> color;
  std::optional<int> parent;    // edge id in the previous 2-tree level
  std::optional<int> triangle;  // triangle id (= parent edge id)
  std::optional<int> apex;      // vertex added for the triangle
  std::optional<int> subgraph;  // H_j label, 0 for the subdivision spokes
  std::optional<int> source;    // edge of the packed graph this edge copies
  std::optional<PackRole> role;
  bool padding = false;         // filler edge of a theorem instance
  bool bridge = false;          // edge to an added leaf vertex

  friend bool operator==(const EdgeMeta&, const EdgeMeta&) = default;
};

struct Edge {
  int id = 0;
  int u = 0;
  int v = 0;
  LinearWeight weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected multigraph with linear edge weights. Edge ids equal their
/// position in `edges`; `meta` is either empty or parallel to `edges`.
class ParametricGraph {
 public:
  ParametricGraph() = default;
  explicit ParametricGraph(int vertex_count);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_.at(static_cast<std::size_t>(id)); }

  bool has_meta() const { return !meta_.empty(); }
  const std::vector<EdgeMeta>& meta() const { return meta_; }
  const EdgeMeta& meta(int id) const { return meta_.at(static_cast<std::size_t>(id)); }

  std::optional<int> level() const { return level_; }
  void set_level(std::optional<int> level) { level_ = level; }

  int add_vertex() { return vertex_count_++; }
  void add_vertices(int count);

  /// Appends an edge and returns its id. Throws std::invalid_argument on a
  /// self-loop or an out-of-range endpoint.
  int add_edge(int u, int v, LinearWeight weight, std::optional<EdgeMeta> meta = std::nullopt);

  void set_weight(int id, LinearWeight weight);
  void set_meta(int id, EdgeMeta meta);

  /// Same topology and metadata with every weight replaced by f(old weight).
  template <typename F>
  ParametricGraph map_weights(F&& f) const {
    ParametricGraph out = *this;
    for (auto& e : out.edges_) e.weight = f(e.weight);
    return out;
  }

  bool connected() const;

  friend bool operator==(const ParametricGraph&, const ParametricGraph&) = default;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<EdgeMeta> meta_;
  std::optional<int> level_;
};

/// Canonical spanning tree: sorted edge ids.
struct SpanningTree {
  std::vector<int> edge_ids;

  bool contains(int id) const;

  friend bool operator==(const SpanningTree&, const SpanningTree&) = default;
  friend auto operator<=>(const SpanningTree&, const SpanningTree&) = default;
};

class UnionFind {
 public:
  explicit UnionFind(int n);

  int find(int x);
  /// Returns false if x and y were already joined.
  bool unite(int x, int y);
  int components() const { return components_; }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
  int components_;
};

/// Minimum spanning tree at a fixed parameter value. Edges are taken in
/// (weight, id) order, so ties resolve to smaller ids. Throws
/// Error(kDisconnected).
SpanningTree mst_at(const ParametricGraph& g, const Rational& lambda);

/// Kruskal on explicit per-edge keys, ties by id.
SpanningTree mst_for_values(const ParametricGraph& g, const std::vector<Rational>& values);

}  // namespace pmst
