#include "pmst/graph_io.hpp"

#include <fstream>

namespace pmst {

using nlohmann::json;

namespace {

json meta_to_json(const EdgeMeta& m) {
  json j = json::object();
  if (m.color) j["color"] = to_string(*m.color);
  if (m.parent) j["parent"] = *m.parent;
  if (m.triangle) j["triangle"] = *m.triangle;
  if (m.apex) j["apex"] = *m.apex;
  if (m.subgraph) j["subgraph"] = *m.subgraph;
  if (m.source) j["source"] = *m.source;
  if (m.role) j["role"] = to_string(*m.role);
  if (m.padding) j["padding"] = true;
  if (m.bridge) j["bridge"] = true;
  return j;
}

std::optional<int> optional_int(const json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  if (!j.at(key).is_number_integer()) throw FormatError(std::string("'") + key + "' must be an integer");
  return j.at(key).get<int>();
}

EdgeMeta meta_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("edge metadata must be an object");
  EdgeMeta m;
  if (j.contains("color")) {
    m.color = parse_color(j.at("color").get<std::string>());
    if (!m.color) throw FormatError("unknown color " + j.at("color").dump());
  }
  if (j.contains("role")) {
    m.role = parse_pack_role(j.at("role").get<std::string>());
    if (!m.role) throw FormatError("unknown role " + j.at("role").dump());
  }
  m.parent = optional_int(j, "parent");
  m.triangle = optional_int(j, "triangle");
  m.apex = optional_int(j, "apex");
  m.subgraph = optional_int(j, "subgraph");
  m.source = optional_int(j, "source");
  m.padding = j.value("padding", false);
  m.bridge = j.value("bridge", false);
  return m;
}

Rational rational_field(const json& edge, const char* key) {
  if (!edge.contains(key)) throw FormatError(std::string("edge without '") + key + "'");
  const json& v = edge.at(key);
  try {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  throw FormatError(std::string("'") + key + "' must be a rational string");
}

}  // namespace

json graph_to_json(const ParametricGraph& g) {
  json doc;
  doc["vertices"] = g.vertex_count();
  if (g.level()) doc["level"] = *g.level();
  json edges = json::array();
  for (const auto& e : g.edges()) {
    json je{{"u", e.u}, {"v", e.v}, {"a", e.weight.slope.str()}, {"b", e.weight.intercept.str()}};
    if (g.has_meta()) je["metadata"] = meta_to_json(g.meta(e.id));
    edges.push_back(std::move(je));
  }
  doc["edges"] = std::move(edges);
  return doc;
}

ParametricGraph graph_from_json(const json& doc) {
  try {
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges")) {
      throw FormatError("graph document needs 'vertices' and 'edges'");
    }
    const json& jv = doc.at("vertices");
    if (!jv.is_number_integer() || jv.get<long>() < 0) {
      throw FormatError("'vertices' must be a nonnegative integer");
    }
    ParametricGraph g(jv.get<int>());
    g.set_level(optional_int(doc, "level"));
    const json& edges = doc.at("edges");
    if (!edges.is_array()) throw FormatError("'edges' must be an array");
    bool any_meta = false;
    for (const auto& je : edges) any_meta = any_meta || je.contains("metadata");
    for (const auto& je : edges) {
      const auto u = optional_int(je, "u");
      const auto v = optional_int(je, "v");
      if (!u || !v) throw FormatError("edge without endpoints");
      LinearWeight w{rational_field(je, "a"), rational_field(je, "b")};
      std::optional<EdgeMeta> meta;
      if (any_meta) meta = je.contains("metadata") ? meta_from_json(je.at("metadata")) : EdgeMeta{};
      try {
        g.add_edge(*u, *v, std::move(w), std::move(meta));
      } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
      }
    }
    return g;
  } catch (const json::exception& e) {
    throw FormatError(e.what());
  }
}

ParametricGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw FormatError("'" + path + "': " + e.what());
  }
  return graph_from_json(doc);
}

void write_graph_file(const ParametricGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << graph_to_json(g).dump(1) << "\n";
  if (!out) throw FormatError("write to '" + path + "' failed");
}

json sequence_to_json(const TreeSequence& ts) {
  json intervals = json::array();
  for (const auto& iv : ts.intervals) {
    intervals.push_back({{"lo", iv.lo ? json(iv.lo->str()) : json("-inf")},
                         {"hi", iv.hi ? json(iv.hi->str()) : json("+inf")},
                         {"tree", iv.tree.edge_ids}});
  }
  json breakpoints = json::array();
  for (const auto& b : ts.breakpoints()) breakpoints.push_back(b.str());
  return {{"sequence_length", sequence_length(ts)},
          {"distinct_trees", distinct_tree_count(ts)},
          {"breakpoints", std::move(breakpoints)},
          {"intervals", std::move(intervals)}};
}

}  // namespace pmst
