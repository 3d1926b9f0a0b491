#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "pmst/graph.hpp"
#include "pmst/sweep.hpp"

namespace pmst {

/// Malformed or unreadable graph document.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Graph document:
//   {"vertices": n, "level": i?,
//    "edges": [{"u": 0, "v": 1, "a": "p/q", "b": "p", "metadata": {...}?}, ...]}
// where the edge weight is a * lambda + b. Rationals are strings so values
// stay exact.
nlohmann::json graph_to_json(const ParametricGraph& g);
ParametricGraph graph_from_json(const nlohmann::json& doc);

ParametricGraph read_graph_file(const std::string& path);
void write_graph_file(const ParametricGraph& g, const std::string& path);

nlohmann::json sequence_to_json(const TreeSequence& ts);

}  // namespace pmst
