#pragma once

#include <string>

#include "pmst/graph.hpp"
#include "pmst/sweep.hpp"

namespace pmst {

struct PlotOptions {
  int width = 1000;
  int height = 600;
};

/// SVG 1.1 drawing of the weight lines in the (lambda, weight) plane,
/// clipped to one unit beyond the outermost crossings, with the tree
/// sequence breakpoints marked.
std::string arrangement_svg(const ParametricGraph& g, const TreeSequence& ts,
                            const PlotOptions& opts = {});

}  // namespace pmst
