#include "pmst/svg_plot.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace pmst {

namespace {

const char* stroke_for(const ParametricGraph& g, int id) {
  if (!g.has_meta() || !g.meta(id).color) return "#444444";
  switch (*g.meta(id).color) {
    case Color::kRed: return "#d62728";
    case Color::kGreen: return "#2ca02c";
    case Color::kBlue: return "#1f77b4";
  }
  return "#444444";
}

}  // namespace

std::string arrangement_svg(const ParametricGraph& g, const TreeSequence& ts,
                            const PlotOptions& opts) {
  const auto cuts = breakpoint_candidates(g);
  const Rational x_lo = cuts.empty() ? Rational(-1) : cuts.front() - 1;
  const Rational x_hi = cuts.empty() ? Rational(1) : cuts.back() + 1;

  double w_lo = 0;
  double w_hi = 0;
  bool first = true;
  for (const auto& e : g.edges()) {
    for (const Rational& x : {x_lo, x_hi}) {
      const double w = evaluate(e.weight, x).to_double();
      w_lo = first ? w : std::min(w_lo, w);
      w_hi = first ? w : std::max(w_hi, w);
      first = false;
    }
  }
  if (w_hi - w_lo < 1e-12) {
    w_lo -= 1;
    w_hi += 1;
  }

  const double xl = x_lo.to_double();
  const double xh = x_hi.to_double();
  auto px = [&](double x) { return (x - xl) / (xh - xl) * opts.width; };
  auto py = [&](double w) { return opts.height - (w - w_lo) / (w_hi - w_lo) * opts.height; };

  std::ostringstream os;
  os << std::setprecision(6) << std::fixed;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opts.width
     << "\" height=\"" << opts.height << "\" viewBox=\"0 0 " << opts.width << " "
     << opts.height << "\">\n"
     << "<defs><clipPath id=\"plot\"><rect x=\"0\" y=\"0\" width=\"" << opts.width
     << "\" height=\"" << opts.height << "\"/></clipPath></defs>\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << opts.width << "\" height=\"" << opts.height
     << "\" fill=\"white\"/>\n"
     << "<g clip-path=\"url(#plot)\" fill=\"none\" stroke-width=\"1\">\n";
  for (const auto& e : g.edges()) {
    os << "<polyline id=\"edge-" << e.id << "\" stroke=\"" << stroke_for(g, e.id)
       << "\" points=\"" << px(xl) << "," << py(evaluate(e.weight, x_lo).to_double()) << " "
       << px(xh) << "," << py(evaluate(e.weight, x_hi).to_double()) << "\"/>\n";
  }
  os << "</g>\n<g stroke=\"#e6b800\" stroke-dasharray=\"4,3\" stroke-width=\"1\">\n";
  for (const auto& b : ts.breakpoints()) {
    const double x = px(b.to_double());
    os << "<line x1=\"" << x << "\" y1=\"0\" x2=\"" << x << "\" y2=\"" << opts.height
       << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace pmst
