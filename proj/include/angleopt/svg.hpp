#pragma once

#include <string>

#include "angleopt/graph.hpp"

namespace angleopt {

struct SvgStyle {
    double width = 800.0;  // viewport width in px; height follows the aspect
    double margin_ratio = 0.05;
    double vertex_radius = 4.0;
    double stroke_width = 1.5;
    std::string edge_color = "#333333";
    std::string vertex_color = "#1f6feb";
    bool labels = false;
    double font_size = 11.0;
};

/// Renders the drawing as standalone SVG 1.1. The layout is fit into the
/// viewport with a uniform scale, y pointing up. Output bytes depend only on
/// the inputs: coordinates are written with fixed three-decimal precision.
/// Drawing vertices are matched to graph vertices by id; throws
/// std::invalid_argument if one is missing.
std::string render_svg(const Graph& g, const Drawing& d, const SvgStyle& style = {});

}  // namespace angleopt
