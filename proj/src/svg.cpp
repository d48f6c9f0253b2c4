#include "angleopt/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace angleopt {
namespace {

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    // Avoid the two representations of zero.
    if (std::string(buf) == "-0.000") return "0.000";
    return buf;
}

std::string escape_xml(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_svg(const Graph& g, const Drawing& d, const SvgStyle& style) {
    if (!(style.width > 0.0) || style.margin_ratio < 0.0 || style.margin_ratio >= 0.5) {
        throw std::invalid_argument("render_svg: bad style");
    }
    std::vector<Point> pos(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        const int at = d.find(g.id(v));
        if (at < 0) {
            throw std::invalid_argument("render_svg: drawing missing vertex '" + g.id(v) + "'");
        }
        pos[static_cast<std::size_t>(v)] = d.positions[static_cast<std::size_t>(at)];
    }

    double min_x = 0.0, min_y = 0.0, max_x = 0.0, max_y = 0.0;
    if (!pos.empty()) {
        min_x = max_x = pos[0].x;
        min_y = max_y = pos[0].y;
        for (const Point& p : pos) {
            min_x = std::min(min_x, p.x);
            max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y);
            max_y = std::max(max_y, p.y);
        }
    }
    const double span_x = max_x - min_x;
    const double span_y = max_y - min_y;
    const double margin = style.margin_ratio * style.width;
    const double inner = style.width - 2.0 * margin;
    const double span = std::max(span_x, span_y);
    const double scale = span > 0.0 ? inner / span : 1.0;
    const double height = 2.0 * margin + span_y * scale;

    // Model y grows upward, SVG y downward.
    auto sx = [&](double x) { return margin + (x - min_x) * scale; };
    auto sy = [&](double y) { return height - margin - (y - min_y) * scale; };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << num(style.width) << "\" height=\"" << num(height) << "\" viewBox=\"0 0 "
        << num(style.width) << " " << num(height) << "\">\n";
    out << "  <g stroke=\"" << style.edge_color << "\" stroke-width=\""
        << num(style.stroke_width) << "\">\n";
    for (const Graph::Edge& e : g.edges()) {
        const Point a = pos[static_cast<std::size_t>(e.u)];
        const Point b = pos[static_cast<std::size_t>(e.v)];
        out << "    <line x1=\"" << num(sx(a.x)) << "\" y1=\"" << num(sy(a.y)) << "\" x2=\""
            << num(sx(b.x)) << "\" y2=\"" << num(sy(b.y)) << "\"/>\n";
    }
    out << "  </g>\n";
    out << "  <g fill=\"" << style.vertex_color << "\">\n";
    for (const Point& p : pos) {
        out << "    <circle cx=\"" << num(sx(p.x)) << "\" cy=\"" << num(sy(p.y)) << "\" r=\""
            << num(style.vertex_radius) << "\"/>\n";
    }
    out << "  </g>\n";
    if (style.labels) {
        out << "  <g font-family=\"sans-serif\" font-size=\"" << num(style.font_size)
            << "\">\n";
        for (int v = 0; v < g.vertex_count(); ++v) {
            const Point p = pos[static_cast<std::size_t>(v)];
            out << "    <text x=\"" << num(sx(p.x) + style.vertex_radius + 2.0) << "\" y=\""
                << num(sy(p.y) - style.vertex_radius - 2.0) << "\">" << escape_xml(g.id(v))
                << "</text>\n";
        }
        out << "  </g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace angleopt
