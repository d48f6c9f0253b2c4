#include "angleopt/layout.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "angleopt/metrics.hpp"

namespace angleopt {
namespace {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Deterministic unit vector for separating exactly coincident endpoints.
Point hashed_direction(int u, int v, int iteration) {
    const std::uint64_t h = mix64((static_cast<std::uint64_t>(std::min(u, v)) << 40) ^
                                  (static_cast<std::uint64_t>(std::max(u, v)) << 16) ^
                                  static_cast<std::uint64_t>(iteration));
    const double angle = kTwoPi * (static_cast<double>(h >> 11) / 9007199254740992.0);
    return {std::cos(angle), std::sin(angle)};
}

void validate(const LayoutConfig& c) {
    if (c.iterations < 0) throw std::invalid_argument("layout: iterations must be >= 0");
    if (!(c.angle_radius_start > 0.0)) {
        throw std::invalid_argument("layout: angle_radius_start must be positive");
    }
    if (!(c.angle_radius_decay > 0.0) || c.angle_radius_decay > 1.0) {
        throw std::invalid_argument("layout: angle_radius_decay must lie in (0, 1]");
    }
    if (!(c.default_edge_length > 0.0)) {
        throw std::invalid_argument("layout: default_edge_length must be positive");
    }
    if (c.angle_weight < 0.0 || c.spring_weight < 0.0) {
        throw std::invalid_argument("layout: weights must be >= 0");
    }
}

}  // namespace

Graph subdivide_edges(const Graph& g, int segments, double default_len) {
    if (segments <= 0) return g;
    if (!(default_len > 0.0)) {
        throw std::invalid_argument("subdivide_edges: default length must be positive");
    }
    Graph out;
    for (int v = 0; v < g.vertex_count(); ++v) out.add_vertex(g.id(v));
    for (const Graph::Edge& e : g.edges()) {
        const double seg_len = e.length.value_or(default_len) / (segments + 1);
        std::string prev = g.id(e.u);
        for (int k = 1; k <= segments; ++k) {
            // Base name from the endpoints; suffix '+' until free.
            std::string id = g.id(e.u) + "~" + g.id(e.v) + "~" + std::to_string(k);
            while (out.find(id) >= 0) id += "+";
            out.add_edge(prev, id, seg_len);
            prev = id;
        }
        out.add_edge(prev, g.id(e.v), seg_len);
    }
    return out;
}

Drawing initial_placement(const Graph& g, const LayoutConfig& config) {
    validate(config);
    const int n = g.vertex_count();
    const double side =
        std::sqrt(static_cast<double>(std::max(n, 1))) * config.default_edge_length;
    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> coord(0.0, side);

    Drawing d;
    d.ids = g.ids();
    d.positions.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        const double x = coord(rng);
        const double y = coord(rng);
        d.positions[static_cast<std::size_t>(v)] = {x, y};
    }
    // Separate coincident pairs so angles are defined from the start.
    const double min_sep = 1e-9 * config.default_edge_length;
    for (int v = 1; v < n; ++v) {
        bool clash = true;
        while (clash) {
            clash = false;
            for (int u = 0; u < v; ++u) {
                if (distance(d.positions[static_cast<std::size_t>(u)],
                             d.positions[static_cast<std::size_t>(v)]) < min_sep) {
                    d.positions[static_cast<std::size_t>(v)] = {coord(rng), coord(rng)};
                    clash = true;
                    break;
                }
            }
        }
    }
    return d;
}

double layout_step(const Graph& g, std::vector<Point>& pos, int iteration,
                   const LayoutConfig& config) {
    const int n = g.vertex_count();
    if (pos.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("layout_step: position count mismatch");
    }
    const double r_t =
        config.angle_radius_start * std::pow(config.angle_radius_decay, iteration);
    // The spring weight cools on the same schedule as the angle radius so the
    // two displacement scales keep a fixed ratio; otherwise the springs
    // dominate the late iterations and lock in whatever fold they find.
    const double spring_w =
        config.spring_weight * std::pow(config.angle_radius_decay, iteration);
    const std::vector<Point> snap = pos;  // simultaneous update

    double max_disp = 0.0;
    for (int v = 0; v < n; ++v) {
        const std::vector<int> nbrs = g.neighbors(v);
        if (nbrs.empty()) continue;
        const Point at = snap[static_cast<std::size_t>(v)];

        // Spring displacement along each incident edge.
        Point spring{0.0, 0.0};
        for (const Graph::Edge& e : g.edges()) {
            int other = -1;
            if (e.u == v) other = e.v;
            else if (e.v == v) other = e.u;
            else continue;
            const double want = e.length.value_or(config.default_edge_length);
            const Point to = snap[static_cast<std::size_t>(other)] - at;
            double len = norm(to);
            Point dir;
            if (len <= 1e-6 * want) {
                dir = hashed_direction(v, other, iteration);
                len = 1e-6 * want;
            } else {
                dir = to / len;
            }
            const double ratio = len / want;
            const double f = config.spring_model == SpringModel::logarithmic
                                 ? std::log(ratio)
                                 : ratio - 1.0;
            spring = spring + f * dir;  // positive f pulls together
        }
        spring = spring_w * spring;
        const double spring_len = norm(spring);
        const double cap = 2.0 * r_t;
        if (spring_len > cap) {
            spring = (cap / spring_len) * spring;
        }

        // Angular displacement toward the best placement within radius r_t.
        Point angular{0.0, 0.0};
        if (nbrs.size() >= 2) {
            DisplacementQuery q;
            q.p = at;
            q.neighbors.reserve(nbrs.size());
            for (int u : nbrs) q.neighbors.push_back(snap[static_cast<std::size_t>(u)]);
            q.r = r_t;
            const DisplacementResult res = solve(q, config.grid);
            if (!res.degenerate) {
                angular = config.angle_weight * (res.p_star - at);
            }
        }

        const Point next = at + angular + spring;
        max_disp = std::max(max_disp, distance(next, at));
        pos[static_cast<std::size_t>(v)] = next;
    }
    return max_disp;
}

LayoutResult layout(const Graph& g, const LayoutConfig& config) {
    validate(config);
    LayoutResult result;
    result.graph = subdivide_edges(g, config.subdivide_edges, config.default_edge_length);
    result.drawing = initial_placement(result.graph, config);

    std::vector<Point>& pos = result.drawing.positions;
    const double stop_below = 1e-4 * config.default_edge_length;
    int quiet = 0;
    result.trace.reserve(static_cast<std::size_t>(config.iterations));
    for (int t = 0; t < config.iterations; ++t) {
        const double moved = layout_step(result.graph, pos, t, config);
        result.trace.push_back({t, moved, drawing_angular_resolution(result.graph, pos)});
        quiet = moved < stop_below ? quiet + 1 : 0;
        if (quiet >= 10) {
            result.converged = true;
            break;
        }
    }
    return result;
}

}  // namespace angleopt
