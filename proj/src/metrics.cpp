#include "angleopt/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace angleopt {
namespace {

int sign(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

/// q collinear with ab assumed; true if q lies within the closed bounding box.
bool on_segment(Point a, Point b, Point q) {
    return std::min(a.x, b.x) <= q.x && q.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= q.y && q.y <= std::max(a.y, b.y);
}

bool points_equal(Point a, Point b) { return a.x == b.x && a.y == b.y; }

}  // namespace

SegmentRelation classify_segments(Point a, Point b, Point c, Point d) {
    const int d1 = sign(cross(b - a, c - a));
    const int d2 = sign(cross(b - a, d - a));
    const int d3 = sign(cross(d - c, a - c));
    const int d4 = sign(cross(d - c, b - c));

    if (d1 != 0 && d2 != 0 && d3 != 0 && d4 != 0) {
        return (d1 != d2 && d3 != d4) ? SegmentRelation::proper_crossing
                                      : SegmentRelation::disjoint;
    }

    if (d1 == 0 && d2 == 0 && d3 == 0 && d4 == 0) {
        // All four points on one line; order them along the dominant axis.
        const bool horiz = std::abs(b.x - a.x) + std::abs(d.x - c.x) >=
                           std::abs(b.y - a.y) + std::abs(d.y - c.y);
        auto key = [horiz](Point p) { return horiz ? p.x : p.y; };
        const double lo1 = std::min(key(a), key(b)), hi1 = std::max(key(a), key(b));
        const double lo2 = std::min(key(c), key(d)), hi2 = std::max(key(c), key(d));
        const double lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
        if (lo > hi) return SegmentRelation::disjoint;
        if (lo < hi) return SegmentRelation::collinear_overlap;
        return SegmentRelation::endpoint_coincidence;
    }

    // Exactly one orientation vanished: some endpoint lies on the other line.
    const bool touches =
        (d1 == 0 && on_segment(a, b, c)) || (d2 == 0 && on_segment(a, b, d)) ||
        (d3 == 0 && on_segment(c, d, a)) || (d4 == 0 && on_segment(c, d, b));
    if (!touches) return SegmentRelation::disjoint;
    if (points_equal(a, c) || points_equal(a, d) || points_equal(b, c) || points_equal(b, d)) {
        return SegmentRelation::endpoint_coincidence;
    }
    return SegmentRelation::endpoint_touch;
}

int count_crossings(const Graph& g, const std::vector<Point>& pos, bool* degenerate) {
    if (pos.size() != static_cast<std::size_t>(g.vertex_count())) {
        throw std::invalid_argument("count_crossings: position count mismatch");
    }
    const auto& edges = g.edges();
    int crossings = 0;
    bool degen = false;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto& e = edges[i];
            const auto& f = edges[j];
            if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) continue;
            const SegmentRelation rel =
                classify_segments(pos[static_cast<std::size_t>(e.u)],
                                  pos[static_cast<std::size_t>(e.v)],
                                  pos[static_cast<std::size_t>(f.u)],
                                  pos[static_cast<std::size_t>(f.v)]);
            switch (rel) {
                case SegmentRelation::disjoint:
                    break;
                case SegmentRelation::proper_crossing:
                case SegmentRelation::endpoint_touch:
                    ++crossings;
                    break;
                case SegmentRelation::endpoint_coincidence:
                    // Distinct vertices drawn on the same spot.
                    degen = true;
                    break;
                case SegmentRelation::collinear_overlap:
                    ++crossings;
                    degen = true;
                    break;
            }
        }
    }
    if (degenerate) *degenerate = degen;
    return crossings;
}

double drawing_angular_resolution(const Graph& g, const std::vector<Point>& pos) {
    double best = kTwoPi;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const std::vector<int> nbrs = g.neighbors(v);
        if (nbrs.size() < 2) continue;
        std::vector<Point> npos;
        npos.reserve(nbrs.size());
        bool coincident = false;
        for (int u : nbrs) {
            const Point q = pos[static_cast<std::size_t>(u)];
            if (distance(q, pos[static_cast<std::size_t>(v)]) <= kCoincidentTol) {
                coincident = true;
                break;
            }
            npos.push_back(q);
        }
        const double angle =
            coincident ? 0.0 : min_incident_angle(pos[static_cast<std::size_t>(v)], npos);
        best = std::min(best, angle);
    }
    return best;
}

Metrics compute_metrics(const Graph& g, const Drawing& d, double default_edge_length) {
    if (!(default_edge_length > 0.0)) {
        throw std::invalid_argument("compute_metrics: default edge length must be positive");
    }
    std::vector<Point> pos(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        const int at = d.find(g.id(v));
        if (at < 0) {
            throw std::invalid_argument("compute_metrics: drawing missing vertex '" + g.id(v) +
                                        "'");
        }
        pos[static_cast<std::size_t>(v)] = d.positions[static_cast<std::size_t>(at)];
    }

    Metrics m;
    m.per_vertex_min_angle.assign(static_cast<std::size_t>(g.vertex_count()), kTwoPi);
    m.angular_resolution = kTwoPi;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const std::vector<int> nbrs = g.neighbors(v);
        if (nbrs.size() < 2) continue;
        std::vector<Point> npos;
        npos.reserve(nbrs.size());
        bool coincident = false;
        for (int u : nbrs) {
            const Point q = pos[static_cast<std::size_t>(u)];
            if (distance(q, pos[static_cast<std::size_t>(v)]) <= kCoincidentTol) {
                coincident = true;
                break;
            }
            npos.push_back(q);
        }
        double angle = 0.0;
        if (coincident) {
            m.degenerate = true;
        } else {
            angle = min_incident_angle(pos[static_cast<std::size_t>(v)], npos);
        }
        m.per_vertex_min_angle[static_cast<std::size_t>(v)] = angle;
        m.angular_resolution = std::min(m.angular_resolution, angle);
    }

    if (g.edge_count() > 0) {
        double sum = 0.0;
        for (const Graph::Edge& e : g.edges()) {
            const double want = e.length.value_or(default_edge_length);
            const double got = distance(pos[static_cast<std::size_t>(e.u)],
                                        pos[static_cast<std::size_t>(e.v)]);
            const double rel = (got - want) / want;
            sum += rel * rel;
        }
        m.edge_length_rmse = std::sqrt(sum / g.edge_count());
    }

    bool cross_degen = false;
    m.crossings = count_crossings(g, pos, &cross_degen);
    m.degenerate = m.degenerate || cross_degen;
    return m;
}

}  // namespace angleopt
