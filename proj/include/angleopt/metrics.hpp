#pragma once

#include <vector>

#include "angleopt/geometry.hpp"
#include "angleopt/graph.hpp"

namespace angleopt {

struct Metrics {
    /// Smallest angle between consecutive incident edges over all vertices of
    /// degree >= 2, in radians; 2*pi when no such vertex exists.
    double angular_resolution = 0.0;
    /// Root mean square of (|uv| - l_e) / l_e over edges, l_e the desired
    /// length (config default when unspecified); 0 for edgeless graphs.
    double edge_length_rmse = 0.0;
    int crossings = 0;
    /// Set when the drawing has coincident adjacent vertices or collinear
    /// overlapping edges; the other fields are then best-effort.
    bool degenerate = false;
    std::vector<double> per_vertex_min_angle;  // parallel to graph vertex order
};

/// How a pair of segments meets. Shared graph endpoints never count as
/// crossings; an endpoint in the interior of another edge does.
enum class SegmentRelation {
    disjoint,
    proper_crossing,      // interiors intersect in one point
    endpoint_touch,       // an endpoint lies in the other segment's interior
    endpoint_coincidence, // endpoints at identical coordinates
    collinear_overlap,    // intersection is a segment of positive length
};

/// Classifies closed segments ab and cd using exact sign tests, no epsilons.
SegmentRelation classify_segments(Point a, Point b, Point c, Point d);

/// Counts crossing edge pairs: proper crossings, endpoint-touches and
/// collinear overlaps each count once per pair; pairs sharing a graph vertex
/// are skipped. Sets *degenerate on overlap or coincident-endpoint pairs.
int count_crossings(const Graph& g, const std::vector<Point>& pos, bool* degenerate = nullptr);

/// Minimum over vertices of the smallest incident angle; positions indexed by
/// graph vertex order. Degree < 2 contributes 2*pi.
double drawing_angular_resolution(const Graph& g, const std::vector<Point>& pos);

/// Full metric set for a drawing. Drawing vertices are matched to graph
/// vertices by id; throws std::invalid_argument if any graph vertex is
/// missing from the drawing.
Metrics compute_metrics(const Graph& g, const Drawing& d, double default_edge_length = 1.0);

}  // namespace angleopt
