#pragma once

#include <cstdint>
#include <vector>

#include "angleopt/displacement.hpp"
#include "angleopt/graph.hpp"

namespace angleopt {

enum class SpringModel {
    logarithmic,  // force ~ log(d / l)
    linear,       // force ~ d / l - 1
};

struct LayoutConfig {
    int iterations = 2000;
    std::uint64_t seed = 1;
    /// Displacement radius schedule r_t = start * decay^t, in drawing units.
    double angle_radius_start = 0.25;
    double angle_radius_decay = 0.995;
    double angle_weight = 1.0;
    /// Base spring weight; the effective weight is spring_weight * decay^t so
    /// both forces shrink on the same cooling schedule.
    double spring_weight = 0.9;
    double default_edge_length = 1.0;
    SpringModel spring_model = SpringModel::logarithmic;
    /// Extra vertices inserted per edge before layout; each segment inherits
    /// desired length l/(s+1).
    int subdivide_edges = 0;
    GridParams grid;
};

struct IterationStats {
    int iteration = 0;          // 0-based
    double max_displacement = 0.0;
    double angular_resolution = 0.0;  // radians, after the step
};

struct LayoutResult {
    Graph graph;      // the laid-out graph, including subdivision vertices
    Drawing drawing;
    std::vector<IterationStats> trace;
    bool converged = false;
};

/// Replaces every edge by a chain with `segments` extra vertices. New ids are
/// formed from the endpoint ids and never collide with existing ones.
/// segments <= 0 returns the graph unchanged. Each chain edge gets an
/// explicit desired length l/(segments+1), l resolved against default_len.
Graph subdivide_edges(const Graph& g, int segments, double default_len = 1.0);

/// Uniform random placement in a square of side sqrt(|V|) * default edge
/// length, deterministic in the seed. Coincident pairs are re-jittered.
Drawing initial_placement(const Graph& g, const LayoutConfig& config);

/// One simultaneous update from a position snapshot. Returns the largest
/// vertex displacement. `pos` is indexed by graph vertex order.
double layout_step(const Graph& g, std::vector<Point>& pos, int iteration,
                   const LayoutConfig& config);

/// Runs the full schedule: subdivision, placement, iteration with early stop
/// once max displacement stays below 1e-4 * default edge length for 10
/// consecutive iterations. Single-threaded and bit-deterministic in the
/// config.
LayoutResult layout(const Graph& g, const LayoutConfig& config = {});

}  // namespace angleopt
