#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "angleopt/graph.hpp"
#include "angleopt/layout.hpp"
#include "angleopt/metrics.hpp"

using namespace angleopt;

TEST_CASE("subdividing an edge chains new vertices with split lengths") {
    Graph g;
    g.add_edge("a", "b", 3.0);
    const Graph s = subdivide_edges(g, 2);
    CHECK(s.vertex_count() == 4);
    CHECK(s.edge_count() == 3);
    CHECK(s.find("a") == 0);
    CHECK(s.find("b") == 1);
    CHECK(s.find("a~b~1") >= 0);
    CHECK(s.find("a~b~2") >= 0);
    for (const Graph::Edge& e : s.edges()) {
        REQUIRE(e.length.has_value());
        CHECK(*e.length == doctest::Approx(1.0));
    }
    // Endpoints keep degree 1; the chain is a path.
    const std::vector<int> deg = s.degrees();
    CHECK(deg[static_cast<std::size_t>(s.find("a"))] == 1);
    CHECK(deg[static_cast<std::size_t>(s.find("b"))] == 1);
    CHECK(deg[static_cast<std::size_t>(s.find("a~b~1"))] == 2);
}

TEST_CASE("subdivision resolves unspecified lengths against the default") {
    Graph g;
    g.add_edge("a", "b");
    const Graph s = subdivide_edges(g, 1, 2.0);
    REQUIRE(s.edge_count() == 2);
    for (const Graph::Edge& e : s.edges()) {
        REQUIRE(e.length.has_value());
        CHECK(*e.length == doctest::Approx(1.0));
    }
}

TEST_CASE("subdivision with zero segments returns the graph unchanged") {
    const Graph g = named_graph("cycle:4");
    const Graph s = subdivide_edges(g, 0);
    CHECK(s.vertex_count() == g.vertex_count());
    CHECK(s.edge_count() == g.edge_count());
}

TEST_CASE("subdivision invents ids that dodge existing ones") {
    Graph g;
    g.add_edge("a", "b");
    g.add_edge("a~b~1", "b");  // occupies the natural subdivision name
    const Graph s = subdivide_edges(g, 1);
    // Both edges were split; all five ids are distinct.
    CHECK(s.vertex_count() == 5);
    CHECK(s.edge_count() == 4);
    CHECK(s.find("a~b~1+") >= 0);
}

TEST_CASE("initial placement is deterministic in the seed and spread out") {
    const Graph g = named_graph("petersen");
    LayoutConfig config;
    config.seed = 42;
    const Drawing d1 = initial_placement(g, config);
    const Drawing d2 = initial_placement(g, config);
    REQUIRE(d1.positions.size() == 10);
    CHECK(serialize_drawing(d1) == serialize_drawing(d2));

    config.seed = 43;
    const Drawing d3 = initial_placement(g, config);
    CHECK(serialize_drawing(d1) != serialize_drawing(d3));

    // All positions inside the square of side sqrt(|V|) * edge length.
    const double side = std::sqrt(10.0);
    for (const Point& p : d1.positions) {
        CHECK(p.x >= 0.0);
        CHECK(p.x <= side);
        CHECK(p.y >= 0.0);
        CHECK(p.y <= side);
    }
    // No coincident pair.
    for (std::size_t i = 0; i < d1.positions.size(); ++i) {
        for (std::size_t j = i + 1; j < d1.positions.size(); ++j) {
            CHECK(distance(d1.positions[i], d1.positions[j]) > 1e-9);
        }
    }
}

TEST_CASE("one step reports the largest displacement it applied") {
    const Graph g = named_graph("path:4");
    LayoutConfig config;
    std::vector<Point> pos{{0.0, 0.0}, {2.0, 0.0}, {2.5, 1.0}, {4.0, 1.0}};
    const std::vector<Point> before = pos;
    const double moved = layout_step(g, pos, 0, config);
    double expect = 0.0;
    for (std::size_t i = 0; i < pos.size(); ++i) {
        expect = std::max(expect, distance(pos[i], before[i]));
    }
    CHECK(moved == doctest::Approx(expect).epsilon(1e-12));
    CHECK(moved > 0.0);
}

TEST_CASE("isolated vertices do not move") {
    Graph g;
    g.add_edge("a", "b");
    g.add_vertex("loner");
    LayoutConfig config;
    std::vector<Point> pos{{0.0, 0.0}, {3.0, 0.0}, {1.0, 1.0}};
    layout_step(g, pos, 0, config);
    CHECK(pos[2] == Point{1.0, 1.0});
}

TEST_CASE("updates read only the snapshot: processing order cannot matter") {
    // The same path drawn twice with vertices inserted in opposite orders.
    Graph fwd;
    fwd.add_edge("a", "b");
    fwd.add_edge("b", "c");
    Graph rev;
    rev.add_edge("c", "b");
    rev.add_edge("b", "a");

    const std::vector<Point> at{{0.0, 0.0}, {1.2, 0.3}, {2.0, -0.4}};
    std::vector<Point> pos_fwd = at;                       // a, b, c
    std::vector<Point> pos_rev{at[2], at[1], at[0]};       // c, b, a
    LayoutConfig config;
    layout_step(fwd, pos_fwd, 3, config);
    layout_step(rev, pos_rev, 3, config);
    CHECK(distance(pos_fwd[0], pos_rev[2]) < 1e-12);
    CHECK(distance(pos_fwd[1], pos_rev[1]) < 1e-12);
    CHECK(distance(pos_fwd[2], pos_rev[0]) < 1e-12);
}

TEST_CASE("a single edge relaxes to its desired length and converges") {
    const Graph g = named_graph("path:2");
    LayoutConfig config;
    config.iterations = 2000;
    const LayoutResult res = layout(g, config);
    CHECK(res.converged);
    CHECK(res.trace.size() < 2000);
    const double len = distance(res.drawing.positions[0], res.drawing.positions[1]);
    CHECK(len == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("the full run is bit-deterministic in the configuration") {
    const Graph g = named_graph("cycle:5");
    LayoutConfig config;
    config.iterations = 120;
    config.seed = 9;
    const LayoutResult a = layout(g, config);
    const LayoutResult b = layout(g, config);
    CHECK(serialize_drawing(a.drawing) == serialize_drawing(b.drawing));
    REQUIRE(a.trace.size() == b.trace.size());
    for (std::size_t i = 0; i < a.trace.size(); ++i) {
        CHECK(a.trace[i].max_displacement == b.trace[i].max_displacement);
        CHECK(a.trace[i].angular_resolution == b.trace[i].angular_resolution);
    }

    config.seed = 10;
    const LayoutResult c = layout(g, config);
    CHECK(serialize_drawing(a.drawing) != serialize_drawing(c.drawing));
}

TEST_CASE("the trace records every iteration with the resolution after it") {
    const Graph g = named_graph("cycle:4");
    LayoutConfig config;
    config.iterations = 50;
    const LayoutResult res = layout(g, config);
    REQUIRE(!res.trace.empty());
    CHECK(res.trace.size() <= 50);
    for (std::size_t i = 0; i < res.trace.size(); ++i) {
        CHECK(res.trace[i].iteration == static_cast<int>(i));
    }
    if (!res.converged) {
        CHECK(res.trace.back().angular_resolution ==
              doctest::Approx(drawing_angular_resolution(res.graph, res.drawing.positions))
                  .epsilon(1e-12));
    }
}

TEST_CASE("zero iterations returns the initial placement untouched") {
    const Graph g = named_graph("path:3");
    LayoutConfig config;
    config.iterations = 0;
    const LayoutResult res = layout(g, config);
    CHECK(res.trace.empty());
    CHECK(!res.converged);
    CHECK(serialize_drawing(res.drawing) == serialize_drawing(initial_placement(g, config)));
}

TEST_CASE("subdivision inside layout shows up in the returned graph") {
    const Graph g = named_graph("path:2");
    LayoutConfig config;
    config.iterations = 10;
    config.subdivide_edges = 2;
    const LayoutResult res = layout(g, config);
    CHECK(res.graph.vertex_count() == 4);
    CHECK(res.drawing.positions.size() == 4);
}

TEST_CASE("a straight path straightens out: interior angles approach 180 degrees") {
    const Graph g = named_graph("path:5");
    LayoutConfig config;
    config.iterations = 1500;
    config.seed = 3;
    const LayoutResult res = layout(g, config);
    const Metrics m = compute_metrics(res.graph, res.drawing);
    // Interior vertices of a path can reach a straight angle exactly.
    CHECK(m.angular_resolution > kPi * 0.95);
}

TEST_CASE("invalid configurations are rejected up front") {
    const Graph g = named_graph("path:2");
    LayoutConfig config;
    config.iterations = -1;
    CHECK_THROWS_AS(layout(g, config), std::invalid_argument);
    config = {};
    config.angle_radius_decay = 1.5;
    CHECK_THROWS_AS(layout(g, config), std::invalid_argument);
    config = {};
    config.angle_weight = -0.5;
    CHECK_THROWS_AS(layout(g, config), std::invalid_argument);
    config = {};
    config.default_edge_length = 0.0;
    CHECK_THROWS_AS(layout(g, config), std::invalid_argument);

    std::vector<Point> wrong{{0.0, 0.0}};
    CHECK_THROWS_AS(layout_step(g, wrong, 0, LayoutConfig{}), std::invalid_argument);
}
