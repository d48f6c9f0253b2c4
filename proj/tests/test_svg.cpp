#include <doctest.h>

#include <stdexcept>
#include <string>

#include "angleopt/graph.hpp"
#include "angleopt/svg.hpp"

using namespace angleopt;

namespace {

int count_occurrences(const std::string& haystack, const std::string& needle) {
    int n = 0;
    for (std::size_t at = haystack.find(needle); at != std::string::npos;
         at = haystack.find(needle, at + needle.size())) {
        ++n;
    }
    return n;
}

Drawing make_drawing(const Graph& g, const std::vector<Point>& pos) {
    Drawing d;
    d.ids = g.ids();
    d.positions = pos;
    return d;
}

}  // namespace

TEST_CASE("a single edge renders as one line and two circles") {
    Graph g;
    g.add_edge("a", "b");
    const std::string svg = render_svg(g, make_drawing(g, {{0, 0}, {1, 0}}));
    CHECK(count_occurrences(svg, "<line ") == 1);
    CHECK(count_occurrences(svg, "<circle ") == 2);
    CHECK(svg.find("<?xml version=\"1.0\"") == 0);
    CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\"") != std::string::npos);
    CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
    CHECK(svg.find("<text") == std::string::npos);  // labels are off by default
}

TEST_CASE("coordinates use fixed three-decimal precision without negative zero") {
    Graph g;
    g.add_edge("a", "b");
    const std::string svg = render_svg(g, make_drawing(g, {{0, 0}, {1, 1}}));
    CHECK(svg.find("-0.000") == std::string::npos);
    // Width 800 with 5% margin: content spans x in [40, 760].
    CHECK(svg.find("x1=\"40.000\"") != std::string::npos);
    CHECK(svg.find("x2=\"760.000\"") != std::string::npos);
}

TEST_CASE("the vertical axis is flipped: larger model y means smaller page y") {
    Graph g;
    g.add_edge("low", "high");
    const std::string svg = render_svg(g, make_drawing(g, {{0.0, 0.0}, {0.0, 5.0}}));
    // Content x-span is zero, so both vertices share cx; compare cy values.
    const auto low_at = svg.find("<circle ");
    const auto high_at = svg.find("<circle ", low_at + 1);
    REQUIRE(low_at != std::string::npos);
    REQUIRE(high_at != std::string::npos);
    auto cy_of = [&](std::size_t from) {
        const auto at = svg.find("cy=\"", from);
        REQUIRE(at != std::string::npos);
        const auto end = svg.find('"', at + 4);
        return std::stod(svg.substr(at + 4, end - at - 4));
    };
    CHECK(cy_of(low_at) > cy_of(high_at));
}

TEST_CASE("labels are emitted on request and ids are XML-escaped") {
    Graph g;
    g.add_edge("a<b", "c&d");
    SvgStyle style;
    style.labels = true;
    const std::string svg = render_svg(g, make_drawing(g, {{0, 0}, {1, 0}}), style);
    CHECK(count_occurrences(svg, "<text ") == 2);
    CHECK(svg.find("a&lt;b") != std::string::npos);
    CHECK(svg.find("c&amp;d") != std::string::npos);
    CHECK(svg.find("a<b<") == std::string::npos);
}

TEST_CASE("an empty graph still renders a valid canvas") {
    const Graph g;
    const std::string svg = render_svg(g, Drawing{});
    CHECK(svg.find("<svg ") != std::string::npos);
    CHECK(svg.find("width=\"800.000\"") != std::string::npos);
    CHECK(count_occurrences(svg, "<line ") == 0);
    CHECK(count_occurrences(svg, "<circle ") == 0);
}

TEST_CASE("style colors and sizes appear in the output") {
    Graph g;
    g.add_edge("a", "b");
    SvgStyle style;
    style.edge_color = "#ff0000";
    style.vertex_color = "#00ff00";
    style.vertex_radius = 7.5;
    const std::string svg = render_svg(g, make_drawing(g, {{0, 0}, {1, 0}}), style);
    CHECK(svg.find("stroke=\"#ff0000\"") != std::string::npos);
    CHECK(svg.find("fill=\"#00ff00\"") != std::string::npos);
    CHECK(svg.find("r=\"7.500\"") != std::string::npos);
}

TEST_CASE("rendering is byte-deterministic") {
    const Graph g = named_graph("cycle:5");
    std::vector<Point> pos;
    for (int i = 0; i < 5; ++i) {
        pos.push_back({std::cos(kTwoPi * i / 5.0), std::sin(kTwoPi * i / 5.0)});
    }
    const Drawing d = make_drawing(g, pos);
    CHECK(render_svg(g, d) == render_svg(g, d));
}

TEST_CASE("rendering rejects drawings that miss a vertex and bad styles") {
    Graph g;
    g.add_edge("a", "b");
    Drawing d;
    d.ids = {"a"};
    d.positions = {{0, 0}};
    CHECK_THROWS_AS(render_svg(g, d), std::invalid_argument);

    SvgStyle bad;
    bad.margin_ratio = 0.5;
    CHECK_THROWS_AS(render_svg(g, make_drawing(g, {{0, 0}, {1, 0}}), bad),
                    std::invalid_argument);
}
