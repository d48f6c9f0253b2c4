#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "angleopt/geometry.hpp"

using namespace angleopt;

namespace {

Point random_point(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    const double x = d(rng);
    const double y = d(rng);
    return {x, y};
}

}  // namespace

TEST_CASE("vector helpers behave like the textbook definitions") {
    const Point a{3.0, 4.0};
    const Point b{-1.0, 2.0};
    CHECK(dot(a, b) == doctest::Approx(5.0));
    CHECK(cross(a, b) == doctest::Approx(10.0));
    CHECK(norm(a) == doctest::Approx(5.0));
    CHECK(norm2(a) == doctest::Approx(25.0));
    CHECK(distance(a, b) == doctest::Approx(std::sqrt(16.0 + 4.0)));
    CHECK((a + b) == Point{2.0, 6.0});
    CHECK((a - b) == Point{4.0, 2.0});
    CHECK((2.0 * b) == Point{-2.0, 4.0});
    CHECK((b / 2.0) == Point{-0.5, 1.0});
    CHECK(lex_less({0.0, 5.0}, {1.0, -5.0}));
    CHECK(lex_less({1.0, -5.0}, {1.0, 5.0}));
    CHECK(!lex_less({1.0, 5.0}, {1.0, 5.0}));
}

TEST_CASE("min incident angle: opposite neighbors subtend a straight angle") {
    const std::vector<Point> nbrs{{1.0, 0.0}, {-1.0, 0.0}};
    CHECK(min_incident_angle({0.0, 0.0}, nbrs) == doctest::Approx(kPi).epsilon(1e-12));
}

TEST_CASE("min incident angle: four compass neighbors give a right angle") {
    const std::vector<Point> nbrs{{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    CHECK(min_incident_angle({0.0, 0.0}, nbrs) == doctest::Approx(kPi / 2.0).epsilon(1e-12));
}

TEST_CASE("min incident angle: asymmetric example with three neighbors") {
    const std::vector<Point> nbrs{{-5.0, 1.0}, {0.0, 6.0}, {5.0, 1.0}};
    CHECK(min_incident_angle({0.0, 1.0}, nbrs) == doctest::Approx(kPi / 2.0).epsilon(1e-12));
}

TEST_CASE("angular gaps are sorted, positive and sum to a full turn") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Point q = random_point(rng, -5.0, 5.0);
        std::uniform_int_distribution<int> count(2, 8);
        std::vector<Point> nbrs;
        const int k = count(rng);
        for (int i = 0; i < k; ++i) {
            Point n = random_point(rng, -5.0, 5.0);
            while (distance(n, q) < 1e-6) n = random_point(rng, -5.0, 5.0);
            nbrs.push_back(n);
        }
        const std::vector<double> gaps = angular_gaps(q, nbrs);
        REQUIRE(gaps.size() == nbrs.size());
        double sum = 0.0;
        for (std::size_t i = 0; i < gaps.size(); ++i) {
            CHECK(gaps[i] >= 0.0);
            if (i > 0) CHECK(gaps[i] >= gaps[i - 1]);
            sum += gaps[i];
        }
        CHECK(sum == doctest::Approx(kTwoPi).epsilon(1e-12));
        CHECK(min_incident_angle(q, nbrs) == gaps.front());
    }
}

TEST_CASE("angular gaps: single neighbor yields one full-turn gap") {
    const std::vector<Point> nbrs{{2.0, 3.0}};
    const std::vector<double> gaps = angular_gaps({0.0, 0.0}, nbrs);
    REQUIRE(gaps.size() == 1);
    CHECK(gaps[0] == doctest::Approx(kTwoPi));
}

TEST_CASE("angular gaps reject empty input and coincident neighbors") {
    CHECK_THROWS_AS(angular_gaps({0.0, 0.0}, std::vector<Point>{}), std::invalid_argument);
    const std::vector<Point> bad{{1.0, 1.0}, {0.0, 0.0}};
    CHECK_THROWS_AS(angular_gaps({0.0, 0.0}, bad), std::invalid_argument);
}

TEST_CASE("segment-disk clip: chord through the unit disk") {
    const auto hit = segment_disk_intersection({-2.0, 0.0}, {2.0, 0.0}, {0.0, 0.0}, 1.0);
    REQUIRE(hit.kind == DiskSegmentIntersection::Kind::segment);
    CHECK(hit.a.x == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(hit.a.y == doctest::Approx(0.0));
    CHECK(hit.b.x == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(hit.b.y == doctest::Approx(0.0));
}

TEST_CASE("segment-disk clip: tangent line touches in one point") {
    const auto hit = segment_disk_intersection({-2.0, 1.0}, {2.0, 1.0}, {0.0, 0.0}, 1.0);
    REQUIRE(hit.kind == DiskSegmentIntersection::Kind::point);
    CHECK(hit.a.x == doctest::Approx(0.0));
    CHECK(hit.a.y == doctest::Approx(1.0));
    CHECK(hit.a == hit.b);
}

TEST_CASE("segment-disk clip: distant segment misses") {
    const auto hit = segment_disk_intersection({-2.0, 3.0}, {2.0, 3.0}, {0.0, 0.0}, 1.0);
    CHECK(hit.kind == DiskSegmentIntersection::Kind::empty);
}

TEST_CASE("segment-disk clip: random results lie on the segment and in the disk") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const Point a = random_point(rng, -5.0, 5.0);
        Point b = random_point(rng, -5.0, 5.0);
        while (distance(a, b) < 1e-3) b = random_point(rng, -5.0, 5.0);
        const Point c = random_point(rng, -5.0, 5.0);
        std::uniform_real_distribution<double> rad(0.1, 3.0);
        const double r = rad(rng);
        const auto hit = segment_disk_intersection(a, b, c, r);
        if (hit.kind == DiskSegmentIntersection::Kind::empty) {
            // Midpoint and endpoints must all be outside (up to tolerance).
            CHECK(distance(a, c) > r - 1e-9 * r);
            CHECK(distance(b, c) > r - 1e-9 * r);
        } else {
            for (const Point q : {hit.a, hit.b}) {
                CHECK(distance(q, c) <= r * (1.0 + 1e-6));
                // q = a + t (b - a) with t in [0, 1].
                const double t = dot(q - a, b - a) / norm2(b - a);
                CHECK(t >= -1e-9);
                CHECK(t <= 1.0 + 1e-9);
                CHECK(std::abs(cross(q - a, b - a)) <= 1e-6 * norm2(b - a));
            }
        }
    }
}

TEST_CASE("two-point frame: already-canonical points map to themselves") {
    const auto frame = canonical_two_point_frame({0.0, -1.0}, {0.0, 1.0});
    const Point a = frame.apply({0.0, -1.0});
    const Point b = frame.apply({0.0, 1.0});
    CHECK(a.x == doctest::Approx(0.0));
    CHECK(a.y == doctest::Approx(-1.0));
    CHECK(b.x == doctest::Approx(0.0));
    CHECK(b.y == doctest::Approx(1.0));
    CHECK(frame.scale() == doctest::Approx(1.0));
}

TEST_CASE("two-point frame: horizontal pair is rotated upright") {
    // (1,0) -> (0,-1) and (-1,0) -> (0,1) requires a quarter turn.
    const auto frame = canonical_two_point_frame({1.0, 0.0}, {-1.0, 0.0});
    const Point a = frame.apply({1.0, 0.0});
    const Point b = frame.apply({-1.0, 0.0});
    CHECK(a.x == doctest::Approx(0.0));
    CHECK(a.y == doctest::Approx(-1.0));
    CHECK(b.x == doctest::Approx(0.0));
    CHECK(b.y == doctest::Approx(1.0));
    CHECK(frame.scale() == doctest::Approx(1.0));
}

TEST_CASE("two-point frame: distance 4 pair is scaled by one half") {
    const auto frame = canonical_two_point_frame({0.0, 0.0}, {0.0, 4.0});
    CHECK(frame.scale() == doctest::Approx(0.5));
    const Point a = frame.apply({0.0, 0.0});
    const Point b = frame.apply({0.0, 4.0});
    CHECK(a.x == doctest::Approx(0.0));
    CHECK(a.y == doctest::Approx(-1.0));
    CHECK(b.x == doctest::Approx(0.0));
    CHECK(b.y == doctest::Approx(1.0));
    CHECK(frame.apply_to_radius(2.0) == doctest::Approx(1.0));
}

TEST_CASE("two-point frame: random pairs map onto the canonical pair") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        const Point a = random_point(rng, -10.0, 10.0);
        Point b = random_point(rng, -10.0, 10.0);
        while (distance(a, b) < 1e-3) b = random_point(rng, -10.0, 10.0);
        const auto frame = canonical_two_point_frame(a, b);
        const Point ca = frame.apply(a);
        const Point cb = frame.apply(b);
        CHECK(std::abs(ca.x) < 1e-9);
        CHECK(std::abs(ca.y + 1.0) < 1e-9);
        CHECK(std::abs(cb.x) < 1e-9);
        CHECK(std::abs(cb.y - 1.0) < 1e-9);
        CHECK(frame.scale() == doctest::Approx(2.0 / distance(a, b)));
    }
}

TEST_CASE("similarity transform: inverse undoes apply and lengths scale uniformly") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> ang(-kPi, kPi);
    std::uniform_real_distribution<double> sc(0.1, 10.0);
    for (int trial = 0; trial < 300; ++trial) {
        const SimilarityTransform t(ang(rng), sc(rng), random_point(rng, -5.0, 5.0));
        const SimilarityTransform back = t.inverse();
        const Point p = random_point(rng, -10.0, 10.0);
        const Point q = random_point(rng, -10.0, 10.0);
        const Point round = back.apply(t.apply(p));
        CHECK(distance(round, p) < 1e-9 * (1.0 + norm(p)));
        CHECK(distance(t.apply(p), t.apply(q)) ==
              doctest::Approx(t.scale() * distance(p, q)).epsilon(1e-12));
        CHECK(t.apply_to_radius(3.0) == doctest::Approx(3.0 * t.scale()));
    }
}

TEST_CASE("similarity transform rejects non-positive scale") {
    CHECK_THROWS_AS(SimilarityTransform(0.0, 0.0, {0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(SimilarityTransform(0.0, -1.0, {0.0, 0.0}), std::invalid_argument);
}
