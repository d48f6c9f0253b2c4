#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "angleopt/geometry.hpp"

namespace angleopt {

/// Which solver branch produced a displacement result.
enum class Method {
    unchanged,
    ratio_point,
    clipped_ratio,
    tangent_circle,
    fermat,
    pairwise_max_angle,
    equal_pair_quartic,
    grid,
};

std::string_view method_name(Method m);

/// One instance of the max-min-angle displacement problem: vertex at p with
/// the given neighbor positions may move anywhere within distance r.
struct DisplacementQuery {
    Point p;
    std::vector<Point> neighbors;
    double r = 0.0;
};

struct GridParams {
    /// Grid step is delta_ratio * r; must lie in (0, 1].
    double delta_ratio = 1.0 / 3.0;
};

struct DisplacementResult {
    Point p_star;
    /// min_incident_angle at p_star against the (deduplicated) neighbors;
    /// 2*pi for degree <= 1, 0 when degenerate.
    double min_angle = 0.0;
    Method method = Method::unchanged;
    /// Set when every candidate position coincides with a neighbor, in which
    /// case p_star == p and min_angle == 0.
    bool degenerate = false;
};

/// Tangent-circle solution of the two-neighbor maximum angle problem, in the
/// canonical frame a=(0,-1), b=(0,1).
struct TangentCircleSolution {
    Point center;               // O, on the x-axis
    double radius = 0.0;        // r' = |OA| of the selected circle
    Point p_star_canonical;
    /// Both roots of the tangency quadratic in r', ascending. For the
    /// collinear branch (P on line AB) there is a single root, duplicated.
    std::array<double, 2> radius_roots{};
};

struct MaxAngleResult {
    TangentCircleSolution tangent;
    Point p_star;               // back in world coordinates
    double angle = 0.0;         // the achieved angle at p_star between a and b
    /// Every boundary point probed while selecting p_star (world coordinates):
    /// for each quadratic root, both intersections of the line of centers with
    /// the displacement circle. When the line through a and b crosses the
    /// disk, the pair angle has a local maximum on each side and only one of
    /// them is the global optimum; callers juggling more than two neighbors
    /// need the runner-up too.
    std::vector<Point> stationary_points;
};

struct FermatResult {
    Point point;
    /// True for the obtuse case (an angle >= 120 degrees): point is that
    /// triangle vertex. False: point is the interior isogonic center.
    bool at_vertex = false;
};

enum class EqualPairCase { I, II, III };

/// Intermediate values of the equal-pair reduction, all expressed in the
/// canonical frame (p at the origin, the two outer neighbors at equal height,
/// coordinates rescaled per the case split). Kept for verification: the
/// sextic must be divisible by x^2 + ay^2 - r^2.
struct EqualPairReduction {
    std::array<double, 6> a{};   // a1..a6
    std::array<double, 6> b{};   // b1..b6
    std::array<double, 10> c{};  // c1..c10
    std::array<double, 7> d{};   // d1..d7
    std::array<double, 7> e{};   // e1..e7 (sextic, descending: e1 x^6 ... e7)
    EqualPairCase case_tag = EqualPairCase::I;
    double scale = 1.0;          // coordinates were divided by this factor
    double rotation = 0.0;       // applied after translating p to the origin
    Point outer_a, apex, outer_c;  // transformed, scaled neighbor positions
    double r = 0.0;                // scaled radius
    std::array<double, 5> quartic{};  // ascending coefficients, per case
};

/// Solve one displacement instance. Dispatches on the number of distinct
/// neighbor positions: <=1 unchanged, 2 and 3 exactly, >=4 by grid search.
DisplacementResult solve(const DisplacementQuery& query, const GridParams& grid = {});

DisplacementResult solve_degree2(Point p, Point a, Point b, double r);

/// Maximum angle problem: both neighbors farther than r from p and segment ab
/// outside the disk. The optimal point lies where the circle through a, b and
/// the answer is tangent to the displacement circle.
MaxAngleResult max_angle_point(Point p, Point a, Point b, double r);

/// Fermat (Torricelli) point of a triangle. Throws std::invalid_argument for
/// collinear input.
FermatResult fermat_point(Point a, Point b, Point c);

DisplacementResult solve_degree3(Point p, Point a, Point b, Point c, double r);

/// Builds the coefficient cascade for the configuration where the angles
/// (outer_a, apex) and (apex, outer_c) at the displaced point are equal and
/// the point lies on the boundary circle.
EqualPairReduction equal_pair_reduction(Point p, Point outer_a, Point apex, Point outer_c,
                                        double r);

/// Boundary candidates with the two apex-adjacent angles equal, in world
/// coordinates. May be empty when every quartic root is spurious.
std::vector<Point> solve_equal_pair(Point p, Point outer_a, Point apex, Point outer_c,
                                    double r);

DisplacementResult solve_grid(Point p, std::span<const Point> neighbors, double r,
                              const GridParams& grid);

}  // namespace angleopt
