#include "angleopt/displacement.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "angleopt/polynomial.hpp"

namespace angleopt {
namespace {

void validate_finite(Point p, const char* what) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
        throw std::invalid_argument(std::string(what) + ": coordinates must be finite");
    }
}

/// min_incident_angle if q is a valid placement, -1 when q coincides with a
/// neighbor. Candidates scoring -1 lose against any valid one.
double candidate_score(Point q, std::span<const Point> neighbors) {
    for (const Point& n : neighbors) {
        if (distance(n, q) <= kCoincidentTol) return -1.0;
    }
    return min_incident_angle(q, neighbors);
}

double pair_angle(Point q, Point a, Point b) {
    const Point va = a - q;
    const Point vb = b - q;
    return std::atan2(std::abs(cross(va, vb)), dot(va, vb));
}

Point rotate(Point p, double cos_t, double sin_t) {
    return {cos_t * p.x - sin_t * p.y, sin_t * p.x + cos_t * p.y};
}

struct Candidate {
    Point point;
    Method method;
};

/// Argmax of candidate_score with the deterministic tie-break: smaller
/// distance to p, then lexicographic coordinates, then earliest candidate.
DisplacementResult pick_best(Point p, std::span<const Point> neighbors,
                             std::span<const Candidate> candidates) {
    bool found = false;
    double best_score = -1.0;
    double best_dist = 0.0;
    Candidate best{};
    for (const Candidate& cand : candidates) {
        const double s = candidate_score(cand.point, neighbors);
        if (s < 0.0) continue;
        const double d = distance(p, cand.point);
        const bool better =
            !found || s > best_score ||
            (s == best_score &&
             (d < best_dist || (d == best_dist && lex_less(cand.point, best.point))));
        if (better) {
            found = true;
            best_score = s;
            best_dist = d;
            best = cand;
        }
    }
    if (!found) {
        return {p, 0.0, Method::unchanged, true};
    }
    return {best.point, best_score, best.method, false};
}

std::vector<Point> dedupe_neighbors(const std::vector<Point>& neighbors) {
    std::vector<Point> merged;
    merged.reserve(neighbors.size());
    for (const Point& n : neighbors) {
        bool seen = false;
        for (const Point& m : merged) {
            if (distance(n, m) <= kCoincidentTol) {
                seen = true;
                break;
            }
        }
        if (!seen) merged.push_back(n);
    }
    return merged;
}

}  // namespace

std::string_view method_name(Method m) {
    switch (m) {
        case Method::unchanged: return "unchanged";
        case Method::ratio_point: return "ratio_point";
        case Method::clipped_ratio: return "clipped_ratio";
        case Method::tangent_circle: return "tangent_circle";
        case Method::fermat: return "fermat";
        case Method::pairwise_max_angle: return "pairwise_max_angle";
        case Method::equal_pair_quartic: return "equal_pair_quartic";
        case Method::grid: return "grid";
    }
    return "unknown";
}

MaxAngleResult max_angle_point(Point p, Point a, Point b, double r) {
    if (!(r > 0.0)) {
        throw std::invalid_argument("max_angle_point: radius must be positive");
    }
    if (distance(a, p) <= r || distance(b, p) <= r ||
        segment_disk_intersection(a, b, p, r).kind != DiskSegmentIntersection::Kind::empty) {
        throw std::invalid_argument(
            "max_angle_point: requires both neighbors and segment ab outside the disk");
    }

    const SimilarityTransform frame = canonical_two_point_frame(a, b);
    const Point pc = frame.apply(p);
    const double rc = frame.apply_to_radius(r);
    const double s = norm2(pc) - rc * rc - 1.0;

    // Radii r' of circles through A(0,-1), B(0,1) tangent to the displacement
    // circle; their centers lie on the x-axis at (x, 0) with x^2 + 1 = r'^2.
    std::vector<double> radii;   // one entry per center candidate
    std::vector<Point> centers;
    std::vector<double> roots;   // raw quadratic roots, for reporting
    if (std::abs(pc.x) <= 1e-9 * norm(pc)) {
        // P on the line through A and B: the elimination step degenerates and
        // r' follows directly; take the center with x > 0.
        const double rp = s / (2.0 * rc);
        const double x = std::sqrt(std::max(rp * rp - 1.0, 0.0));
        roots = {rp, rp};
        radii = {rp};
        centers = {{x, 0.0}};
    } else {
        const double qa = 4.0 * (rc * rc - pc.x * pc.x);
        const double qb = -4.0 * s * rc;
        const double qc = s * s + 4.0 * pc.x * pc.x;
        const double scale = std::max({std::abs(qa), std::abs(qb), std::abs(qc)});
        std::vector<double> raw;
        if (std::abs(qa) <= 1e-12 * scale) {
            raw = {-qc / qb};
        } else {
            const double disc = qb * qb - 4.0 * qa * qc;
            if (disc >= 0.0) {
                // Stable form: compute the larger-magnitude root first.
                const double sq = std::sqrt(disc);
                const double big = -0.5 * (qb + std::copysign(sq, qb));
                raw.push_back(big / qa);
                if (big != 0.0) raw.push_back(qc / big);
            } else if (disc >= -1e-12 * qb * qb) {
                raw.push_back(-qb / (2.0 * qa));
            }
        }
        if (raw.empty()) {
            std::ostringstream msg;
            msg << "max_angle_point: tangency quadratic has no real root (P=(" << pc.x << ","
                << pc.y << "), r=" << rc << ")";
            throw std::runtime_error(msg.str());
        }
        roots = raw;
        if (roots.size() == 1) roots.push_back(roots[0]);
        // Prefer positive radii (external tangency) on ties.
        std::sort(raw.begin(), raw.end(), [](double l, double r2) {
            const bool lp = l > 0.0;
            const bool rp = r2 > 0.0;
            if (lp != rp) return lp;
            return l < r2;
        });
        for (double rp : raw) {
            radii.push_back(rp);
            centers.push_back({(s - 2.0 * rc * rp) / (2.0 * pc.x), 0.0});
        }
    }

    const Point ca{0.0, -1.0};
    const Point cb{0.0, 1.0};
    const SimilarityTransform unframe = frame.inverse();
    bool found = false;
    double best_angle = -1.0;
    Point best_pstar{};
    Point best_center{};
    double best_radius = 0.0;
    std::vector<Point> probed;
    for (std::size_t i = 0; i < centers.size(); ++i) {
        const Point o = centers[i];
        const double len = distance(o, pc);
        if (len <= kCoincidentTol) continue;
        const Point dir = (o - pc) / len;
        // Both intersections of line OP with the displacement circle.
        for (const Point cand : {pc + rc * dir, pc - rc * dir}) {
            probed.push_back(unframe.apply(cand));
            const double ang = pair_angle(cand, ca, cb);
            if (!found || ang > best_angle) {
                found = true;
                best_angle = ang;
                best_pstar = cand;
                best_center = o;
                best_radius = radii[i];
            }
        }
    }
    if (!found) {
        throw std::runtime_error("max_angle_point: no tangency candidate survived");
    }

    MaxAngleResult out;
    out.tangent.center = best_center;
    out.tangent.radius = best_radius;
    out.tangent.p_star_canonical = best_pstar;
    std::sort(roots.begin(), roots.end());
    out.tangent.radius_roots = {roots[0], roots[1]};
    out.p_star = unframe.apply(best_pstar);
    out.angle = best_angle;
    out.stationary_points = std::move(probed);
    return out;
}

DisplacementResult solve_degree2(Point p, Point a, Point b, double r) {
    if (distance(a, b) <= kCoincidentTol) {
        return {p, 0.0, Method::unchanged, true};
    }
    const std::array<Point, 2> neighbors{a, b};

    const DiskSegmentIntersection isect = segment_disk_intersection(a, b, p, r);
    if (isect.kind != DiskSegmentIntersection::Kind::empty) {
        // Q splits ab in the ratio |AP| : |BP|, preserving relative closeness.
        const double da = distance(a, p);
        const double db = distance(b, p);
        const Point q = a + (da / (da + db)) * (b - a);
        Point p_star;
        Method method;
        if (distance(p, q) <= r) {
            p_star = q;
            method = Method::ratio_point;
        } else {
            const double d1 = distance(isect.a, q);
            const double d2 = distance(isect.b, q);
            if (d1 < d2 || (d1 == d2 && !lex_less(isect.b, isect.a))) {
                p_star = isect.a;
            } else {
                p_star = isect.b;
            }
            method = Method::clipped_ratio;
        }
        const double score = candidate_score(p_star, neighbors);
        if (score < 0.0) {
            return {p, 0.0, Method::unchanged, true};
        }
        return {p_star, score, method, false};
    }

    const MaxAngleResult mar = max_angle_point(p, a, b, r);
    const double score = candidate_score(mar.p_star, neighbors);
    if (score < 0.0) {
        return {p, 0.0, Method::unchanged, true};
    }
    return {mar.p_star, score, Method::tangent_circle, false};
}

namespace {

/// Apex of the equilateral triangle erected on uv, on the side away from
/// `opposite`.
Point erected_apex(Point u, Point v, Point opposite) {
    const Point d = v - u;
    const Point mid = 0.5 * (u + v);
    const Point perp{-d.y, d.x};  // length |uv|
    const double side = cross(d, opposite - u);
    const double h = std::sqrt(3.0) / 2.0;
    return side > 0.0 ? mid - h * perp : mid + h * perp;
}

Point line_intersection(Point p1, Point d1, Point p2, Point d2) {
    const double den = cross(d1, d2);
    if (std::abs(den) <= 1e-15 * (norm(d1) * norm(d2))) {
        throw std::runtime_error("line_intersection: lines are (near) parallel");
    }
    const double t = cross(p2 - p1, d2) / den;
    return p1 + t * d1;
}

}  // namespace

FermatResult fermat_point(Point a, Point b, Point c) {
    const Point ab = b - a;
    const Point ac = c - a;
    if (std::abs(cross(ab, ac)) <= 1e-12 * (norm(ab) * norm(ac))) {
        throw std::invalid_argument("fermat_point: collinear input");
    }
    const double threshold = 2.0 * kPi / 3.0;
    if (pair_angle(a, b, c) >= threshold) return {a, true};
    if (pair_angle(b, a, c) >= threshold) return {b, true};
    if (pair_angle(c, a, b) >= threshold) return {c, true};

    // First isogonic center: erect outward equilateral triangles and
    // intersect the lines from each vertex to the opposite apex.
    const Point apex_a = erected_apex(b, c, a);
    const Point apex_b = erected_apex(a, c, b);
    const Point f = line_intersection(a, apex_a - a, b, apex_b - b);
    return {f, false};
}

EqualPairReduction equal_pair_reduction(Point p, Point outer_a, Point apex, Point outer_c,
                                        double r) {
    if (!(r > 0.0)) {
        throw std::invalid_argument("equal_pair_reduction: radius must be positive");
    }
    EqualPairReduction red;

    // Canonical frame: p at the origin, outer neighbors at equal height.
    const Point a0 = outer_a - p;
    const Point b0 = apex - p;
    const Point c0 = outer_c - p;
    red.rotation = -std::atan2(c0.y - a0.y, c0.x - a0.x);
    const double ct = std::cos(red.rotation);
    const double st = std::sin(red.rotation);
    Point a1 = rotate(a0, ct, st);
    Point b1 = rotate(b0, ct, st);
    Point c1 = rotate(c0, ct, st);

    const double k = a1.y * a1.y - r * r;
    if (std::abs(k) <= 1e-9 * r * r) {
        red.case_tag = EqualPairCase::I;
        red.scale = 1.0;
    } else if (k > 0.0) {
        red.case_tag = EqualPairCase::II;
        red.scale = std::sqrt(k);
    } else {
        red.case_tag = EqualPairCase::III;
        red.scale = std::sqrt(-k);
    }
    const double inv = 1.0 / red.scale;
    red.outer_a = inv * a1;
    red.apex = inv * b1;
    red.outer_c = inv * c1;
    red.r = inv * r;

    const double ax = red.outer_a.x, ay = red.outer_a.y;
    const double bx = red.apex.x, by = red.apex.y;
    const double cx = red.outer_c.x, cy = red.outer_c.y;
    const double rr = red.r * red.r;

    // Linearized squared distances on the boundary circle x^2 + y^2 = r^2:
    //   |C P*|^2                        = a1 x + a2 y + a3
    //   (|B P*|^2 + |A P*|^2 - |AB|^2)/2 = a4 x + a5 y + a6
    //   |A P*|^2                        = b1 x + b2 y + b3
    //   (|B P*|^2 + |C P*|^2 - |BC|^2)/2 = b4 x + b5 y + b6
    auto& A = red.a;
    auto& B = red.b;
    A[0] = -2.0 * cx;
    A[1] = -2.0 * cy;
    A[2] = rr + cx * cx + cy * cy;
    A[3] = -(ax + bx);
    A[4] = -(ay + by);
    A[5] = bx * ax + by * ay + rr;
    B[0] = -2.0 * ax;
    B[1] = -2.0 * ay;
    B[2] = rr + ax * ax + ay * ay;
    B[3] = -(bx + cx);
    B[4] = -(by + cy);
    B[5] = bx * cx + by * cy + rr;

    // Squaring the equal-angle condition gives a cubic curve in x and y.
    auto& C = red.c;
    C[0] = A[0] * A[3] * A[3] - B[0] * B[3] * B[3];
    C[1] = A[1] * A[4] * A[4] - B[1] * B[4] * B[4];
    C[2] = 2.0 * A[0] * A[3] * A[5] + A[2] * A[3] * A[3] -
           (2.0 * B[0] * B[3] * B[5] + B[2] * B[3] * B[3]);
    C[3] = 2.0 * A[1] * A[4] * A[5] + A[2] * A[4] * A[4] -
           (2.0 * B[1] * B[4] * B[5] + B[2] * B[4] * B[4]);
    C[4] = 2.0 * A[0] * A[3] * A[4] + A[1] * A[3] * A[3] -
           (2.0 * B[0] * B[3] * B[4] + B[1] * B[3] * B[3]);
    C[5] = 2.0 * A[1] * A[3] * A[4] + A[0] * A[4] * A[4] -
           (2.0 * B[1] * B[3] * B[4] + B[0] * B[4] * B[4]);
    C[6] = 2.0 * A[2] * A[3] * A[5] + A[0] * A[5] * A[5] -
           (2.0 * B[2] * B[3] * B[5] + B[0] * B[5] * B[5]);
    C[7] = 2.0 * A[2] * A[4] * A[5] + A[1] * A[5] * A[5] -
           (2.0 * B[2] * B[4] * B[5] + B[1] * B[5] * B[5]);
    C[8] = 2.0 * (A[0] * A[4] * A[5] + A[1] * A[3] * A[5] + A[2] * A[3] * A[4] -
                  (B[0] * B[4] * B[5] + B[1] * B[3] * B[5] + B[2] * B[3] * B[4]));
    C[9] = A[2] * A[5] * A[5] - B[2] * B[5] * B[5];

    // Reduce powers of y via y^2 = r^2 - x^2:
    //   (d1 x^3 + d2 x^2 + d3 x + d4) + (d5 x^2 + d6 x + d7) y = 0
    auto& D = red.d;
    D[0] = C[0] - C[5];
    D[1] = C[2] - C[3];
    D[2] = C[5] * rr + C[6];
    D[3] = C[3] * rr + C[9];
    D[4] = C[4] - C[1];
    D[5] = C[8];
    D[6] = C[1] * rr + C[7];

    // Isolate y and square once more: a sextic in x alone.
    auto& E = red.e;
    E[0] = D[0] * D[0] + D[4] * D[4];
    E[1] = 2.0 * (D[0] * D[1] + D[4] * D[5]);
    E[2] = D[1] * D[1] + 2.0 * D[0] * D[2] - (D[4] * D[4] * rr - (D[5] * D[5] + 2.0 * D[4] * D[6]));
    E[3] = 2.0 * (D[0] * D[3] + D[1] * D[2]) - 2.0 * (D[4] * D[5] * rr - D[5] * D[6]);
    E[4] = (D[2] * D[2] + 2.0 * D[1] * D[3]) -
           ((D[5] * D[5] + 2.0 * D[4] * D[6]) * rr - D[6] * D[6]);
    E[5] = 2.0 * D[2] * D[3] - 2.0 * D[5] * D[6] * rr;
    E[6] = D[3] * D[3] - D[6] * D[6] * rr;

    // The sextic always contains the factor x^2 + ay^2 - r^2, which after the
    // case rescaling is x^2, x^2+1 or x^2-1; dividing it out leaves a quartic.
    switch (red.case_tag) {
        case EqualPairCase::I:
            red.quartic = {0.0, E[3], E[2], E[1], E[0]};
            break;
        case EqualPairCase::II:
            red.quartic = {E[4] - (E[2] - E[0]), E[3] - E[1], E[2] - E[0], E[1], E[0]};
            break;
        case EqualPairCase::III:
            red.quartic = {E[4] + (E[2] + E[0]), E[3] + E[1], E[2] + E[0], E[1], E[0]};
            break;
    }
    return red;
}

std::vector<Point> solve_equal_pair(Point p, Point outer_a, Point apex, Point outer_c,
                                    double r) {
    const EqualPairReduction red = equal_pair_reduction(p, outer_a, apex, outer_c, r);

    Polynomial quartic(std::vector<double>(red.quartic.begin(), red.quartic.end()));
    if (quartic.degree() < 1) {
        return {};
    }
    const std::vector<double> roots = real_roots(quartic, -red.r, red.r);

    // Normalized copy of d for the y-recovery threshold.
    double dmax = 0.0;
    for (double v : red.d) dmax = std::max(dmax, std::abs(v));
    std::array<double, 7> dn{};
    if (dmax > 0.0) {
        for (std::size_t i = 0; i < red.d.size(); ++i) dn[i] = red.d[i] / dmax;
    }

    const double rr = red.r * red.r;
    const double geom = std::max({red.r, norm(red.outer_a), norm(red.apex), norm(red.outer_c)});
    const double abs_floor = 1e-9 * geom * geom * geom;

    std::vector<Point> world;
    const double ct = std::cos(-red.rotation);
    const double st = std::sin(-red.rotation);
    for (double x : roots) {
        const double num = ((dn[0] * x + dn[1]) * x + dn[2]) * x + dn[3];
        const double den = (dn[4] * x + dn[5]) * x + dn[6];
        std::vector<double> ys;
        if (std::abs(den) >= 1e-9 && dmax > 0.0) {
            ys.push_back(-num / den);
        } else {
            const double y = std::sqrt(std::max(rr - x * x, 0.0));
            ys.push_back(y);
            if (y > 0.0) ys.push_back(-y);
        }
        for (double y : ys) {
            if (std::abs(x * x + y * y - rr) > 1e-7 * rr) continue;
            // Reject the sign-spurious roots introduced by squaring: the
            // unsquared equal-angle equation must hold with matching signs.
            const double la = red.a[0] * x + red.a[1] * y + red.a[2];
            const double lb = red.b[0] * x + red.b[1] * y + red.b[2];
            if (la < -abs_floor || lb < -abs_floor) continue;
            const double lhs = std::sqrt(std::max(la, 0.0)) * (red.a[3] * x + red.a[4] * y + red.a[5]);
            const double rhs = std::sqrt(std::max(lb, 0.0)) * (red.b[3] * x + red.b[4] * y + red.b[5]);
            if (std::abs(lhs - rhs) > 1e-6 * std::max(std::abs(lhs), std::abs(rhs)) + abs_floor) {
                continue;
            }
            // The candidate lives on the boundary circle by construction, but
            // the linear y-recovery drifts off it by root error; project back
            // so the returned point never leaves the displacement disk.
            const double m = std::hypot(x, y);
            const double onto = m > 0.0 ? red.r / m : 1.0;
            const Point scaled{red.scale * (onto * x), red.scale * (onto * y)};
            world.push_back(rotate(scaled, ct, st) + p);
        }
    }
    return world;
}

DisplacementResult solve_degree3(Point p, Point a, Point b, Point c, double r) {
    const std::array<Point, 3> neighbors{a, b, c};
    std::vector<Candidate> candidates;
    candidates.reserve(16);

    // Fermat point, when reachable. In the obtuse case the nominal optimum is
    // a neighbor itself; scoring discards it as degenerate.
    try {
        const FermatResult f = fermat_point(a, b, c);
        if (distance(p, f.point) <= r) {
            candidates.push_back({f.point, Method::fermat});
        }
    } catch (const std::invalid_argument&) {
        // Collinear neighbors: no Fermat candidate.
    }

    // Boundary candidates where two of the three incident angles are equal.
    const std::array<std::array<Point, 3>, 3> apex_choices{{
        {b, a, c},  // apex a
        {a, b, c},  // apex b
        {a, c, b},  // apex c
    }};
    for (const auto& [u, ap, w] : apex_choices) {
        for (const Point& cand : solve_equal_pair(p, u, ap, w, r)) {
            candidates.push_back({cand, Method::equal_pair_quartic});
        }
    }

    // Pairwise two-neighbor optima. The pair's own optimum may sit where the
    // third neighbor crushes the minimum, so when the tangent construction
    // applies, every probed boundary point joins the pool: the pair angle can
    // have a second local maximum (other side of the line through the pair)
    // and that runner-up is sometimes the best spot for all three angles.
    const std::array<std::pair<Point, Point>, 3> pairs{{{a, b}, {a, c}, {b, c}}};
    for (const auto& [u, v] : pairs) {
        if (distance(u, v) <= kCoincidentTol) continue;
        const DisplacementResult d2 = solve_degree2(p, u, v, r);
        if (!d2.degenerate) {
            candidates.push_back({d2.p_star, Method::pairwise_max_angle});
        }
        if (d2.method == Method::tangent_circle) {
            for (const Point& q : max_angle_point(p, u, v, r).stationary_points) {
                candidates.push_back({q, Method::pairwise_max_angle});
            }
        }
    }

    candidates.push_back({p, Method::unchanged});
    return pick_best(p, neighbors, candidates);
}

DisplacementResult solve_grid(Point p, std::span<const Point> neighbors, double r,
                              const GridParams& grid) {
    if (neighbors.empty()) {
        throw std::invalid_argument("solve_grid: neighbors must be nonempty");
    }
    if (!(grid.delta_ratio > 0.0) || grid.delta_ratio > 1.0) {
        throw std::invalid_argument("solve_grid: delta_ratio must lie in (0, 1]");
    }
    const double delta = grid.delta_ratio * r;
    const int n = static_cast<int>(std::floor(r / delta + 1e-9));

    bool found = false;
    double best_score = -1.0;
    double best_dist = 0.0;
    Point best{};
    for (int i = -n; i <= n; ++i) {
        for (int j = -n; j <= n; ++j) {
            const Point off{i * delta, j * delta};
            const double d = norm(off);
            if (d > r * (1.0 + 1e-12)) continue;
            const Point q = p + off;
            const double s = candidate_score(q, neighbors);
            if (s < 0.0) continue;
            const bool better =
                !found || s > best_score ||
                (s == best_score && (d < best_dist || (d == best_dist && lex_less(q, best))));
            if (better) {
                found = true;
                best_score = s;
                best_dist = d;
                best = q;
            }
        }
    }
    if (!found) {
        return {p, 0.0, Method::unchanged, true};
    }
    return {best, best_score, Method::grid, false};
}

DisplacementResult solve(const DisplacementQuery& query, const GridParams& grid) {
    validate_finite(query.p, "solve");
    for (const Point& n : query.neighbors) validate_finite(n, "solve");
    if (!(query.r > 0.0) || !std::isfinite(query.r)) {
        throw std::invalid_argument("solve: radius must be positive and finite");
    }

    const std::vector<Point> merged = dedupe_neighbors(query.neighbors);
    const std::size_t k = merged.size();
    if (k == 0) {
        return {query.p, kTwoPi, Method::unchanged, false};
    }
    if (k == 1) {
        if (distance(merged[0], query.p) <= kCoincidentTol) {
            return {query.p, 0.0, Method::unchanged, true};
        }
        return {query.p, kTwoPi, Method::unchanged, false};
    }
    if (k == 2) {
        return solve_degree2(query.p, merged[0], merged[1], query.r);
    }
    if (k == 3) {
        return solve_degree3(query.p, merged[0], merged[1], merged[2], query.r);
    }
    return solve_grid(query.p, merged, query.r, grid);
}

}  // namespace angleopt
