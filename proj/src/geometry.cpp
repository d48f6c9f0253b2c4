#include "angleopt/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace angleopt {

SimilarityTransform::SimilarityTransform(double rotation, double scale, Point translation)
    : rotation_(rotation),
      scale_(scale),
      cos_(std::cos(rotation)),
      sin_(std::sin(rotation)),
      translation_(translation) {
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw std::invalid_argument("similarity transform requires a positive finite scale");
    }
}

Point SimilarityTransform::apply(Point p) const {
    return {scale_ * (cos_ * p.x - sin_ * p.y) + translation_.x,
            scale_ * (sin_ * p.x + cos_ * p.y) + translation_.y};
}

SimilarityTransform SimilarityTransform::inverse() const {
    // y = s R x + t  =>  x = (1/s) R^-1 (y - t)
    const double inv_scale = 1.0 / scale_;
    const double c = std::cos(-rotation_);
    const double s = std::sin(-rotation_);
    const Point t{-inv_scale * (c * translation_.x - s * translation_.y),
                  -inv_scale * (s * translation_.x + c * translation_.y)};
    return SimilarityTransform(-rotation_, inv_scale, t);
}

std::vector<double> angular_gaps(Point q, std::span<const Point> neighbors) {
    if (neighbors.empty()) {
        throw std::invalid_argument("angular_gaps: no neighbors");
    }
    std::vector<double> dirs;
    dirs.reserve(neighbors.size());
    for (const Point& n : neighbors) {
        const Point d = n - q;
        if (norm(d) <= kCoincidentTol) {
            throw std::invalid_argument("angular_gaps: neighbor coincides with query point");
        }
        dirs.push_back(std::atan2(d.y, d.x));
    }
    if (dirs.size() == 1) {
        return {kTwoPi};
    }
    std::sort(dirs.begin(), dirs.end());
    std::vector<double> gaps;
    gaps.reserve(dirs.size());
    for (std::size_t i = 1; i < dirs.size(); ++i) {
        gaps.push_back(dirs[i] - dirs[i - 1]);
    }
    gaps.push_back(kTwoPi - (dirs.back() - dirs.front()));
    std::sort(gaps.begin(), gaps.end());
    return gaps;
}

double min_incident_angle(Point q, std::span<const Point> neighbors) {
    return angular_gaps(q, neighbors).front();
}

DiskSegmentIntersection segment_disk_intersection(Point a, Point b, Point center, double r) {
    if (distance(a, b) <= kCoincidentTol) {
        throw std::invalid_argument("segment_disk_intersection: segment endpoints coincide");
    }
    if (!(r > 0.0)) {
        throw std::invalid_argument("segment_disk_intersection: radius must be positive");
    }
    const double tol = 1e-9 * r;

    // |a + t(b-a) - center|^2 = r^2, restricted to t in [0,1].
    const Point d = b - a;
    const Point m = a - center;
    const double qa = norm2(d);
    const double qb = 2.0 * dot(d, m);
    const double qc = norm2(m) - r * r;

    // Closest approach of the segment to the center.
    const double t_near = std::clamp(-qb / (2.0 * qa), 0.0, 1.0);
    const Point p_near = a + t_near * d;
    const double near_dist = distance(p_near, center);

    const double disc = qb * qb - 4.0 * qa * qc;
    if (disc <= 0.0) {
        // Line misses or grazes the disk; a tangent touch within tolerance
        // still counts as a point contact.
        if (near_dist <= r + tol) {
            return {DiskSegmentIntersection::Kind::point, p_near, p_near};
        }
        return {};
    }

    const double sq = std::sqrt(disc);
    double t1 = (-qb - sq) / (2.0 * qa);
    double t2 = (-qb + sq) / (2.0 * qa);
    const double lo = std::max(t1, 0.0);
    const double hi = std::min(t2, 1.0);
    if (lo > hi) {
        // Chord lies outside the parameter range; an endpoint may still touch.
        if (near_dist <= r + tol) {
            return {DiskSegmentIntersection::Kind::point, p_near, p_near};
        }
        return {};
    }

    const Point pa = a + lo * d;
    const Point pb = a + hi * d;
    if (distance(pa, pb) <= tol) {
        const Point mid = 0.5 * (pa + pb);
        return {DiskSegmentIntersection::Kind::point, mid, mid};
    }
    return {DiskSegmentIntersection::Kind::segment, pa, pb};
}

SimilarityTransform canonical_two_point_frame(Point a, Point b) {
    const double len = distance(a, b);
    if (len <= kCoincidentTol) {
        throw std::invalid_argument("canonical_two_point_frame: points coincide");
    }
    const Point dir = b - a;
    // R must turn dir into the +y direction.
    const double rotation = kPi / 2.0 - std::atan2(dir.y, dir.x);
    const double scale = 2.0 / len;
    const Point mid = 0.5 * (a + b);
    const double c = std::cos(rotation);
    const double s = std::sin(rotation);
    const Point t{-scale * (c * mid.x - s * mid.y), -scale * (s * mid.x + c * mid.y)};
    return SimilarityTransform(rotation, scale, t);
}

}  // namespace angleopt
