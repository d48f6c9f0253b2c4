#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

namespace angleopt {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Two positions closer than this are treated as coincident throughout the
/// solvers (duplicate-neighbor merging, degenerate-angle detection).
inline constexpr double kCoincidentTol = 1e-12;

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
    friend Point operator*(Point p, double s) { return {s * p.x, s * p.y}; }
    friend Point operator/(Point p, double s) { return {p.x / s, p.y / s}; }
    friend bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Point p) { return p.x * p.x + p.y * p.y; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double distance(Point a, Point b) { return norm(a - b); }

/// Strict (x, then y) ordering used for deterministic tie-breaking.
inline bool lex_less(Point a, Point b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
}

/// Direct similarity map  y = scale * R(rotation) * x + translation.
/// scale is always positive; there is no reflection component.
class SimilarityTransform {
  public:
    SimilarityTransform() = default;
    SimilarityTransform(double rotation, double scale, Point translation);

    Point apply(Point p) const;
    /// Lengths scale uniformly: the image of a circle of radius r has radius
    /// apply_to_radius(r).
    double apply_to_radius(double r) const { return scale_ * r; }
    SimilarityTransform inverse() const;

    double rotation() const { return rotation_; }
    double scale() const { return scale_; }
    Point translation() const { return translation_; }

  private:
    double rotation_ = 0.0;
    double scale_ = 1.0;
    double cos_ = 1.0;
    double sin_ = 0.0;
    Point translation_{0.0, 0.0};
};

/// Sorted circular gaps between the directions q->neighbor, in radians.
/// The gaps sum to 2*pi. A single neighbor yields the single gap {2*pi}.
/// Throws std::invalid_argument if neighbors is empty or one of them
/// coincides with q.
std::vector<double> angular_gaps(Point q, std::span<const Point> neighbors);

/// Smallest angle between two angularly consecutive edges incident to q.
/// Equals min(angular_gaps(...)); 2*pi for a single neighbor.
double min_incident_angle(Point q, std::span<const Point> neighbors);

struct DiskSegmentIntersection {
    enum class Kind { empty, point, segment };
    Kind kind = Kind::empty;
    // For kind == point both endpoints are equal; for kind == empty they are
    // meaningless.
    Point a{};
    Point b{};
};

/// Clips the closed segment [a,b] against the closed disk around center with
/// radius r. Tangency is classified with tolerance 1e-9 * r.
DiskSegmentIntersection segment_disk_intersection(Point a, Point b, Point center, double r);

/// The similarity mapping a -> (0,-1) and b -> (0,1). Its scale is 2/|ab|.
SimilarityTransform canonical_two_point_frame(Point a, Point b);

}  // namespace angleopt
