#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <vector>

namespace strutgeo {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator-(Point a) { return {-a.x, -a.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double dist(Point a, Point b) { return norm(a - b); }

/// Geometric comparison tolerances. Invariant: 0 < eps_geom <= eps_contains <= eps_check.
struct Tolerances {
    double eps_geom = 1e-9;      // vertex dedup / collinearity
    double eps_contains = 1e-9;  // closed point-in-polygon slack
    double eps_check = 1e-7;     // analytic identity checks

    void validate() const;  // throws std::invalid_argument on violation
};

/// Convex polygon in canonical form: CCW, lexicographically smallest vertex first,
/// consecutive collinear vertices merged. Degenerate instances (a single point or a
/// segment) are permitted and carry 1 or 2 vertices.
struct ConvexPolygon {
    std::vector<Point> vertices;

    std::size_t size() const { return vertices.size(); }
    bool is_point() const { return vertices.size() == 1; }
    bool is_segment() const { return vertices.size() == 2; }
    bool degenerate() const { return vertices.size() < 3; }
};

/// Convex hull (monotone chain) with eps-tolerant collinearity merging.
/// Result is canonical; collinear input collapses to a segment, coincident input to a point.
ConvexPolygon convex_hull(std::span<const Point> points, double eps_geom = 1e-9);

/// Validates that `points` traverse a convex polygon boundary (either orientation) and
/// returns the canonical form. Throws std::invalid_argument with a diagnostic otherwise.
ConvexPolygon polygon_from_vertices(std::span<const Point> points, double eps_geom = 1e-9);

/// Closed-traversal length: 0 for a point, 2|AB| for a segment.
double perimeter(const ConvexPolygon& p);

double signed_area(const ConvexPolygon& p);

/// Closed containment with slack: true when q is within `tol` of the polygon
/// (boundary points count as inside).
bool contains_point(const ConvexPolygon& p, Point q, double tol);

/// Euclidean distance from q to the polygon (0 when inside).
double distance_to(const ConvexPolygon& p, Point q);

double dist_point_segment(Point q, Point a, Point b);

/// Minkowski sum by merging edge vectors in angular order (linear time).
ConvexPolygon minkowski_sum(const ConvexPolygon& p, const ConvexPolygon& q);

/// Point reflection through the origin, renormalized.
ConvexPolygon reflect(const ConvexPolygon& p);

ConvexPolygon scale(const ConvexPolygon& p, double s);
ConvexPolygon translate(const ConvexPolygon& p, Point t);

/// D(P) = P + (-P). Centrally symmetric about the origin; perimeter doubles.
ConvexPolygon difference_body(const ConvexPolygon& p);

/// (1/2)P + (1/2)(-P). Preserves perimeter.
ConvexPolygon central_symmetral(const ConvexPolygon& p);

/// Center of point symmetry, if any. A polygon with an odd vertex count (other than a
/// single point) has none.
std::optional<Point> symmetry_center(const ConvexPolygon& p, double tol);

/// Exact Hausdorff distance between convex polygons (directed maxima occur at vertices).
double hausdorff_distance(const ConvexPolygon& p, const ConvexPolygon& q);

/// Vertex-wise comparison of canonical polygons.
bool approx_equal(const ConvexPolygon& p, const ConvexPolygon& q, double tol);

}  // namespace strutgeo
