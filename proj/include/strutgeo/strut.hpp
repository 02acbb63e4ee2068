#pragma once

#include <array>
#include <optional>
#include <vector>

#include "strutgeo/geometry.hpp"

namespace strutgeo {

/// Witness that side `side_index` has an l-strut: a point of the polygon at distance
/// exactly l from both side endpoints.
struct StrutCertificate {
    int side_index = 0;
    Point apex;
    double l = 1.0;
};

struct DeltaReport {
    bool holds = false;
    std::vector<StrutCertificate> certificates;  // one per side when holds
    std::vector<int> failing_sides;
};

struct DeltaSReport {
    bool holds = false;
    // rectangles[i] holds the tested rectangle for side i; empty when the side is
    // longer than 2 (no unit-circumradius rectangle exists).
    std::vector<std::optional<std::array<Point, 4>>> rectangles;
    std::vector<int> failing_sides;
};

/// Intersection of the two radius-l circles around a and b: two points for |ab| < 2l,
/// the midpoint for |ab| = 2l (within eps_geom), none for |ab| > 2l. The apex on the
/// left of a->b comes first. Throws on l <= 0 or coincident endpoints.
std::vector<Point> strut_apexes(Point a, Point b, double l, double eps_geom = 1e-9);

/// Certificate for side (v[i], v[i+1]) if an apex lies in the polygon (closed
/// containment, eps_contains slack). Tie-break: the apex on the interior side wins.
std::optional<StrutCertificate> side_has_strut(const ConvexPolygon& p, int side_index,
                                               double l, const Tolerances& tol = {});

/// Every side has an l-strut. Requires a non-degenerate polygon (>= 3 vertices).
DeltaReport has_delta_property(const ConvexPolygon& p, double l = 1.0,
                               const Tolerances& tol = {});

/// Rectangle KLMN inscribed in the unit circle about the origin with KL = NM = v,
/// returned in CCW order. Requires 0 < |v| <= 2 (+eps slack); |v| = 2 degenerates to a
/// doubled segment.
std::array<Point, 4> inscribed_rectangle(Point side_vector, double eps_geom = 1e-9);

/// Delta-S: for every side AB of a polygon centrally symmetric about the origin, the
/// rectangle inscribed in S(O,1) with one side parallel and equal to AB fits in the
/// polygon. Throws unless symmetry_center(p) is the origin within eps_check.
DeltaSReport has_delta_s_property(const ConvexPolygon& p, const Tolerances& tol = {});

}  // namespace strutgeo
