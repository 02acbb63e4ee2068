#pragma once

#include <map>
#include <string>

#include "strutgeo/geometry.hpp"

namespace strutgeo {

/// Regular n-gon with the given side length, centered at the origin, first vertex on
/// the positive x-axis.
ConvexPolygon regular_polygon(int n, double side = 1.0);

/// Isosceles triangle with apex angle `alpha` at C = (0,0) and equal sides
/// |CA| = |CB| = 2cos(alpha), bisector along +x. Has the unit-strut property iff
/// alpha <= pi/3.
ConvexPolygon narrow_isosceles(double alpha);

/// Fan n-gon: regular triangle A1A2A3 of side 1+eps with extra vertices A4..An on the
/// radius-(1+eps) arc around A1, successive central angle `alpha`. Requires n >= 4,
/// eps > 0, 0 < alpha < min(pi/n, eps). Perimeter (1+eps)(3 + 2(n-3)sin(alpha/2)).
ConvexPolygon fan_ngon(int n, double eps, double alpha);

/// Regular triangle of side 1+a with corners truncated by side-a triangles: a
/// centrally-quasi hexagon with sides alternating a and 1-a whose difference body is
/// the regular unit hexagon. a in [0, 1/2]; a=0 is the unit triangle, a=1/2 the
/// regular hexagon of side 1/2. Apex-up placement centered at the origin so D(P)
/// aligns with regular_polygon(6, 1).
ConvexPolygon snub_triangle(double a);

/// The perimeter-3 pentagon (alpha=beta=gamma=arccos(1/4)) scaled by `s`; s=8 gives
/// the pentagon with all ten pairwise vertex distances integral.
ConvexPolygon special_pentagon_polygon(double s = 1.0);

struct ConstructionSpec {
    std::string kind;  // regular_polygon | narrow_isosceles | fan_ngon | snub_triangle
                       // | special_pentagon | integer_pentagon
    std::map<std::string, double> params;
};

/// Dispatch by spec; throws std::invalid_argument for unknown kinds or bad parameters.
ConvexPolygon construct(const ConstructionSpec& spec);

}  // namespace strutgeo
