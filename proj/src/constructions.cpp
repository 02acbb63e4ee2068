#include "strutgeo/constructions.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "strutgeo/pentagon.hpp"

namespace strutgeo {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double require_param(const ConstructionSpec& spec, const std::string& key) {
    auto it = spec.params.find(key);
    if (it == spec.params.end())
        throw std::invalid_argument("construct: missing parameter '" + key + "' for kind '" +
                                    spec.kind + "'");
    return it->second;
}

double param_or(const ConstructionSpec& spec, const std::string& key, double fallback) {
    auto it = spec.params.find(key);
    return it == spec.params.end() ? fallback : it->second;
}

}  // namespace

ConvexPolygon regular_polygon(int n, double side) {
    if (n < 3) throw std::invalid_argument("regular_polygon: need n >= 3");
    if (!(side > 0.0)) throw std::invalid_argument("regular_polygon: need side > 0");
    const double r = side / (2.0 * std::sin(kPi / n));
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double phi = 2.0 * kPi * k / n;
        pts.push_back({r * std::cos(phi), r * std::sin(phi)});
    }
    return convex_hull(pts);
}

ConvexPolygon narrow_isosceles(double alpha) {
    if (!(alpha > 0.0) || !(alpha < kPi / 2.0))
        throw std::invalid_argument("narrow_isosceles: need 0 < alpha < pi/2");
    const double leg = 2.0 * std::cos(alpha);
    const Point c{0.0, 0.0};
    const Point a{leg * std::cos(alpha / 2.0), leg * std::sin(alpha / 2.0)};
    const Point b{leg * std::cos(alpha / 2.0), -leg * std::sin(alpha / 2.0)};
    return convex_hull(std::vector<Point>{c, a, b});
}

ConvexPolygon fan_ngon(int n, double eps, double alpha) {
    if (n < 4) throw std::invalid_argument("fan_ngon: need n >= 4");
    if (!(eps > 0.0)) throw std::invalid_argument("fan_ngon: need eps > 0");
    if (!(alpha > 0.0) || !(alpha < std::min(kPi / n, eps)))
        throw std::invalid_argument("fan_ngon: need 0 < alpha < min(pi/n, eps)");
    const double s = 1.0 + eps;
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n));
    pts.push_back({0.0, 0.0});
    pts.push_back({s, 0.0});
    for (int i = 3; i <= n; ++i) {
        const double phi = kPi / 3.0 + (i - 3) * alpha;
        pts.push_back({s * std::cos(phi), s * std::sin(phi)});
    }
    ConvexPolygon p = convex_hull(pts);
    if (static_cast<int>(p.vertices.size()) != n)
        throw std::invalid_argument("fan_ngon: parameters produce a degenerate polygon");
    return p;
}

ConvexPolygon snub_triangle(double a) {
    if (!(a >= 0.0) || !(a <= 0.5))
        throw std::invalid_argument("snub_triangle: need 0 <= a <= 1/2");
    // Apex-up triangle of side 1+a, circumradius (1+a)/sqrt(3); cutting each corner at
    // distance a along both edges leaves sides alternating a and 1-a.
    const double r = (1.0 + a) / std::sqrt(3.0);
    const Point v[3] = {{r * std::cos(kPi / 2.0), r * std::sin(kPi / 2.0)},
                        {r * std::cos(7.0 * kPi / 6.0), r * std::sin(7.0 * kPi / 6.0)},
                        {r * std::cos(11.0 * kPi / 6.0), r * std::sin(11.0 * kPi / 6.0)}};
    const double t = a / (1.0 + a);
    std::vector<Point> pts;
    for (int i = 0; i < 3; ++i) {
        const Point& vi = v[i];
        const Point& vn = v[(i + 1) % 3];
        const Point& vp = v[(i + 2) % 3];
        pts.push_back({vi.x + t * (vn.x - vi.x), vi.y + t * (vn.y - vi.y)});
        pts.push_back({vi.x + t * (vp.x - vi.x), vi.y + t * (vp.y - vi.y)});
    }
    return convex_hull(pts);
}

ConvexPolygon special_pentagon_polygon(double s) {
    if (!(s > 0.0)) throw std::invalid_argument("special_pentagon_polygon: need s > 0");
    return scale(build_pentagon(special_pentagon_params()), s);
}

ConvexPolygon construct(const ConstructionSpec& spec) {
    if (spec.kind == "regular_polygon") {
        const double n = require_param(spec, "n");
        return regular_polygon(static_cast<int>(std::lround(n)), param_or(spec, "side", 1.0));
    }
    if (spec.kind == "narrow_isosceles") {
        return narrow_isosceles(require_param(spec, "alpha"));
    }
    if (spec.kind == "fan_ngon") {
        const double n = require_param(spec, "n");
        return fan_ngon(static_cast<int>(std::lround(n)), require_param(spec, "eps"),
                        require_param(spec, "alpha"));
    }
    if (spec.kind == "snub_triangle") {
        return snub_triangle(require_param(spec, "a"));
    }
    if (spec.kind == "special_pentagon") {
        return special_pentagon_polygon(param_or(spec, "scale", 1.0));
    }
    if (spec.kind == "integer_pentagon") {
        return special_pentagon_polygon(8.0);
    }
    throw std::invalid_argument("construct: unknown kind '" + spec.kind + "'");
}

}  // namespace strutgeo
