#include "strutgeo/strut.hpp"

#include <cmath>
#include <stdexcept>

namespace strutgeo {

std::vector<Point> strut_apexes(Point a, Point b, double l, double eps_geom) {
    if (!(l > 0)) throw std::invalid_argument("strut_apexes: l must be positive");
    double d = dist(a, b);
    if (d <= eps_geom) throw std::invalid_argument("strut_apexes: coincident endpoints");
    if (d > 2 * l + eps_geom) return {};
    Point mid = 0.5 * (a + b);
    if (d >= 2 * l) return {mid};  // within eps of the limiting case
    double h = std::sqrt(l * l - 0.25 * d * d);
    Point n = (1.0 / d) * Point{-(b.y - a.y), b.x - a.x};  // unit left normal of a->b
    return {mid + h * n, mid - h * n};
}

std::optional<StrutCertificate> side_has_strut(const ConvexPolygon& p, int side_index,
                                               double l, const Tolerances& tol) {
    std::size_t n = p.size();
    if (n < 2) throw std::invalid_argument("side_has_strut: polygon has no sides");
    if (side_index < 0 || static_cast<std::size_t>(side_index) >= n) {
        throw std::invalid_argument("side_has_strut: side index out of range");
    }
    Point a = p.vertices[static_cast<std::size_t>(side_index)];
    Point b = p.vertices[(static_cast<std::size_t>(side_index) + 1) % n];
    std::vector<Point> apexes = strut_apexes(a, b, l, tol.eps_geom);
    // For a CCW polygon the interior lies left of each directed side, so the left apex
    // (listed first) is preferred when both qualify.
    for (const Point& apex : apexes) {
        if (contains_point(p, apex, tol.eps_contains)) {
            return StrutCertificate{side_index, apex, l};
        }
    }
    return std::nullopt;
}

DeltaReport has_delta_property(const ConvexPolygon& p, double l, const Tolerances& tol) {
    if (p.size() < 3) throw std::invalid_argument("delta property needs a non-degenerate polygon");
    tol.validate();
    DeltaReport rep;
    rep.holds = true;
    for (int i = 0; i < static_cast<int>(p.size()); ++i) {
        if (auto cert = side_has_strut(p, i, l, tol)) {
            rep.certificates.push_back(*cert);
        } else {
            rep.holds = false;
            rep.failing_sides.push_back(i);
        }
    }
    if (!rep.holds) rep.certificates.clear();
    return rep;
}

std::array<Point, 4> inscribed_rectangle(Point side_vector, double eps_geom) {
    double s = norm(side_vector);
    if (!(s > 0)) throw std::invalid_argument("inscribed_rectangle: zero side vector");
    if (s > 2 + eps_geom) {
        throw std::invalid_argument("inscribed_rectangle: side exceeds circle diameter");
    }
    double h = std::sqrt(std::max(0.0, 4.0 - s * s));
    Point u = (1.0 / s) * side_vector;
    Point w{-u.y, u.x};  // left normal: KLMN winds CCW
    Point k = -0.5 * (s * u) - 0.5 * (h * w);
    Point lpt = k + s * u;
    Point m = lpt + h * w;
    Point nn = k + h * w;
    return {k, lpt, m, nn};
}

DeltaSReport has_delta_s_property(const ConvexPolygon& p, const Tolerances& tol) {
    if (p.size() < 3) throw std::invalid_argument("delta-S needs a non-degenerate polygon");
    tol.validate();
    std::optional<Point> c = symmetry_center(p, tol.eps_check);
    if (!c || norm(*c) > tol.eps_check) {
        throw std::invalid_argument("delta-S requires central symmetry about the origin");
    }
    DeltaSReport rep;
    rep.holds = true;
    std::size_t n = p.size();
    rep.rectangles.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        Point v = p.vertices[(i + 1) % n] - p.vertices[i];
        if (norm(v) > 2 + tol.eps_geom) {
            rep.holds = false;
            rep.failing_sides.push_back(static_cast<int>(i));
            continue;  // rectangles[i] stays empty
        }
        std::array<Point, 4> rect = inscribed_rectangle(v, tol.eps_geom);
        rep.rectangles[i] = rect;
        bool inside = true;
        for (const Point& corner : rect) {
            if (!contains_point(p, corner, tol.eps_contains)) { inside = false; break; }
        }
        if (!inside) {
            rep.holds = false;
            rep.failing_sides.push_back(static_cast<int>(i));
        }
    }
    return rep;
}

}  // namespace strutgeo
