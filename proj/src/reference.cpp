#include "strutgeo/reference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace strutgeo::reference {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<Point> boundary_samples(const ConvexPolygon& p, int per_edge) {
    const std::size_t n = p.vertices.size();
    if (n == 1) return {p.vertices[0]};
    std::vector<Point> out;
    const std::size_t edges = n == 2 ? 1 : n;  // a segment has one geometric edge
    out.reserve(edges * static_cast<std::size_t>(per_edge) + 1);
    for (std::size_t i = 0; i < edges; ++i) {
        const Point a = p.vertices[i];
        const Point b = p.vertices[(i + 1) % n];
        for (int j = 0; j < per_edge; ++j) {
            const double t = static_cast<double>(j) / per_edge;
            out.push_back(a + t * (b - a));
        }
    }
    out.push_back(p.vertices[n - 1]);  // last vertex is only a t=0 sample of its own edge
    return out;
}

double directed_hausdorff(const std::vector<Point>& samples, const ConvexPolygon& q) {
    double worst = 0.0;
    for (const Point& s : samples) worst = std::max(worst, distance_to(q, s));
    return worst;
}

Point area_centroid(const ConvexPolygon& p) {
    const std::size_t n = p.vertices.size();
    if (n < 3) {
        Point c{0.0, 0.0};
        for (const Point& v : p.vertices) c = c + v;
        return (1.0 / static_cast<double>(n)) * c;
    }
    double area2 = 0.0;
    Point c{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = p.vertices[i];
        const Point b = p.vertices[(i + 1) % n];
        const double w = cross(a, b);
        area2 += w;
        c = c + w * (a + b);
    }
    if (std::abs(area2) < 1e-300) {
        Point m{0.0, 0.0};
        for (const Point& v : p.vertices) m = m + v;
        return (1.0 / static_cast<double>(n)) * m;
    }
    return (1.0 / (3.0 * area2)) * c;
}

ConvexPolygon rotate_about(const ConvexPolygon& p, Point pivot, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    std::vector<Point> pts;
    pts.reserve(p.vertices.size());
    for (const Point& v : p.vertices) {
        const Point d = v - pivot;
        pts.push_back({pivot.x + c * d.x - s * d.y, pivot.y + s * d.x + c * d.y});
    }
    return convex_hull(pts);
}

}  // namespace

ConvexPolygon hull_of_sums(const ConvexPolygon& p, const ConvexPolygon& q) {
    std::vector<Point> sums;
    sums.reserve(p.vertices.size() * q.vertices.size());
    for (const Point& a : p.vertices)
        for (const Point& b : q.vertices) sums.push_back(a + b);
    return convex_hull(sums);
}

double sampled_hausdorff(const ConvexPolygon& p, const ConvexPolygon& q, int samples_per_edge) {
    if (samples_per_edge < 1) throw std::invalid_argument("sampled_hausdorff: need >= 1 sample");
    const std::vector<Point> sp = boundary_samples(p, samples_per_edge);
    const std::vector<Point> sq = boundary_samples(q, samples_per_edge);
    return std::max(directed_hausdorff(sp, q), directed_hausdorff(sq, p));
}

ConvexPolygon random_convex_polygon(std::mt19937_64& rng, int n_points, double radius) {
    if (n_points < 3) throw std::invalid_argument("random_convex_polygon: need n_points >= 3");
    if (!(radius > 0.0)) throw std::invalid_argument("random_convex_polygon: need radius > 0");
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n_points));
    for (int i = 0; i < n_points; ++i) {
        const double r = radius * std::sqrt(unit_draw(rng));
        const double phi = 2.0 * kPi * unit_draw(rng);
        pts.push_back({r * std::cos(phi), r * std::sin(phi)});
    }
    return convex_hull(pts);
}

ConvexPolygon perturbed_unit_polygon(std::mt19937_64& rng, int n, double radial_jitter) {
    if (n < 3) throw std::invalid_argument("perturbed_unit_polygon: need n >= 3");
    if (!(radial_jitter >= 0.0) || radial_jitter > 0.2)
        throw std::invalid_argument("perturbed_unit_polygon: radial_jitter must be in [0, 0.2]");
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double r = 1.0 + radial_jitter * (2.0 * unit_draw(rng) - 1.0);
        const double phi =
            2.0 * kPi * k / n + 0.2 * (2.0 * kPi / n) * (2.0 * unit_draw(rng) - 1.0);
        pts.push_back({r * std::cos(phi), r * std::sin(phi)});
    }
    ConvexPolygon p = convex_hull(pts);
    if (static_cast<int>(p.vertices.size()) != n)
        return perturbed_unit_polygon(rng, n, radial_jitter);  // rare fold, redraw
    return p;
}

bool has_parallel_sides(const ConvexPolygon& p, double eps) {
    const std::size_t n = p.vertices.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point ei = p.vertices[(i + 1) % n] - p.vertices[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            const Point ej = p.vertices[(j + 1) % n] - p.vertices[j];
            if (std::abs(cross(ei, ej)) <= eps * norm(ei) * norm(ej)) return true;
        }
    }
    return false;
}

Point random_interior_point(std::mt19937_64& rng, const ConvexPolygon& p) {
    if (p.vertices.size() < 3)
        throw std::invalid_argument("random_interior_point: polygon is degenerate");
    double total = 0.0;
    Point q{0.0, 0.0};
    for (const Point& v : p.vertices) {
        const double w = 0.05 + unit_draw(rng);  // bounded away from 0: strictly interior
        total += w;
        q = q + w * v;
    }
    return (1.0 / total) * q;
}

double aligned_hausdorff(const ConvexPolygon& p, const ConvexPolygon& target) {
    const Point ct = area_centroid(target);
    const Point cp = area_centroid(p);
    const ConvexPolygon moved = translate(p, ct - cp);

    const int coarse = 256;
    double best_angle = 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < coarse; ++i) {
        const double a = 2.0 * kPi * i / coarse;
        const double h = hausdorff_distance(rotate_about(moved, ct, a), target);
        if (h < best) {
            best = h;
            best_angle = a;
        }
    }
    // golden-section refinement in the winning bracket
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = best_angle - 2.0 * kPi / coarse;
    double hi = best_angle + 2.0 * kPi / coarse;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = hausdorff_distance(rotate_about(moved, ct, x1), target);
    double f2 = hausdorff_distance(rotate_about(moved, ct, x2), target);
    for (int it = 0; it < 80 && hi - lo > 1e-12; ++it) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = hausdorff_distance(rotate_about(moved, ct, x1), target);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = hausdorff_distance(rotate_about(moved, ct, x2), target);
        }
    }
    return std::min({best, f1, f2});
}

}  // namespace strutgeo::reference
