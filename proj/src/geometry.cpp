#include "strutgeo/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace strutgeo {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

bool lex_less(Point a, Point b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
}

// Perpendicular-distance pop test: c is within eps of the line through a along (b-a),
// or makes a right turn.
bool not_left_turn(Point a, Point b, Point c, double eps) {
    Point u = b - a;
    return cross(u, c - a) <= eps * norm(u);
}

std::size_t bottommost_index(const std::vector<Point>& v) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i].y < v[best].y || (v[i].y == v[best].y && v[i].x < v[best].x)) best = i;
    }
    return best;
}

// Edge direction angle in [0, 2*pi).
double angle_key(Point v) {
    double a = std::atan2(v.y, v.x);
    if (a < 0) a += kTau;
    return a;
}

void check_finite(std::span<const Point> points) {
    for (const Point& p : points) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
            throw std::invalid_argument("polygon vertex is not finite");
        }
    }
}

}  // namespace

void Tolerances::validate() const {
    if (!(eps_geom > 0) || !(eps_contains > 0) || !(eps_check > 0)) {
        throw std::invalid_argument("tolerances must be positive");
    }
    if (eps_geom > eps_contains || eps_contains > eps_check) {
        throw std::invalid_argument("tolerances must satisfy eps_geom <= eps_contains <= eps_check");
    }
}

ConvexPolygon convex_hull(std::span<const Point> points, double eps_geom) {
    if (points.empty()) throw std::invalid_argument("convex_hull: no points");
    check_finite(points);

    std::vector<Point> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(), lex_less);
    // Dedup within eps_geom (sorted, so near-coincident points are adjacent in x).
    std::vector<Point> uniq;
    for (const Point& p : pts) {
        if (!uniq.empty() && dist(uniq.back(), p) <= eps_geom) continue;
        uniq.push_back(p);
    }
    if (uniq.size() == 1) return ConvexPolygon{{uniq[0]}};

    std::vector<Point> h(2 * uniq.size());
    std::size_t k = 0;
    for (const Point& p : uniq) {  // lower chain
        while (k >= 2 && not_left_turn(h[k - 2], h[k - 1], p, eps_geom)) --k;
        h[k++] = p;
    }
    std::size_t lower = k + 1;
    for (auto it = uniq.rbegin() + 1; it != uniq.rend(); ++it) {  // upper chain
        while (k >= lower && not_left_turn(h[k - 2], h[k - 1], *it, eps_geom)) --k;
        h[k++] = *it;
    }
    h.resize(k - 1);  // last point repeats the first

    // Wraparound collinearity can survive the two-chain pass; sweep until stable.
    bool changed = true;
    while (changed && h.size() > 2) {
        changed = false;
        for (std::size_t i = 0; i < h.size() && h.size() > 2; ++i) {
            std::size_t n = h.size();
            Point a = h[(i + n - 1) % n], b = h[i], c = h[(i + 1) % n];
            if (not_left_turn(a, b, c, eps_geom)) {
                h.erase(h.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }

    // Canonical start: lexicographically smallest vertex.
    std::size_t start = 0;
    for (std::size_t i = 1; i < h.size(); ++i) {
        if (lex_less(h[i], h[start])) start = i;
    }
    std::rotate(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(start), h.end());
    return ConvexPolygon{std::move(h)};
}

ConvexPolygon polygon_from_vertices(std::span<const Point> points, double eps_geom) {
    if (points.empty()) throw std::invalid_argument("polygon: empty vertex list");
    check_finite(points);

    // Drop consecutive duplicates (including the closing wrap) before validating.
    std::vector<Point> seq;
    for (const Point& p : points) {
        if (!seq.empty() && dist(seq.back(), p) <= eps_geom) continue;
        seq.push_back(p);
    }
    while (seq.size() > 1 && dist(seq.front(), seq.back()) <= eps_geom) seq.pop_back();

    ConvexPolygon hull = convex_hull(seq, eps_geom);
    if (hull.size() != seq.size() && seq.size() > 2) {
        // Some input vertex is not extreme: either reflex/interior or self-crossing.
        throw std::invalid_argument(
            "polygon: vertices do not describe a convex boundary (" +
            std::to_string(seq.size()) + " vertices, hull has " +
            std::to_string(hull.size()) + ")");
    }
    if (seq.size() > 2) {
        // The cyclic order must match the hull's (forward = CCW input, reversed = CW).
        std::size_t n = seq.size();
        std::size_t offset = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (dist(seq[i], hull.vertices[0]) <= 2 * eps_geom + 1e-15) { offset = i; break; }
        }
        if (offset == n) throw std::invalid_argument("polygon: vertex mismatch after normalization");
        bool fwd = true, rev = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (dist(seq[(offset + i) % n], hull.vertices[i]) > 2 * eps_geom + 1e-15) fwd = false;
            if (dist(seq[(offset + n - i) % n], hull.vertices[i]) > 2 * eps_geom + 1e-15) rev = false;
        }
        if (!fwd && !rev) {
            throw std::invalid_argument("polygon: vertices are convex but out of boundary order");
        }
    }
    return hull;
}

double perimeter(const ConvexPolygon& p) {
    std::size_t n = p.size();
    if (n < 2) return 0.0;
    if (n == 2) return 2.0 * dist(p.vertices[0], p.vertices[1]);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += dist(p.vertices[i], p.vertices[(i + 1) % n]);
    return sum;
}

double signed_area(const ConvexPolygon& p) {
    double a = 0.0;
    std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
        a += cross(p.vertices[i], p.vertices[(i + 1) % n]);
    }
    return 0.5 * a;
}

double dist_point_segment(Point q, Point a, Point b) {
    Point ab = b - a;
    double len2 = dot(ab, ab);
    if (len2 == 0.0) return dist(q, a);
    double t = std::clamp(dot(q - a, ab) / len2, 0.0, 1.0);
    return dist(q, a + t * ab);
}

bool contains_point(const ConvexPolygon& p, Point q, double tol) {
    std::size_t n = p.size();
    if (n == 0) return false;
    if (n == 1) return dist(q, p.vertices[0]) <= tol;
    if (n == 2) return dist_point_segment(q, p.vertices[0], p.vertices[1]) <= tol;
    for (std::size_t i = 0; i < n; ++i) {
        Point a = p.vertices[i], b = p.vertices[(i + 1) % n];
        Point u = b - a;
        if (cross(u, q - a) < -tol * norm(u)) return false;
    }
    return true;
}

double distance_to(const ConvexPolygon& p, Point q) {
    std::size_t n = p.size();
    if (n == 0) return std::numeric_limits<double>::infinity();
    if (n == 1) return dist(q, p.vertices[0]);
    if (n == 2) return dist_point_segment(q, p.vertices[0], p.vertices[1]);
    if (contains_point(p, q, 0.0)) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        best = std::min(best, dist_point_segment(q, p.vertices[i], p.vertices[(i + 1) % n]));
    }
    return best;
}

namespace {

// Cyclic edge vectors starting from the bottommost vertex; a segment contributes a
// forward and a backward edge, a point none.
std::vector<Point> edge_cycle_from_bottom(const ConvexPolygon& p, std::size_t& start) {
    start = bottommost_index(p.vertices);
    std::vector<Point> edges;
    std::size_t n = p.size();
    if (n < 2) return edges;
    edges.reserve(n == 2 ? 2 : n);
    if (n == 2) {
        Point a = p.vertices[start], b = p.vertices[1 - start];
        edges.push_back(b - a);
        edges.push_back(a - b);
        return edges;
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = (start + i) % n;
        edges.push_back(p.vertices[(j + 1) % n] - p.vertices[j]);
    }
    return edges;
}

}  // namespace

ConvexPolygon minkowski_sum(const ConvexPolygon& p, const ConvexPolygon& q) {
    if (p.size() == 0 || q.size() == 0) throw std::invalid_argument("minkowski_sum: empty polygon");
    std::size_t ps = 0, qs = 0;
    std::vector<Point> pe = edge_cycle_from_bottom(p, ps);
    std::vector<Point> qe = edge_cycle_from_bottom(q, qs);

    // Merge the two angle-sorted edge fans. Starting from the bottommost vertex the
    // CCW edge angles increase within [0, 2*pi), so a plain key merge suffices.
    std::vector<Point> merged;
    merged.reserve(pe.size() + qe.size());
    std::size_t i = 0, j = 0;
    while (i < pe.size() || j < qe.size()) {
        if (j == qe.size() || (i < pe.size() && angle_key(pe[i]) <= angle_key(qe[j]))) {
            merged.push_back(pe[i++]);
        } else {
            merged.push_back(qe[j++]);
        }
    }

    Point cur = p.vertices[ps] + q.vertices[qs];
    std::vector<Point> out;
    out.reserve(merged.size() + 1);
    out.push_back(cur);
    for (const Point& e : merged) {
        cur = cur + e;
        out.push_back(cur);
    }
    return convex_hull(out);  // normalizes and merges collinear runs from parallel edges
}

ConvexPolygon reflect(const ConvexPolygon& p) {
    std::vector<Point> v;
    v.reserve(p.size());
    for (const Point& a : p.vertices) v.push_back(-a);
    return convex_hull(v);
}

ConvexPolygon scale(const ConvexPolygon& p, double s) {
    if (!(s > 0)) throw std::invalid_argument("scale: factor must be positive");
    ConvexPolygon out = p;
    for (Point& v : out.vertices) v = s * v;
    return out;
}

ConvexPolygon translate(const ConvexPolygon& p, Point t) {
    ConvexPolygon out = p;
    for (Point& v : out.vertices) v = v + t;
    return out;
}

ConvexPolygon difference_body(const ConvexPolygon& p) {
    return minkowski_sum(p, reflect(p));
}

ConvexPolygon central_symmetral(const ConvexPolygon& p) {
    return scale(difference_body(p), 0.5);
}

std::optional<Point> symmetry_center(const ConvexPolygon& p, double tol) {
    std::size_t n = p.size();
    if (n == 0) return std::nullopt;
    if (n == 1) return p.vertices[0];
    if (n % 2 != 0) return std::nullopt;
    std::size_t m = n / 2;
    Point c = 0.5 * (p.vertices[0] + p.vertices[m]);
    for (std::size_t i = 0; i < m; ++i) {
        Point mid = 0.5 * (p.vertices[i] + p.vertices[i + m]);
        if (dist(mid, c) > tol) return std::nullopt;
    }
    return c;
}

double hausdorff_distance(const ConvexPolygon& p, const ConvexPolygon& q) {
    double h = 0.0;
    for (const Point& v : p.vertices) h = std::max(h, distance_to(q, v));
    for (const Point& v : q.vertices) h = std::max(h, distance_to(p, v));
    return h;
}

bool approx_equal(const ConvexPolygon& p, const ConvexPolygon& q, double tol) {
    if (p.size() != q.size()) return false;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (dist(p.vertices[i], q.vertices[i]) > tol) return false;
    }
    return true;
}

}  // namespace strutgeo
