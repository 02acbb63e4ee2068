#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "strutgeo/constructions.hpp"
#include "strutgeo/geometry.hpp"
#include "strutgeo/reference.hpp"

using namespace strutgeo;

namespace {
const double kPi = std::acos(-1.0);

ConvexPolygon unit_square() {
    const Point v[] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    return polygon_from_vertices(v);
}
}  // namespace

TEST_CASE("convex hull canonical form") {
    // shuffled square corners + interior point + duplicate + edge midpoint
    const Point pts[] = {{1, 1}, {0, 0}, {0.5, 0.5}, {1, 0}, {0, 1}, {0, 0}, {0.5, 0.0}};
    const ConvexPolygon h = convex_hull(pts);
    REQUIRE(h.size() == 4);
    CHECK(h.vertices[0].x == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(h.vertices[0].y == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(signed_area(h) == doctest::Approx(1.0));  // CCW -> positive
    // same polygon from a rotated boundary listing canonicalizes identically
    const Point rot[] = {{1, 1}, {0, 1}, {0, 0}, {1, 0}};
    CHECK(approx_equal(h, polygon_from_vertices(rot), 1e-12));
    // clockwise listing is accepted and reversed
    const Point cw[] = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};
    CHECK(approx_equal(h, polygon_from_vertices(cw), 1e-12));
}

TEST_CASE("hull degeneracies") {
    CHECK_THROWS_AS((void)convex_hull({}), std::invalid_argument);

    const Point one[] = {{2, 3}};
    const ConvexPolygon p1 = convex_hull(one);
    CHECK(p1.is_point());
    CHECK(perimeter(p1) == 0.0);
    CHECK(signed_area(p1) == 0.0);

    const Point same[] = {{2, 3}, {2, 3}, {2, 3}};
    CHECK(convex_hull(same).is_point());

    const Point collinear[] = {{0, 0}, {3, 0}, {1, 0}, {2, 0}};
    const ConvexPolygon seg = convex_hull(collinear);
    REQUIRE(seg.is_segment());
    CHECK(dist(seg.vertices[0], seg.vertices[1]) == doctest::Approx(3.0));
    CHECK(perimeter(seg) == doctest::Approx(6.0));  // closed traversal: there and back
    CHECK(signed_area(seg) == doctest::Approx(0.0));
}

TEST_CASE("polygon_from_vertices rejects bad traversals") {
    const Point dent[] = {{0, 0}, {2, 0}, {1, 0.2}, {2, 2}, {0, 2}};
    CHECK_THROWS_AS((void)polygon_from_vertices(dent), std::invalid_argument);
    const Point bowtie[] = {{0, 0}, {1, 1}, {1, 0}, {0, 1}};
    CHECK_THROWS_AS((void)polygon_from_vertices(bowtie), std::invalid_argument);
    const Point seg[] = {{0, 0}, {1, 1}};
    CHECK(polygon_from_vertices(seg).is_segment());
}

TEST_CASE("perimeter, area, containment, distance") {
    const ConvexPolygon sq = unit_square();
    CHECK(perimeter(sq) == doctest::Approx(4.0));
    CHECK(signed_area(sq) == doctest::Approx(1.0));

    CHECK(contains_point(sq, {0.5, 0.5}, 1e-12));
    CHECK(contains_point(sq, {1.0, 0.5}, 1e-12));  // boundary is inside
    CHECK(contains_point(sq, {1.0 + 1e-10, 0.5}, 1e-9));
    CHECK_FALSE(contains_point(sq, {1.0 + 1e-10, 0.5}, 1e-12));
    CHECK_FALSE(contains_point(sq, {2.0, 0.5}, 1e-9));

    CHECK(distance_to(sq, {0.5, 0.5}) == 0.0);
    CHECK(distance_to(sq, {2.0, 0.5}) == doctest::Approx(1.0));
    CHECK(distance_to(sq, {2.0, 2.0}) == doctest::Approx(std::sqrt(2.0)));
    CHECK(dist_point_segment({0.5, 1.0}, {0, 0}, {1, 0}) == doctest::Approx(1.0));
    CHECK(dist_point_segment({-1.0, 0.0}, {0, 0}, {1, 0}) == doctest::Approx(1.0));
}

TEST_CASE("minkowski sum against the hull-of-sums oracle") {
    const ConvexPolygon sq = unit_square();
    // square + square = doubled square
    CHECK(approx_equal(minkowski_sum(sq, sq), scale(sq, 2.0), 1e-12));

    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 25; ++trial) {
        const ConvexPolygon a = reference::random_convex_polygon(rng, 3 + trial % 9);
        const ConvexPolygon b = reference::random_convex_polygon(rng, 3 + (trial * 7) % 9, 2.0);
        const ConvexPolygon fast = minkowski_sum(a, b);
        const ConvexPolygon oracle = reference::hull_of_sums(a, b);
        CHECK(approx_equal(fast, oracle, 1e-9));
        CHECK(perimeter(fast) == doctest::Approx(perimeter(a) + perimeter(b)).epsilon(1e-12));
    }

    // degenerate operands
    const Point segv[] = {{0, 0}, {1, 0}};
    const ConvexPolygon seg = polygon_from_vertices(segv);
    const ConvexPolygon swept = minkowski_sum(sq, seg);
    CHECK(approx_equal(swept, reference::hull_of_sums(sq, seg), 1e-12));
    CHECK(signed_area(swept) == doctest::Approx(2.0));  // 2x1 rectangle
    const Point onev[] = {{3, -2}};
    const ConvexPolygon pt = polygon_from_vertices(onev);
    CHECK(approx_equal(minkowski_sum(sq, pt), translate(sq, {3, -2}), 1e-12));
}

TEST_CASE("affine helpers") {
    const ConvexPolygon sq = unit_square();
    const ConvexPolygon r = reflect(sq);
    CHECK(signed_area(r) == doctest::Approx(1.0));  // reflection keeps CCW canonical form
    CHECK(r.vertices[0].x == doctest::Approx(-1.0));
    CHECK(approx_equal(scale(sq, 0.5), ConvexPolygon{{{0, 0}, {0.5, 0}, {0.5, 0.5}, {0, 0.5}}}, 1e-12));
    CHECK(approx_equal(translate(translate(sq, {1, 2}), {-1, -2}), sq, 1e-12));
}

TEST_CASE("difference body and central symmetral laws") {
    const ConvexPolygon tri = regular_polygon(3, 1.0);
    const ConvexPolygon d = difference_body(tri);
    CHECK(d.size() == 6);
    CHECK(perimeter(d) == doctest::Approx(2.0 * perimeter(tri)).epsilon(1e-12));
    const auto center = symmetry_center(d, 1e-9);
    REQUIRE(center.has_value());
    CHECK(norm(*center) <= 1e-12);

    const ConvexPolygon half = central_symmetral(tri);
    CHECK(perimeter(half) == doctest::Approx(perimeter(tri)).epsilon(1e-12));
    CHECK(approx_equal(half, scale(d, 0.5), 1e-12));

    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 10; ++trial) {
        const ConvexPolygon p = reference::random_convex_polygon(rng, 5 + trial, 2.0);
        const ConvexPolygon dp = difference_body(p);
        CHECK(perimeter(dp) == doctest::Approx(2.0 * perimeter(p)).epsilon(1e-12));
        CHECK(approx_equal(dp, reference::hull_of_sums(p, reflect(p)), 1e-9));
    }
}

TEST_CASE("symmetry_center detection") {
    CHECK_FALSE(symmetry_center(regular_polygon(3, 1.0), 1e-9).has_value());
    CHECK_FALSE(symmetry_center(regular_polygon(5, 1.0), 1e-9).has_value());

    const ConvexPolygon hexagon = regular_polygon(6, 1.0);
    auto c = symmetry_center(hexagon, 1e-9);
    REQUIRE(c.has_value());
    CHECK(norm(*c) <= 1e-12);

    c = symmetry_center(translate(hexagon, {2, -1}), 1e-9);
    REQUIRE(c.has_value());
    CHECK(dist(*c, {2, -1}) <= 1e-12);

    // a hexagon that is combinatorially even but not symmetric
    const Point skew[] = {{0, 0}, {2, 0}, {3, 1}, {2.5, 2}, {1, 2.2}, {-0.5, 1}};
    CHECK_FALSE(symmetry_center(polygon_from_vertices(skew), 1e-9).has_value());
}

TEST_CASE("hausdorff distance") {
    const ConvexPolygon sq = unit_square();
    CHECK(hausdorff_distance(sq, sq) == doctest::Approx(0.0));
    CHECK(hausdorff_distance(sq, translate(sq, {0.3, 0})) == doctest::Approx(0.3));
    CHECK(hausdorff_distance(sq, scale(sq, 2.0)) ==
          doctest::Approx(std::sqrt(2.0)));  // far corner (2,2) vs (1,1)

    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 8; ++trial) {
        const ConvexPolygon a = reference::random_convex_polygon(rng, 6, 1.5);
        const ConvexPolygon b = reference::random_convex_polygon(rng, 7, 1.5);
        const double exact = hausdorff_distance(a, b);
        const double sampled = reference::sampled_hausdorff(a, b);
        CHECK(sampled <= exact + 1e-12);       // sampling can only miss the max
        CHECK(exact - sampled <= 2e-3);        // but not by much at 256/edge
    }
}

TEST_CASE("tolerance monotonicity is enforced") {
    Tolerances t;
    CHECK_NOTHROW(t.validate());
    t.eps_geom = 1e-8;  // now eps_geom > eps_contains
    CHECK_THROWS_AS(t.validate(), std::invalid_argument);
    t = Tolerances{};
    t.eps_check = 1e-10;  // below eps_contains
    CHECK_THROWS_AS(t.validate(), std::invalid_argument);
    t = Tolerances{};
    t.eps_geom = 0.0;
    CHECK_THROWS_AS(t.validate(), std::invalid_argument);
}

TEST_CASE("regular even polygons centered at the origin are symmetric") {
    for (int n : {4, 6, 8, 10, 12}) {
        const ConvexPolygon p = regular_polygon(n, 2.0 * std::sin(kPi / n));  // circumradius 1
        const auto c = symmetry_center(p, 1e-9);
        REQUIRE(c.has_value());
        CHECK(norm(*c) <= 1e-12);
        for (const Point& v : p.vertices) CHECK(norm(v) == doctest::Approx(1.0).epsilon(1e-12));
    }
}
