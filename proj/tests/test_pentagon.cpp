#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "strutgeo/geometry.hpp"
#include "strutgeo/pentagon.hpp"

using namespace strutgeo;

namespace {
const double kPi = std::acos(-1.0);

PentagonParams params(double a, double b, double g) { return PentagonParams{a, b, g}; }
}  // namespace

TEST_CASE("embedding invariants") {
    const PentagonParams p = params(1.40, 1.35, 1.20);
    const auto [A, B, C, E, F] = pentagon_points(p);

    CHECK(norm(B) == 0.0);  // B anchors the origin
    CHECK(dist(E, Point{std::cos(p.gamma), std::sin(p.gamma)}) <= 1e-15);
    CHECK(dist(F, Point{-std::cos(p.gamma), std::sin(p.gamma)}) <= 1e-15);

    // the four unit struts
    CHECK(dist(A, E) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(dist(B, E) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(dist(B, F) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(dist(C, F) == doctest::Approx(1.0).epsilon(1e-14));

    // chord lengths against the closed forms
    CHECK(dist(A, B) == doctest::Approx(2.0 * std::cos(p.alpha)).epsilon(1e-14));
    CHECK(dist(B, C) == doctest::Approx(2.0 * std::cos(p.beta)).epsilon(1e-14));
    CHECK(dist(E, F) == doctest::Approx(2.0 * std::cos(p.gamma)).epsilon(1e-14));
    CHECK(dist(F, A) == doctest::Approx(std::sqrt(strut_chord_f(p.alpha, p.gamma))).epsilon(1e-13));
    CHECK(dist(C, E) == doctest::Approx(std::sqrt(strut_chord_f(p.beta, p.gamma))).epsilon(1e-13));

    CHECK(p.theta() == doctest::Approx(kPi - 2.0 * p.gamma).epsilon(1e-15));
}

TEST_CASE("feasible box membership") {
    CHECK(params(kPi / 3, kPi / 3, kPi / 3).in_omega());
    CHECK(params(kPi / 2, kPi / 3, kPi / 2).in_omega());  // cos sum = 1/2 boundary
    CHECK_FALSE(params(1.55, 1.55, 1.4).in_omega());      // cos sum below 1/2
    CHECK_FALSE(params(0.9, 1.2, 1.2).in_omega());        // alpha below pi/3
    CHECK_FALSE(params(1.2, 1.2, 1.7).in_omega());        // gamma above pi/2

    CHECK(params(kPi / 2, kPi / 3, 1.1).on_omega1());
    CHECK_FALSE(params(kPi / 3, kPi / 3, 1.1).on_omega1());
}

TEST_CASE("three perimeter forms agree and match the geometry") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> box(kPi / 3.0, kPi / 2.0);
    int checked = 0;
    while (checked < 40) {
        const PentagonParams p = params(box(rng), box(rng), box(rng));
        if (!p.in_omega()) continue;
        ++checked;
        const double a = perimeter_closed_form(p, PerimeterForm::A);
        const double b = perimeter_closed_form(p, PerimeterForm::B);
        const double c = perimeter_closed_form(p, PerimeterForm::C);
        CHECK(std::abs(a - b) <= 1e-12);
        CHECK(std::abs(a - c) <= 1e-12);

        const ConvexPolygon hull = build_pentagon(p);
        if (hull.size() == 5) CHECK(std::abs(perimeter(hull) - a) <= 1e-9);
    }
}

TEST_CASE("stationarity function") {
    // D(alpha, 0) = -sin(alpha)
    for (double a = 0.1; a < 1.5; a += 0.2) {
        CHECK(stationarity_D(a, 0.0) == doctest::Approx(-std::sin(a)).epsilon(1e-12));
    }
    const ExtremalConstants ec = extremal_constants();
    CHECK(std::abs(stationarity_D(ec.alpha0, ec.theta0)) <= 1e-9);
}

TEST_CASE("root curve of the stationarity equation") {
    CHECK(g_curve(kPi / 3.0) == doctest::Approx(kPi / 3.0).epsilon(1e-12));
    CHECK(g_curve(5.0 * kPi / 12.0) == doctest::Approx(kPi / 3.0).epsilon(1e-12));
    CHECK(g_curve(0.8) == doctest::Approx(kPi / 3.0));  // flat extension below pi/3

    const ExtremalConstants ec = extremal_constants();
    CHECK(g_curve(ec.alpha0) == doctest::Approx(ec.theta0).epsilon(1e-10));
    CHECK(g_curve(ec.alpha0) < kPi / 3.0);  // a genuine dip

    for (int i = 0; i <= 20; ++i) {
        const double a = kPi / 3.0 + (5.0 * kPi / 12.0 - kPi / 3.0) * i / 20.0;
        CHECK(std::abs(stationarity_D(a, g_curve(a))) <= 1e-9);
    }
}

TEST_CASE("extremal constants") {
    const ExtremalConstants ec = extremal_constants();
    CHECK(std::abs(ec.theta0 - 0.9630621725) <= 1e-8);
    CHECK(std::abs(ec.alpha0 - 1.159593548) <= 1e-8);
    const double closed = std::acos(std::sqrt(24.0 - 3.0 * std::sqrt(37.0)) / 6.0);
    CHECK(ec.alpha0 == doctest::Approx(closed).epsilon(1e-12));
    CHECK(std::atan(theta0_tangent_radical()) == doctest::Approx(ec.theta0).epsilon(1e-10));
}

TEST_CASE("substitution polynomials") {
    const double r = std::sqrt(3.0 / 5.0);
    CHECK(std::abs(u3_poly(r, r)) <= 1e-14);          // the symmetric slice point
    CHECK(std::abs(v3_poly(1.0 / std::sqrt(3.0))) <= 1e-11);
    CHECK(std::abs(quartic_z1(1.0)) <= 1e-14);        // exact root

    const auto f = u5_factors(0.3, 0.7);
    CHECK(f[0] == doctest::Approx(0.3 * 0.7 + 0.7 - 0.3 + 1.0).epsilon(1e-14));
    CHECK(f[1] == doctest::Approx(0.3 * 0.7 - 0.7 + 0.3 + 1.0).epsilon(1e-14));
}

TEST_CASE("case-1 catalogue") {
    const Case1Catalogue c1 = case1_critical_points();
    REQUIRE(c1.z1_roots.size() == 4);
    const double expected[] = {-0.1024023606, 0.2263621549, 1.0, 2.876040206};
    for (int i = 0; i < 4; ++i) {
        CHECK(std::abs(c1.z1_roots[static_cast<std::size_t>(i)] - expected[i]) <= 1e-8);
        CHECK(std::abs(quartic_z1(c1.z1_roots[static_cast<std::size_t>(i)])) <= 1e-9);
    }
    REQUIRE(c1.v3_roots.size() == 1);
    CHECK(std::abs(c1.v3_roots[0] - 1.0 / std::sqrt(3.0)) <= 1e-10);

    REQUIRE(c1.points.size() == 2);
    CHECK(std::abs(c1.points[0].perimeter - 3.0) <= 1e-9);
    CHECK(std::abs(c1.points[1].perimeter - 3.002605955) <= 1e-9);
    const double quarter = std::acos(0.25);
    for (const CriticalPoint& cp : c1.points) {
        CHECK(cp.kind == CriticalKind::case1_interior);
        CHECK(std::abs(cp.params.alpha - quarter) <= 1e-9);
        CHECK(std::abs(cp.params.beta - quarter) <= 1e-9);
        CHECK(std::abs(cp.substitution[0] - std::sqrt(3.0 / 5.0)) <= 1e-9);
    }
}

TEST_CASE("case-2 catalogue") {
    const auto pts = case2_critical_points();
    REQUIRE(pts.size() == 4);
    // sorted by (perimeter, alpha): symmetric 3, symmetric 3.0026..., asymmetric pair
    CHECK(std::abs(pts[0].perimeter - 3.0) <= 1e-9);
    CHECK(std::abs(pts[1].perimeter - 3.0026059551) <= 1e-9);
    CHECK(std::abs(pts[2].perimeter - 3.0084591776) <= 1e-9);
    CHECK(std::abs(pts[3].perimeter - 3.0084591776) <= 1e-9);

    // the asymmetric pair swaps (x, y) and shares z
    CHECK(std::abs(pts[2].substitution[0] - pts[3].substitution[1]) <= 1e-9);
    CHECK(std::abs(pts[2].substitution[1] - pts[3].substitution[0]) <= 1e-9);
    CHECK(std::abs(pts[2].substitution[2] - pts[3].substitution[2]) <= 1e-9);

    for (const CriticalPoint& cp : pts) {
        CHECK(cp.kind == CriticalKind::case2_boundary_omega1);
        CHECK(cp.params.on_omega1(1e-9));
        CHECK(std::abs(cp.u3_residual) <= 1e-12);
        CHECK(std::abs(cp.crit_residual[0]) <= 1e-10);
        CHECK(std::abs(cp.crit_residual[1]) <= 1e-10);
        CHECK(std::abs(std::tan(cp.params.gamma) - cp.substitution[2]) <= 1e-12);
    }
}

TEST_CASE("equality pattern classification") {
    CHECK(classify_equality_pattern(params(kPi / 3, kPi / 3, kPi / 3)) ==
          EqualityPattern::triangle_ec_fa);
    CHECK(classify_equality_pattern(params(kPi / 3, kPi / 2, kPi / 3)) ==
          EqualityPattern::triangle_b_eq_c);
    CHECK(classify_equality_pattern(params(kPi / 2, kPi / 3, kPi / 3)) ==
          EqualityPattern::triangle_b_eq_a);
    CHECK(classify_equality_pattern(special_pentagon_params()) ==
          EqualityPattern::special_pentagon);

    const double a = 1.2;
    const double b = std::acos(0.5 - std::cos(a));
    CHECK(classify_equality_pattern(params(a, b, kPi / 2)) == EqualityPattern::quad_family);

    // perturbations within tolerance still classify
    CHECK(classify_equality_pattern(params(a + 3e-5, b, kPi / 2 - 3e-5), 1e-4) ==
          EqualityPattern::quad_family);
    CHECK(classify_equality_pattern(params(1.2, 1.2, 1.2)) == EqualityPattern::none);

    // each pattern really sits at perimeter 3
    for (const PentagonParams& p :
         {params(kPi / 3, kPi / 3, kPi / 3), params(kPi / 3, kPi / 2, kPi / 3),
          params(kPi / 2, kPi / 3, kPi / 3), params(a, b, kPi / 2), special_pentagon_params()}) {
        CHECK(perimeter_closed_form(p) == doctest::Approx(3.0).epsilon(1e-12));
    }
}

TEST_CASE("closed-form gradient matches finite differences") {
    std::mt19937_64 rng(555);
    std::uniform_real_distribution<double> box(kPi / 3.0 + 0.05, kPi / 2.0 - 0.05);
    const double h = 1e-6;
    int checked = 0;
    while (checked < 8) {
        const PentagonParams p = params(box(rng), box(rng), box(rng));
        if (std::cos(p.alpha) + std::cos(p.beta) < 0.52) continue;
        ++checked;
        const auto grad = gradient_closed_form(p);
        const double base[3] = {p.alpha, p.beta, p.gamma};
        for (int k = 0; k < 3; ++k) {
            double lo[3] = {base[0], base[1], base[2]};
            double hi[3] = {base[0], base[1], base[2]};
            lo[k] -= h;
            hi[k] += h;
            const double fd = (perimeter_closed_form(params(hi[0], hi[1], hi[2])) -
                               perimeter_closed_form(params(lo[0], lo[1], lo[2]))) /
                              (2.0 * h);
            CHECK(std::abs(grad[static_cast<std::size_t>(k)] - fd) <= 1e-6);
        }
    }

    // gamma-partial vanishes at the special pentagon (interior in gamma)
    const auto g0 = gradient_closed_form(special_pentagon_params());
    CHECK(std::abs(g0[2]) <= 1e-12);
}

TEST_CASE("special pentagon metrics") {
    const PentagonParams sp = special_pentagon_params();
    const double quarter = std::acos(0.25);
    CHECK(sp.alpha == doctest::Approx(quarter).epsilon(1e-15));
    CHECK(perimeter_closed_form(sp) == doctest::Approx(3.0).epsilon(1e-13));

    const auto [A, B, C, E, F] = pentagon_points(sp);
    CHECK(dist(A, C) == doctest::Approx(7.0 / 8.0).epsilon(1e-12));
    CHECK(build_pentagon(sp).size() == 5);
}

TEST_CASE("coarse minimum over the feasible box") {
    const OmegaMinimum om = verify_min_over_omega(24, 1e-7);
    CHECK(std::abs(om.min_perimeter - 3.0) <= 1e-6);
    CHECK(classify_equality_pattern(om.argmin, 1e-4) != EqualityPattern::none);
    CHECK_FALSE(om.near_minimizers.empty());
}
