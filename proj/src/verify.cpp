#include "strutgeo/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "strutgeo/constructions.hpp"
#include "strutgeo/pentagon.hpp"
#include "strutgeo/polygon_io.hpp"
#include "strutgeo/reference.hpp"
#include "strutgeo/search.hpp"
#include "strutgeo/strut.hpp"

namespace strutgeo {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kPi3 = kPi / 3.0;
constexpr double kPi2 = kPi / 2.0;

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

struct Check {
    bool ok = true;
    std::string why;

    void require(bool cond, const std::string& msg) {
        if (!cond && ok) {
            ok = false;
            why = msg;
        }
    }
};

using CriterionFn = std::function<std::pair<bool, std::string>()>;

CriterionResult run_one(int id, const char* name, double time_limit, const CriterionFn& fn) {
    CriterionResult r;
    r.id = id;
    r.name = name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        auto [ok, detail] = fn();
        r.pass = ok;
        r.detail = detail;
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r.pass && time_limit > 0.0 && r.seconds > time_limit) {
        r.pass = false;
        r.detail += " [exceeded " + fmt("%.0f", time_limit) + " s limit]";
    }
    return r;
}

// ---- criterion 1: the three closed perimeter forms agree, and match the hull ----

std::pair<bool, std::string> criterion_forms() {
    double max_form_gap = 0.0;
    double max_geom_gap = 0.0;
    long geom_checked = 0;
    const int n = 50;
    for (int i = 0; i < n; ++i) {
        const double alpha = i * kPi2 / (n - 1);
        for (int j = 0; j < n; ++j) {
            const double beta = j * kPi2 / (n - 1);
            for (int k = 0; k < n; ++k) {
                const double gamma = (k + 1) * kPi2 / n;
                const PentagonParams p{alpha, beta, gamma};
                const double fa = perimeter_closed_form(p, PerimeterForm::A);
                const double fb = perimeter_closed_form(p, PerimeterForm::B);
                const double fc = perimeter_closed_form(p, PerimeterForm::C);
                max_form_gap =
                    std::max({max_form_gap, std::abs(fa - fb), std::abs(fa - fc)});

                const std::array<Point, 5> pts = pentagon_points(p);
                const ConvexPolygon hull = build_pentagon(p);
                if (hull.vertices.size() != 5) continue;
                int off = -1;
                for (int s = 0; s < 5; ++s) {
                    if (dist(hull.vertices[static_cast<std::size_t>(s)], pts[0]) <= 1e-9) {
                        off = s;
                        break;
                    }
                }
                if (off < 0) continue;
                bool in_order = true;
                for (int s = 0; s < 5; ++s) {
                    if (dist(hull.vertices[static_cast<std::size_t>((off + s) % 5)],
                             pts[static_cast<std::size_t>(s)]) > 1e-9) {
                        in_order = false;
                        break;
                    }
                }
                if (!in_order) continue;
                ++geom_checked;
                max_geom_gap = std::max(max_geom_gap, std::abs(perimeter(hull) - fa));
            }
        }
    }
    Check c;
    c.require(max_form_gap <= 1e-12, "form gap " + fmt("%.3e", max_form_gap) + " > 1e-12");
    // non-vacuousness floor: the convex-position subset must be a real sample,
    // not a handful of lucky corners (the wide grid leaves ~7k of 125k points)
    c.require(geom_checked >= 1000, "too few convex-position grid points");
    c.require(max_geom_gap <= 1e-7, "geometric gap " + fmt("%.3e", max_geom_gap) + " > 1e-7");
    std::string detail = "form gap " + fmt("%.2e", max_form_gap) + ", hull gap " +
                         fmt("%.2e", max_geom_gap) + " at " + std::to_string(geom_checked) +
                         "/125000 convex-position points";
    return {c.ok, c.ok ? detail : c.why + "; " + detail};
}

// ---- criterion 2: extremal constants and the stationarity curve ----

std::pair<bool, std::string> criterion_constants() {
    const ExtremalConstants ec = extremal_constants();
    Check c;
    c.require(std::abs(ec.theta0 - 0.9630621725) <= 1e-8,
              "theta0 " + fmt("%.12f", ec.theta0));
    c.require(std::abs(ec.alpha0 - 1.159593548) <= 1e-8, "alpha0 " + fmt("%.12f", ec.alpha0));
    c.require(std::abs(std::tan(ec.theta0) - theta0_tangent_radical()) <= 1e-8,
              "radical form disagrees with theta0");
    c.require(std::abs(g_curve(0.0) - kPi3) <= 1e-9, "g(0) != pi/3");
    c.require(std::abs(g_curve(5.0 * kPi / 12.0) - kPi3) <= 1e-9, "g(5pi/12) != pi/3");
    double max_resid = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double a = kPi3 + i * (5.0 * kPi / 12.0 - kPi3) / 49.0;
        max_resid = std::max(max_resid, std::abs(stationarity_D(a, g_curve(a))));
    }
    c.require(max_resid <= 1e-9, "stationarity residual " + fmt("%.3e", max_resid));
    std::string detail = "theta0=" + fmt("%.10f", ec.theta0) + ", alpha0=" +
                         fmt("%.10f", ec.alpha0) + ", max |D(a,g(a))|=" + fmt("%.2e", max_resid);
    return {c.ok, c.ok ? detail : c.why + "; " + detail};
}

// ---- criterion 3: critical-point catalogue ----

std::pair<bool, std::string> criterion_catalogue() {
    Check c;
    const Case1Catalogue c1 = case1_critical_points();
    const double expected_z1[4] = {-0.1024023606, 0.2263621549, 1.0, 2.876040206};
    c.require(c1.z1_roots.size() == 4,
              "quartic root count " + std::to_string(c1.z1_roots.size()));
    if (c1.z1_roots.size() == 4) {
        for (int i = 0; i < 4; ++i)
            c.require(std::abs(c1.z1_roots[static_cast<std::size_t>(i)] - expected_z1[i]) <= 1e-8,
                      "quartic root " + std::to_string(i) + " = " +
                          fmt("%.12f", c1.z1_roots[static_cast<std::size_t>(i)]));
    }
    c.require(c1.v3_roots.size() == 1 && std::abs(c1.v3_roots[0] - 1.0 / std::sqrt(3.0)) <= 1e-8,
              "V3 root list unexpected");
    c.require(c1.points.size() == 2, "case-1 point count " + std::to_string(c1.points.size()));
    if (c1.points.size() == 2) {
        c.require(std::abs(c1.points[0].perimeter - 3.0) <= 1e-8,
                  "case-1 perimeter[0] " + fmt("%.12f", c1.points[0].perimeter));
        c.require(std::abs(c1.points[1].perimeter - 3.002605955) <= 1e-8,
                  "case-1 perimeter[1] " + fmt("%.12f", c1.points[1].perimeter));
    }

    const std::vector<CriticalPoint> c2 = case2_critical_points();
    // identification tolerance 1e-6: the four critical points are ~1e-1 apart, and the
    // reference z digit string is reliable only to ~1.3e-7 (the converged root is
    // 2.2428074161..., confirmed at 40-digit precision; x, y, and the perimeter all
    // round exactly to their quoted digits, z alone does not).
    const double tx = 0.6289625043, ty = 0.9351779532, tz = 2.242807541, idtol = 1e-6;
    int found = 0;
    for (const CriticalPoint& cp : c2) {
        const auto& s = cp.substitution;
        const bool direct =
            std::abs(s[0] - tx) <= idtol && std::abs(s[1] - ty) <= idtol && std::abs(s[2] - tz) <= idtol;
        const bool swapped =
            std::abs(s[0] - ty) <= idtol && std::abs(s[1] - tx) <= idtol && std::abs(s[2] - tz) <= idtol;
        if (!direct && !swapped) continue;
        ++found;
        c.require(std::abs(cp.perimeter - 3.008459178) <= 1e-7,
                  "asymmetric perimeter " + fmt("%.12f", cp.perimeter));
        c.require(std::abs(cp.u3_residual) <= 1e-9, "U3 residual " + fmt("%.3e", cp.u3_residual));
        c.require(std::abs(cp.crit_residual[0]) <= 1e-7 && std::abs(cp.crit_residual[1]) <= 1e-7,
                  "stationarity residual " + fmt("%.3e", std::max(std::abs(cp.crit_residual[0]),
                                                                  std::abs(cp.crit_residual[1]))));
    }
    c.require(found == 2, "asymmetric solution pair found " + std::to_string(found) + "/2");
    std::string detail = std::to_string(c2.size()) + " case-2 points, asymmetric pair matched";
    return {c.ok, c.ok ? detail : c.why + "; " + detail};
}

// ---- criterion 4: minimum over Omega and the equality patterns ----

std::pair<bool, std::string> criterion_omega_min() {
    const OmegaMinimum om = verify_min_over_omega(60, 1e-6);
    Check c;
    c.require(std::abs(om.min_perimeter - 3.0) <= 1e-6,
              "min " + fmt("%.10f", om.min_perimeter));
    std::map<EqualityPattern, int> histogram;
    for (const auto& [params, value] : om.near_minimizers) {
        const EqualityPattern pat = classify_equality_pattern(params, 1e-4);
        ++histogram[pat];
        if (pat == EqualityPattern::none && c.ok)
            c.require(false, "unclassified minimizer (alpha=" + fmt("%.6f", params.alpha) +
                                 ", beta=" + fmt("%.6f", params.beta) +
                                 ", gamma=" + fmt("%.6f", params.gamma) +
                                 ", value=" + fmt("%.9f", value) + ")");
    }
    c.require(!om.near_minimizers.empty(), "no near-minimizers reported");
    std::string detail = "min=" + fmt("%.9f", om.min_perimeter) + ", " +
                         std::to_string(om.near_minimizers.size()) + " minimizers:";
    for (const auto& [pat, count] : histogram)
        detail += std::string(" ") + to_string(pat) + "=" + std::to_string(count);
    return {c.ok, c.ok ? detail : c.why + "; " + detail};
}

// ---- criterion 5: the special and integer pentagons ----

std::pair<bool, std::string> criterion_special_pentagon() {
    const PentagonParams sp = special_pentagon_params();
    const std::array<Point, 5> pts = pentagon_points(sp);
    Check c;
    c.require(std::abs(perimeter(build_pentagon(sp)) - 3.0) <= 1e-9, "perimeter != 3");
    c.require(std::abs(perimeter_closed_form(sp) - 3.0) <= 1e-9, "closed form != 3");
    c.require(std::abs(dist(pts[0], pts[2]) - 7.0 / 8.0) <= 1e-9,
              "|AC| = " + fmt("%.12f", dist(pts[0], pts[2])));

    // circumcenter from three of the vertices, then all five radii must agree
    const Point a = pts[1], b = pts[3], d = pts[4];
    const double det = 2.0 * cross(b - a, d - a);
    const double la = dot(a, a), lb = dot(b, b), ld = dot(d, d);
    const Point cc{((lb - la) * (d.y - a.y) - (ld - la) * (b.y - a.y)) / det,
                   ((ld - la) * (b.x - a.x) - (lb - la) * (d.x - a.x)) / det};
    const double r0 = dist(cc, pts[0]);
    double max_radius_gap = 0.0;
    for (const Point& p : pts) max_radius_gap = std::max(max_radius_gap, std::abs(dist(cc, p) - r0));
    c.require(max_radius_gap <= 1e-9, "concyclic gap " + fmt("%.3e", max_radius_gap));

    double max_int_gap = 0.0;
    std::multiset<long> lengths;
    for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j) {
            const double dij = 8.0 * dist(pts[static_cast<std::size_t>(i)],
                                          pts[static_cast<std::size_t>(j)]);
            max_int_gap = std::max(max_int_gap, std::abs(dij - std::round(dij)));
            lengths.insert(std::lround(dij));
        }
    }
    c.require(max_int_gap <= 1e-7, "integrality gap " + fmt("%.3e", max_int_gap));
    std::string dist_list;
    for (long v : lengths) dist_list += (dist_list.empty() ? "" : ",") + std::to_string(v);
    std::string detail = "concyclic to " + fmt("%.2e", max_radius_gap) + ", x8 distances {" +
                         dist_list + "} integral to " + fmt("%.2e", max_int_gap);
    return {c.ok, c.ok ? detail : c.why + "; " + detail};
}

// ---- criterion 6: difference-body laws on seeded random polygons ----

std::pair<bool, std::string> criterion_difference_body(const Tolerances& tol) {
    std::mt19937_64 rng(20260816ULL);
    Check c;
    int delta_checked = 0;
    double max_perim_gap = 0.0, max_center_gap = 0.0;
    for (int i = 0; i < 100 && c.ok; ++i) {
        ConvexPolygon p;
        if (i < 50) {
            p = reference::perturbed_unit_polygon(rng, 3 + i % 8, 0.03);
        } else {
            const double radius = i % 3 == 0 ? 0.5 : (i % 3 == 1 ? 1.0 : 3.0);
            p = reference::random_convex_polygon(rng, 4 + i % 9, radius);
        }
        if (p.vertices.size() < 3) continue;
        const ConvexPolygon d = difference_body(p);
        const double perim_gap = std::abs(perimeter(d) - 2.0 * perimeter(p));
        max_perim_gap = std::max(max_perim_gap, perim_gap);
        c.require(perim_gap <= 1e-9, "perimeter law gap " + fmt("%.3e", perim_gap) +
                                         " at sample " + std::to_string(i));
        const auto center = symmetry_center(d, 1e-9);
        c.require(center.has_value(), "no symmetry center at sample " + std::to_string(i));
        if (center) {
            max_center_gap = std::max(max_center_gap, norm(*center));
            c.require(norm(*center) <= 1e-9, "off-origin center at sample " + std::to_string(i));
        }
        c.require(approx_equal(d, reference::hull_of_sums(p, reflect(p)), 1e-9),
                  "hull-of-sums mismatch at sample " + std::to_string(i));
        if (has_delta_property(p, 1.0, tol).holds && !reference::has_parallel_sides(p)) {
            ++delta_checked;
            c.require(has_delta_s_property(d, tol).holds,
                      "difference body lost the rectangle property at sample " + std::to_string(i));
        }
    }
    c.require(delta_checked >= 10, "only " + std::to_string(delta_checked) +
                                       " strut-property samples without parallel sides");
    std::string detail = "perimeter law to " + fmt("%.2e", max_perim_gap) + ", center to " +
                         fmt("%.2e", max_center_gap) + ", rectangle law on " +
                         std::to_string(delta_checked) + " samples";
    return {c.ok, c.ok ? detail : c.why + "; " + detail};
}

// ---- criterion 7: construction fixtures ----

std::pair<bool, std::string> criterion_constructions(const Tolerances& tol) {
    Check c;
    for (double a : {0.2, 0.5, kPi3})
        c.require(has_delta_property(narrow_isosceles(a), 1.0, tol).holds,
                  "isosceles apex " + fmt("%.4f", a) + " should have struts");
    for (double a : {kPi3 + 0.05, 1.2})
        c.require(!has_delta_property(narrow_isosceles(a), 1.0, tol).holds,
                  "isosceles apex " + fmt("%.4f", a) + " should fail");

    const struct {
        int n;
        double eps, alpha;
    } fans[] = {{4, 0.01, 0.005}, {7, 0.05, 0.01}, {10, 1e-3, 1e-4}};
    for (const auto& f : fans) {
        const ConvexPolygon p = fan_ngon(f.n, f.eps, f.alpha);
        c.require(has_delta_property(p, 1.0, tol).holds,
                  "fan n=" + std::to_string(f.n) + " should have struts");
        const double expected = (1.0 + f.eps) * (3.0 + 2.0 * (f.n - 3) * std::sin(f.alpha / 2.0));
        c.require(std::abs(perimeter(p) - expected) <= 1e-9,
                  "fan n=" + std::to_string(f.n) + " perimeter gap " +
                      fmt("%.3e", std::abs(perimeter(p) - expected)));
    }

    const ConvexPolygon hexagon = regular_polygon(6, 1.0);
    double max_hausdorff = 0.0;
    for (double a : {0.0, 0.2, 0.5}) {
        const ConvexPolygon p = snub_triangle(a);
        const double h = hausdorff_distance(difference_body(p), hexagon);
        max_hausdorff = std::max(max_hausdorff, h);
        c.require(h <= 1e-9, "snub a=" + fmt("%.1f", a) + " difference body off by " + fmt("%.3e", h));
        if (a > 0.0)
            c.require(!has_delta_property(p, 1.0, tol).holds,
                      "snub a=" + fmt("%.1f", a) + " should fail the strut property");
    }
    std::string detail = "isosceles/fan/snub fixtures hold; snub difference bodies within " +
                         fmt("%.2e", max_hausdorff) + " of the unit hexagon";
    return {c.ok, c.ok ? detail : c.why + "; " + detail};
}

// ---- criterion 8: search evidence ----

std::pair<bool, std::string> criterion_search(const Tolerances& tol) {
    Check c;
    std::string values;
    SearchConfig base;
    base.seed = 42;
    base.iterations = 200000;
    base.restarts = 4;
    base.tol = tol;

    for (int n : {3, 4, 5}) {
        SearchConfig cfg = base;
        cfg.n_vertices = n;
        const SearchReport rep = minimize_delta_perimeter(cfg);
        values += " min-delta(n=" + std::to_string(n) + ")=" + fmt("%.6f", rep.best_value);
        c.require(rep.feasible, "min-delta n=" + std::to_string(n) + " infeasible");
        c.require(rep.best_value >= 3.0 - 1e-3,
                  "min-delta n=" + std::to_string(n) + " best " + fmt("%.6f", rep.best_value));
        c.require(rep.violations.empty(), "min-delta n=" + std::to_string(n) + " has violations");
        if (n == 3) {
            const double h = reference::aligned_hausdorff(rep.witness, regular_polygon(3, 1.0));
            c.require(h <= 0.05, "n=3 witness " + fmt("%.4f", h) + " from the unit triangle");
        }
        if (n == 4)
            c.require(rep.best_value > 3.0 && rep.best_value < 3.01,
                      "n=4 best " + fmt("%.6f", rep.best_value) + " outside (3, 3.01)");
    }

    for (int n : {6, 8}) {
        SearchConfig cfg = base;
        cfg.n_vertices = n;
        const SearchReport rep = centsym_deficit_search(cfg);
        values += " centsym(n=" + std::to_string(n) + ")=" + fmt("%.6f", rep.best_value);
        c.require(rep.feasible, "centsym n=" + std::to_string(n) + " infeasible");
        c.require(rep.best_value >= 6.0 - 1e-3,
                  "centsym n=" + std::to_string(n) + " best " + fmt("%.6f", rep.best_value));
        c.require(rep.violations.empty(), "centsym n=" + std::to_string(n) + " has violations");
        if (n == 6) {
            const double h = reference::aligned_hausdorff(rep.witness, regular_polygon(6, 1.0));
            c.require(h <= 0.05, "n=6 witness " + fmt("%.4f", h) + " from the unit hexagon");
        }
    }

    {
        SearchConfig cfg = base;
        cfg.n_vertices = 5;
        const SearchReport rep = conjecture_search(2, cfg);
        values += " two-sides(n=5)=" + fmt("%.6f", rep.best_value);
        c.require(rep.feasible, "two-strutted-sides search infeasible");
        c.require(rep.best_value >= 3.0 - 1e-3, "two-sides best " + fmt("%.6f", rep.best_value));
        c.require(rep.violations.empty(), "two-sides search has violations");
    }

    // determinism across worker counts: byte-identical reports
    {
        SearchConfig cfg = base;
        cfg.n_vertices = 3;
        const char* saved = std::getenv("STRUTGEO_THREADS");
        const std::string saved_value = saved ? saved : "";
        ::setenv("STRUTGEO_THREADS", "1", 1);
        const std::string one = search_report_to_json(minimize_delta_perimeter(cfg), cfg).dump();
        ::setenv("STRUTGEO_THREADS", "4", 1);
        const std::string four = search_report_to_json(minimize_delta_perimeter(cfg), cfg).dump();
        if (saved)
            ::setenv("STRUTGEO_THREADS", saved_value.c_str(), 1);
        else
            ::unsetenv("STRUTGEO_THREADS");
        c.require(one == four, "reports differ between 1 and 4 workers");
    }
    return {c.ok, c.ok ? "deterministic;" + values : c.why + ";" + values};
}

// ---- criterion 9: analytic gradient vs central differences ----

std::pair<bool, std::string> criterion_gradient() {
    std::mt19937_64 rng(99ULL);
    auto draw = [&](double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
    };
    Check c;
    double max_gap = 0.0;
    const double h = 1e-6;
    for (int i = 0; i < 50; ++i) {
        double a = 0.0, b = 0.0;
        do {
            a = draw(kPi3 + 0.05, kPi2 - 0.05);
            b = draw(kPi3 + 0.05, kPi2 - 0.05);
        } while (std::cos(a) + std::cos(b) < 0.5 + 0.02);
        const double g = draw(kPi3 + 0.05, kPi2 - 0.05);
        const PentagonParams p{a, b, g};
        const std::array<double, 3> grad = gradient_closed_form(p);
        const double fd[3] = {
            (perimeter_closed_form({a + h, b, g}) - perimeter_closed_form({a - h, b, g})) /
                (2.0 * h),
            (perimeter_closed_form({a, b + h, g}) - perimeter_closed_form({a, b - h, g})) /
                (2.0 * h),
            (perimeter_closed_form({a, b, g + h}) - perimeter_closed_form({a, b, g - h})) /
                (2.0 * h)};
        for (int k = 0; k < 3; ++k) {
            const double gap = std::abs(grad[static_cast<std::size_t>(k)] - fd[k]);
            max_gap = std::max(max_gap, gap);
            c.require(gap <= 1e-6, "component " + std::to_string(k) + " gap " + fmt("%.3e", gap) +
                                       " at sample " + std::to_string(i));
        }
    }
    std::string detail = "max |closed - FD| = " + fmt("%.2e", max_gap) + " over 50 points";
    return {c.ok, c.ok ? detail : c.why + "; " + detail};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const VerifyOptions& opt) {
    opt.tol.validate();
    std::vector<CriterionResult> results;
    results.push_back(run_one(1, "closed-form perimeter agreement", 10.0, criterion_forms));
    results.push_back(run_one(2, "extremal constants", 5.0, criterion_constants));
    results.push_back(run_one(3, "critical-point catalogue", 30.0, criterion_catalogue));
    results.push_back(run_one(4, "perimeter minimum over the feasible box", 60.0,
                              criterion_omega_min));
    results.push_back(run_one(5, "special and integer pentagons", 0.0,
                              criterion_special_pentagon));
    results.push_back(run_one(6, "difference-body laws", 0.0,
                              [&] { return criterion_difference_body(opt.tol); }));
    results.push_back(run_one(7, "construction fixtures", 0.0,
                              [&] { return criterion_constructions(opt.tol); }));
    results.push_back(
        run_one(8, "search evidence", 300.0, [&] { return criterion_search(opt.tol); }));
    results.push_back(run_one(9, "closed-form gradient", 0.0, criterion_gradient));
    return results;
}

bool all_pass(const std::vector<CriterionResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CriterionResult& r) { return r.pass; });
}

}  // namespace strutgeo
