#include "strutgeo/pentagon.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <set>
#include <stdexcept>
#include <tuple>

#include "strutgeo/parallel.hpp"

namespace strutgeo {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi3 = kPi / 3.0;
constexpr double kPi2 = kPi / 2.0;

double clamped_sqrt(double rad, double eps_geom) {
    if (rad < -eps_geom) {
        throw std::runtime_error("invalid configuration: radicand " + std::to_string(rad));
    }
    return std::sqrt(std::max(0.0, rad));
}

// Scan [lo, hi] with a fixed step, bisect each sign change to width <= 1e-12.
std::vector<double> isolate_roots(const std::function<double(double)>& f, double lo, double hi,
                                  double step = 1e-3) {
    std::vector<double> roots;
    auto bisect = [&f](double a, double b, double fa) {
        for (int i = 0; i < 200 && b - a > 1e-12; ++i) {
            double m = 0.5 * (a + b);
            double fm = f(m);
            if (fm == 0.0) return m;
            if ((fa < 0.0) != (fm < 0.0)) {
                b = m;
            } else {
                a = m;
                fa = fm;
            }
        }
        return 0.5 * (a + b);
    };
    int n = static_cast<int>(std::ceil((hi - lo) / step));
    double x0 = lo, f0 = f(lo);
    for (int i = 1; i <= n; ++i) {
        double x1 = std::min(lo + i * step, hi);
        double f1 = f(x1);
        if (f0 == 0.0) {
            roots.push_back(x0);
        } else if ((f0 < 0.0) != (f1 < 0.0) && f1 != 0.0) {
            roots.push_back(bisect(x0, x1, f0));
        }
        x0 = x1;
        f0 = f1;
    }
    if (f0 == 0.0) roots.push_back(x0);
    // Merge near-duplicates from roots landing exactly on scan nodes.
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](double a, double b) { return std::abs(a - b) <= 1e-9; }),
                roots.end());
    return roots;
}

CriticalPoint make_critical_point(double alpha, double beta, double gamma, CriticalKind kind) {
    CriticalPoint cp;
    cp.params = PentagonParams{alpha, beta, gamma};
    cp.perimeter = perimeter_closed_form(cp.params, PerimeterForm::A);
    cp.kind = kind;
    double x = std::tan(0.5 * alpha), y = std::tan(0.5 * beta), z = std::tan(gamma);
    cp.substitution = {x, y, z};
    cp.u3_residual = u3_poly(x, y);
    cp.u4_residual = u4_poly(x, y, z);
    cp.u5_factors = u5_factors(x, y);
    std::array<double, 3> grad = gradient_closed_form(cp.params);
    cp.crit_residual = {grad[2], grad[0] * std::sin(beta) - grad[1] * std::sin(alpha)};
    return cp;
}

}  // namespace

double PentagonParams::theta() const { return kPi - 2.0 * gamma; }

bool PentagonParams::in_omega(double tol) const {
    return alpha >= kPi3 - tol && alpha <= kPi2 + tol &&
           beta >= kPi3 - tol && beta <= kPi2 + tol &&
           gamma >= kPi3 - tol && gamma <= kPi2 + tol &&
           std::cos(alpha) + std::cos(beta) >= 0.5 - tol;
}

bool PentagonParams::on_omega1(double tol) const {
    return std::abs(std::cos(alpha) + std::cos(beta) - 0.5) <= tol;
}

std::array<Point, 5> pentagon_points(const PentagonParams& p) {
    double g = p.gamma;
    double ca = std::cos(p.alpha), cb = std::cos(p.beta);
    Point a = 2.0 * ca * Point{std::cos(g + p.alpha), std::sin(g + p.alpha)};
    Point b{0.0, 0.0};
    Point c = 2.0 * cb * Point{std::cos(kPi - g - p.beta), std::sin(kPi - g - p.beta)};
    Point e{std::cos(g), std::sin(g)};
    Point f{-std::cos(g), std::sin(g)};
    return {a, b, c, e, f};
}

ConvexPolygon build_pentagon(const PentagonParams& p) {
    std::array<Point, 5> pts = pentagon_points(p);
    return convex_hull(pts);
}

double strut_chord_f(double x, double gamma) {
    double theta = kPi - 2.0 * gamma;
    double c = std::cos(x);
    return 1.0 + 4.0 * c * c - 4.0 * c * std::cos(x - theta);
}

double perimeter_closed_form(const PentagonParams& p, PerimeterForm form, double eps_geom) {
    double a = p.alpha, b = p.beta, g = p.gamma;
    switch (form) {
        case PerimeterForm::A: {
            double ca = std::cos(a), cb = std::cos(b);
            double ra = 1.0 + 4.0 * ca * ca + 4.0 * ca * std::cos(a + 2.0 * g);
            double rb = 1.0 + 4.0 * cb * cb + 4.0 * cb * std::cos(b + 2.0 * g);
            return 2.0 * (ca + cb + std::cos(g)) + clamped_sqrt(ra, eps_geom) +
                   clamped_sqrt(rb, eps_geom);
        }
        case PerimeterForm::B: {
            double t = p.theta();
            double ca = std::cos(a), cb = std::cos(b);
            double ra = 1.0 + 4.0 * ca * ca - 4.0 * ca * std::cos(a - t);
            double rb = 1.0 + 4.0 * cb * cb - 4.0 * cb * std::cos(b - t);
            return 2.0 * (ca + cb + std::sin(0.5 * t)) + clamped_sqrt(ra, eps_geom) +
                   clamped_sqrt(rb, eps_geom);
        }
        case PerimeterForm::C: {
            double u = std::cos(a), v = std::cos(b);
            double cg = std::cos(g), sg = std::sin(g);
            double su = clamped_sqrt(1.0 - u * u, eps_geom);
            double sv = clamped_sqrt(1.0 - v * v, eps_geom);
            double ra = 1.0 + 8.0 * u * u * cg * cg - 8.0 * u * su * sg * cg;
            double rb = 1.0 + 8.0 * v * v * cg * cg - 8.0 * v * sv * sg * cg;
            return 2.0 * u + 2.0 * v + 2.0 * cg + clamped_sqrt(ra, eps_geom) +
                   clamped_sqrt(rb, eps_geom);
        }
    }
    throw std::invalid_argument("perimeter_closed_form: unknown form");
}

double stationarity_D(double alpha, double theta) {
    double rad = 3.0 + 2.0 * std::cos(2.0 * alpha) - 2.0 * std::cos(theta) -
                 2.0 * std::cos(2.0 * alpha - theta);
    return std::sin(2.0 * alpha - theta) - std::sin(2.0 * alpha) -
           std::sin(alpha) * std::sqrt(std::max(0.0, rad));
}

double g_curve(double alpha) {
    constexpr double hi = 5.0 * kPi / 12.0;
    if (alpha < -1e-12 || alpha > hi + 1e-12) {
        throw std::invalid_argument("g_curve: alpha outside [0, 5*pi/12]");
    }
    // The stationarity equation has no root in the strip theta in [0, pi/3] for
    // alpha < pi/3 (D(alpha, theta) < 0 there); the curve is continued with its
    // boundary value pi/3.
    if (alpha < kPi3) return kPi3;
    double c = std::cos(alpha);
    double c2 = c * c, c4 = c2 * c2, c6 = c4 * c2;
    double r = std::sqrt(std::max(0.0, 16.0 * c6 - 16.0 * c4 + 1.0));
    double s = std::sin(alpha);
    double s2a = std::sin(2.0 * alpha), c2a = std::cos(2.0 * alpha);
    double num = s2a * (2.0 * c * c2a + r);
    double den = 8.0 * c * c2 * s * s - c2a * r;  // positive on [pi/3, 5*pi/12]
    return alpha - std::atan2(num, den);
}

ExtremalConstants extremal_constants() {
    ExtremalConstants ec;
    ec.alpha0 = std::acos(std::sqrt(24.0 - 3.0 * std::sqrt(37.0)) / 6.0);
    double a = kPi3, b = 5.0 * kPi / 12.0;
    const double invphi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - invphi * (b - a), x2 = a + invphi * (b - a);
    double f1 = g_curve(x1), f2 = g_curve(x2);
    while (b - a > 1e-12) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = g_curve(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = g_curve(x2);
        }
    }
    ec.theta0 = g_curve(0.5 * (a + b));
    return ec;
}

double theta0_tangent_radical() {
    double s37 = std::sqrt(37.0);
    return (4.0 * s37 - 5.0) * std::sqrt(12.0 + 3.0 * s37) /
           ((43.0 - 2.0 * s37) * std::sqrt(24.0 - 3.0 * s37));
}

double u3_poly(double x, double y) {
    return 3.0 - x * x - y * y - 5.0 * x * x * y * y;
}

double u4_poly(double x, double y, double z) {
    double x2 = x * x, x3 = x2 * x, x4 = x2 * x2, x5 = x4 * x, x6 = x4 * x2;
    double y2 = y * y, y3 = y2 * y, y4 = y2 * y2, y5 = y4 * y, y6 = y4 * y2;
    // Coefficients of z^4..z^0, symmetric in (x, y).
    double p4 = x + y + 2.0 * (x3 + y3) + x5 + y5
              + x2 * y + x * y2 - x4 * y - x * y4 - x6 * y - x * y6
              + x5 * y2 + x2 * y5 - x5 * y4 - x4 * y5 - x5 * y6 - x6 * y5
              - 62.0 * (x3 * y2 + x2 * y3) + 62.0 * (x3 * y4 + x4 * y3)
              - 2.0 * (x3 * y6 + x6 * y3);
    double p3 = -16.0 * (x2 + y2) + 16.0 * (x4 + y4)
              - 8.0 * x * y + 48.0 * (x3 * y + x * y3) - 8.0 * (x5 * y + x * y5)
              - 32.0 * x3 * y3 + 48.0 * (x5 * y3 + x3 * y5) - 8.0 * x5 * y5
              + 288.0 * x2 * y2 - 288.0 * (x4 * y2 + x2 * y4) + 288.0 * x4 * y4
              + 16.0 * (x6 * y2 + x2 * y6) - 16.0 * (x6 * y4 + x4 * y6);
    double p2 = 9.0 * (x + y) - 14.0 * (x3 + y3) + 9.0 * (x5 + y5)
              - 151.0 * (x2 * y + x * y2) + 151.0 * (x4 * y + x * y4)
              - 9.0 * (x6 * y + x * y6)
              + 178.0 * (x3 * y2 + x2 * y3) - 178.0 * (x3 * y4 + x4 * y3)
              - 151.0 * (x5 * y2 + x2 * y5) + 151.0 * (x5 * y4 + x4 * y5)
              + 14.0 * (x3 * y6 + x6 * y3) - 9.0 * (x5 * y6 + x6 * y5);
    double p1 = 72.0 * x * y - 112.0 * (x3 * y + x * y3) + 72.0 * (x5 * y + x * y5)
              + 32.0 * x3 * y3 - 112.0 * (x5 * y3 + x3 * y5) + 72.0 * x5 * y5
              + 64.0 * x2 * y2 - 64.0 * (x4 * y2 + x2 * y4) + 64.0 * x4 * y4;
    double p0 = 64.0 * (x3 * y2 + x2 * y3) - 64.0 * (x4 * y3 + x3 * y4);
    return (((p4 * z + p3) * z + p2) * z + p1) * z + p0;
}

std::array<double, 2> u5_factors(double x, double y) {
    return {x * y + y - x + 1.0, x * y - y + x + 1.0};
}

double v3_poly(double x) {
    double x2 = x * x, x4 = x2 * x2, x6 = x4 * x2, x8 = x4 * x4;
    return x * (x - 1.0) * (x + 1.0) * (x2 + 1.0) *
           (63.0 - 1028.0 * x2 + 1914.0 * x4 - 1028.0 * x6 + 63.0 * x8) *
           (3.0 * x2 - 1.0) * (x2 - 3.0) *
           (39.0 - 708.0 * x2 + 1322.0 * x4 - 708.0 * x6 + 39.0 * x8);
}

double quartic_z1(double z1) {
    return (z1 - 1.0) * (15.0 * z1 * z1 * z1 - 45.0 * z1 * z1 + 5.0 * z1 + 1.0);
}

Case1Catalogue case1_critical_points() {
    Case1Catalogue cat;
    cat.z1_roots = isolate_roots(quartic_z1, -10.0, 10.0);
    double lo = 1.0 / std::sqrt(3.0), hi = std::sqrt(0.6);
    std::vector<double> v3 = isolate_roots(v3_poly, lo - 1e-3, hi + 1e-3);
    for (double r : v3) {
        if (r >= lo - 1e-9 && r <= hi + 1e-9) cat.v3_roots.push_back(std::clamp(r, lo, hi));
    }
    // On the symmetric slice the side constraint forces x = y = sqrt(3/5); the quartic
    // supplies the admissible gamma values (z1 >= 1/sqrt(5), i.e. gamma >= pi/3).
    double x = std::sqrt(0.6);
    double alpha = 2.0 * std::atan(x);
    for (double z1 : cat.z1_roots) {
        if (z1 < 1.0 / std::sqrt(5.0) - 1e-12) continue;
        double gamma = std::atan(std::sqrt(15.0) * z1);
        cat.points.push_back(make_critical_point(alpha, alpha, gamma, CriticalKind::case1_interior));
    }
    std::sort(cat.points.begin(), cat.points.end(),
              [](const CriticalPoint& a, const CriticalPoint& b) {
                  return a.perimeter < b.perimeter;
              });
    return cat;
}

namespace {

// Stationarity system on the constraint slice cos(alpha)+cos(beta)=1/2:
// F1 = dA/dgamma, F2 = dA/dalpha*sin(beta) - dA/dbeta*sin(alpha).
struct SliceResidual {
    double f1 = 0.0;
    double f2 = 0.0;
};

double beta_on_slice(double alpha) {
    return std::acos(std::clamp(0.5 - std::cos(alpha), -1.0, 1.0));
}

SliceResidual case2_system(double alpha, double gamma) {
    double beta = beta_on_slice(alpha);
    std::array<double, 3> g = gradient_closed_form(PentagonParams{alpha, beta, gamma});
    return {g[2], g[0] * std::sin(beta) - g[1] * std::sin(alpha)};
}

}  // namespace

std::vector<CriticalPoint> case2_critical_points() {
    const double pad_lo = 1.02, pad_hi = 1.60;
    const double interior = 1e-6;
    auto eval = [](double a, double g, SliceResidual& out) {
        try {
            out = case2_system(a, g);
            return std::isfinite(out.f1) && std::isfinite(out.f2);
        } catch (const std::exception&) {
            return false;
        }
    };

    std::vector<std::pair<double, double>> found;  // (alpha, gamma)
    const int grid = 24;
    for (int i = 0; i < grid; ++i) {
        for (int j = 0; j < grid; ++j) {
            double a = kPi3 + 0.01 + (kPi2 - kPi3 - 0.02) * i / (grid - 1);
            double g = kPi3 + 0.01 + (kPi2 - kPi3 - 0.02) * j / (grid - 1);
            SliceResidual f;
            if (!eval(a, g, f)) continue;
            bool converged = false;
            for (int it = 0; it < 120; ++it) {
                double n0 = std::max(std::abs(f.f1), std::abs(f.f2));
                if (n0 <= 1e-11) {
                    converged = true;
                    break;
                }
                const double h = 1e-7;
                SliceResidual fap, fam, fgp, fgm;
                if (!eval(a + h, g, fap) || !eval(a - h, g, fam) || !eval(a, g + h, fgp) ||
                    !eval(a, g - h, fgm)) {
                    break;
                }
                double j11 = (fap.f1 - fam.f1) / (2.0 * h), j12 = (fgp.f1 - fgm.f1) / (2.0 * h);
                double j21 = (fap.f2 - fam.f2) / (2.0 * h), j22 = (fgp.f2 - fgm.f2) / (2.0 * h);
                double det = j11 * j22 - j12 * j21;
                if (std::abs(det) < 1e-14) break;
                double da = (f.f1 * j22 - f.f2 * j12) / det;
                double dg = (f.f2 * j11 - f.f1 * j21) / det;
                double t = 1.0;
                bool stepped = false;
                while (t > 1e-6) {
                    double an = std::clamp(a - t * da, pad_lo, pad_hi);
                    double gn = std::clamp(g - t * dg, pad_lo, pad_hi);
                    SliceResidual fn;
                    if (eval(an, gn, fn) &&
                        std::max(std::abs(fn.f1), std::abs(fn.f2)) < n0) {
                        a = an;
                        g = gn;
                        f = fn;
                        stepped = true;
                        break;
                    }
                    t *= 0.5;
                }
                if (!stepped) break;
            }
            if (!converged) continue;
            double b = beta_on_slice(a);
            if (a <= kPi3 + interior || a >= kPi2 - interior) continue;
            if (b <= kPi3 + interior || b >= kPi2 - interior) continue;
            if (g <= kPi3 + interior || g >= kPi2 - interior) continue;
            bool duplicate = false;
            for (const auto& [fa, fg] : found) {
                if (std::abs(fa - a) <= 1e-7 && std::abs(fg - g) <= 1e-7) {
                    duplicate = true;
                    break;
                }
            }
            if (!duplicate) found.emplace_back(a, g);
        }
    }

    std::vector<CriticalPoint> points;
    points.reserve(found.size());
    for (const auto& [a, g] : found) {
        points.push_back(
            make_critical_point(a, beta_on_slice(a), g, CriticalKind::case2_boundary_omega1));
    }
    std::sort(points.begin(), points.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
        return std::tie(a.perimeter, a.params.alpha) < std::tie(b.perimeter, b.params.alpha);
    });
    return points;
}

namespace {

// Hot objective for the grid search: form A with hard clamping (no exceptions).
double omega_objective(double a, double b, double g) {
    double ca = std::cos(a), cb = std::cos(b);
    double ra = 1.0 + 4.0 * ca * ca + 4.0 * ca * std::cos(a + 2.0 * g);
    double rb = 1.0 + 4.0 * cb * cb + 4.0 * cb * std::cos(b + 2.0 * g);
    return 2.0 * (ca + cb + std::cos(g)) + std::sqrt(std::max(0.0, ra)) +
           std::sqrt(std::max(0.0, rb));
}

struct RefineResult {
    double a = 0.0, b = 0.0, g = 0.0;
    double value = 0.0;
};

// Projected coordinate descent inside Omega: box clamp, then restore
// cos(alpha)+cos(beta) >= 1/2 by pulling the moved coordinate back onto the slice.
RefineResult refine_in_omega(double a, double b, double g, double h0, double h_min) {
    // When a coordinate step leaves Omega the partner angle is pulled onto the
    // constraint slice instead of undoing the step, so descent can slide along the
    // active boundary cos(alpha)+cos(beta) = 1/2 (where one of the minimizers lives).
    auto partner = [](double moved) {
        return std::acos(std::clamp(0.5 - std::cos(moved), -1.0, 1.0));
    };
    double val = omega_objective(a, b, g);
    for (double h = h0; h >= h_min; h *= 0.5) {
        for (int sweep = 0; sweep < 300; ++sweep) {
            bool improved = false;
            for (int dir = -1; dir <= 1; dir += 2) {
                double an = std::clamp(a + dir * h, kPi3, kPi2);
                double bn = b;
                if (std::cos(an) + std::cos(bn) < 0.5) bn = partner(an);
                double v = omega_objective(an, bn, g);
                if (v < val) {
                    a = an;
                    b = bn;
                    val = v;
                    improved = true;
                }
                bn = std::clamp(b + dir * h, kPi3, kPi2);
                an = a;
                if (std::cos(an) + std::cos(bn) < 0.5) an = partner(bn);
                v = omega_objective(an, bn, g);
                if (v < val) {
                    a = an;
                    b = bn;
                    val = v;
                    improved = true;
                }
                double gn = std::clamp(g + dir * h, kPi3, kPi2);
                v = omega_objective(a, b, gn);
                if (v < val) {
                    g = gn;
                    val = v;
                    improved = true;
                }
            }
            if (!improved) break;
        }
    }
    return {a, b, g, val};
}

}  // namespace

OmegaMinimum verify_min_over_omega(int grid_n, double refine_tol) {
    if (grid_n < 20) throw std::invalid_argument("verify_min_over_omega: grid_n must be >= 20");
    if (!(refine_tol > 0)) throw std::invalid_argument("verify_min_over_omega: bad refine_tol");

    double step = (kPi2 - kPi3) / (grid_n - 1);
    std::vector<std::array<double, 3>> starts;
    starts.reserve(static_cast<std::size_t>(grid_n) * grid_n * grid_n / 2);
    for (int i = 0; i < grid_n; ++i) {
        double a = kPi3 + i * step;
        for (int j = 0; j < grid_n; ++j) {
            double b = kPi3 + j * step;
            if (std::cos(a) + std::cos(b) < 0.5 - 1e-12) continue;
            for (int k = 0; k < grid_n; ++k) starts.push_back({a, b, kPi3 + k * step});
        }
        // Constraint-slice starts: exact cos(alpha)+cos(beta) = 1/2 section.
        double b1 = std::acos(std::clamp(0.5 - std::cos(a), -1.0, 1.0));
        for (int k = 0; k < grid_n; ++k) starts.push_back({a, b1, kPi3 + k * step});
    }

    std::vector<RefineResult> results(starts.size());
    double h_min = refine_tol * 0.1;
    parallel_for_index(starts.size(), [&](std::size_t i) {
        results[i] = refine_in_omega(starts[i][0], starts[i][1], starts[i][2], step, h_min);
    });

    OmegaMinimum out;
    std::size_t best = 0;
    for (std::size_t i = 1; i < results.size(); ++i) {
        if (results[i].value < results[best].value) best = i;
    }
    out.min_perimeter = results[best].value;
    out.argmin = PentagonParams{results[best].a, results[best].b, results[best].g};

    double cutoff = out.min_perimeter + 10.0 * refine_tol;
    std::set<std::tuple<long, long, long>> seen;
    for (const RefineResult& r : results) {
        if (r.value > cutoff) continue;
        auto key = std::make_tuple(std::lround(r.a / 1e-3), std::lround(r.b / 1e-3),
                                   std::lround(r.g / 1e-3));
        if (!seen.insert(key).second) continue;
        out.near_minimizers.emplace_back(PentagonParams{r.a, r.b, r.g}, r.value);
    }
    return out;
}

std::array<double, 3> gradient_closed_form(const PentagonParams& p, double eps_geom) {
    double a = p.alpha, b = p.beta, g = p.gamma;
    double fa = strut_chord_f(a, g), fb = strut_chord_f(b, g);
    if (fa <= eps_geom || fb <= eps_geom) {
        throw std::runtime_error("gradient singular: degenerate strut chord");
    }
    double sfa = std::sqrt(fa), sfb = std::sqrt(fb);
    double s2ag = std::sin(2.0 * a + 2.0 * g), s2bg = std::sin(2.0 * b + 2.0 * g);
    double da = -2.0 * std::sin(a) - 2.0 * (std::sin(2.0 * a) + s2ag) / sfa;
    double db = -2.0 * std::sin(b) - 2.0 * (std::sin(2.0 * b) + s2bg) / sfb;
    double dg = -2.0 * std::sin(g) - 2.0 * (std::sin(2.0 * g) + s2ag) / sfa -
                2.0 * (std::sin(2.0 * g) + s2bg) / sfb;
    return {da, db, dg};
}

EqualityPattern classify_equality_pattern(const PentagonParams& p, double tol) {
    auto near3 = [&](double a, double b, double g) {
        return std::abs(p.alpha - a) <= tol && std::abs(p.beta - b) <= tol &&
               std::abs(p.gamma - g) <= tol;
    };
    double ac4 = std::acos(0.25);
    if (near3(ac4, ac4, ac4)) return EqualityPattern::special_pentagon;
    if (near3(kPi3, kPi3, kPi3)) return EqualityPattern::triangle_ec_fa;
    if (near3(kPi3, kPi2, kPi3)) return EqualityPattern::triangle_b_eq_c;
    if (near3(kPi2, kPi3, kPi3)) return EqualityPattern::triangle_b_eq_a;
    if (std::abs(p.gamma - kPi2) <= tol &&
        std::abs(std::cos(p.alpha) + std::cos(p.beta) - 0.5) <= tol) {
        return EqualityPattern::quad_family;
    }
    return EqualityPattern::none;
}

const char* to_string(EqualityPattern pattern) {
    switch (pattern) {
        case EqualityPattern::none: return "none";
        case EqualityPattern::triangle_ec_fa: return "triangle_ec_fa";
        case EqualityPattern::triangle_b_eq_c: return "triangle_b_eq_c";
        case EqualityPattern::triangle_b_eq_a: return "triangle_b_eq_a";
        case EqualityPattern::quad_family: return "quad_family";
        case EqualityPattern::special_pentagon: return "special_pentagon";
    }
    return "unknown";
}

const char* to_string(CriticalKind kind) {
    switch (kind) {
        case CriticalKind::case1_interior: return "case1_interior";
        case CriticalKind::case2_boundary_omega1: return "case2_boundary_omega1";
        case CriticalKind::boundary_other: return "boundary_other";
    }
    return "unknown";
}

PentagonParams special_pentagon_params() {
    double a = std::acos(0.25);
    return PentagonParams{a, a, a};
}

}  // namespace strutgeo
