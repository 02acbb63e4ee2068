#pragma once

#include <array>
#include <vector>

#include "strutgeo/geometry.hpp"

namespace strutgeo {

/// Angles of the two-strut pentagon family ABCEF with |AE|=|BE|=|BF|=|CF|=1:
/// alpha = angle EBA, beta = angle FBC, gamma = half the angle between BE and BF
/// reflected, i.e. theta = angle EBF = pi - 2*gamma.
struct PentagonParams {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;

    double theta() const;
    /// Feasible search box: alpha,beta,gamma in [pi/3, pi/2], cos(alpha)+cos(beta) >= 1/2.
    bool in_omega(double tol = 1e-12) const;
    /// On the boundary slice cos(alpha)+cos(beta) = 1/2.
    bool on_omega1(double tol = 1e-9) const;
};

enum class PerimeterForm { A, B, C };

enum class CriticalKind { case1_interior, case2_boundary_omega1, boundary_other };

enum class EqualityPattern {
    none,
    triangle_ec_fa,     // (pi/3, pi/3, pi/3): E=C, F=A
    triangle_b_eq_c,    // (pi/3, pi/2, pi/3)
    triangle_b_eq_a,    // (pi/2, pi/3, pi/3)
    quad_family,        // (alpha, beta, pi/2) with cos(alpha)+cos(beta)=1/2: E=F
    special_pentagon,   // (arccos(1/4), arccos(1/4), arccos(1/4))
};

struct CriticalPoint {
    PentagonParams params;
    double perimeter = 0.0;
    CriticalKind kind = CriticalKind::boundary_other;
    std::array<double, 3> substitution{};  // x=tan(alpha/2), y=tan(beta/2), z=tan(gamma)
    double u3_residual = 0.0;
    double u4_residual = 0.0;              // reported only, never asserted
    std::array<double, 2> u5_factors{};    // reported only
    std::array<double, 2> crit_residual{}; // (d/dgamma, Lagrange cross term)
};

/// Vertices A,B,C,E,F of the raw embedding: B at the origin, E and F on the unit
/// circle symmetric about the y-axis, A and C swung out by alpha resp. beta.
std::array<Point, 5> pentagon_points(const PentagonParams& p);

/// Convex hull of the five embedded points (degenerate coincidences collapse).
ConvexPolygon build_pentagon(const PentagonParams& p);

/// Squared strut chord length f(x) = 1 + 4cos^2(x) - 4cos(x)cos(x - theta), theta = pi - 2*gamma.
/// |AF| = sqrt(f(alpha)), |CE| = sqrt(f(beta)).
double strut_chord_f(double x, double gamma);

/// Closed-form perimeter of the pentagon family; the three forms are algebraically
/// identical parameterizations (angles+gamma, angles+theta, cosines+gamma).
/// Radicands in [-eps_geom, 0) clamp to 0; below that throws std::runtime_error.
double perimeter_closed_form(const PentagonParams& p, PerimeterForm form = PerimeterForm::A,
                             double eps_geom = 1e-9);

/// Stationarity function: sign(D) = sign of the alpha-partial of the theta-form
/// perimeter. D(alpha,theta) = sin(2a-t) - sin(2a) - sin(a)*sqrt(3+2cos2a-2cos t-2cos(2a-t)).
double stationarity_D(double alpha, double theta);

/// Root curve of D: for alpha in [pi/3, 5pi/12] returns the unique theta in [0, pi/3]
/// with D(alpha, theta) = 0 (closed form, principal branch). For alpha in [0, pi/3)
/// the stationarity equation has no root in the strip and the boundary value pi/3 is
/// returned. Continuous on [0, 5pi/12]; convex on [pi/3, 5pi/12]; g(pi/3)=g(5pi/12)=pi/3.
double g_curve(double alpha);

struct ExtremalConstants {
    double theta0 = 0.0;  // min of g over [pi/3, 5pi/12]
    double alpha0 = 0.0;  // arccos(sqrt(24 - 3*sqrt(37))/6), the argmin
};

ExtremalConstants extremal_constants();

/// tan(theta0) in closed radical form; arctan of it reproduces theta0.
double theta0_tangent_radical();

/// Substitution polynomials (x = tan(alpha/2), y = tan(beta/2), z = tan(gamma)).
double u3_poly(double x, double y);                    // 3 - x^2 - y^2 - 5x^2y^2
double u4_poly(double x, double y, double z);          // large residual polynomial
std::array<double, 2> u5_factors(double x, double y);  // (xy+y-x+1, xy-y+x+1)
double v3_poly(double x);                              // factored form
double quartic_z1(double z1);                          // (z1-1)(15z1^3-45z1^2+5z1+1)

struct Case1Catalogue {
    std::vector<double> v3_roots;  // real roots on [1/sqrt(3), sqrt(3/5)]
    std::vector<double> z1_roots;  // all four real roots of the quartic
    std::vector<CriticalPoint> points;  // the two admissible (z1 >= 1/sqrt(5)) points
};

/// Root isolation by bracketing scan (step 1e-3) + bisection to 1e-12.
Case1Catalogue case1_critical_points();

/// Multistart damped Newton on the two-equation stationarity system in (alpha, gamma)
/// with beta eliminated via cos(beta) = 1/2 - cos(alpha). Solutions deduplicated
/// within 1e-7 and sorted by (perimeter, alpha).
std::vector<CriticalPoint> case2_critical_points();

struct OmegaMinimum {
    double min_perimeter = 0.0;
    PentagonParams argmin;
    /// Refined grid starts that ended within 10*refine_tol of the minimum (deduplicated).
    std::vector<std::pair<PentagonParams, double>> near_minimizers;
};

/// Dense grid over Omega plus projected coordinate-descent refinement from every grid
/// cell. Deterministic; parallel over fixed-size blocks.
OmegaMinimum verify_min_over_omega(int grid_n = 60, double refine_tol = 1e-6);

/// Analytic gradient of the form-A perimeter. Throws when a chord degenerates
/// (f <= eps at the evaluation point).
std::array<double, 3> gradient_closed_form(const PentagonParams& p, double eps_geom = 1e-9);

EqualityPattern classify_equality_pattern(const PentagonParams& p, double tol = 1e-6);

const char* to_string(EqualityPattern pattern);
const char* to_string(CriticalKind kind);

/// The perimeter-3 pentagon with alpha=beta=gamma=arccos(1/4).
PentagonParams special_pentagon_params();

}  // namespace strutgeo
