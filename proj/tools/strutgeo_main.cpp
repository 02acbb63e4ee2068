#include <cstdio>
#include <exception>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "strutgeo/constructions.hpp"
#include "strutgeo/pentagon.hpp"
#include "strutgeo/polygon_io.hpp"
#include "strutgeo/search.hpp"
#include "strutgeo/strut.hpp"
#include "strutgeo/verify.hpp"

namespace {

using nlohmann::json;
using namespace strutgeo;

constexpr int kPass = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;

void emit(const json& payload) { std::printf("%s\n", payload.dump(2).c_str()); }

int cmd_verify_all(const std::string& profile, bool quiet) {
    VerifyOptions opt;
    if (!profile.empty()) {
        std::ifstream in(profile);
        if (!in) throw std::invalid_argument("cannot open tolerance profile: " + profile);
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw std::invalid_argument(profile + ": JSON parse error: " + e.what());
        }
        if (!j.is_object()) throw std::invalid_argument(profile + ": profile must be an object");
        opt.tol.eps_geom = j.value("eps_geom", opt.tol.eps_geom);
        opt.tol.eps_contains = j.value("eps_contains", opt.tol.eps_contains);
        opt.tol.eps_check = j.value("eps_check", opt.tol.eps_check);
    }
    opt.tol.validate();

    const std::vector<CriterionResult> results = run_acceptance(opt);
    const bool ok = all_pass(results);
    json criteria = json::array();
    for (const CriterionResult& r : results) {
        criteria.push_back({{"id", r.id},
                            {"name", r.name},
                            {"pass", r.pass},
                            {"seconds", r.seconds},
                            {"detail", r.detail}});
        if (!quiet) {
            std::fprintf(stderr, "[%d/9] %-42s %s %7.2fs\n", r.id, r.name.c_str(),
                         r.pass ? "PASS" : "FAIL", r.seconds);
            std::fprintf(stderr, "      %s\n", r.detail.c_str());
        }
    }
    if (!quiet) std::fprintf(stderr, "%s\n", ok ? "all criteria pass" : "FAILURES present");
    emit(json{{"status", ok ? "pass" : "violation"}, {"criteria", std::move(criteria)}});
    return ok ? kPass : kViolation;
}

int cmd_check(const std::string& input, double l, bool quiet) {
    const ConvexPolygon p = read_polygon_file(input);
    if (p.vertices.size() < 3)
        throw std::invalid_argument(input + ": degenerate polygon, strut check needs >= 3 vertices");
    const Tolerances tol{};
    const DeltaReport delta = has_delta_property(p, l, tol);

    json out{{"input", input},
             {"l", l},
             {"delta", delta_report_to_json(delta)},
             {"symmetry_center", nullptr},
             {"delta_s", nullptr}};
    bool delta_s_ok = true;
    if (const auto center = symmetry_center(p, tol.eps_check)) {
        const DeltaSReport ds = has_delta_s_property(translate(p, -*center), tol);
        out["symmetry_center"] = {center->x, center->y};
        out["delta_s"] = delta_s_report_to_json(ds);
        delta_s_ok = ds.holds;
        if (!quiet)
            std::fprintf(stderr, "rectangle property (delta-S): %s\n",
                         ds.holds ? "holds" : "fails");
    }
    if (!quiet) {
        std::fprintf(stderr, "strut property (delta, l=%g): %s", l, delta.holds ? "holds" : "fails");
        if (!delta.holds) {
            std::fprintf(stderr, ", failing sides:");
            for (int s : delta.failing_sides) std::fprintf(stderr, " %d", s);
        }
        std::fprintf(stderr, "\n");
    }
    emit(out);
    return delta.holds && delta_s_ok ? kPass : kViolation;
}

int cmd_pentagon(double alpha, double beta, double gamma, const std::string& svg, bool quiet) {
    const PentagonParams params{alpha, beta, gamma};
    const ConvexPolygon hull = build_pentagon(params);

    json record{{"alpha", alpha},
                {"beta", beta},
                {"gamma", gamma},
                {"theta", params.theta()},
                {"in_omega", params.in_omega()},
                {"perimeter_form_a", perimeter_closed_form(params, PerimeterForm::A)},
                {"perimeter_form_b", perimeter_closed_form(params, PerimeterForm::B)},
                {"perimeter_form_c", perimeter_closed_form(params, PerimeterForm::C)},
                {"perimeter_geometric", perimeter(hull)},
                {"hull", polygon_to_json(hull)},
                {"classification", to_string(classify_equality_pattern(params))}};
    json certs = json::array();
    for (int side = 0; side < 2 && side < static_cast<int>(hull.vertices.size()); ++side) {
        if (auto cert = side_has_strut(hull, side, 1.0))
            certs.push_back({{"side_index", cert->side_index},
                             {"apex", {cert->apex.x, cert->apex.y}},
                             {"l", cert->l}});
        else
            certs.push_back(nullptr);
    }
    record["strut_certificates"] = std::move(certs);
    try {
        const std::array<double, 3> grad = gradient_closed_form(params);
        record["gradient"] = grad;
    } catch (const std::exception&) {
        record["gradient"] = nullptr;  // a chord degenerated at this parameter point
    }
    if (!svg.empty()) {
        SvgOptions opt;
        opt.show_struts = true;
        write_svg_file(svg, hull, opt);
    }
    if (!quiet)
        std::fprintf(stderr, "pentagon(%g, %g, %g): perimeter %.12g, %s, hull has %zu vertices\n",
                     alpha, beta, gamma, perimeter_closed_form(params),
                     to_string(classify_equality_pattern(params)), hull.vertices.size());
    emit(record);
    return kPass;
}

int cmd_constants(bool quiet) {
    const ExtremalConstants ec = extremal_constants();
    const Case1Catalogue c1 = case1_critical_points();
    const std::vector<CriticalPoint> c2 = case2_critical_points();

    json case1 = json::array();
    for (const CriticalPoint& cp : c1.points) case1.push_back(critical_point_to_json(cp));
    json case2 = json::array();
    for (const CriticalPoint& cp : c2) case2.push_back(critical_point_to_json(cp));

    json out{{"theta0", ec.theta0},
             {"alpha0", ec.alpha0},
             {"tan_theta0_radical", theta0_tangent_radical()},
             {"quartic_z1_roots", c1.z1_roots},
             {"v3_roots", c1.v3_roots},
             {"case1_points", std::move(case1)},
             {"case2_points", std::move(case2)}};
    if (!quiet) {
        std::fprintf(stderr, "theta0 = %.10f, alpha0 = %.10f\n", ec.theta0, ec.alpha0);
        std::fprintf(stderr, "%zu case-1 and %zu case-2 critical points\n", c1.points.size(),
                     c2.size());
    }
    emit(out);
    return kPass;
}

int cmd_construct(const CLI::App* sc, const std::string& kind, int n, double eps, double alpha,
                  double a, double scale, double side, const std::string& out,
                  const std::string& svg, bool show_struts, bool quiet) {
    ConstructionSpec spec;
    spec.kind = kind;
    if (sc->count("--n")) spec.params["n"] = n;
    if (sc->count("--eps")) spec.params["eps"] = eps;
    if (sc->count("--alpha")) spec.params["alpha"] = alpha;
    if (sc->count("--a")) spec.params["a"] = a;
    if (sc->count("--scale")) spec.params["scale"] = scale;
    if (sc->count("--side")) spec.params["side"] = side;

    const ConvexPolygon p = construct(spec);
    if (!out.empty()) write_polygon_file(out, p);
    if (!svg.empty()) {
        SvgOptions opt;
        opt.show_struts = show_struts;
        write_svg_file(svg, p, opt);
    }
    if (!quiet)
        std::fprintf(stderr, "%s: %zu vertices, perimeter %.12g\n", kind.c_str(),
                     p.vertices.size(), perimeter(p));
    emit(polygon_to_json(p));
    return kPass;
}

int cmd_search(const std::string& task, int m, const SearchConfig& cfg, const std::string& out,
               const std::string& trace, bool quiet) {
    SearchReport rep;
    if (task == "min-delta") {
        rep = minimize_delta_perimeter(cfg);
    } else if (task == "centsym") {
        rep = centsym_deficit_search(cfg);
    } else if (task == "conjecture") {
        rep = conjecture_search(m, cfg);
    } else {
        throw std::invalid_argument("unknown search task: " + task);
    }
    const json payload = search_report_to_json(rep, cfg);
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) throw std::runtime_error("cannot write report file: " + out);
        f << payload.dump(2) << '\n';
    }
    if (!trace.empty()) write_trace_csv(trace, rep);
    if (!quiet)
        std::fprintf(stderr, "%s: best %.9f, %s, %zu verified violations\n", task.c_str(),
                     rep.best_value, rep.feasible ? "feasible" : "infeasible",
                     rep.violations.size());
    emit(payload);
    return rep.violations.empty() ? kPass : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"convex-polygon strut properties: verification suites, constructions, searches"};
    app.require_subcommand(1);
    app.fallthrough();
    bool quiet = false;
    app.add_flag("--quiet", quiet, "suppress the human-readable summary on stderr");

    auto* verify_sc = app.add_subcommand("verify-all", "run the full acceptance suite");
    std::string profile;
    verify_sc->add_option("--profile", profile, "JSON file with tolerance overrides");

    auto* check_sc = app.add_subcommand("check", "strut/rectangle properties of a polygon file");
    std::string check_input;
    double check_l = 1.0;
    check_sc->add_option("input", check_input, "polygon JSON file")->required();
    check_sc->add_option("--l", check_l, "strut length (default 1)");

    auto* pent_sc = app.add_subcommand("pentagon", "analyze one two-strut pentagon");
    double pa = 0.0, pb = 0.0, pg = 0.0;
    std::string pent_svg;
    pent_sc->add_option("--alpha", pa, "swing angle at the first base side")->required();
    pent_sc->add_option("--beta", pb, "swing angle at the second base side")->required();
    pent_sc->add_option("--gamma", pg, "half the apex opening: theta = pi - 2 gamma")->required();
    pent_sc->add_option("--svg", pent_svg, "write an SVG rendering");

    auto* const_sc = app.add_subcommand("constants", "extremal constants and critical points");

    auto* constr_sc = app.add_subcommand("construct", "build a named polygon family member");
    std::string kind, constr_out, constr_svg;
    int cn = 0;
    double ceps = 0.0, calpha = 0.0, ca = 0.0, cscale = 1.0, cside = 1.0;
    bool show_struts = false;
    constr_sc
        ->add_option("kind", kind,
                     "regular_polygon | narrow_isosceles | fan_ngon | snub_triangle | "
                     "special_pentagon | integer_pentagon")
        ->required();
    constr_sc->add_option("--n", cn, "vertex count");
    constr_sc->add_option("--eps", ceps, "fan excess radius");
    constr_sc->add_option("--alpha", calpha, "apex / fan angle");
    constr_sc->add_option("--a", ca, "snub cut length");
    constr_sc->add_option("--scale", cscale, "scale factor");
    constr_sc->add_option("--side", cside, "side length");
    constr_sc->add_option("--out", constr_out, "polygon JSON output path");
    constr_sc->add_option("--svg", constr_svg, "SVG output path");
    constr_sc->add_flag("--show-struts", show_struts, "draw strut chords in the SVG");

    auto* search_sc = app.add_subcommand("search", "annealing searches for small perimeters");
    std::string task, search_out, search_trace;
    SearchConfig cfg;
    int sm = 2;
    search_sc->add_option("task", task, "min-delta | centsym | conjecture")->required();
    search_sc->add_option("--n", cfg.n_vertices, "vertex count")->required();
    search_sc->add_option("--m", sm, "constrained side count (conjecture task)");
    search_sc->add_option("--seed", cfg.seed, "RNG seed")->required();
    search_sc->add_option("--iters", cfg.iterations, "iterations per restart");
    search_sc->add_option("--restarts", cfg.restarts, "independent restarts");
    search_sc->add_option("--cooling", cfg.cooling, "per-epoch temperature factor");
    search_sc->add_option("--penalty", cfg.penalty_weight, "constraint penalty weight");
    search_sc->add_option("--out", search_out, "report JSON path");
    search_sc->add_option("--trace", search_trace, "trace CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kInputError;
    }

    try {
        if (verify_sc->parsed()) return cmd_verify_all(profile, quiet);
        if (check_sc->parsed()) return cmd_check(check_input, check_l, quiet);
        if (pent_sc->parsed()) return cmd_pentagon(pa, pb, pg, pent_svg, quiet);
        if (const_sc->parsed()) return cmd_constants(quiet);
        if (constr_sc->parsed())
            return cmd_construct(constr_sc, kind, cn, ceps, calpha, ca, cscale, cside, constr_out,
                                 constr_svg, show_struts, quiet);
        if (search_sc->parsed())
            return cmd_search(task, sm, cfg, search_out, search_trace, quiet);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return kInputError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kInputError;
    }
    return kInputError;
}
