#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "strutgeo/constructions.hpp"
#include "strutgeo/pentagon.hpp"
#include "strutgeo/polygon_io.hpp"
#include "strutgeo/reference.hpp"
#include "strutgeo/search.hpp"
#include "strutgeo/strut.hpp"
#include "strutgeo/verify.hpp"

namespace py = pybind11;
using namespace strutgeo;

namespace {

std::vector<std::pair<double, double>> vertex_list(const ConvexPolygon& p) {
    std::vector<std::pair<double, double>> out;
    out.reserve(p.vertices.size());
    for (const Point& v : p.vertices) out.emplace_back(v.x, v.y);
    return out;
}

std::vector<Point> to_points(const std::vector<std::pair<double, double>>& pts) {
    std::vector<Point> out;
    out.reserve(pts.size());
    for (const auto& [x, y] : pts) out.push_back({x, y});
    return out;
}

}  // namespace

PYBIND11_MODULE(_strutgeo, m) {
    m.doc() = "convex-polygon strut-property toolkit";

    py::class_<Point>(m, "Point")
        .def(py::init<double, double>(), py::arg("x"), py::arg("y"))
        .def_readwrite("x", &Point::x)
        .def_readwrite("y", &Point::y)
        .def("__repr__", [](const Point& p) {
            return "Point(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
        });

    py::class_<Tolerances>(m, "Tolerances")
        .def(py::init<>())
        .def_readwrite("eps_geom", &Tolerances::eps_geom)
        .def_readwrite("eps_contains", &Tolerances::eps_contains)
        .def_readwrite("eps_check", &Tolerances::eps_check);

    py::class_<ConvexPolygon>(m, "ConvexPolygon")
        .def(py::init([](const std::vector<std::pair<double, double>>& pts) {
                 return polygon_from_vertices(to_points(pts));
             }),
             py::arg("vertices"))
        .def_property_readonly("vertices", &vertex_list)
        .def("perimeter", [](const ConvexPolygon& p) { return perimeter(p); })
        .def("signed_area", [](const ConvexPolygon& p) { return signed_area(p); })
        .def("contains",
             [](const ConvexPolygon& p, double x, double y, double tol) {
                 return contains_point(p, {x, y}, tol);
             },
             py::arg("x"), py::arg("y"), py::arg("tol") = 1e-9)
        .def("distance_to",
             [](const ConvexPolygon& p, double x, double y) { return distance_to(p, {x, y}); })
        .def("to_json", [](const ConvexPolygon& p) { return polygon_to_json(p).dump(); })
        .def("__len__", [](const ConvexPolygon& p) { return p.vertices.size(); })
        .def("__repr__", [](const ConvexPolygon& p) {
            return "ConvexPolygon(" + std::to_string(p.vertices.size()) + " vertices)";
        });

    m.def("convex_hull",
          [](const std::vector<std::pair<double, double>>& pts, double eps) {
              const std::vector<Point> v = to_points(pts);
              return convex_hull(v, eps);
          },
          py::arg("points"), py::arg("eps_geom") = 1e-9);
    m.def("polygon_from_json",
          [](const std::string& text) { return polygon_from_json(nlohmann::json::parse(text)); });
    m.def("minkowski_sum", &minkowski_sum);
    m.def("reflect", &reflect);
    m.def("scale", &scale);
    m.def("translate", [](const ConvexPolygon& p, double dx, double dy) {
        return translate(p, {dx, dy});
    });
    m.def("difference_body", &difference_body);
    m.def("central_symmetral", &central_symmetral);
    m.def("symmetry_center", [](const ConvexPolygon& p, double tol) -> py::object {
        const auto c = symmetry_center(p, tol);
        if (!c) return py::none();
        return py::make_tuple(c->x, c->y);
    }, py::arg("polygon"), py::arg("tol") = 1e-9);
    m.def("hausdorff_distance", &hausdorff_distance);

    m.def("strut_apexes",
          [](std::pair<double, double> a, std::pair<double, double> b, double l) {
              std::vector<std::pair<double, double>> out;
              for (const Point& p : strut_apexes({a.first, a.second}, {b.first, b.second}, l))
                  out.emplace_back(p.x, p.y);
              return out;
          },
          py::arg("a"), py::arg("b"), py::arg("l") = 1.0);
    m.def("has_delta_property",
          [](const ConvexPolygon& p, double l) {
              const DeltaReport r = has_delta_property(p, l);
              return py::make_tuple(r.holds, r.failing_sides);
          },
          py::arg("polygon"), py::arg("l") = 1.0);
    m.def("has_delta_s_property", [](const ConvexPolygon& p) {
        const DeltaSReport r = has_delta_s_property(p);
        return py::make_tuple(r.holds, r.failing_sides);
    });
    m.def("delta_report_json", [](const ConvexPolygon& p, double l) {
        return delta_report_to_json(has_delta_property(p, l)).dump();
    }, py::arg("polygon"), py::arg("l") = 1.0);

    py::class_<PentagonParams>(m, "PentagonParams")
        .def(py::init<double, double, double>(), py::arg("alpha"), py::arg("beta"),
             py::arg("gamma"))
        .def_readwrite("alpha", &PentagonParams::alpha)
        .def_readwrite("beta", &PentagonParams::beta)
        .def_readwrite("gamma", &PentagonParams::gamma)
        .def("theta", &PentagonParams::theta)
        .def("in_omega", &PentagonParams::in_omega, py::arg("tol") = 1e-12);

    m.def("build_pentagon", &build_pentagon);
    m.def("pentagon_points", [](const PentagonParams& p) {
        std::vector<std::pair<double, double>> out;
        for (const Point& v : pentagon_points(p)) out.emplace_back(v.x, v.y);
        return out;
    });
    m.def("strut_chord_f", &strut_chord_f);
    m.def("perimeter_closed_form",
          [](const PentagonParams& p, const std::string& form) {
              PerimeterForm f = PerimeterForm::A;
              if (form == "B") f = PerimeterForm::B;
              else if (form == "C") f = PerimeterForm::C;
              else if (form != "A") throw std::invalid_argument("form must be A, B, or C");
              return perimeter_closed_form(p, f);
          },
          py::arg("params"), py::arg("form") = "A");
    m.def("stationarity_D", &stationarity_D);
    m.def("g_curve", &g_curve);
    m.def("extremal_constants", [] {
        const ExtremalConstants ec = extremal_constants();
        return py::make_tuple(ec.theta0, ec.alpha0);
    });
    m.def("gradient_closed_form", [](const PentagonParams& p) {
        return gradient_closed_form(p);
    });
    m.def("classify_equality_pattern",
          [](const PentagonParams& p, double tol) {
              return std::string(to_string(classify_equality_pattern(p, tol)));
          },
          py::arg("params"), py::arg("tol") = 1e-6);
    m.def("special_pentagon_params", &special_pentagon_params);
    m.def("verify_min_over_omega", [](int grid_n, double refine_tol) {
        const OmegaMinimum om = verify_min_over_omega(grid_n, refine_tol);
        return py::make_tuple(om.min_perimeter,
                              py::make_tuple(om.argmin.alpha, om.argmin.beta, om.argmin.gamma),
                              om.near_minimizers.size());
    }, py::arg("grid_n") = 60, py::arg("refine_tol") = 1e-6);
    m.def("case1_perimeters", [] {
        std::vector<double> out;
        for (const CriticalPoint& cp : case1_critical_points().points) out.push_back(cp.perimeter);
        return out;
    });
    m.def("quartic_z1_roots", [] { return case1_critical_points().z1_roots; });

    m.def("regular_polygon", &regular_polygon, py::arg("n"), py::arg("side") = 1.0);
    m.def("narrow_isosceles", &narrow_isosceles);
    m.def("fan_ngon", &fan_ngon);
    m.def("snub_triangle", &snub_triangle);
    m.def("special_pentagon_polygon", &special_pentagon_polygon, py::arg("scale") = 1.0);

    py::class_<SearchConfig>(m, "SearchConfig")
        .def(py::init<>())
        .def_readwrite("seed", &SearchConfig::seed)
        .def_readwrite("iterations", &SearchConfig::iterations)
        .def_readwrite("restarts", &SearchConfig::restarts)
        .def_readwrite("n_vertices", &SearchConfig::n_vertices)
        .def_readwrite("cooling", &SearchConfig::cooling)
        .def_readwrite("penalty_weight", &SearchConfig::penalty_weight);

    auto report_to_dict = [](const SearchReport& r, const SearchConfig& cfg) {
        return search_report_to_json(r, cfg).dump();
    };
    m.def("minimize_delta_perimeter", [report_to_dict](const SearchConfig& cfg) {
        return report_to_dict(minimize_delta_perimeter(cfg), cfg);
    });
    m.def("centsym_deficit_search", [report_to_dict](const SearchConfig& cfg) {
        return report_to_dict(centsym_deficit_search(cfg), cfg);
    });
    m.def("conjecture_search", [report_to_dict](int m_sides, const SearchConfig& cfg) {
        return report_to_dict(conjecture_search(m_sides, cfg), cfg);
    });

    m.def("polygon_to_svg", [](const ConvexPolygon& p, bool show_struts) {
        SvgOptions opt;
        opt.show_struts = show_struts;
        return polygon_to_svg(p, opt);
    }, py::arg("polygon"), py::arg("show_struts") = false);

    m.def("run_acceptance", [] {
        std::vector<py::dict> out;
        for (const CriterionResult& r : run_acceptance()) {
            py::dict d;
            d["id"] = r.id;
            d["name"] = r.name;
            d["pass"] = r.pass;
            d["seconds"] = r.seconds;
            d["detail"] = r.detail;
            out.push_back(std::move(d));
        }
        return out;
    });
}
