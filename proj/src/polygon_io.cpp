#include "strutgeo/polygon_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace strutgeo {

namespace {

std::string fmt(double v, const char* spec = "%.17g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

nlohmann::json point_to_json(Point p) { return nlohmann::json::array({p.x, p.y}); }

}  // namespace

nlohmann::json polygon_to_json(const ConvexPolygon& p) {
    nlohmann::json verts = nlohmann::json::array();
    for (const Point& v : p.vertices) verts.push_back(point_to_json(v));
    return nlohmann::json{{"vertices", std::move(verts)}};
}

ConvexPolygon polygon_from_json(const nlohmann::json& j, double eps_geom) {
    if (!j.is_object() || !j.contains("vertices"))
        throw std::invalid_argument("polygon JSON must be an object with a 'vertices' key");
    const nlohmann::json& verts = j["vertices"];
    if (!verts.is_array() || verts.empty())
        throw std::invalid_argument("polygon JSON: 'vertices' must be a non-empty array");
    std::vector<Point> pts;
    pts.reserve(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const nlohmann::json& v = verts[i];
        if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
            throw std::invalid_argument("polygon JSON: vertex " + std::to_string(i) +
                                        " must be a [x, y] number pair");
        pts.push_back({v[0].get<double>(), v[1].get<double>()});
    }
    return polygon_from_vertices(pts, eps_geom);
}

ConvexPolygon read_polygon_file(const std::string& path, double eps_geom) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open polygon file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(path + ": JSON parse error: " + e.what());
    }
    return polygon_from_json(j, eps_geom);
}

void write_polygon_file(const std::string& path, const ConvexPolygon& p) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write polygon file: " + path);
    out << polygon_to_json(p).dump(2) << '\n';
}

nlohmann::json delta_report_to_json(const DeltaReport& r) {
    nlohmann::json certs = nlohmann::json::array();
    for (const StrutCertificate& c : r.certificates)
        certs.push_back({{"side_index", c.side_index}, {"apex", point_to_json(c.apex)}, {"l", c.l}});
    return nlohmann::json{
        {"holds", r.holds}, {"certificates", std::move(certs)}, {"failing_sides", r.failing_sides}};
}

nlohmann::json delta_s_report_to_json(const DeltaSReport& r) {
    nlohmann::json rects = nlohmann::json::array();
    for (const auto& rect : r.rectangles) {
        if (!rect) {
            rects.push_back(nullptr);
            continue;
        }
        nlohmann::json corners = nlohmann::json::array();
        for (const Point& c : *rect) corners.push_back(point_to_json(c));
        rects.push_back(std::move(corners));
    }
    return nlohmann::json{
        {"holds", r.holds}, {"rectangles", std::move(rects)}, {"failing_sides", r.failing_sides}};
}

nlohmann::json search_report_to_json(const SearchReport& r, const SearchConfig& cfg) {
    nlohmann::json trace = nlohmann::json::array();
    for (const auto& [it, val] : r.trace) trace.push_back({it, val});
    nlohmann::json feas = nlohmann::json::array();
    for (std::uint8_t f : r.trace_feasible) feas.push_back(f != 0);
    nlohmann::json violations = nlohmann::json::array();
    for (const ConvexPolygon& v : r.violations) violations.push_back(polygon_to_json(v));
    return nlohmann::json{{"config",
                           {{"seed", cfg.seed},
                            {"iterations", cfg.iterations},
                            {"restarts", cfg.restarts},
                            {"n_vertices", cfg.n_vertices},
                            {"cooling", cfg.cooling},
                            {"penalty_weight", cfg.penalty_weight}}},
                          {"best_value", r.best_value},
                          {"feasible", r.feasible},
                          {"witness", polygon_to_json(r.witness)},
                          {"constrained_sides", r.constrained_sides},
                          {"violations", std::move(violations)},
                          {"trace", std::move(trace)},
                          {"trace_feasible", std::move(feas)}};
}

nlohmann::json critical_point_to_json(const CriticalPoint& cp) {
    return nlohmann::json{{"alpha", cp.params.alpha},
                          {"beta", cp.params.beta},
                          {"gamma", cp.params.gamma},
                          {"theta", cp.params.theta()},
                          {"perimeter", cp.perimeter},
                          {"kind", to_string(cp.kind)},
                          {"substitution", cp.substitution},
                          {"u3_residual", cp.u3_residual},
                          {"u4_residual", cp.u4_residual},
                          {"u5_factors", cp.u5_factors},
                          {"crit_residual", cp.crit_residual}};
}

void write_trace_csv(const std::string& path, const SearchReport& r) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write trace file: " + path);
    out << "iteration,value,feasible\n";
    for (std::size_t i = 0; i < r.trace.size(); ++i) {
        const bool feas = i < r.trace_feasible.size() ? r.trace_feasible[i] != 0 : r.feasible;
        out << r.trace[i].first << ',' << fmt(r.trace[i].second) << ',' << (feas ? 1 : 0) << '\n';
    }
}

std::string polygon_to_svg(const ConvexPolygon& p, const SvgOptions& opt) {
    if (p.vertices.empty()) throw std::invalid_argument("polygon_to_svg: empty polygon");
    const std::size_t n = p.vertices.size();

    std::vector<std::pair<int, Point>> struts;  // (side, apex)
    if (opt.show_struts && n >= 3) {
        for (std::size_t i = 0; i < n; ++i) {
            if (auto cert = side_has_strut(p, static_cast<int>(i), opt.strut_l))
                struts.emplace_back(static_cast<int>(i), cert->apex);
        }
    }

    double minx = p.vertices[0].x, maxx = minx, miny = p.vertices[0].y, maxy = miny;
    auto grow = [&](Point q) {
        minx = std::min(minx, q.x);
        maxx = std::max(maxx, q.x);
        miny = std::min(miny, q.y);
        maxy = std::max(maxy, q.y);
    };
    for (const Point& v : p.vertices) grow(v);
    for (const auto& [side, apex] : struts) grow(apex);

    const double w = (maxx - minx) * opt.unit_px + 2.0 * opt.margin_px;
    const double h = (maxy - miny) * opt.unit_px + 2.0 * opt.margin_px;
    auto px = [&](Point q) {
        return Point{opt.margin_px + (q.x - minx) * opt.unit_px,
                     opt.margin_px + (maxy - q.y) * opt.unit_px};
    };
    auto coord = [&](double v) { return fmt(v, "%.3f"); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << coord(w) << "\" height=\""
        << coord(h) << "\" viewBox=\"0 0 " << coord(w) << ' ' << coord(h) << "\">\n";
    if (n == 1) {
        const Point c = px(p.vertices[0]);
        svg << "  <circle cx=\"" << coord(c.x) << "\" cy=\"" << coord(c.y)
            << "\" r=\"3\" fill=\"black\"/>\n";
    } else if (n == 2) {
        const Point a = px(p.vertices[0]), b = px(p.vertices[1]);
        svg << "  <line x1=\"" << coord(a.x) << "\" y1=\"" << coord(a.y) << "\" x2=\""
            << coord(b.x) << "\" y2=\"" << coord(b.y)
            << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    } else {
        svg << "  <polygon points=\"";
        for (std::size_t i = 0; i < n; ++i) {
            const Point q = px(p.vertices[i]);
            svg << (i ? " " : "") << coord(q.x) << ',' << coord(q.y);
        }
        svg << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    }
    for (const auto& [side, apex] : struts) {
        const Point a = px(p.vertices[static_cast<std::size_t>(side)]);
        const Point b = px(p.vertices[(static_cast<std::size_t>(side) + 1) % n]);
        const Point c = px(apex);
        for (const Point& end : {a, b}) {
            svg << "  <line x1=\"" << coord(end.x) << "\" y1=\"" << coord(end.y) << "\" x2=\""
                << coord(c.x) << "\" y2=\"" << coord(c.y)
                << "\" stroke=\"#777777\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";
        }
        svg << "  <circle cx=\"" << coord(c.x) << "\" cy=\"" << coord(c.y)
            << "\" r=\"2.5\" fill=\"#777777\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

void write_svg_file(const std::string& path, const ConvexPolygon& p, const SvgOptions& opt) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write svg file: " + path);
    out << polygon_to_svg(p, opt);
}

}  // namespace strutgeo
