#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "strutgeo/geometry.hpp"
#include "strutgeo/pentagon.hpp"
#include "strutgeo/search.hpp"
#include "strutgeo/strut.hpp"

namespace strutgeo {

/// Polygon JSON: {"vertices": [[x, y], ...]}, CCW canonical on write. The reader
/// accepts either orientation, normalizes, and throws std::invalid_argument with a
/// diagnostic for malformed or non-convex input.
nlohmann::json polygon_to_json(const ConvexPolygon& p);
ConvexPolygon polygon_from_json(const nlohmann::json& j, double eps_geom = 1e-9);

ConvexPolygon read_polygon_file(const std::string& path, double eps_geom = 1e-9);
void write_polygon_file(const std::string& path, const ConvexPolygon& p);

nlohmann::json delta_report_to_json(const DeltaReport& r);
nlohmann::json delta_s_report_to_json(const DeltaSReport& r);
nlohmann::json search_report_to_json(const SearchReport& r, const SearchConfig& cfg);
nlohmann::json critical_point_to_json(const CriticalPoint& cp);

/// Trace CSV with header `iteration,value,feasible`.
void write_trace_csv(const std::string& path, const SearchReport& r);

struct SvgOptions {
    double unit_px = 100.0;   // 1 geometric unit -> 100 px
    double margin_px = 20.0;
    bool show_struts = false; // dashed apex chords for sides with certificates
    double strut_l = 1.0;
};

std::string polygon_to_svg(const ConvexPolygon& p, const SvgOptions& opt = {});
void write_svg_file(const std::string& path, const ConvexPolygon& p, const SvgOptions& opt = {});

}  // namespace strutgeo
