// Copyright 2026 The pnpcurves Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pnpcurves/polygon_io.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <pnpcurves/normals.hpp>

namespace pnp {

namespace {

Vec2 parse_pair(const nlohmann::json& j, const char* what, std::size_t index) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw Error(ErrorCode::Parse, std::string("'") + what + "' must be [x, y]", index);
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

std::string pair_text(const Vec2& v) {
    return "[" + format_number(v.x) + ", " + format_number(v.y) + "]";
}

void append_points(std::string& out, const PnpPolygon& polygon, const std::string& indent) {
    out += indent + "\"points\": [\n";
    const auto v = polygon.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += indent + "  {\"p\": " + pair_text(v[i].p) + ", \"n\": " + pair_text(v[i].n.vec())
               + "}";
        out += i + 1 < v.size() ? ",\n" : "\n";
    }
    out += indent + "]";
}

std::string optional_number(const std::optional<double>& v) {
    return v ? format_number(*v) : "null";
}

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

} // namespace

bool PolygonDocument::has_all_normals() const {
    return std::all_of(normals.begin(), normals.end(),
                       [](const auto& n) { return n.has_value(); });
}

PnpPolygon PolygonDocument::to_polygon() const {
    if (has_all_normals()) {
        std::vector<PointNormalPair> v;
        v.reserve(points.size());
        for (std::size_t i = 0; i < points.size(); ++i) {
            v.push_back({points[i], *normals[i]});
        }
        return PnpPolygon(std::move(v), topology);
    }
    const PnpPolygon naive = naive_normals(points, topology);
    std::vector<PointNormalPair> v(naive.vertices().begin(), naive.vertices().end());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (normals[i]) {
            v[i].n = *normals[i];
        }
    }
    return PnpPolygon(std::move(v), topology);
}

PolygonDocument PolygonDocument::from_polygon(const PnpPolygon& polygon) {
    PolygonDocument d;
    d.topology = polygon.topology();
    for (const auto& v : polygon.vertices()) {
        d.points.push_back(v.p);
        d.normals.emplace_back(v.n);
    }
    return d;
}

PolygonDocument polygon_document_from_json(const nlohmann::json& j) {
    if (!j.is_object()) {
        throw Error(ErrorCode::Parse, "polygon document must be a JSON object");
    }
    PolygonDocument d;
    if (j.contains("closed")) {
        if (!j["closed"].is_boolean()) {
            throw Error(ErrorCode::Parse, "'closed' must be a boolean");
        }
        d.topology = j["closed"].get<bool>() ? Topology::Closed : Topology::Open;
    }
    if (!j.contains("points") || !j["points"].is_array()) {
        throw Error(ErrorCode::Parse, "'points' must be an array");
    }
    const auto& pts = j["points"];
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& item = pts[i];
        if (!item.is_object() || !item.contains("p")) {
            throw Error(ErrorCode::Parse, "each point needs a 'p' field", i);
        }
        d.points.push_back(parse_pair(item["p"], "p", i));
        if (item.contains("n") && !item["n"].is_null()) {
            const Vec2 n = parse_pair(item["n"], "n", i);
            if (!(norm(n) > 0) || !std::isfinite(norm(n))) {
                throw Error(ErrorCode::Parse, "normal must be a nonzero vector", i);
            }
            d.normals.emplace_back(UnitVector(n));
        }
        else {
            d.normals.emplace_back(std::nullopt);
        }
    }
    return d;
}

PolygonDocument parse_polygon_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::Parse, e.what());
    }
    return polygon_document_from_json(j);
}

PolygonDocument parse_polygon_csv(std::string_view text, Topology topology) {
    PolygonDocument d;
    d.topology = topology;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') {
            continue;
        }
        std::vector<double> values;
        std::stringstream fields(t);
        std::string field;
        while (std::getline(fields, field, ',')) {
            const std::string f = trim(field);
            std::size_t used = 0;
            double v = 0;
            try {
                v = std::stod(f, &used);
            }
            catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != f.size()) {
                throw Error(ErrorCode::Parse,
                            "line " + std::to_string(lineNo) + ": bad number '" + f + "'");
            }
            values.push_back(v);
        }
        if (values.size() != 2 && values.size() != 4) {
            throw Error(ErrorCode::Parse,
                        "line " + std::to_string(lineNo) + ": expected x,y or x,y,nx,ny");
        }
        d.points.push_back({values[0], values[1]});
        if (values.size() == 4) {
            const Vec2 n{values[2], values[3]};
            if (!(norm(n) > 0)) {
                throw Error(ErrorCode::Parse,
                            "line " + std::to_string(lineNo) + ": zero normal");
            }
            d.normals.emplace_back(UnitVector(n));
        }
        else {
            d.normals.emplace_back(std::nullopt);
        }
    }
    return d;
}

PolygonDocument read_polygon_file(const std::filesystem::path& path, Topology csv_topology) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::Parse, "cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_polygon_text(buf.str(), csv_topology);
}

PolygonDocument parse_polygon_text(std::string_view text, Topology csv_topology) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        return parse_polygon_json(text);
    }
    return parse_polygon_csv(text, csv_topology);
}

std::string format_number(double v) {
    if (!std::isfinite(v)) {
        return "null";
    }
    char buf[32];
    const auto result = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, result.ptr);
}

std::string format_number_shortest(double v) {
    if (!std::isfinite(v)) {
        return "null";
    }
    char buf[32];
    const auto result = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, result.ptr);
}

std::string polygon_json_text(const PnpPolygon& polygon) {
    std::string out = std::string("{\"closed\":") + (polygon.closed() ? "true" : "false")
                      + ",\"points\":[";
    out.reserve(out.size() + polygon.size() * 100 + 2);
    char buf[128];
    const auto put = [&buf](char* at, double v) {
        return std::isfinite(v) ? std::to_chars(at, buf + sizeof(buf), v).ptr
                                : std::copy_n("null", 4, at);
    };
    bool first = true;
    for (const auto& v : polygon.vertices()) {
        char* at = buf;
        if (!first) {
            *at++ = ',';
        }
        first = false;
        at = std::copy_n("{\"p\":[", 6, at);
        at = put(at, v.p.x);
        *at++ = ',';
        at = put(at, v.p.y);
        at = std::copy_n("],\"n\":[", 7, at);
        at = put(at, v.n.x());
        *at++ = ',';
        at = put(at, v.n.y());
        at = std::copy_n("]}", 2, at);
        out.append(buf, at);
    }
    out += "]}";
    return out;
}

std::string write_pnp(const PnpPolygon& polygon) {
    std::string out = "{\n";
    out += std::string("  \"closed\": ") + (polygon.closed() ? "true" : "false") + ",\n";
    append_points(out, polygon, "  ");
    out += "\n}\n";
    return out;
}

std::string write_refinement_pnp(const RefinementResult& result, bool emit_levels) {
    const PnpPolygon& last = result.final_polygon();
    std::string out = "{\n";
    out += std::string("  \"closed\": ") + (last.closed() ? "true" : "false") + ",\n";
    append_points(out, last, "  ");
    out += ",\n  \"diagnostics\": [\n";
    const auto& stats = result.diagnostics.levels;
    for (std::size_t i = 0; i < stats.size(); ++i) {
        const LevelStats& s = stats[i];
        out += "    {\"level\": " + std::to_string(s.level) + ", \"e\": "
               + format_number(s.max_edge) + ", \"theta\": " + format_number(s.max_normal_angle)
               + ", \"mu\": " + format_number(s.mu) + ", \"eta_ratio\": "
               + optional_number(s.eta_ratio) + ", \"contraction_bound\": "
               + format_number(s.contraction_bound) + "}";
        out += i + 1 < stats.size() ? ",\n" : "\n";
    }
    out += "  ]";
    if (emit_levels) {
        out += ",\n  \"levels\": [\n";
        for (std::size_t i = 0; i < result.levels.size(); ++i) {
            const PnpPolygon& level = result.levels[i];
            out += std::string("    {\n      \"closed\": ")
                   + (level.closed() ? "true" : "false") + ",\n";
            append_points(out, level, "      ");
            out += "\n    }";
            out += i + 1 < result.levels.size() ? ",\n" : "\n";
        }
        out += "  ]";
    }
    out += "\n}\n";
    return out;
}

std::string write_csv(std::span<const PnpPolygon> polygons) {
    std::string out;
    for (std::size_t k = 0; k < polygons.size(); ++k) {
        if (k > 0) {
            out += "\n";
        }
        for (const auto& v : polygons[k].vertices()) {
            out += format_number(v.p.x) + "," + format_number(v.p.y) + ","
                   + format_number(v.n.x()) + "," + format_number(v.n.y()) + "\n";
        }
    }
    return out;
}

std::string write_svg(std::span<const PnpPolygon> polygons, const SvgOptions& options) {
    double xmin = std::numeric_limits<double>::infinity();
    double ymin = xmin;
    double xmax = -xmin;
    double ymax = -xmin;
    for (const auto& poly : polygons) {
        for (const auto& v : poly.vertices()) {
            Vec2 tips[2] = {v.p, v.p + options.normal_length * v.n.vec()};
            for (const Vec2& q : tips) {
                xmin = std::min(xmin, q.x);
                xmax = std::max(xmax, q.x);
                ymin = std::min(ymin, q.y);
                ymax = std::max(ymax, q.y);
            }
        }
    }
    if (!std::isfinite(xmin)) {
        xmin = ymin = 0;
        xmax = ymax = 1;
    }
    const double extent = std::max({xmax - xmin, ymax - ymin, 1e-9});
    const double margin = options.margin_ratio * extent;
    const double stroke = options.stroke_ratio * extent;

    // Flip y so the drawing matches the usual math orientation.
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
    out += format_number(xmin - margin) + " " + format_number(-ymax - margin) + " "
           + format_number(xmax - xmin + 2 * margin) + " "
           + format_number(ymax - ymin + 2 * margin) + "\">\n";
    for (const auto& poly : polygons) {
        out += std::string("  <") + (poly.closed() ? "polygon" : "polyline")
               + " fill=\"none\" stroke=\"black\" stroke-width=\"" + format_number(stroke)
               + "\" points=\"";
        bool first = true;
        for (const auto& v : poly.vertices()) {
            if (!first) {
                out += " ";
            }
            first = false;
            out += format_number(v.p.x) + "," + format_number(-v.p.y);
        }
        out += "\"/>\n";
        if (options.normal_length > 0) {
            for (const auto& v : poly.vertices()) {
                const Vec2 tip = v.p + options.normal_length * v.n.vec();
                out += "  <line stroke=\"steelblue\" stroke-width=\"" + format_number(stroke)
                       + "\" x1=\"" + format_number(v.p.x) + "\" y1=\"" + format_number(-v.p.y)
                       + "\" x2=\"" + format_number(tip.x) + "\" y2=\"" + format_number(-tip.y)
                       + "\"/>\n";
            }
        }
    }
    out += "</svg>\n";
    return out;
}

nlohmann::json polygon_to_json(const PnpPolygon& polygon) {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& v : polygon.vertices()) {
        pts.push_back({{"p", {v.p.x, v.p.y}}, {"n", {v.n.x(), v.n.y()}}});
    }
    return {{"closed", polygon.closed()}, {"points", std::move(pts)}};
}

nlohmann::json diagnostics_to_json(const RefinementDiagnostics& diagnostics) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& s : diagnostics.levels) {
        nlohmann::json item = {{"level", s.level},
                               {"e", s.max_edge},
                               {"theta", s.max_normal_angle},
                               {"mu", s.mu},
                               {"contraction_bound", s.contraction_bound}};
        item["eta_ratio"] = s.eta_ratio ? nlohmann::json(*s.eta_ratio) : nlohmann::json();
        out.push_back(std::move(item));
    }
    return out;
}

} // namespace pnp
