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

#ifndef PNPCURVES_POLYGON_IO_HPP
#define PNPCURVES_POLYGON_IO_HPP

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include <pnpcurves/polygon.hpp>
#include <pnpcurves/subdivision.hpp>

namespace pnp {

// Polygon documents are JSON:
//
//   {
//     "closed": true,
//     "points": [
//       {"p": [0, 0], "n": [0, -1]},
//       {"p": [1, 0]}
//     ]
//   }
//
// "n" is optional per vertex. Missing normals are filled with naive_normals
// when the document is turned into a PnpPolygon. Writers emit 17 significant
// digits so a write/read cycle is exact.

/// A polygon as read from a file, before normal initialization.
struct PolygonDocument {
    Topology topology = Topology::Open;
    std::vector<Vec2> points;
    std::vector<std::optional<UnitVector>> normals; ///< same length as points

    bool has_all_normals() const;

    /// Throws the PnpPolygon / naive_normals errors.
    PnpPolygon to_polygon() const;

    static PolygonDocument from_polygon(const PnpPolygon& polygon);
};

/// Parses the "closed"/"points" fields of a JSON object. Throws Parse.
PolygonDocument polygon_document_from_json(const nlohmann::json& j);

/// Throws Parse on malformed text.
PolygonDocument parse_polygon_json(std::string_view text);

/// One vertex per line: "x,y" or "x,y,nx,ny". Blank lines and lines starting
/// with '#' are ignored. Throws Parse.
PolygonDocument parse_polygon_csv(std::string_view text, Topology topology);

/// JSON when the first non-blank character is '{', CSV otherwise. Throws Parse.
PolygonDocument parse_polygon_text(std::string_view text, Topology csv_topology = Topology::Open);

/// Reads a JSON document (text starting with '{') or CSV. Throws Parse when
/// the file cannot be read or parsed.
PolygonDocument read_polygon_file(const std::filesystem::path& path,
                                  Topology csv_topology = Topology::Open);

/// Lossless decimal form (17 significant digits).
std::string format_number(double v);

std::string write_pnp(const PnpPolygon& polygon);

/// The final polygon plus a "diagnostics" array, and "levels" (every level,
/// input first) when `emit_levels` is set.
std::string write_refinement_pnp(const RefinementResult& result, bool emit_levels);

/// x,y,nx,ny per line. With several polygons, blocks are separated by a blank line.
std::string write_csv(std::span<const PnpPolygon> polygons);

struct SvgOptions {
    double normal_length = 0.0; ///< length of normal ticks in data units, 0 = none
    double margin_ratio = 0.05;
    double stroke_ratio = 0.003; ///< stroke width relative to the larger extent
};

/// One polyline (or closed polygon) per entry, y axis pointing up.
std::string write_svg(std::span<const PnpPolygon> polygons, const SvgOptions& options = {});

/// Shortest decimal form that reads back to the same double.
std::string format_number_shortest(double v);

/// Compact single-line form of write_pnp with shortest round-trip numbers,
/// for wire responses.
std::string polygon_json_text(const PnpPolygon& polygon);

nlohmann::json polygon_to_json(const PnpPolygon& polygon);
nlohmann::json diagnostics_to_json(const RefinementDiagnostics& diagnostics);

} // namespace pnp

#endif // PNPCURVES_POLYGON_IO_HPP
