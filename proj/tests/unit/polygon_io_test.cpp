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
#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include <pnpcurves/normals.hpp>
#include <pnpcurves/polygon_io.hpp>

#include "../support/generators.hpp"

namespace pnp {
namespace {

using testing::Gen;

ErrorCode parse_error_code(const std::string& text) {
    try {
        parse_polygon_json(text);
    }
    catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "accepted: " << text;
    return ErrorCode::InvalidArgument;
}

TEST(FormatNumber, Lossless) {
    Gen gen(111);
    for (int trial = 0; trial < 10000; ++trial) {
        const double v = gen.uniform(-1, 1) * std::pow(10.0, gen.integer(-300, 300));
        EXPECT_EQ(std::stod(format_number(v)), v);
    }
    EXPECT_EQ(format_number(0.5), "0.5");
    EXPECT_EQ(format_number(3), "3");
    EXPECT_EQ(format_number(NAN), "null");
}

TEST(PolygonJson, RoundTripIsExact) {
    Gen gen(112);
    for (int trial = 0; trial < 200; ++trial) {
        const PnpPolygon p = gen.closed_polygon(3, 30, 0.5);
        const PnpPolygon open({p.vertices().begin(), p.vertices().end()}, Topology::Open);
        for (const PnpPolygon& poly : {p, open}) {
            const PolygonDocument doc = parse_polygon_json(write_pnp(poly));
            EXPECT_TRUE(doc.has_all_normals());
            EXPECT_EQ(doc.to_polygon(), poly);
        }
    }
}

TEST(PolygonJson, MissingNormalsUseNaiveInitialization) {
    const PolygonDocument doc = parse_polygon_json(
        R"({"closed": false, "points": [{"p": [0, 0]}, {"p": [1, 0]}, {"p": [1, 1]}]})");
    EXPECT_FALSE(doc.has_all_normals());
    const std::vector<Vec2> pts{{0, 0}, {1, 0}, {1, 1}};
    EXPECT_EQ(doc.to_polygon(), naive_normals(pts, Topology::Open));
}

TEST(PolygonJson, GivenNormalsAreKept) {
    const PolygonDocument doc = parse_polygon_json(
        R"({"closed": false, "points": [{"p": [0, 0], "n": [0, 2]}, {"p": [1, 0]}, {"p": [1, 1], "n": null}]})");
    const PnpPolygon p = doc.to_polygon();
    EXPECT_EQ(p[0].n, UnitVector(0, 1));
    const std::vector<Vec2> pts{{0, 0}, {1, 0}, {1, 1}};
    const PnpPolygon naive = naive_normals(pts, Topology::Open);
    EXPECT_EQ(p[1].n, naive[1].n);
    EXPECT_EQ(p[2].n, naive[2].n);
}

TEST(PolygonJson, DefaultsToOpen) {
    const PolygonDocument doc = parse_polygon_json(R"({"points": [{"p": [0, 0]}, {"p": [1, 0]}]})");
    EXPECT_EQ(doc.topology, Topology::Open);
}

TEST(PolygonJson, Malformed) {
    EXPECT_EQ(parse_error_code("{"), ErrorCode::Parse);
    EXPECT_EQ(parse_error_code("[]"), ErrorCode::Parse);
    EXPECT_EQ(parse_error_code(R"({"closed": true})"), ErrorCode::Parse);
    EXPECT_EQ(parse_error_code(R"({"closed": 1, "points": []})"), ErrorCode::Parse);
    EXPECT_EQ(parse_error_code(R"({"points": [{"p": [0]}]})"), ErrorCode::Parse);
    EXPECT_EQ(parse_error_code(R"({"points": [{"p": [0, "a"]}]})"), ErrorCode::Parse);
    EXPECT_EQ(parse_error_code(R"({"points": [{"q": [0, 0]}]})"), ErrorCode::Parse);
    EXPECT_EQ(parse_error_code(R"({"points": [{"p": [0, 0], "n": [0, 0]}]})"), ErrorCode::Parse);
    try {
        parse_polygon_json(R"({"points": [{"p": [0, 0]}, {"p": [1]}]})");
    }
    catch (const Error& e) {
        EXPECT_EQ(e.index(), 1u);
    }
}

TEST(PolygonCsv, ParsesPointsAndNormals) {
    const PolygonDocument doc =
        parse_polygon_csv("# comment\n0,0\n\n 1.5 , -2 \n3,4,0,1\n", Topology::Closed);
    EXPECT_EQ(doc.topology, Topology::Closed);
    ASSERT_EQ(doc.points.size(), 3u);
    EXPECT_EQ(doc.points[1], (Vec2{1.5, -2}));
    EXPECT_FALSE(doc.normals[0].has_value());
    EXPECT_EQ(doc.normals[2], UnitVector(0, 1));
    EXPECT_THROW(parse_polygon_csv("1,2,3\n", Topology::Open), Error);
    EXPECT_THROW(parse_polygon_csv("1,x\n", Topology::Open), Error);
}

TEST(PolygonCsv, RoundTripIsExact) {
    Gen gen(113);
    const PnpPolygon p = gen.closed_polygon(10, 20, 0.5);
    const std::vector<PnpPolygon> one{p};
    const PolygonDocument doc = parse_polygon_csv(write_csv(one), Topology::Closed);
    EXPECT_EQ(doc.to_polygon(), p);
}

TEST(PolygonText, DetectsFormat) {
    EXPECT_EQ(parse_polygon_text("  {\"points\": [{\"p\": [0, 0]}, {\"p\": [1, 0]}]}").points.size(),
              2u);
    EXPECT_EQ(parse_polygon_text("0,0\n1,0\n").points.size(), 2u);
}

TEST(ReadPolygonFile, MissingFile) {
    try {
        read_polygon_file("/nonexistent/polygon.json");
        FAIL();
    }
    catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::Parse);
    }
}

TEST(ReadPolygonFile, ReadsWrittenFile) {
    Gen gen(114);
    const PnpPolygon p = gen.closed_polygon();
    const auto path = std::filesystem::temp_directory_path() / "pnpcurves_io_test.json";
    std::ofstream(path) << write_pnp(p);
    EXPECT_EQ(read_polygon_file(path).to_polygon(), p);
    std::filesystem::remove(path);
}

TEST(RefinementOutput, ContainsDiagnosticsAndLevels) {
    const PnpPolygon in = testing::circle_samples(4, {0, 0}, 1);
    const RefinementResult r = refine(in, {Scheme::MLR, 1, 2});
    const auto j = nlohmann::json::parse(write_refinement_pnp(r, true));
    EXPECT_EQ(j["points"].size(), 16u);
    EXPECT_TRUE(j["closed"].get<bool>());
    ASSERT_EQ(j["diagnostics"].size(), 3u);
    EXPECT_TRUE(j["diagnostics"][2]["eta_ratio"].is_null());
    EXPECT_TRUE(j["diagnostics"][0]["eta_ratio"].is_number());
    ASSERT_EQ(j["levels"].size(), 3u);
    EXPECT_EQ(j["levels"][0]["points"].size(), 4u);
    EXPECT_EQ(polygon_document_from_json(j["levels"][1]).to_polygon(), r.levels[1]);
    EXPECT_EQ(parse_polygon_json(write_refinement_pnp(r, false)).to_polygon(), r.final_polygon());
    EXPECT_FALSE(nlohmann::json::parse(write_refinement_pnp(r, false)).contains("levels"));
}

TEST(RefinementOutput, MatchesLibraryJson) {
    const PnpPolygon in = testing::circle_samples(5, {1, 2}, 3);
    const RefinementResult r = refine(in, {Scheme::M4PT, 1, 2});
    const auto handwritten = nlohmann::json::parse(write_refinement_pnp(r, false));
    EXPECT_EQ(handwritten["points"], polygon_to_json(r.final_polygon())["points"]);
    EXPECT_EQ(handwritten["diagnostics"], diagnostics_to_json(r.diagnostics));
}

TEST(Svg, DrawsEveryPolygon) {
    const PnpPolygon closed = testing::circle_samples(6, {0, 0}, 1);
    const PnpPolygon open({closed.vertices().begin(), closed.vertices().end()}, Topology::Open);
    const std::vector<PnpPolygon> polys{closed, open};
    SvgOptions options;
    options.normal_length = 0.2;
    const std::string svg = write_svg(polys, options);
    EXPECT_EQ(svg.rfind("<svg", 0), 0u);
    EXPECT_NE(svg.find("<polygon"), std::string::npos);
    EXPECT_NE(svg.find("<polyline"), std::string::npos);
    std::size_t lines = 0;
    for (std::size_t at = svg.find("<line"); at != std::string::npos; at = svg.find("<line", at + 1)) {
        ++lines;
    }
    EXPECT_EQ(lines, 12u);
    EXPECT_EQ(write_svg(std::vector<PnpPolygon>{closed}).find("<line"), std::string::npos);
}

} // namespace
} // namespace pnp
