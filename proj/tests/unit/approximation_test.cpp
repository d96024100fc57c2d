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
#include <cmath>

#include <gtest/gtest.h>

#include <pnpcurves/approximation.hpp>

#include "../support/generators.hpp"

namespace pnp {
namespace {

using testing::Gen;

double brute_force_arc_distance(const Vec2& q, const ArcSpec& arc, int samples) {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= samples; ++i) {
        const double a = arc.start_angle + arc.sweep * i / samples;
        const Vec2 p = arc.circle.center + arc.circle.radius * Vec2{std::cos(a), std::sin(a)};
        best = std::min(best, distance(p, q));
    }
    return best;
}

TEST(SampleCurve, Evaluation) {
    const Vec2 e = ellipse_curve().position(kPi);
    EXPECT_NEAR(e.x, -2, 1e-15);
    EXPECT_NEAR(e.y, 0, 1e-15);
    const Vec2 s = spiral_curve().position(3 * kPi / 2);
    EXPECT_NEAR(s.x, 0, 1e-14);
    EXPECT_NEAR(s.y, -3 * kPi / 2, 1e-14);
    const Vec2 c = cubic_curve().position(2);
    EXPECT_EQ(c, (Vec2{2, 3}));
}

TEST(SampleCurve, UniformSpacingAndEndNormals) {
    const CurveSamples s = sample_curve(ellipse_curve(), 5 * kPi / 8, kPi);
    ASSERT_EQ(s.points.size(), 101u);
    EXPECT_EQ(s.step, (kPi - 5 * kPi / 8) / 100);
    EXPECT_NEAR(s.points.back().x, -2, 1e-15);
    // Tangent at pi is (0, -1); turned by +pi/2 gives (1, 0).
    EXPECT_NEAR(s.end_normal.x(), 1, 1e-15);
    EXPECT_NEAR(s.end_normal.y(), 0, 1e-15);
}

TEST(SampleCurve, DerivativesMatchFiniteDifferences) {
    for (const auto& curve : {ellipse_curve(), spiral_curve(), cubic_curve()}) {
        for (double t = -2; t <= 2; t += 0.37) {
            const double h = 1e-6;
            const Vec2 fd = (curve.position(t + h) - curve.position(t - h)) / (2 * h);
            EXPECT_LT(distance(fd, curve.derivative(t)), 1e-7) << curve.id;
        }
    }
}

TEST(SampleCurve, RejectsBadInput) {
    EXPECT_THROW(sample_curve(ellipse_curve(), 0, 1, 1), Error);
    const ParametricCurve flat{"flat", [](double) { return Vec2{1, 1}; },
                               [](double) { return Vec2{0, 0}; }};
    try {
        sample_curve(flat, 0, 1);
        FAIL();
    }
    catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SingularTangent);
    }
}

TEST(FitCircle, ThreePointsCircumscribed) {
    const std::vector<Vec2> pts{{0, 0}, {4, 0}, {0, 3}};
    const CircleFit fit = fit_circle_ls(pts);
    EXPECT_NEAR(fit.circle.center.x, 2, 1e-12);
    EXPECT_NEAR(fit.circle.center.y, 1.5, 1e-12);
    EXPECT_NEAR(fit.circle.radius, 2.5, 1e-12);
    EXPECT_LT(fit.max_residual, 1e-12);
}

TEST(FitCircle, ExactSamples) {
    std::vector<Vec2> pts;
    for (int i = 0; i < 20; ++i) {
        const double a = 0.3 + 0.2 * i;
        pts.push_back({3 + 2 * std::cos(a), -1 + 2 * std::sin(a)});
    }
    const CircleFit fit = fit_circle_ls(pts);
    EXPECT_NEAR(fit.circle.center.x, 3, 1e-10);
    EXPECT_NEAR(fit.circle.center.y, -1, 1e-10);
    EXPECT_NEAR(fit.circle.radius, 2, 1e-10);
    EXPECT_LT(fit.rms_residual, 1e-10);
}

TEST(FitCircle, GeometricOptimum) {
    // Perturbing the fitted circle never lowers the sum of squared distances.
    const CurveSamples s = sample_curve(cubic_curve(), 0, 6 * kPi / 8);
    const CircleFit fit = fit_circle_ls(s.points);
    const auto cost = [&](const CircleSpec& c) {
        double sum = 0;
        for (const Vec2& p : s.points) {
            const double r = distance(p, c.center) - c.radius;
            sum += r * r;
        }
        return sum;
    };
    const double best = cost(fit.circle);
    Gen gen(101);
    for (int trial = 0; trial < 200; ++trial) {
        CircleSpec c = fit.circle;
        c.center += 1e-4 * gen.point(1);
        c.radius += gen.uniform(-1e-4, 1e-4);
        EXPECT_GE(cost(c), best - 1e-12);
    }
}

TEST(FitCircle, EllipseRow) {
    const CurveSamples s = sample_curve(ellipse_curve(), 5 * kPi / 8, kPi);
    const CircleFit fit = fit_circle_ls(s.points);
    EXPECT_NEAR(fit.max_residual, 0.04145, 5e-6);
    double mean = 0;
    for (const Vec2& p : s.points) {
        mean += distance_to_circle(p, fit.circle);
    }
    EXPECT_NEAR(mean / 101, 0.01315, 5e-6);
}

TEST(FitCircle, RejectsCollinear) {
    const std::vector<Vec2> line{{0, 0}, {1, 1}, {2, 2}, {3, 3}};
    try {
        fit_circle_ls(line);
        FAIL();
    }
    catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::CollinearPoints);
    }
}

TEST(BuildArc, Cases) {
    const PointNormalPair a{{1, 0}, UnitVector(1, 0)};
    const PointNormalPair b{{0, 1}, UnitVector(0, 1)};
    const auto arc = std::get<ArcSpec>(build_arc(a, b));
    EXPECT_NEAR(norm(arc.circle.center), 0, 1e-15);
    EXPECT_NEAR(arc.circle.radius, 1, 1e-15);
    const auto seg =
        std::get<Segment>(build_arc({{0, 0}, UnitVector(0, 1)}, {{2, 0}, UnitVector(0, 1)}));
    EXPECT_EQ(seg.start, (Vec2{0, 0}));
    EXPECT_EQ(seg.end, (Vec2{2, 0}));
    EXPECT_THROW(build_arc({{0, 0}, UnitVector(0, 1)}, {{2, 0}, UnitVector(0, -1)}), Error);
}

TEST(Distances, Examples) {
    const CircleSpec unit{{0, 0}, 1};
    EXPECT_EQ(distance_to_circle({0, 0}, unit), 1);
    const auto arc = std::get<ArcSpec>(
        build_arc({{1, 0}, UnitVector(1, 0)}, {{0, 1}, UnitVector(0, 1)}));
    EXPECT_NEAR(distance_to_arc(Vec2{std::sqrt(0.5), std::sqrt(0.5)}, arc), 0, 1e-15);
    // Outside the sweep: nearest endpoint.
    EXPECT_NEAR(distance_to_arc(Vec2{2, -1}, arc), std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(distance_to_segment({1, 1}, {{0, 0}, {2, 0}}), 1, 1e-15);
    EXPECT_NEAR(distance_to_segment({3, 0}, {{0, 0}, {2, 0}}), 1, 1e-15);
}

TEST(Distances, ArcDistanceMatchesDenseSampling) {
    Gen gen(102);
    for (int trial = 0; trial < 20; ++trial) {
        const auto [a, b] = gen.averageable_pair(0.2, kPi - 0.2);
        const auto arc = std::get<ArcSpec>(build_arc(a, b));
        const Vec2 q = arc.circle.center + arc.circle.radius * gen.uniform(0, 2) * gen.direction().vec();
        const double exact = distance_to_arc(q, arc);
        const double sampled = brute_force_arc_distance(q, arc, 1'000'000);
        const double spacing = arc.circle.radius * std::abs(arc.sweep) / 1'000'000;
        EXPECT_LE(exact, sampled + 1e-12);
        EXPECT_GE(exact, sampled - spacing);
    }
}

TEST(ApproximationTable, MatchesReferenceToPrintedDigits) {
    const auto rows = table1_report();
    const auto ref = table1_reference();
    ASSERT_EQ(rows.size(), 6u);
    ASSERT_EQ(ref.size(), 6u);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        EXPECT_EQ(rows[i].input.curve_id, ref[i].input.curve_id);
        EXPECT_NEAR(rows[i].max_arc_distance, ref[i].max_arc_distance, 5e-6);
        EXPECT_NEAR(rows[i].mean_arc_distance, ref[i].mean_arc_distance, 5e-6);
        // The reference circle fit came from an unspecified solver.
        EXPECT_NEAR(rows[i].max_circle_distance, ref[i].max_circle_distance, 5e-5);
        EXPECT_NEAR(rows[i].mean_circle_distance, ref[i].mean_circle_distance, 5e-5);
        EXPECT_LE(rows[i].mean_circle_distance, rows[i].max_circle_distance);
        EXPECT_LE(rows[i].mean_arc_distance, rows[i].max_arc_distance);
    }
}

TEST(ApproximationTable, Formatting) {
    const auto rows = table1_report();
    const std::string table = format_table(rows);
    EXPECT_EQ(std::count(table.begin(), table.end(), '\n'), 7);
    EXPECT_NE(table.find("5pi/8"), std::string::npos);
    const std::string csv = format_csv(rows);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 7);
    EXPECT_EQ(csv.substr(0, 5), "curve");
}

TEST(ApproximationTable, Deterministic) {
    const auto a = table1_report();
    const auto b = table1_report();
    EXPECT_EQ(format_csv(a), format_csv(b));
}

} // namespace
} // namespace pnp
