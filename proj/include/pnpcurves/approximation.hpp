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

#ifndef PNPCURVES_APPROXIMATION_HPP
#define PNPCURVES_APPROXIMATION_HPP

#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <pnpcurves/geometry.hpp>

namespace pnp {

/// A regular plane curve t -> (x(t), y(t)) with its derivative.
struct ParametricCurve {
    std::string id;
    std::function<Vec2(double)> position;
    std::function<Vec2(double)> derivative;
};

ParametricCurve ellipse_curve(); ///< (2 cos t, sin t)
ParametricCurve spiral_curve();  ///< (t cos t, t sin t)
ParametricCurve cubic_curve();   ///< (t^3 - 3t, t^2 - 1)

struct CurveSamples {
    std::vector<Vec2> points;
    UnitVector start_normal;
    UnitVector end_normal;
    double step = 0.0;
};

/// Uniform parameter samples on [t0, t1] and the unit normals at both ends
/// (unit tangent turned by +pi/2). Throws InvalidArgument for a bad interval
/// or count, SingularTangent when an end tangent vanishes.
CurveSamples sample_curve(const ParametricCurve& curve, double t0, double t1,
                          int count = 101);

struct CircleFit {
    CircleSpec circle;
    double rms_residual = 0.0;
    double max_residual = 0.0;
    int iterations = 0;
};

/// Circle minimizing the sum of squared geometric distances to `points`.
/// Algebraic initialization, then Gauss-Newton on (center, radius) until the
/// step falls below 1e-12 (relative to the point spread) or 100 iterations.
/// Throws CollinearPoints (also for fewer than 3 distinct points).
CircleFit fit_circle_ls(std::span<const Vec2> points);

struct Segment {
    Vec2 start;
    Vec2 end;
};

/// The arc of the circle average of two pairs, or the chord when the normals
/// are equal. Throws AntipodalNormals / DegeneratePoints.
using SupportingArc = std::variant<ArcSpec, Segment>;

SupportingArc build_arc(const PointNormalPair& a, const PointNormalPair& b);

double distance_to_circle(const Vec2& point, const CircleSpec& circle);

/// Distance to the nearest point of the arc, endpoints included.
double distance_to_arc(const Vec2& point, const ArcSpec& arc);
double distance_to_segment(const Vec2& point, const Segment& segment);
double distance_to_arc(const Vec2& point, const SupportingArc& arc);

/// One line of the arc-versus-best-circle comparison.
struct ApproximationCase {
    std::string curve_id;
    std::string t0_label;
    std::string t1_label;
    double t0 = 0.0;
    double t1 = 0.0;
};

struct ApproximationRow {
    ApproximationCase input;
    double max_circle_distance = 0.0;  ///< max over samples of dist to the best circle
    double max_arc_distance = 0.0;     ///< max over samples of dist to the circle-average arc
    double mean_circle_distance = 0.0;
    double mean_arc_distance = 0.0;
};

ParametricCurve curve_by_id(const std::string& id);

/// The six (curve, interval) cases: each curve on two parameter intervals.
std::vector<ApproximationCase> standard_cases();

ApproximationRow evaluate_case(const ApproximationCase& c, int count = 101);

/// Evaluates every standard case, in order.
std::vector<ApproximationRow> table1_report();

/// Published values for the six standard cases, same order and fields as
/// table1_report().
std::vector<ApproximationRow> table1_reference();

std::string format_table(std::span<const ApproximationRow> rows);
std::string format_csv(std::span<const ApproximationRow> rows);

} // namespace pnp

#endif // PNPCURVES_APPROXIMATION_HPP
