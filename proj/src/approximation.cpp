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

#include <pnpcurves/approximation.hpp>

#include <algorithm>
#include <cmath>
#include <string>
#include <type_traits>

#include <Eigen/Dense>
#include <fmt/format.h>

namespace pnp {

namespace {

constexpr int kMaxFitIterations = 100;
constexpr double kFitStepTolerance = 1e-12;

UnitVector end_normal(const ParametricCurve& curve, double t) {
    const Vec2 d = curve.derivative(t);
    const double speed = norm(d);
    if (!(speed > 1e-12)) {
        throw Error(ErrorCode::SingularTangent,
                    curve.id + " has a vanishing tangent at t = " + std::to_string(t));
    }
    return UnitVector(perp_left(d / speed));
}

double geometric_cost(std::span<const Vec2> points, const Eigen::Vector3d& x) {
    double cost = 0;
    for (const Vec2& p : points) {
        const double r = std::hypot(p.x - x[0], p.y - x[1]) - x[2];
        cost += r * r;
    }
    return cost;
}

} // namespace

ParametricCurve ellipse_curve() {
    return {"ellipse",
            [](double t) { return Vec2{2 * std::cos(t), std::sin(t)}; },
            [](double t) { return Vec2{-2 * std::sin(t), std::cos(t)}; }};
}

ParametricCurve spiral_curve() {
    return {"spiral",
            [](double t) { return Vec2{t * std::cos(t), t * std::sin(t)}; },
            [](double t) {
                return Vec2{std::cos(t) - t * std::sin(t), std::sin(t) + t * std::cos(t)};
            }};
}

ParametricCurve cubic_curve() {
    return {"cubic",
            [](double t) { return Vec2{t * t * t - 3 * t, t * t - 1}; },
            [](double t) { return Vec2{3 * t * t - 3, 2 * t}; }};
}

ParametricCurve curve_by_id(const std::string& id) {
    if (id == "ellipse") {
        return ellipse_curve();
    }
    if (id == "spiral") {
        return spiral_curve();
    }
    if (id == "cubic") {
        return cubic_curve();
    }
    throw Error(ErrorCode::InvalidArgument, "unknown curve '" + id + "'");
}

CurveSamples sample_curve(const ParametricCurve& curve, double t0, double t1, int count) {
    if (!(t1 > t0)) {
        throw Error(ErrorCode::InvalidArgument, "sampling interval must satisfy t1 > t0");
    }
    if (count < 2) {
        throw Error(ErrorCode::InvalidArgument, "need at least 2 samples");
    }
    CurveSamples s;
    s.step = (t1 - t0) / (count - 1);
    s.points.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const double t = i + 1 == count ? t1 : t0 + i * s.step;
        s.points.push_back(curve.position(t));
    }
    s.start_normal = end_normal(curve, t0);
    s.end_normal = end_normal(curve, t1);
    return s;
}

CircleFit fit_circle_ls(std::span<const Vec2> points) {
    const auto n = static_cast<Eigen::Index>(points.size());
    if (n < 3) {
        throw Error(ErrorCode::CollinearPoints, "a circle fit needs at least 3 points");
    }

    // Work relative to the centroid for conditioning.
    Vec2 centroid;
    for (const Vec2& p : points) {
        centroid += p;
    }
    centroid = centroid / static_cast<double>(n);
    Eigen::Matrix2d cov = Eigen::Matrix2d::Zero();
    for (const Vec2& p : points) {
        const Eigen::Vector2d d(p.x - centroid.x, p.y - centroid.y);
        cov += d * d.transpose();
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(cov);
    const double spreadMax = std::sqrt(std::max(eig.eigenvalues()[1], 0.0));
    const double spreadMin = std::sqrt(std::max(eig.eigenvalues()[0], 0.0));
    if (!(spreadMax > 0) || spreadMin <= 1e-12 * spreadMax) {
        throw Error(ErrorCode::CollinearPoints, "points are collinear");
    }
    const double scale = spreadMax / std::sqrt(static_cast<double>(n));

    // Algebraic fit: x^2 + y^2 + D x + E y + F = 0 in centered coordinates.
    Eigen::MatrixXd a(n, 3);
    Eigen::VectorXd rhs(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Vec2 d = points[static_cast<std::size_t>(i)] - centroid;
        a(i, 0) = d.x;
        a(i, 1) = d.y;
        a(i, 2) = 1.0;
        rhs[i] = -(d.x * d.x + d.y * d.y);
    }
    const Eigen::Vector3d def = a.colPivHouseholderQr().solve(rhs);
    const double cx = -def[0] / 2;
    const double cy = -def[1] / 2;
    const double r2 = cx * cx + cy * cy - def[2];
    if (!(r2 > 0) || !std::isfinite(r2)) {
        throw Error(ErrorCode::CollinearPoints, "algebraic circle fit degenerated");
    }

    std::vector<Vec2> local;
    local.reserve(points.size());
    for (const Vec2& p : points) {
        local.push_back(p - centroid);
    }

    // Gauss-Newton on sum (|p - c| - r)^2 with step halving.
    Eigen::Vector3d x(cx, cy, std::sqrt(r2));
    double cost = geometric_cost(local, x);
    int iterations = 0;
    for (; iterations < kMaxFitIterations; ++iterations) {
        Eigen::Matrix3d jtj = Eigen::Matrix3d::Zero();
        Eigen::Vector3d jtr = Eigen::Vector3d::Zero();
        for (const Vec2& p : local) {
            const double dx = x[0] - p.x;
            const double dy = x[1] - p.y;
            const double dist = std::hypot(dx, dy);
            if (dist == 0) {
                continue;
            }
            const Eigen::Vector3d j(dx / dist, dy / dist, -1.0);
            jtj += j * j.transpose();
            jtr += j * (dist - x[2]);
        }
        Eigen::Vector3d step = jtj.ldlt().solve(-jtr);
        if (!step.allFinite()) {
            break;
        }
        double trialCost = geometric_cost(local, x + step);
        int halvings = 0;
        while (trialCost > cost && halvings < 30) {
            step *= 0.5;
            trialCost = geometric_cost(local, x + step);
            ++halvings;
        }
        if (trialCost <= cost) {
            x += step;
            cost = trialCost;
        }
        if (step.norm() < kFitStepTolerance * scale || trialCost > cost) {
            ++iterations;
            break;
        }
    }

    CircleFit fit;
    fit.circle = {Vec2{x[0], x[1]} + centroid, std::abs(x[2])};
    fit.iterations = iterations;
    double sumSq = 0;
    for (const Vec2& p : points) {
        const double r = distance_to_circle(p, fit.circle);
        sumSq += r * r;
        fit.max_residual = std::max(fit.max_residual, r);
    }
    fit.rms_residual = std::sqrt(sumSq / static_cast<double>(n));
    return fit;
}

SupportingArc build_arc(const PointNormalPair& a, const PointNormalPair& b) {
    const double theta = angle_between(a.n, b.n);
    if (kPi - theta < tolerance::kAntipodal) {
        throw Error(ErrorCode::AntipodalNormals, "end normals are opposite");
    }
    if (theta < tolerance::kSmallAngle) {
        return Segment{a.p, b.p};
    }
    return select_arc(a, b);
}

double distance_to_circle(const Vec2& point, const CircleSpec& circle) {
    return std::abs(distance(point, circle.center) - circle.radius);
}

double distance_to_arc(const Vec2& point, const ArcSpec& arc) {
    if (distance(point, arc.circle.center) == 0) {
        return arc.circle.radius;
    }
    if (arc.contains_direction(point)) {
        return distance_to_circle(point, arc.circle);
    }
    return std::min(distance(point, arc.start), distance(point, arc.end));
}

double distance_to_segment(const Vec2& point, const Segment& segment) {
    const Vec2 d = segment.end - segment.start;
    const double len2 = dot(d, d);
    if (len2 == 0) {
        return distance(point, segment.start);
    }
    const double t = std::clamp(dot(point - segment.start, d) / len2, 0.0, 1.0);
    return distance(point, segment.start + t * d);
}

double distance_to_arc(const Vec2& point, const SupportingArc& arc) {
    return std::visit(
        [&](const auto& a) -> double {
            if constexpr (std::is_same_v<std::decay_t<decltype(a)>, ArcSpec>) {
                return distance_to_arc(point, a);
            }
            else {
                return distance_to_segment(point, a);
            }
        },
        arc);
}

std::vector<ApproximationCase> standard_cases() {
    return {
        {"ellipse", "5pi/8", "pi", 5 * kPi / 8, kPi},
        {"ellipse", "12pi/16", "15pi/16", 12 * kPi / 16, 15 * kPi / 16},
        {"spiral", "10pi/8", "17pi/8", 10 * kPi / 8, 17 * kPi / 8},
        {"spiral", "24pi/16", "31pi/16", 24 * kPi / 16, 31 * kPi / 16},
        {"cubic", "0", "6pi/8", 0.0, 6 * kPi / 8},
        {"cubic", "3pi/16", "9pi/16", 3 * kPi / 16, 9 * kPi / 16},
    };
}

ApproximationRow evaluate_case(const ApproximationCase& c, int count) {
    const ParametricCurve curve = curve_by_id(c.curve_id);
    const CurveSamples s = sample_curve(curve, c.t0, c.t1, count);
    const CircleFit fit = fit_circle_ls(s.points);
    const SupportingArc arc = build_arc({s.points.front(), s.start_normal},
                                        {s.points.back(), s.end_normal});

    ApproximationRow row;
    row.input = c;
    double sumCircle = 0;
    double sumArc = 0;
    for (const Vec2& p : s.points) {
        const double dc = distance_to_circle(p, fit.circle);
        const double da = distance_to_arc(p, arc);
        row.max_circle_distance = std::max(row.max_circle_distance, dc);
        row.max_arc_distance = std::max(row.max_arc_distance, da);
        sumCircle += dc;
        sumArc += da;
    }
    row.mean_circle_distance = sumCircle / static_cast<double>(s.points.size());
    row.mean_arc_distance = sumArc / static_cast<double>(s.points.size());
    return row;
}

std::vector<ApproximationRow> table1_report() {
    std::vector<ApproximationRow> rows;
    for (const auto& c : standard_cases()) {
        rows.push_back(evaluate_case(c));
    }
    return rows;
}

std::vector<ApproximationRow> table1_reference() {
    const auto cases = standard_cases();
    // max circle, max arc, mean circle, mean arc
    const double values[6][4] = {
        {0.04145, 0.05984, 0.01315, 0.02909},
        {0.00580, 0.00710, 0.00193, 0.00377},
        {0.20098, 0.28437, 0.06613, 0.14787},
        {0.02337, 0.02643, 0.00794, 0.01530},
        {1.46814, 1.97726, 0.49597, 1.02364},
        {0.25617, 0.32838, 0.09297, 0.17556},
    };
    std::vector<ApproximationRow> rows;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        rows.push_back({cases[i], values[i][0], values[i][1], values[i][2], values[i][3]});
    }
    return rows;
}

std::string format_table(std::span<const ApproximationRow> rows) {
    std::string out = fmt::format("{:<8} {:>8} {:>8} {:>10} {:>10} {:>10} {:>10}\n", "curve",
                                  "t0", "t100", "max_circle", "max_arc", "mean_circ",
                                  "mean_arc");
    for (const auto& r : rows) {
        out += fmt::format("{:<8} {:>8} {:>8} {:>10.5f} {:>10.5f} {:>10.5f} {:>10.5f}\n",
                           r.input.curve_id, r.input.t0_label, r.input.t1_label,
                           r.max_circle_distance, r.max_arc_distance,
                           r.mean_circle_distance, r.mean_arc_distance);
    }
    return out;
}

std::string format_csv(std::span<const ApproximationRow> rows) {
    std::string out = "curve,t0,t100,max_circle,max_arc,mean_circle,mean_arc\n";
    for (const auto& r : rows) {
        out += fmt::format("{},{},{},{:.17g},{:.17g},{:.17g},{:.17g}\n", r.input.curve_id,
                           r.input.t0_label, r.input.t1_label, r.max_circle_distance,
                           r.max_arc_distance, r.mean_circle_distance,
                           r.mean_arc_distance);
    }
    return out;
}

} // namespace pnp
