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

#ifndef PNPCURVES_GEOMETRY_HPP
#define PNPCURVES_GEOMETRY_HPP

#include <optional>
#include <utility>

#include <pnpcurves/error.hpp>
#include <pnpcurves/vec2.hpp>

namespace pnp {

namespace tolerance {

/// Normal angles below this are treated as equal normals (straight segment).
inline constexpr double kSmallAngle = 1e-12;

/// Normal angles within this of pi are treated as antipodal.
inline constexpr double kAntipodal = 1e-12;

/// Relative threshold for coincident points, scaled by 1 + max |coordinate|.
inline constexpr double kCoincident = 1e-14;

/// |sin| of the angle between a normal and the chord below which the normal
/// counts as parallel to the chord.
inline constexpr double kParallelToChord = 1e-12;

} // namespace tolerance

/// A direction in the plane. The stored vector has unit Euclidean norm.
class UnitVector {
public:
    /// The x axis.
    UnitVector() = default;

    /// Normalizes `v`. A vector whose norm is already 1 to within a few ulp is
    /// kept bit-exact. Throws InvalidArgument for zero or non-finite input.
    explicit UnitVector(const Vec2& v);
    UnitVector(double x, double y)
        : UnitVector(Vec2{x, y}) {
    }

    static UnitVector from_angle(double angle);

    double x() const { return v_.x; }
    double y() const { return v_.y; }
    const Vec2& vec() const { return v_; }

    /// Canonical angle in (-pi, pi].
    double angle() const;

    UnitVector operator-() const;

    friend bool operator==(const UnitVector&, const UnitVector&) = default;

private:
    Vec2 v_{1.0, 0.0};
};

struct PointNormalPair {
    Vec2 p;
    UnitVector n;

    friend bool operator==(const PointNormalPair&, const PointNormalPair&) = default;
};

struct CircleSpec {
    Vec2 center;
    double radius = 1.0;
};

/// The short arc of a circle average, running from p0 (start) to p1 (end).
struct ArcSpec {
    CircleSpec circle;
    double start_angle = 0.0; ///< angle of p0 seen from the center
    double end_angle = 0.0;   ///< angle of p1 seen from the center
    double sweep = 0.0;       ///< signed, |sweep| = theta(n0, n1) <= pi
    Vec2 start;
    Vec2 end;

    /// Point at central angle `t * sweep` from the start. t outside [0, 1]
    /// extends the arc along its circle.
    Vec2 point_at(double t) const;

    /// True when the direction of `point - center` lies within the sweep.
    bool contains_direction(const Vec2& point) const;
};

/// Weight of a circle average, restricted to [-1/4, 5/4].
class AverageWeight {
public:
    static constexpr double kMin = -0.25;
    static constexpr double kMax = 1.25;

    /// Throws WeightOutOfRange outside [kMin, kMax] or for NaN.
    AverageWeight(double value); // NOLINT(google-explicit-constructor)

    double value() const { return value_; }

private:
    double value_;
};

/// Which branch of the construction produced a circle average.
enum class AverageCase {
    Endpoint,         ///< weight exactly 0 or 1
    General,          ///< arc of a candidate circle
    ParallelToChord,  ///< general, with the tie rule for a normal along the chord
    EqualNormals,     ///< theta = 0, straight segment
    CoincidentPoints, ///< p0 = p1
};

const char* average_case_name(AverageCase c);

/// Angle between two directions, in [0, pi].
double angle_between(const UnitVector& u, const UnitVector& v);

/// Weighted geodesic average of two directions along the short arc.
/// Throws AntipodalNormals when the directions are opposite.
UnitVector geodesic_average(const UnitVector& u, const UnitVector& v, AverageWeight w);

/// The two circles through p0 and p1 whose chord subtends the normal angle.
/// First: center on the left of p0->p1, second: center on the right.
std::pair<CircleSpec, CircleSpec> candidate_circles(const PointNormalPair& a,
                                                    const PointNormalPair& b);

/// The short arc chosen by the selection criterion.
ArcSpec select_arc(const PointNormalPair& a, const PointNormalPair& b);

/// Side of the chord p0->p1 (+1 left, -1 right) on which the selected arc lies.
/// Requires the generic configuration (distinct points, 0 < theta < pi).
int selected_arc_side(const PointNormalPair& a, const PointNormalPair& b);

/// Classifies the input pair without computing the average.
AverageCase classify_average(const PointNormalPair& a, const PointNormalPair& b,
                             AverageWeight w);

/// The circle average of two point-normal pairs.
PointNormalPair circle_average(const PointNormalPair& a, const PointNormalPair& b,
                               AverageWeight w);

/// |p0 p_w| for the circle average with weight w.
double chord_length(const PointNormalPair& a, const PointNormalPair& b, AverageWeight w);

bool points_coincide(const Vec2& a, const Vec2& b);

} // namespace pnp

#endif // PNPCURVES_GEOMETRY_HPP
