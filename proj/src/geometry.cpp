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

#include <pnpcurves/geometry.hpp>

#include <cmath>
#include <limits>
#include <string>

namespace pnp {

namespace {

constexpr double kUnitSlack = 4 * std::numeric_limits<double>::epsilon();

int sign_of(double v) {
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

bool is_antipodal(double theta) {
    return kPi - theta < tolerance::kAntipodal;
}

// Side of the chord direction on which `n` points: +1 left, -1 right,
// 0 when n is parallel to the chord.
int chord_side(const Vec2& chordDir, const Vec2& n) {
    const double s = cross(chordDir, n);
    if (std::abs(s) < tolerance::kParallelToChord) {
        return 0;
    }
    return sign_of(s);
}

struct Generic {
    Vec2 chord;
    Vec2 chordDir;
    double length;
    double theta;
};

// Validates the generic configuration shared by candidate_circles and select_arc.
Generic generic_setup(const PointNormalPair& a, const PointNormalPair& b) {
    if (points_coincide(a.p, b.p)) {
        throw Error(ErrorCode::DegeneratePoints, "p0 and p1 coincide");
    }
    const double theta = angle_between(a.n, b.n);
    if (theta < tolerance::kSmallAngle) {
        throw Error(ErrorCode::ZeroAngle, "normals are equal, no candidate circle");
    }
    if (is_antipodal(theta)) {
        throw Error(ErrorCode::AntipodalNormals, "normals are opposite");
    }
    const Vec2 chord = b.p - a.p;
    const double length = norm(chord);
    return {chord, chord / length, length, theta};
}

ArcSpec arc_on_side(const PointNormalPair& a, const PointNormalPair& b,
                    const Generic& g, int side) {
    const double halfSin = std::sin(g.theta / 2);
    const double radius = g.length / (2 * halfSin);
    const double apothem = radius * std::cos(g.theta / 2);
    const Vec2 mid = (a.p + b.p) * 0.5;
    // The short arc lies on the opposite side of the chord from its center.
    const Vec2 center = mid - (side * apothem) * perp_left(g.chordDir);

    ArcSpec arc;
    arc.circle = {center, radius};
    arc.start = a.p;
    arc.end = b.p;
    const Vec2 r0 = a.p - center;
    const Vec2 r1 = b.p - center;
    arc.start_angle = std::atan2(r0.y, r0.x);
    arc.end_angle = std::atan2(r1.y, r1.x);
    arc.sweep = -side * g.theta;
    return arc;
}

} // namespace

// UnitVector ---------------------------------------------------------------

UnitVector::UnitVector(const Vec2& v) {
    const double len = norm(v);
    if (!(len > 0) || !std::isfinite(len)) {
        throw Error(ErrorCode::InvalidArgument, "direction must be a finite nonzero vector");
    }
    v_ = std::abs(len - 1.0) <= kUnitSlack ? v : v / len;
}

UnitVector UnitVector::from_angle(double angle) {
    return UnitVector(Vec2{std::cos(angle), std::sin(angle)});
}

double UnitVector::angle() const {
    const double a = std::atan2(v_.y, v_.x);
    return a == -kPi ? kPi : a;
}

UnitVector UnitVector::operator-() const {
    UnitVector r;
    r.v_ = -v_;
    return r;
}

// ArcSpec --------------------------------------------------------------------

Vec2 ArcSpec::point_at(double t) const {
    const double a = start_angle + t * sweep;
    return circle.center + circle.radius * Vec2{std::cos(a), std::sin(a)};
}

bool ArcSpec::contains_direction(const Vec2& point) const {
    const Vec2 r = point - circle.center;
    double rel = (std::atan2(r.y, r.x) - start_angle) * (sweep < 0 ? -1.0 : 1.0);
    rel = std::fmod(rel, 2 * kPi);
    if (rel < 0) {
        rel += 2 * kPi;
    }
    return rel <= std::abs(sweep);
}

// AverageWeight ------------------------------------------------------------

AverageWeight::AverageWeight(double value)
    : value_(value) {
    if (!(value >= kMin && value <= kMax)) {
        throw Error(ErrorCode::WeightOutOfRange,
                    "weight " + std::to_string(value) + " outside [-1/4, 5/4]");
    }
}

const char* average_case_name(AverageCase c) {
    switch (c) {
    case AverageCase::Endpoint:
        return "endpoint";
    case AverageCase::General:
        return "general";
    case AverageCase::ParallelToChord:
        return "normal-parallel-to-chord";
    case AverageCase::EqualNormals:
        return "equal-normals";
    case AverageCase::CoincidentPoints:
        return "coincident-points";
    }
    return "unknown";
}

// Operations -------------------------------------------------------------------

bool points_coincide(const Vec2& a, const Vec2& b) {
    const double scale = 1.0 + std::max(max_abs_coordinate(a), max_abs_coordinate(b));
    return norm(b - a) < tolerance::kCoincident * scale;
}

double angle_between(const UnitVector& u, const UnitVector& v) {
    return std::atan2(std::abs(cross(u.vec(), v.vec())), dot(u.vec(), v.vec()));
}

UnitVector geodesic_average(const UnitVector& u, const UnitVector& v, AverageWeight w) {
    if (is_antipodal(angle_between(u, v))) {
        throw Error(ErrorCode::AntipodalNormals, "geodesic average of opposite directions");
    }
    if (w.value() == 0.0) {
        return u;
    }
    if (w.value() == 1.0) {
        return v;
    }
    // Signed short-way angle from u to v, in (-pi, pi).
    const double delta = std::atan2(cross(u.vec(), v.vec()), dot(u.vec(), v.vec()));
    return UnitVector(rotated(u.vec(), w.value() * delta));
}

std::pair<CircleSpec, CircleSpec> candidate_circles(const PointNormalPair& a,
                                                    const PointNormalPair& b) {
    const Generic g = generic_setup(a, b);
    const ArcSpec onRight = arc_on_side(a, b, g, -1); // center on the left
    const ArcSpec onLeft = arc_on_side(a, b, g, +1);  // center on the right
    return {onRight.circle, onLeft.circle};
}

int selected_arc_side(const PointNormalPair& a, const PointNormalPair& b) {
    const Vec2 chord = b.p - a.p;
    const Vec2 dir = chord / norm(chord);
    const int s0 = chord_side(dir, a.n.vec());
    const int s1 = chord_side(dir, b.n.vec());

    // Normal along the chord: both normals count as same half-plane, and q is
    // placed by the tie rule. The arc is then opposite q.
    if (s1 == 0 && s0 != 0) {
        const int qSide = dot(b.n.vec(), dir) < 0 ? s0 : -s0;
        return -qSide;
    }
    if (s0 == 0 && s1 != 0) {
        const int qSide = dot(a.n.vec(), dir) > 0 ? s1 : -s1;
        return -qSide;
    }
    if (s0 == 0 && s1 == 0) {
        // Both within the parallel tolerance of the chord, at a tiny angle.
        return cross(a.n.vec(), b.n.vec()) > 0 ? -1 : 1;
    }

    // q = l0 ∩ l1 = p0 + t n0.
    const double denom = cross(a.n.vec(), b.n.vec());
    if (denom == 0.0) {
        throw Error(ErrorCode::ParallelLines, "normal lines do not intersect");
    }
    const double t = cross(chord, b.n.vec()) / denom;
    const Vec2 q = a.p + t * a.n.vec();
    const int qSide = sign_of(cross(chord, q - a.p));
    return s0 != s1 ? qSide : -qSide;
}

ArcSpec select_arc(const PointNormalPair& a, const PointNormalPair& b) {
    const Generic g = generic_setup(a, b);
    return arc_on_side(a, b, g, selected_arc_side(a, b));
}

AverageCase classify_average(const PointNormalPair& a, const PointNormalPair& b,
                             AverageWeight w) {
    const double theta = angle_between(a.n, b.n);
    if (is_antipodal(theta)) {
        throw Error(ErrorCode::AntipodalNormals, "normals are opposite");
    }
    if (w.value() == 0.0 || w.value() == 1.0) {
        return AverageCase::Endpoint;
    }
    if (points_coincide(a.p, b.p)) {
        return AverageCase::CoincidentPoints;
    }
    if (theta < tolerance::kSmallAngle) {
        return AverageCase::EqualNormals;
    }
    const Vec2 chord = b.p - a.p;
    const Vec2 dir = chord / norm(chord);
    if (chord_side(dir, a.n.vec()) == 0 || chord_side(dir, b.n.vec()) == 0) {
        return AverageCase::ParallelToChord;
    }
    return AverageCase::General;
}

PointNormalPair circle_average(const PointNormalPair& a, const PointNormalPair& b,
                               AverageWeight w) {
    const double omega = w.value();
    const double theta = angle_between(a.n, b.n);
    if (is_antipodal(theta)) {
        throw Error(ErrorCode::AntipodalNormals, "normals are opposite");
    }
    if (omega == 0.0) {
        return a;
    }
    if (omega == 1.0) {
        return b;
    }
    if (points_coincide(a.p, b.p)) {
        return {a.p, geodesic_average(a.n, b.n, w)};
    }
    if (theta < tolerance::kSmallAngle) {
        return {(1 - omega) * a.p + omega * b.p, a.n};
    }

    // Inscribed angle form: the chord p0->p_w turns from the chord p0->p1 by
    // side * (1 - w) * theta / 2 and has length |p0p1| sin(w theta/2) / sin(theta/2).
    const int side = selected_arc_side(a, b);
    const Vec2 chord = b.p - a.p;
    const double length = norm(chord);
    const double scale = std::sin(omega * theta / 2) / std::sin(theta / 2);
    const Vec2 dir = rotated(chord / length, side * (1 - omega) * theta / 2);
    return {a.p + (length * scale) * dir, geodesic_average(a.n, b.n, w)};
}

double chord_length(const PointNormalPair& a, const PointNormalPair& b, AverageWeight w) {
    const double omega = w.value();
    const double theta = angle_between(a.n, b.n);
    if (is_antipodal(theta)) {
        throw Error(ErrorCode::AntipodalNormals, "normals are opposite");
    }
    const double length = distance(a.p, b.p);
    if (points_coincide(a.p, b.p)) {
        return 0.0;
    }
    if (theta < tolerance::kSmallAngle) {
        return std::abs(omega) * length;
    }
    return length * std::sin(std::abs(omega) * theta / 2) / std::sin(theta / 2);
}

} // namespace pnp
