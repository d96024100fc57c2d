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

#ifndef PNPCURVES_VEC2_HPP
#define PNPCURVES_VEC2_HPP

#include <algorithm>
#include <cmath>
#include <numbers>

namespace pnp {

inline constexpr double kPi = std::numbers::pi;

/// Plain 2D vector / point in length units.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2& operator+=(const Vec2& o) {
        x += o.x;
        y += o.y;
        return *this;
    }
    constexpr Vec2& operator-=(const Vec2& o) {
        x -= o.x;
        y -= o.y;
        return *this;
    }
    constexpr Vec2& operator*=(double s) {
        x *= s;
        y *= s;
        return *this;
    }

    friend constexpr bool operator==(const Vec2&, const Vec2&) = default;
};

constexpr Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
constexpr Vec2 operator-(Vec2 a, const Vec2& b) { return a -= b; }
constexpr Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
constexpr Vec2 operator*(Vec2 a, double s) { return a *= s; }
constexpr Vec2 operator*(double s, Vec2 a) { return a *= s; }
constexpr Vec2 operator/(const Vec2& a, double s) { return {a.x / s, a.y / s}; }

constexpr double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

/// cross((a, b), (c, d)) = a*d - b*c. Positive when b is counterclockwise from a.
constexpr double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

inline double norm(const Vec2& a) { return std::sqrt(a.x * a.x + a.y * a.y); }
inline double distance(const Vec2& a, const Vec2& b) { return norm(b - a); }

/// Counterclockwise quarter turn.
constexpr Vec2 perp_left(const Vec2& a) { return {-a.y, a.x}; }

inline Vec2 rotated(const Vec2& a, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {c * a.x - s * a.y, s * a.x + c * a.y};
}

inline double max_abs_coordinate(const Vec2& a) {
    return std::max(std::abs(a.x), std::abs(a.y));
}

} // namespace pnp

#endif // PNPCURVES_VEC2_HPP
