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

// Seeded generators shared by the unit and acceptance tests.

#ifndef PNPCURVES_TESTS_GENERATORS_HPP
#define PNPCURVES_TESTS_GENERATORS_HPP

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <pnpcurves/geometry.hpp>
#include <pnpcurves/polygon.hpp>

namespace pnp::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(engine_);
    }

    int integer(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(engine_);
    }

    Vec2 point(double extent = 5.0) {
        return {uniform(-extent, extent), uniform(-extent, extent)};
    }

    UnitVector direction() { return UnitVector::from_angle(uniform(-kPi, kPi)); }

    /// A pair with distinct points and normal angle in [min_angle, max_angle].
    std::pair<PointNormalPair, PointNormalPair> averageable_pair(double min_angle = 0.01,
                                                                 double max_angle = kPi - 0.1) {
        const Vec2 p0 = point();
        Vec2 p1 = point();
        while (distance(p0, p1) < 0.05) {
            p1 = point();
        }
        const UnitVector n0 = direction();
        const double sign = uniform(0, 1) < 0.5 ? -1.0 : 1.0;
        const UnitVector n1 = UnitVector::from_angle(n0.angle() + sign * uniform(min_angle, max_angle));
        return {{p0, n0}, {p1, n1}};
    }

    /// Star-shaped closed polygon with outward-ish normals perturbed by up to
    /// `jitter` radians.
    PnpPolygon closed_polygon(int min_size = 5, int max_size = 12, double jitter = 0.4) {
        const int n = integer(min_size, max_size);
        std::vector<double> angles(n);
        for (double& a : angles) {
            a = uniform(0, 2 * kPi);
        }
        std::sort(angles.begin(), angles.end());
        // Spread the angles so no two vertices collapse.
        for (int i = 0; i < n; ++i) {
            angles[i] = 0.5 * angles[i] + 0.5 * (2 * kPi * i / n);
        }
        std::vector<PointNormalPair> v;
        for (int i = 0; i < n; ++i) {
            const double r = uniform(0.6, 1.4);
            const Vec2 p{r * std::cos(angles[i]), r * std::sin(angles[i])};
            v.push_back({p, UnitVector::from_angle(angles[i] + uniform(-jitter, jitter))});
        }
        return PnpPolygon(std::move(v), Topology::Closed);
    }

    /// Random polygon whose normals are all equal.
    PnpPolygon equal_normal_polygon(Topology topology, int min_size = 4, int max_size = 10) {
        const int n = integer(min_size, max_size);
        const UnitVector normal = direction();
        std::vector<PointNormalPair> v;
        for (int i = 0; i < n; ++i) {
            v.push_back({point(), normal});
        }
        return PnpPolygon(std::move(v), topology);
    }

private:
    std::mt19937_64 engine_;
};

/// n uniform samples of a circle, normals pointing outward (or inward).
inline PnpPolygon circle_samples(int n, Vec2 center, double radius, bool outward = true,
                                 double phase = 0.0) {
    std::vector<PointNormalPair> v;
    for (int i = 0; i < n; ++i) {
        const double a = phase + 2 * kPi * i / n;
        const UnitVector radial = UnitVector::from_angle(a);
        v.push_back({center + radius * radial.vec(), outward ? radial : -radial});
    }
    return PnpPolygon(std::move(v), Topology::Closed);
}

} // namespace pnp::testing

#endif // PNPCURVES_TESTS_GENERATORS_HPP
