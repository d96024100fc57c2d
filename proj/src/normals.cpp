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

#include <pnpcurves/normals.hpp>

#include <string>
#include <vector>

namespace pnp {

UnitVector edge_normal(const Vec2& a, const Vec2& b) {
    if (points_coincide(a, b)) {
        throw Error(ErrorCode::ZeroLengthEdge, "edge has zero length");
    }
    const Vec2 e = b - a;
    return UnitVector(Vec2{e.y, -e.x});
}

PnpPolygon naive_normals(std::span<const Vec2> points, Topology topology) {
    const std::size_t n = points.size();
    const bool closed = topology == Topology::Closed;
    const std::size_t minimum = closed ? 3 : 2;
    if (n < minimum) {
        throw Error(ErrorCode::TooFewVertices,
                    "need at least " + std::to_string(minimum) + " points");
    }

    const std::size_t edges = closed ? n : n - 1;
    std::vector<UnitVector> edgeNormals;
    std::vector<double> lengths;
    edgeNormals.reserve(edges);
    lengths.reserve(edges);
    for (std::size_t i = 0; i < edges; ++i) {
        const Vec2& a = points[i];
        const Vec2& b = points[(i + 1) % n];
        try {
            edgeNormals.push_back(edge_normal(a, b));
        }
        catch (const Error& e) {
            throw e.with_index(i);
        }
        lengths.push_back(distance(a, b));
    }

    std::vector<PointNormalPair> vertices;
    vertices.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!closed && i == 0) {
            vertices.push_back({points[i], edgeNormals.front()});
            continue;
        }
        if (!closed && i == n - 1) {
            vertices.push_back({points[i], edgeNormals.back()});
            continue;
        }
        const std::size_t prev = (i + edges - 1) % edges;
        const UnitVector& before = edgeNormals[prev];
        const UnitVector& after = edgeNormals[i];
        if (kPi - angle_between(before, after) < tolerance::kAntipodal) {
            throw Error(ErrorCode::AntipodalEdgeNormals, "polygon folds back on itself", i);
        }
        const double w = lengths[prev] / (lengths[i] + lengths[prev]);
        vertices.push_back({points[i], geodesic_average(before, after, w)});
    }
    return PnpPolygon(std::move(vertices), topology);
}

} // namespace pnp
