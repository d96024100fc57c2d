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

#ifndef PNPCURVES_POLYGON_HPP
#define PNPCURVES_POLYGON_HPP

#include <cstddef>
#include <span>
#include <vector>

#include <pnpcurves/geometry.hpp>

namespace pnp {

enum class Topology { Open, Closed };

/// An ordered sequence of point-normal pairs.
///
/// Invariants: at least 2 vertices when open and 3 when closed, and no two
/// consecutive vertices (including the closing pair) with opposite normals.
/// The constructor throws TooFewVertices or AntipodalNormals (with the index
/// of the first vertex of the offending pair) otherwise.
class PnpPolygon {
public:
    PnpPolygon(std::vector<PointNormalPair> vertices, Topology topology);

    std::span<const PointNormalPair> vertices() const { return vertices_; }
    const PointNormalPair& operator[](std::size_t i) const { return vertices_[i]; }
    std::size_t size() const { return vertices_.size(); }
    Topology topology() const { return topology_; }
    bool closed() const { return topology_ == Topology::Closed; }

    /// Number of edges: size() when closed, size() - 1 when open.
    std::size_t edge_count() const;

    std::vector<Vec2> points() const;

    friend bool operator==(const PnpPolygon&, const PnpPolygon&) = default;

private:
    std::vector<PointNormalPair> vertices_;
    Topology topology_;
};

} // namespace pnp

#endif // PNPCURVES_POLYGON_HPP
