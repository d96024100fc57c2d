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

#ifndef PNPCURVES_NORMALS_HPP
#define PNPCURVES_NORMALS_HPP

#include <span>

#include <pnpcurves/polygon.hpp>

namespace pnp {

/// Normal of the edge a->b, on the right of the traversal direction
/// (cross(normal, b - a) > 0). Throws ZeroLengthEdge when a = b.
UnitVector edge_normal(const Vec2& a, const Vec2& b);

/// Initial normals for a bare control polygon.
///
/// Each vertex gets the geodesic average of the normals of its two edges,
/// weighted by the reciprocal edge lengths, so the shorter edge dominates:
/// n_i = GA(v_{i-1}, v_i; d_{i-1} / (d_{i-1} + d_i)). End vertices of an open
/// polygon take the normal of their only edge.
///
/// Throws TooFewVertices, ZeroLengthEdge (index of the edge's first vertex) or
/// AntipodalEdgeNormals (index of the vertex where the polygon folds back).
PnpPolygon naive_normals(std::span<const Vec2> points, Topology topology);

} // namespace pnp

#endif // PNPCURVES_NORMALS_HPP
