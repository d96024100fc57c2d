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

#ifndef PNPCURVES_POLYLINE_HPP
#define PNPCURVES_POLYLINE_HPP

#include <cstddef>
#include <span>

#include <pnpcurves/vec2.hpp>

namespace pnp {

/// True when the closed segments [a, b] and [c, d] share a point.
bool segments_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d);

/// Number of intersecting pairs of non-adjacent edges of the polyline through
/// `points` (closed: including the edge back to the first point). Uses a sweep
/// over the x extents of the edges.
std::size_t count_self_intersections(std::span<const Vec2> points, bool closed);

} // namespace pnp

#endif // PNPCURVES_POLYLINE_HPP
