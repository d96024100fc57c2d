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

#include <pnpcurves/polyline.hpp>

#include <algorithm>
#include <vector>

namespace pnp {

namespace {

int orientation(const Vec2& a, const Vec2& b, const Vec2& c) {
    const double v = cross(b - a, c - a);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

// c is collinear with [a, b]; is it inside the bounding box?
bool on_segment(const Vec2& a, const Vec2& b, const Vec2& c) {
    return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x)
           && std::min(a.y, b.y) <= c.y && c.y <= std::max(a.y, b.y);
}

struct Edge {
    std::size_t index;
    double xmin;
    double xmax;
    double ymin;
    double ymax;
};

} // namespace

bool segments_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
    const int o1 = orientation(a, b, c);
    const int o2 = orientation(a, b, d);
    const int o3 = orientation(c, d, a);
    const int o4 = orientation(c, d, b);
    if (o1 != o2 && o3 != o4) {
        return true;
    }
    return (o1 == 0 && on_segment(a, b, c)) || (o2 == 0 && on_segment(a, b, d))
           || (o3 == 0 && on_segment(c, d, a)) || (o4 == 0 && on_segment(c, d, b));
}

std::size_t count_self_intersections(std::span<const Vec2> points, bool closed) {
    const std::size_t n = points.size();
    if (n < 3) {
        return 0;
    }
    const std::size_t edgeCount = closed ? n : n - 1;
    const auto adjacent = [&](std::size_t i, std::size_t j) {
        if (i > j) {
            std::swap(i, j);
        }
        return j == i + 1 || (closed && i == 0 && j == edgeCount - 1);
    };

    std::vector<Edge> edges;
    edges.reserve(edgeCount);
    for (std::size_t i = 0; i < edgeCount; ++i) {
        const Vec2& a = points[i];
        const Vec2& b = points[(i + 1) % n];
        edges.push_back({i, std::min(a.x, b.x), std::max(a.x, b.x), std::min(a.y, b.y),
                         std::max(a.y, b.y)});
    }
    std::sort(edges.begin(), edges.end(),
              [](const Edge& l, const Edge& r) { return l.xmin < r.xmin; });

    // Sweep left to right, keeping the edges whose x extent is still open.
    std::size_t count = 0;
    std::vector<const Edge*> active;
    for (const Edge& e : edges) {
        std::erase_if(active, [&](const Edge* a) { return a->xmax < e.xmin; });
        for (const Edge* a : active) {
            if (a->ymax < e.ymin || e.ymax < a->ymin || adjacent(a->index, e.index)) {
                continue;
            }
            if (segments_intersect(points[a->index], points[(a->index + 1) % n],
                                   points[e.index], points[(e.index + 1) % n])) {
                ++count;
            }
        }
        active.push_back(&e);
    }
    return count;
}

} // namespace pnp
