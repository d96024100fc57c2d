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

#include <pnpcurves/polygon.hpp>

#include <string>

namespace pnp {

PnpPolygon::PnpPolygon(std::vector<PointNormalPair> vertices, Topology topology)
    : vertices_(std::move(vertices))
    , topology_(topology) {

    const std::size_t minimum = closed() ? 3 : 2;
    if (vertices_.size() < minimum) {
        throw Error(ErrorCode::TooFewVertices,
                    std::string(closed() ? "closed" : "open") + " polygon needs at least "
                        + std::to_string(minimum) + " vertices, got "
                        + std::to_string(vertices_.size()));
    }
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < edge_count(); ++i) {
        const double theta = angle_between(vertices_[i].n, vertices_[(i + 1) % n].n);
        if (kPi - theta < tolerance::kAntipodal) {
            throw Error(ErrorCode::AntipodalNormals,
                        "consecutive normals are opposite", i);
        }
    }
}

std::size_t PnpPolygon::edge_count() const {
    return closed() ? vertices_.size() : vertices_.size() - 1;
}

std::vector<Vec2> PnpPolygon::points() const {
    std::vector<Vec2> out;
    out.reserve(vertices_.size());
    for (const auto& v : vertices_) {
        out.push_back(v.p);
    }
    return out;
}

} // namespace pnp
