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

#include <pnpcurves/subdivision.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace pnp {

namespace {

using Vertices = std::vector<PointNormalPair>;

// Runs `f`, tagging any geometry error with the vertex index `i`.
template<typename F>
auto at_index(std::size_t i, F&& f) {
    try {
        return f();
    }
    catch (const Error& e) {
        throw e.with_index(i);
    }
}

struct CircleAverager {
    PointNormalPair operator()(const PointNormalPair& a, const PointNormalPair& b,
                               double w) const {
        return circle_average(a, b, w);
    }
};

struct AffineAverager {
    PointNormalPair operator()(const PointNormalPair& a, const PointNormalPair& b,
                               double w) const {
        return {(1 - w) * a.p + w * b.p, geodesic_average(a.n, b.n, w)};
    }
};

// Lane-Riesenfeld combinatorics shared by MLR and LLR.
template<typename Average>
PnpPolygon lane_riesenfeld(const PnpPolygon& polygon, int m, Average average) {
    if (m < kMinDegree) {
        throw Error(ErrorCode::InvalidArgument, "degree m must be at least 1");
    }
    const auto v = polygon.vertices();
    const std::size_t n = v.size();
    const bool closed = polygon.closed();
    if (!closed && 2 * n - 1 < static_cast<std::size_t>(m)) {
        throw Error(ErrorCode::TooFewVertices,
                    "open polygon too short for " + std::to_string(m - 1)
                        + " smoothing passes");
    }

    // Elementary refinement.
    Vertices cur;
    cur.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        cur.push_back(v[i]);
        if (closed || i + 1 < n) {
            cur.push_back(at_index(i, [&] { return average(v[i], v[(i + 1) % n], 0.5); }));
        }
    }

    // Smoothing passes: P_i <- P_i (avg 1/2) P_{i+1}.
    Vertices next;
    for (int k = 1; k < m; ++k) {
        const std::size_t len = cur.size();
        const std::size_t outLen = closed ? len : len - 1;
        next.clear();
        next.reserve(len);
        for (std::size_t i = 0; i < outLen; ++i) {
            next.push_back(
                at_index(i, [&] { return average(cur[i], cur[(i + 1) % len], 0.5); }));
        }
        std::swap(cur, next);
    }

    if (!closed && m > 1) {
        cur.insert(cur.begin(), v.front());
        cur.push_back(v.back());
    }
    return PnpPolygon(std::move(cur), polygon.topology());
}

// 4-point combinatorics; `insert(i)` produces the vertex between i and i+1,
// `boundary(i)` the midpoint used next to the ends of an open polygon.
template<typename Insert, typename Boundary>
PnpPolygon four_point(const PnpPolygon& polygon, Insert insert, Boundary boundary) {
    const auto v = polygon.vertices();
    const std::size_t n = v.size();
    const bool closed = polygon.closed();
    if (closed && n < 4) {
        throw Error(ErrorCode::TooFewVertices,
                    "closed 4-point refinement needs at least 4 vertices, got "
                        + std::to_string(n));
    }
    Vertices out;
    out.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(v[i]);
        if (closed) {
            out.push_back(at_index(i, [&] {
                return insert(v[(i + n - 1) % n], v[i], v[(i + 1) % n], v[(i + 2) % n]);
            }));
        }
        else if (i + 1 < n) {
            const bool interior = i >= 1 && i + 2 < n;
            out.push_back(at_index(i, [&] {
                return interior ? insert(v[i - 1], v[i], v[i + 1], v[i + 2])
                                : boundary(v[i], v[i + 1]);
            }));
        }
    }
    return PnpPolygon(std::move(out), polygon.topology());
}

double edge_factor(double alpha) {
    // sin(alpha/16) / sin(alpha/2), continuous at 0 with value 1/8.
    if (alpha < 1e-8) {
        return 1.0 / 8.0;
    }
    return std::sin(alpha / 16) / std::sin(alpha / 2);
}

} // namespace

std::string_view scheme_name(Scheme scheme) {
    switch (scheme) {
    case Scheme::MLR:
        return "mlr";
    case Scheme::M4PT:
        return "m4pt";
    case Scheme::LLR:
        return "llr";
    case Scheme::L4PT:
        return "l4pt";
    }
    return "unknown";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
    for (Scheme s : {Scheme::MLR, Scheme::M4PT, Scheme::LLR, Scheme::L4PT}) {
        if (scheme_name(s) == name) {
            return s;
        }
    }
    return std::nullopt;
}

bool uses_degree(Scheme scheme) {
    return scheme == Scheme::MLR || scheme == Scheme::LLR;
}

void SchemeConfig::validate() const {
    if (uses_degree(scheme) && (m < kMinDegree || m > kMaxDegree)) {
        throw Error(ErrorCode::InvalidArgument,
                    "degree m must be in [" + std::to_string(kMinDegree) + ", "
                        + std::to_string(kMaxDegree) + "], got " + std::to_string(m));
    }
    if (levels < 0) {
        throw Error(ErrorCode::InvalidArgument, "levels must be non-negative");
    }
    if (levels > kMaxLevels) {
        throw Error(ErrorCode::LevelCapExceeded,
                    "levels " + std::to_string(levels) + " exceed the cap of "
                        + std::to_string(kMaxLevels));
    }
}

PnpPolygon mlr_step(const PnpPolygon& polygon, int m) {
    return lane_riesenfeld(polygon, m, CircleAverager{});
}

PnpPolygon llr_step(const PnpPolygon& polygon, int m) {
    return lane_riesenfeld(polygon, m, AffineAverager{});
}

PnpPolygon m4pt_step(const PnpPolygon& polygon, double outer_weight) {
    const AverageWeight w = outer_weight;
    const auto insert = [w](const PointNormalPair& prev, const PointNormalPair& a,
                            const PointNormalPair& b, const PointNormalPair& next) {
        const PointNormalPair left = circle_average(a, prev, w);
        const PointNormalPair right = circle_average(b, next, w);
        return circle_average(left, right, 0.5);
    };
    const auto boundary = [](const PointNormalPair& a, const PointNormalPair& b) {
        return circle_average(a, b, 0.5);
    };
    return four_point(polygon, insert, boundary);
}

PnpPolygon l4pt_step(const PnpPolygon& polygon) {
    const auto insert = [](const PointNormalPair& prev, const PointNormalPair& a,
                           const PointNormalPair& b, const PointNormalPair& next) {
        const Vec2 p = (-1.0 / 16.0) * (prev.p + next.p) + (9.0 / 16.0) * (a.p + b.p);
        const UnitVector left = geodesic_average(a.n, prev.n, kFourPointOuterWeight);
        const UnitVector right = geodesic_average(b.n, next.n, kFourPointOuterWeight);
        return PointNormalPair{p, geodesic_average(left, right, 0.5)};
    };
    const auto boundary = [](const PointNormalPair& a, const PointNormalPair& b) {
        return PointNormalPair{0.5 * a.p + 0.5 * b.p, geodesic_average(a.n, b.n, 0.5)};
    };
    return four_point(polygon, insert, boundary);
}

PnpPolygon linear_step(const PnpPolygon& polygon, Scheme scheme, int m) {
    switch (scheme) {
    case Scheme::LLR:
        return llr_step(polygon, m);
    case Scheme::L4PT:
        return l4pt_step(polygon);
    default:
        throw Error(ErrorCode::InvalidArgument,
                    std::string(scheme_name(scheme)) + " is not a linear scheme");
    }
}

PnpPolygon refine_step(const PnpPolygon& polygon, const SchemeConfig& config) {
    switch (config.scheme) {
    case Scheme::MLR:
        return mlr_step(polygon, config.m);
    case Scheme::M4PT:
        return m4pt_step(polygon);
    case Scheme::LLR:
        return llr_step(polygon, config.m);
    case Scheme::L4PT:
        return l4pt_step(polygon);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown scheme");
}

RefinementResult refine(const PnpPolygon& polygon, const SchemeConfig& config) {
    config.validate();
    RefinementResult result;
    result.levels.reserve(static_cast<std::size_t>(config.levels) + 1);
    result.levels.push_back(polygon);
    for (int j = 0; j < config.levels; ++j) {
        result.levels.push_back(refine_step(result.levels.back(), config));
    }

    auto& stats = result.diagnostics.levels;
    for (int j = 0; j <= config.levels; ++j) {
        stats.push_back(measure_level(result.levels[static_cast<std::size_t>(j)], config, j));
    }
    for (std::size_t j = 0; j + 1 < stats.size(); ++j) {
        if (stats[j].max_edge > 0) {
            stats[j].eta_ratio = stats[j + 1].max_edge / stats[j].max_edge;
        }
    }
    return result;
}

double theta_m(int m) {
    if (m < 1) {
        throw Error(ErrorCode::InvalidArgument, "theta_m needs m >= 1");
    }
    return 4 * std::acos(std::pow(2.0, -1.0 / m));
}

double max_edge_length(const PnpPolygon& polygon) {
    const auto v = polygon.vertices();
    double e = 0;
    for (std::size_t i = 0; i < polygon.edge_count(); ++i) {
        e = std::max(e, distance(v[i].p, v[(i + 1) % v.size()].p));
    }
    return e;
}

double max_normal_angle(const PnpPolygon& polygon) {
    const auto v = polygon.vertices();
    // |n_i - n_{i+1}| = 2 sin(theta / 2) grows with theta on [0, pi].
    double widest = -1;
    std::size_t at = 0;
    for (std::size_t i = 0; i < polygon.edge_count(); ++i) {
        const Vec2 gap = v[i].n.vec() - v[(i + 1) % v.size()].n.vec();
        const double d = dot(gap, gap);
        if (d > widest) {
            widest = d;
            at = i;
        }
    }
    return widest < 0 ? 0.0 : angle_between(v[at].n, v[(at + 1) % v.size()].n);
}

double four_point_contraction_bound(const PnpPolygon& polygon) {
    const auto v = polygon.vertices();
    const std::size_t edges = polygon.edge_count();
    const bool closed = polygon.closed();

    std::vector<double> factor(edges);
    double theta = 0;
    for (std::size_t i = 0; i < edges; ++i) {
        const double alpha = angle_between(v[i].n, v[(i + 1) % v.size()].n);
        theta = std::max(theta, alpha);
        factor[i] = edge_factor(alpha);
    }
    const double a = *std::max_element(factor.begin(), factor.end());
    const auto factor_at = [&](std::ptrdiff_t i) {
        const auto e = static_cast<std::ptrdiff_t>(edges);
        if (closed) {
            return factor[static_cast<std::size_t>(((i % e) + e) % e)];
        }
        return (i < 0 || i >= e) ? 0.0 : factor[static_cast<std::size_t>(i)];
    };

    double worst = 0;
    for (std::size_t i = 0; i < edges; ++i) {
        const auto k = static_cast<std::ptrdiff_t>(i);
        worst = std::max(worst, 1.0 + factor_at(k - 1) + factor_at(k + 1));
    }
    return 0.5 * worst / std::cos(5.0 * theta / 16.0) + a;
}

LevelStats measure_level(const PnpPolygon& polygon, const SchemeConfig& config, int level) {
    LevelStats s;
    s.level = level;
    s.max_edge = max_edge_length(polygon);
    s.max_normal_angle = max_normal_angle(polygon);
    s.mu = 1.0 / (2.0 * std::cos(s.max_normal_angle / 4));

    switch (config.scheme) {
    case Scheme::MLR:
        s.contraction_bound = 0.5 * std::pow(1.0 / std::cos(s.max_normal_angle / 4), config.m);
        break;
    case Scheme::LLR:
        s.contraction_bound = 0.5;
        break;
    case Scheme::M4PT:
        s.contraction_bound = four_point_contraction_bound(polygon);
        break;
    case Scheme::L4PT:
        s.contraction_bound = 0.75;
        break;
    }
    return s;
}

} // namespace pnp
