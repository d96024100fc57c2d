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

#ifndef PNPCURVES_SUBDIVISION_HPP
#define PNPCURVES_SUBDIVISION_HPP

#include <optional>
#include <string_view>
#include <vector>

#include <pnpcurves/polygon.hpp>

namespace pnp {

enum class Scheme {
    MLR,  ///< Lane-Riesenfeld with circle averages
    M4PT, ///< 4-point scheme with circle averages
    LLR,  ///< linear Lane-Riesenfeld
    L4PT, ///< linear 4-point scheme
};

std::string_view scheme_name(Scheme scheme);
std::optional<Scheme> parse_scheme(std::string_view name);

/// True for the Lane-Riesenfeld family, which takes a smoothing degree m.
bool uses_degree(Scheme scheme);

inline constexpr int kMaxLevels = 20;
inline constexpr int kMinDegree = 1;
inline constexpr int kMaxDegree = 12;

/// The weight of the outer averages of the 4-point scheme.
inline constexpr double kFourPointOuterWeight = -1.0 / 8.0;

struct SchemeConfig {
    Scheme scheme = Scheme::MLR;
    int m = 1;      ///< smoothing degree, Lane-Riesenfeld family only
    int levels = 0; ///< number of refinement iterations

    /// Throws InvalidArgument (bad m or negative levels) or LevelCapExceeded.
    void validate() const;
};

/// Convergence measurements of one refinement level.
struct LevelStats {
    int level = 0;
    double max_edge = 0.0;         ///< e_j, longest edge
    double max_normal_angle = 0.0; ///< theta_j, largest angle between adjacent normals
    double mu = 0.5;               ///< 1 / (2 cos(theta_j / 4))

    /// e_{j+1} / e_j; empty on the last level or when e_j = 0.
    std::optional<double> eta_ratio;

    /// Analytic upper bound on e_{j+1} / e_j computed from level j alone.
    /// MLR: (1/2) sec(theta_j/4)^m. M4Pt: the 4-point contractivity factor.
    /// Linear schemes: the same formulas at zero normal angle.
    double contraction_bound = 0.0;
};

struct RefinementDiagnostics {
    std::vector<LevelStats> levels;
};

struct RefinementResult {
    std::vector<PnpPolygon> levels; ///< levels[0] is the input
    RefinementDiagnostics diagnostics;

    const PnpPolygon& final_polygon() const { return levels.back(); }
};

/// One level of the modified Lane-Riesenfeld algorithm: elementary refinement
/// followed by m - 1 smoothing passes. Open polygons keep their endpoints.
PnpPolygon mlr_step(const PnpPolygon& polygon, int m);

/// One level of the modified 4-point scheme. Closed polygons need 4 vertices.
/// Open polygons use the midpoint average for the first and last insertion.
/// `outer_weight` is the weight toward the outer neighbours.
PnpPolygon m4pt_step(const PnpPolygon& polygon, double outer_weight = kFourPointOuterWeight);

/// Linear Lane-Riesenfeld. Normals follow geodesic averages with the same weights.
PnpPolygon llr_step(const PnpPolygon& polygon, int m);

/// Linear 4-point scheme, -1/16 (p_{i-1} + p_{i+2}) + 9/16 (p_i + p_{i+1}).
PnpPolygon l4pt_step(const PnpPolygon& polygon);

/// Dispatches to llr_step or l4pt_step. Throws InvalidArgument for a modified scheme.
PnpPolygon linear_step(const PnpPolygon& polygon, Scheme scheme, int m = 1);

/// One level of any scheme.
PnpPolygon refine_step(const PnpPolygon& polygon, const SchemeConfig& config);

/// Applies `config.levels` refinement levels and records diagnostics.
RefinementResult refine(const PnpPolygon& polygon, const SchemeConfig& config);

/// Normal-angle bound 4 arccos(2^{-1/m}) below which MLR of degree m contracts.
double theta_m(int m);

double max_edge_length(const PnpPolygon& polygon);
double max_normal_angle(const PnpPolygon& polygon);

/// Contractivity factor of the 4-point scheme evaluated on `polygon`; tends
/// to 3/4 as the normal angles tend to zero.
double four_point_contraction_bound(const PnpPolygon& polygon);

LevelStats measure_level(const PnpPolygon& polygon, const SchemeConfig& config, int level);

} // namespace pnp

#endif // PNPCURVES_SUBDIVISION_HPP
