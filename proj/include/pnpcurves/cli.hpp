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

#ifndef PNPCURVES_CLI_HPP
#define PNPCURVES_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <pnpcurves/subdivision.hpp>

namespace pnp {

/// Process exit codes of the pnpcurve tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1, ///< approx --check found a value out of tolerance
    kExitUsage = 2,       ///< bad flags, unparsable input, invalid configuration
    kExitGeometry = 3,    ///< the data cannot be processed (antipodal normals, ...)
    kExitIo = 4,          ///< input unreadable or output unwritable
};

/// Runs the tool with `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CheckLine {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// The checks behind `approx --check`: every approximation table row against the embedded
/// reference values, plus agreement of the modified and linear 4-point schemes
/// on data with equal normals. `four_point_outer_weight` replaces the -1/8
/// weight of the modified 4-point scheme, for fault injection.
std::vector<CheckLine> approx_self_check(double four_point_outer_weight = kFourPointOuterWeight);

/// Absolute 2e-3 or 2% relative, whichever is larger.
bool within_arc_tolerance(double actual, double expected);

/// 5% relative.
bool within_circle_tolerance(double actual, double expected);

} // namespace pnp

#endif // PNPCURVES_CLI_HPP
