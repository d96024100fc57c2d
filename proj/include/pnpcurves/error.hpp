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

#ifndef PNPCURVES_ERROR_HPP
#define PNPCURVES_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pnp {

enum class ErrorCode {
    DegeneratePoints,
    ZeroAngle,
    AntipodalNormals,
    ParallelLines,
    WeightOutOfRange,
    TooFewVertices,
    ZeroLengthEdge,
    AntipodalEdgeNormals,
    SingularTangent,
    CollinearPoints,
    LevelCapExceeded,
    InvalidArgument,
    Parse,
};

/// Stable machine-readable name, used on the wire and in CLI messages.
std::string_view error_code_name(ErrorCode code);

/// True for errors caused by the geometry of the data (as opposed to bad
/// input syntax or arguments).
bool is_geometric(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message,
          std::optional<std::size_t> index = std::nullopt);

    ErrorCode code() const noexcept { return code_; }

    /// Offending vertex index, when the failure is tied to one.
    std::optional<std::size_t> index() const noexcept { return index_; }

    /// Returns a copy of this error tagged with `index` (keeps an existing one).
    Error with_index(std::size_t index) const;

private:
    ErrorCode code_;
    std::optional<std::size_t> index_;
};

} // namespace pnp

#endif // PNPCURVES_ERROR_HPP
