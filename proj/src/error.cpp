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

#include <pnpcurves/error.hpp>

namespace pnp {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::DegeneratePoints:
        return "DegeneratePoints";
    case ErrorCode::ZeroAngle:
        return "ZeroAngle";
    case ErrorCode::AntipodalNormals:
        return "AntipodalNormals";
    case ErrorCode::ParallelLines:
        return "ParallelLines";
    case ErrorCode::WeightOutOfRange:
        return "WeightOutOfRange";
    case ErrorCode::TooFewVertices:
        return "TooFewVertices";
    case ErrorCode::ZeroLengthEdge:
        return "ZeroLengthEdge";
    case ErrorCode::AntipodalEdgeNormals:
        return "AntipodalEdgeNormals";
    case ErrorCode::SingularTangent:
        return "SingularTangent";
    case ErrorCode::CollinearPoints:
        return "CollinearPoints";
    case ErrorCode::LevelCapExceeded:
        return "LevelCapExceeded";
    case ErrorCode::InvalidArgument:
        return "InvalidArgument";
    case ErrorCode::Parse:
        return "Parse";
    }
    return "Unknown";
}

bool is_geometric(ErrorCode code) {
    switch (code) {
    case ErrorCode::Parse:
    case ErrorCode::InvalidArgument:
    case ErrorCode::LevelCapExceeded:
        return false;
    default:
        return true;
    }
}

namespace {

std::string decorate(ErrorCode code, const std::string& message,
                     std::optional<std::size_t> index) {
    std::string out(error_code_name(code));
    if (index) {
        out += " at index " + std::to_string(*index);
    }
    if (!message.empty()) {
        out += ": " + message;
    }
    return out;
}

} // namespace

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> index)
    : std::runtime_error(decorate(code, message, index))
    , code_(code)
    , index_(index) {
}

Error Error::with_index(std::size_t index) const {
    if (index_) {
        return *this;
    }
    // Strip the "<Code>: " prefix so the message is not decorated twice.
    std::string message = what();
    const std::string prefix = std::string(error_code_name(code_)) + ": ";
    if (message.rfind(prefix, 0) == 0) {
        message.erase(0, prefix.size());
    }
    else if (message == error_code_name(code_)) {
        message.clear();
    }
    return Error(code_, message, index);
}

} // namespace pnp
