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

#ifndef PNPCURVES_SERVICE_HPP
#define PNPCURVES_SERVICE_HPP

#include <memory>
#include <string>
#include <string_view>

#include <json.hpp>

#include <pnpcurves/error.hpp>

namespace pnp {

// Endpoints:
//
//   GET  /health        {"status": "ok"}
//   GET  /capabilities  schemes, degree range, level cap, weight domain
//   POST /refine        one full refinement per request
//
// Refine request:
//
//   {"scheme": "mlr", "m": 1, "levels": 4, "closed": true, "emit_levels": false,
//    "points": [{"p": [x, y], "n": [nx, ny]}, {"p": [x, y]}, ...]}
//
// scheme, m, levels, closed and emit_levels default to "mlr", 1, 0, false, false.
// Refine response:
//
//   {"config": {"scheme", "m", "levels", "closed", "emit_levels"},
//    "input": {"closed", "points"},      // missing normals filled in
//    "closed": ..., "points": [...],     // final level
//    "diagnostics": [{"level", "e", "theta", "mu", "eta_ratio", "contraction_bound"}],
//    "levels": [{"closed", "points"}, ...]}   // only with emit_levels
//
// Errors: {"error": {"code": "TooFewVertices", "message": "...", "index": 3}},
// with "index" null when no vertex is involved. Status 400 for malformed
// requests (Parse, InvalidArgument, LevelCapExceeded) and 422 for geometric
// failures.

struct ServiceResponse {
    int status = 200;
    std::string body; ///< JSON text

    nlohmann::json json() const { return nlohmann::json::parse(body); }
};

ServiceResponse handle_refine(std::string_view request_body);
ServiceResponse handle_capabilities();
ServiceResponse handle_health();

/// Status code used for an error of the given kind.
int http_status_for(ErrorCode code);

nlohmann::json error_to_json(const Error& error);

/// HTTP front end for the handlers above. Requests are served concurrently.
class RefineService {
public:
    RefineService();
    ~RefineService();
    RefineService(const RefineService&) = delete;
    RefineService& operator=(const RefineService&) = delete;

    /// Binds to host:port (port 0 picks a free port). Returns the bound port.
    /// Throws InvalidArgument when the address cannot be bound.
    int bind(const std::string& host, int port);

    /// Serves until stop() is called. bind() must have succeeded.
    void listen();

    /// Thread safe; makes listen() return.
    void stop();

    int bound_port() const { return port_; }

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    int port_ = -1;
};

/// Splits "host:port" (or ":port", or a bare port). Throws InvalidArgument.
std::pair<std::string, int> parse_bind_address(std::string_view address);

} // namespace pnp

#endif // PNPCURVES_SERVICE_HPP
