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

#include <pnpcurves/service.hpp>

#include <charconv>

#include <httplib.h>

#include <pnpcurves/geometry.hpp>
#include <pnpcurves/polygon_io.hpp>
#include <pnpcurves/subdivision.hpp>

namespace pnp {

namespace {

using nlohmann::json;

constexpr const char* kJsonType = "application/json";

int int_field(const json& request, const char* name, int fallback) {
    if (!request.contains(name)) {
        return fallback;
    }
    const json& v = request[name];
    if (!v.is_number_integer()) {
        throw Error(ErrorCode::Parse, std::string("'") + name + "' must be an integer");
    }
    const auto value = v.get<std::int64_t>();
    if (value < -1'000'000 || value > 1'000'000) {
        throw Error(ErrorCode::InvalidArgument, std::string("'") + name + "' out of range");
    }
    return static_cast<int>(value);
}

bool bool_field(const json& request, const char* name, bool fallback) {
    if (!request.contains(name)) {
        return fallback;
    }
    if (!request[name].is_boolean()) {
        throw Error(ErrorCode::Parse, std::string("'") + name + "' must be a boolean");
    }
    return request[name].get<bool>();
}

ServiceResponse error_response(const Error& e) {
    return {http_status_for(e.code()), json{{"error", error_to_json(e)}}.dump()};
}

} // namespace

int http_status_for(ErrorCode code) {
    return is_geometric(code) ? 422 : 400;
}

nlohmann::json error_to_json(const Error& error) {
    json index = error.index() ? json(*error.index()) : json();
    return {{"code", std::string(error_code_name(error.code()))},
            {"message", error.what()},
            {"index", std::move(index)}};
}

ServiceResponse handle_refine(std::string_view request_body) {
    try {
        json request;
        try {
            request = json::parse(request_body);
        }
        catch (const json::parse_error& e) {
            throw Error(ErrorCode::Parse, e.what());
        }
        if (!request.is_object()) {
            throw Error(ErrorCode::Parse, "request must be a JSON object");
        }

        SchemeConfig config;
        if (request.contains("scheme")) {
            if (!request["scheme"].is_string()) {
                throw Error(ErrorCode::Parse, "'scheme' must be a string");
            }
            const auto name = request["scheme"].get<std::string>();
            const auto scheme = parse_scheme(name);
            if (!scheme) {
                throw Error(ErrorCode::InvalidArgument, "unknown scheme '" + name + "'");
            }
            config.scheme = *scheme;
        }
        config.m = int_field(request, "m", 1);
        config.levels = int_field(request, "levels", 0);
        const bool emitLevels = bool_field(request, "emit_levels", false);
        config.validate();

        const PolygonDocument document = polygon_document_from_json(request);
        const PnpPolygon input = document.to_polygon();
        const RefinementResult result = refine(input, config);

        const json echo = {{"scheme", std::string(scheme_name(config.scheme))},
                           {"m", config.m},
                           {"levels", config.levels},
                           {"closed", input.closed()},
                           {"emit_levels", emitLevels}};
        // The final polygon object, extended with the remaining members.
        std::string body = polygon_json_text(result.final_polygon());
        body.pop_back();
        body += ",\"config\":" + echo.dump();
        body += ",\"input\":" + polygon_json_text(input);
        body += ",\"diagnostics\":" + diagnostics_to_json(result.diagnostics).dump();
        if (emitLevels) {
            body += ",\"levels\":[";
            for (std::size_t i = 0; i < result.levels.size(); ++i) {
                body += (i > 0 ? "," : "") + polygon_json_text(result.levels[i]);
            }
            body += "]";
        }
        body += "}";
        return {200, std::move(body)};
    }
    catch (const Error& e) {
        return error_response(e);
    }
}

ServiceResponse handle_capabilities() {
    json schemes = json::array();
    for (Scheme s : {Scheme::MLR, Scheme::M4PT, Scheme::LLR, Scheme::L4PT}) {
        schemes.push_back({{"name", std::string(scheme_name(s))}, {"uses_m", uses_degree(s)}});
    }
    const json body = {{"schemes", std::move(schemes)},
                       {"m_range", {kMinDegree, kMaxDegree}},
                       {"level_cap", kMaxLevels},
                       {"weight_domain", {AverageWeight::kMin, AverageWeight::kMax}},
                       {"formats", {"pnp", "csv", "svg"}}};
    return {200, body.dump()};
}

ServiceResponse handle_health() {
    return {200, json{{"status", "ok"}}.dump()};
}

std::pair<std::string, int> parse_bind_address(std::string_view address) {
    std::string host = "127.0.0.1";
    std::string_view portText = address;
    const auto colon = address.rfind(':');
    if (colon != std::string_view::npos) {
        if (colon > 0) {
            host = std::string(address.substr(0, colon));
        }
        portText = address.substr(colon + 1);
    }
    int port = -1;
    const auto [end, ec] = std::from_chars(portText.data(), portText.data() + portText.size(), port);
    if (ec != std::errc() || end != portText.data() + portText.size() || port < 0
        || port > 65535) {
        throw Error(ErrorCode::InvalidArgument, "bad bind address '" + std::string(address) + "'");
    }
    return {host, port};
}

struct RefineService::Impl {
    httplib::Server server;
};

RefineService::RefineService() : impl_(std::make_unique<Impl>()) {
    auto& server = impl_->server;
    const auto reply = [](httplib::Response& res, const ServiceResponse& r) {
        res.status = r.status;
        res.set_header("Access-Control-Allow-Origin", "*");
        res.set_content(r.body, kJsonType);
    };
    server.Get("/health", [reply](const httplib::Request&, httplib::Response& res) {
        reply(res, handle_health());
    });
    server.Get("/capabilities", [reply](const httplib::Request&, httplib::Response& res) {
        reply(res, handle_capabilities());
    });
    server.Post("/refine", [reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, handle_refine(req.body));
    });
    server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) {
        res.status = 204;
        res.set_header("Access-Control-Allow-Origin", "*");
        res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
        res.set_header("Access-Control-Allow-Headers", "Content-Type");
    });
    server.set_exception_handler(
        [](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
            std::string message = "internal error";
            try {
                std::rethrow_exception(ep);
            }
            catch (const std::exception& e) {
                message = e.what();
            }
            catch (...) {
            }
            res.status = 500;
            res.set_content(json{{"error", {{"code", "Internal"}, {"message", message},
                                            {"index", nullptr}}}}
                                .dump(),
                            kJsonType);
        });
}

RefineService::~RefineService() {
    stop();
}

int RefineService::bind(const std::string& host, int port) {
    auto& server = impl_->server;
    const int bound = port == 0 ? server.bind_to_any_port(host) : (server.bind_to_port(host, port)
                                                                        ? port
                                                                        : -1);
    if (bound < 0) {
        throw Error(ErrorCode::InvalidArgument,
                    "cannot bind " + host + ":" + std::to_string(port));
    }
    port_ = bound;
    return bound;
}

void RefineService::listen() {
    impl_->server.listen_after_bind();
}

void RefineService::stop() {
    impl_->server.stop();
}

} // namespace pnp
