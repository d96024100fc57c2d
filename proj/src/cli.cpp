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

#include <pnpcurves/cli.hpp>

#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <pthread.h>

#include <CLI11.hpp>
#include <fmt/format.h>

#include <pnpcurves/approximation.hpp>
#include <pnpcurves/geometry.hpp>
#include <pnpcurves/normals.hpp>
#include <pnpcurves/polygon_io.hpp>
#include <pnpcurves/service.hpp>

namespace pnp {

namespace {

// Failure of one stage of a command, reported as "stage: message".
struct StageFailure {
    std::string stage;
    std::string message;
    int exit_code;
};

StageFailure from_error(const std::string& stage, const Error& e) {
    return {stage, e.what(), is_geometric(e.code()) ? kExitGeometry : kExitUsage};
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw StageFailure{"read", "cannot open '" + path + "'", kExitIo};
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    file << text;
    file.flush();
    if (!file) {
        throw StageFailure{"write", "cannot write '" + path + "'", kExitIo};
    }
}

template <typename F>
auto stage(const std::string& name, F&& f) -> decltype(f()) {
    try {
        return f();
    }
    catch (const Error& e) {
        throw from_error(name, e);
    }
}

Vec2 parse_vec(const std::string& text, const std::string& flag) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw Error(ErrorCode::Parse, flag + " expects x,y");
    }
    const std::string xs = text.substr(0, comma);
    const std::string ys = text.substr(comma + 1);
    char* end = nullptr;
    const double x = std::strtod(xs.c_str(), &end);
    const bool xOk = !xs.empty() && *end == '\0';
    const double y = std::strtod(ys.c_str(), &end);
    const bool yOk = !ys.empty() && *end == '\0';
    if (!xOk || !yOk) {
        throw Error(ErrorCode::Parse, flag + " expects x,y, got '" + text + "'");
    }
    return {x, y};
}

std::string vec_text(const Vec2& v) {
    return fmt::format("({}, {})", format_number(v.x), format_number(v.y));
}

struct RefineOptions {
    std::string input;
    std::string output;
    std::string scheme = "mlr";
    int m = 1;
    int levels = 4;
    bool closed = false;
    bool emit_levels = false;
    std::string format = "pnp";
    double normal_length = 0.0;
};

int cmd_refine(const RefineOptions& o, std::ostream& out) {
    SchemeConfig config;
    stage("config", [&] {
        const auto scheme = parse_scheme(o.scheme);
        if (!scheme) {
            throw Error(ErrorCode::InvalidArgument, "unknown scheme '" + o.scheme + "'");
        }
        config.scheme = *scheme;
        config.m = o.m;
        config.levels = o.levels;
        config.validate();
    });
    const std::string text = read_text(o.input);
    PolygonDocument doc = stage("read", [&] {
        return parse_polygon_text(text, o.closed ? Topology::Closed : Topology::Open);
    });
    if (o.closed) {
        doc.topology = Topology::Closed;
    }
    const PnpPolygon input = stage("normals", [&] { return doc.to_polygon(); });
    const RefinementResult result = stage("refine", [&] { return refine(input, config); });

    std::vector<PnpPolygon> shown;
    if (o.emit_levels) {
        shown = result.levels;
    }
    else {
        shown.push_back(result.final_polygon());
    }
    std::string text_out;
    if (o.format == "pnp") {
        text_out = write_refinement_pnp(result, o.emit_levels);
    }
    else if (o.format == "csv") {
        text_out = write_csv(shown);
    }
    else {
        SvgOptions svg;
        svg.normal_length = o.normal_length;
        text_out = write_svg(shown, svg);
    }
    write_text(o.output, text_out, out);
    return kExitOk;
}

int cmd_normals(const std::string& input, bool closed, const std::string& output,
                std::ostream& out) {
    const std::string text = read_text(input);
    const Topology topology = closed ? Topology::Closed : Topology::Open;
    PolygonDocument doc = stage("read", [&] { return parse_polygon_text(text, topology); });
    if (closed) {
        doc.topology = Topology::Closed;
    }
    const PnpPolygon polygon =
        stage("normals", [&] { return naive_normals(doc.points, doc.topology); });
    write_text(output, write_pnp(polygon), out);
    return kExitOk;
}

int cmd_approx(bool check, bool csv, std::ostream& out) {
    const auto rows = table1_report();
    out << (csv ? format_csv(rows) : format_table(rows));
    if (!check) {
        return kExitOk;
    }
    bool ok = true;
    out << "\n";
    for (const CheckLine& line : approx_self_check()) {
        ok = ok && line.passed;
        out << (line.passed ? "PASS " : "FAIL ") << line.name << "  " << line.detail << "\n";
    }
    out << (ok ? "check passed\n" : "check FAILED\n");
    return ok ? kExitOk : kExitCheckFailed;
}

struct AverageOptions {
    std::string p0;
    std::string n0;
    std::string p1;
    std::string n1;
    double weight = 0.5;
};

int cmd_average(const AverageOptions& o, std::ostream& out) {
    const auto [a, b] = stage("arguments", [&] {
        return std::pair<PointNormalPair, PointNormalPair>{
            {parse_vec(o.p0, "--p0"), UnitVector(parse_vec(o.n0, "--n0"))},
            {parse_vec(o.p1, "--p1"), UnitVector(parse_vec(o.n1, "--n1"))}};
    });
    const PointNormalPair r = stage("average", [&] { return circle_average(a, b, o.weight); });
    const AverageCase kind = classify_average(a, b, o.weight);
    out << "p = " << vec_text(r.p) << "\n";
    out << "n = " << vec_text(r.n.vec()) << "\n";
    out << "theta = " << format_number(angle_between(a.n, b.n)) << "\n";
    out << "case = " << average_case_name(kind) << "\n";
    if (!points_coincide(a.p, b.p) && angle_between(a.n, b.n) >= tolerance::kSmallAngle) {
        const ArcSpec arc = select_arc(a, b);
        out << "center = " << vec_text(arc.circle.center) << "\n";
        out << "radius = " << format_number(arc.circle.radius) << "\n";
        out << "sweep = " << format_number(arc.sweep) << "\n";
    }
    else if (!points_coincide(a.p, b.p)) {
        out << "arc = straight segment\n";
    }
    return kExitOk;
}

int cmd_serve(const std::string& bind, std::ostream& out) {
    const auto [host, port] = stage("bind", [&] { return parse_bind_address(bind); });
    RefineService service;
    const int bound = stage("bind", [&] { return service.bind(host, port); });

    // Route termination signals to a dedicated thread instead of a handler.
    sigset_t signals;
    sigemptyset(&signals);
    sigaddset(&signals, SIGINT);
    sigaddset(&signals, SIGTERM);
    sigaddset(&signals, SIGUSR1);
    sigset_t previous;
    pthread_sigmask(SIG_BLOCK, &signals, &previous);
    std::thread waiter([&] {
        int received = 0;
        sigwait(&signals, &received);
        service.stop();
    });

    out << "listening on http://" << host << ":" << bound << std::endl;
    service.listen();
    pthread_kill(waiter.native_handle(), SIGUSR1);
    waiter.join();
    pthread_sigmask(SIG_SETMASK, &previous, nullptr);
    out << "stopped" << std::endl;
    return kExitOk;
}

// Rows with equal normals everywhere: the modified 4-point scheme must agree
// with the linear one.
CheckLine four_point_reduction_check(double outer_weight) {
    std::vector<PointNormalPair> vertices;
    const UnitVector up(0.0, 1.0);
    const double xs[] = {0.0, 1.0, 2.5, 3.0, 4.2, 5.0, 6.5, 7.0};
    const double ys[] = {0.0, 0.8, -0.3, 1.1, 0.2, -0.6, 0.4, 1.5};
    for (int i = 0; i < 8; ++i) {
        vertices.push_back({{xs[i], ys[i]}, up});
    }
    PnpPolygon modified(vertices, Topology::Closed);
    PnpPolygon linear = modified;
    double deviation = 0.0;
    for (int level = 0; level < 3; ++level) {
        modified = m4pt_step(modified, outer_weight);
        linear = l4pt_step(linear);
        for (std::size_t i = 0; i < modified.size(); ++i) {
            deviation = std::max(deviation, distance(modified[i].p, linear[i].p));
        }
    }
    return {"four-point reduction", deviation <= 1e-12,
            fmt::format("max deviation {:.3e} (limit 1e-12)", deviation)};
}

} // namespace

bool within_arc_tolerance(double actual, double expected) {
    return std::abs(actual - expected) <= std::max(2e-3, 0.02 * std::abs(expected));
}

bool within_circle_tolerance(double actual, double expected) {
    return std::abs(actual - expected) <= 0.05 * std::abs(expected);
}

std::vector<CheckLine> approx_self_check(double four_point_outer_weight) {
    std::vector<CheckLine> lines;
    const auto rows = table1_report();
    const auto reference = table1_reference();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const ApproximationRow& r = rows[i];
        const ApproximationRow& ref = reference[i];
        const std::string label = fmt::format("{} [{}, {}]", r.input.curve_id, r.input.t0_label,
                                              r.input.t1_label);
        const bool arcs = within_arc_tolerance(r.max_arc_distance, ref.max_arc_distance)
                          && within_arc_tolerance(r.mean_arc_distance, ref.mean_arc_distance);
        lines.push_back({label + " arc", arcs,
                         fmt::format("max {:.5f}/{:.5f} mean {:.5f}/{:.5f}", r.max_arc_distance,
                                     ref.max_arc_distance, r.mean_arc_distance,
                                     ref.mean_arc_distance)});
        const bool circles =
            within_circle_tolerance(r.max_circle_distance, ref.max_circle_distance)
            && within_circle_tolerance(r.mean_circle_distance, ref.mean_circle_distance)
            && r.max_circle_distance <= r.max_arc_distance
            && r.mean_circle_distance <= r.mean_arc_distance;
        lines.push_back({label + " circle", circles,
                         fmt::format("max {:.5f}/{:.5f} mean {:.5f}/{:.5f}",
                                     r.max_circle_distance, ref.max_circle_distance,
                                     r.mean_circle_distance, ref.mean_circle_distance)});
    }
    try {
        lines.push_back(four_point_reduction_check(four_point_outer_weight));
    }
    catch (const Error& e) {
        lines.push_back({"four-point reduction", false, e.what()});
    }
    return lines;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Point-normal subdivision curves", "pnpcurve"};
    app.require_subcommand(1);

    RefineOptions refineOpts;
    auto* refineCmd = app.add_subcommand("refine", "Refine a polygon file");
    refineCmd->add_option("input", refineOpts.input, "Polygon file (JSON or CSV)")->required();
    refineCmd->add_option("--scheme", refineOpts.scheme, "mlr, m4pt, llr or l4pt")
        ->check(CLI::IsMember({"mlr", "m4pt", "llr", "l4pt"}));
    refineCmd->add_option("--m", refineOpts.m, "Smoothing degree (Lane-Riesenfeld schemes)");
    refineCmd->add_option("--levels", refineOpts.levels, "Refinement levels");
    refineCmd->add_flag("--closed", refineOpts.closed, "Treat the polygon as closed");
    refineCmd->add_option("--format", refineOpts.format, "pnp, csv or svg")
        ->check(CLI::IsMember({"pnp", "csv", "svg"}));
    refineCmd->add_flag("--emit-levels", refineOpts.emit_levels, "Also write every level");
    refineCmd->add_option("--normal-length", refineOpts.normal_length,
                          "Length of normal ticks in SVG output");
    refineCmd->add_option("-o,--output", refineOpts.output, "Output file (default stdout)");

    std::string normalsInput;
    std::string normalsOutput;
    bool normalsClosed = false;
    auto* normalsCmd = app.add_subcommand("normals", "Initialize normals of bare points");
    normalsCmd->add_option("input", normalsInput, "Points file (JSON or CSV)")->required();
    normalsCmd->add_flag("--closed", normalsClosed, "Treat the polygon as closed");
    normalsCmd->add_option("-o,--output", normalsOutput, "Output file (default stdout)");

    bool check = false;
    bool csv = false;
    auto* approxCmd = app.add_subcommand("approx", "Arc approximation table");
    approxCmd->add_flag("--check", check, "Compare against the reference values");
    approxCmd->add_flag("--csv", csv, "Comma-separated output");

    AverageOptions avg;
    auto* averageCmd = app.add_subcommand("average", "Circle average of two point-normal pairs");
    averageCmd->add_option("--p0", avg.p0, "x,y")->required();
    averageCmd->add_option("--n0", avg.n0, "x,y (use --n0=-1,0 for negative values)")->required();
    averageCmd->add_option("--p1", avg.p1, "x,y")->required();
    averageCmd->add_option("--n1", avg.n1, "x,y")->required();
    averageCmd->add_option("--weight", avg.weight, "Weight in [-1/4, 5/4]");

    std::string bind = "127.0.0.1:8080";
    auto* serveCmd = app.add_subcommand("serve", "Run the refinement service");
    serveCmd->add_option("--bind", bind, "host:port, port 0 picks a free port");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (refineCmd->parsed()) {
            return cmd_refine(refineOpts, out);
        }
        if (normalsCmd->parsed()) {
            return cmd_normals(normalsInput, normalsClosed, normalsOutput, out);
        }
        if (approxCmd->parsed()) {
            return cmd_approx(check, csv, out);
        }
        if (averageCmd->parsed()) {
            return cmd_average(avg, out);
        }
        if (serveCmd->parsed()) {
            return cmd_serve(bind, out);
        }
    }
    catch (const StageFailure& f) {
        err << "pnpcurve: " << f.stage << ": " << f.message << "\n";
        return f.exit_code;
    }
    return kExitUsage;
}

} // namespace pnp
