// fdtdqe: quantum-emitter FDTD driver.
//
//   fdtdqe run scenario.yaml [-o dir]     (or a manifest.json to replay)
//   fdtdqe scan scenario.yaml [-o dir]
//   fdtdqe validate scenario.yaml
//   fdtdqe plot emitter.csv|scan.csv|ct.csv|completeness.csv [-o plot.svg]
//
// Exit codes: 0 ok, 2 config error, 3 numeric abort, 4 check failure.
// FDTDQE_THREADS sets the worker count.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>

#include "fdtdqe/engine.hpp"
#include "fdtdqe/errors.hpp"
#include "fdtdqe/output.hpp"
#include "fdtdqe/runner.hpp"

using namespace fdtdqe;

namespace {

ScenarioConfig load_any(const std::string& path) {
    if (std::filesystem::path(path).extension() == ".json") return parse_config(config_from_manifest(path));
    return load_config(path);
}

int plot(const std::string& csv, std::string svg) {
    const auto t = read_csv(csv);
    if (svg.empty()) svg = std::filesystem::path(csv).replace_extension(".svg").string();
    auto col = [&](const std::string& name) {
        std::vector<double> v;
        const auto k = t.column(name);
        for (const auto& r : t.rows) v.push_back(r[k]);
        return v;
    };
    auto has = [&](const std::string& name) {
        return std::find(t.header.begin(), t.header.end(), name) != t.header.end();
    };
    if (has("purcell")) {
        write_svg_plot(svg, "Purcell factor", "parameter", "F", {{"F", col("parameter"), col("purcell")}});
    } else if (has("rel_error")) {
        write_svg_plot(svg, "Im g reconstruction", "omega (rad/m)", "Im g (m)",
                       {{"direct", col("omega"), col("direct")},
                        {"BA only", col("omega"), col("ba_only")},
                        {"BA+MA", col("omega"), col("ba_ma")}});
    } else if (has("pop")) {
        write_svg_plot(svg, "Excited-state population", "t (m)", "|C|^2",
                       {{"|C|^2", col("t"), col("pop")}, {"Re C", col("t"), col("re_c")}});
    } else {
        throw InvalidArgument(csv + ": no known columns to plot");
    }
    std::cout << svg << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum-emitter FDTD simulator"};
    app.require_subcommand(1);
    std::string path, out;

    auto* run = app.add_subcommand("run", "run a scenario (YAML or manifest.json)");
    run->add_option("config", path, "scenario file")->required()->check(CLI::ExistingFile);
    run->add_option("-o,--out", out, "output directory (default: output.dir of the scenario)");
    auto* scan = app.add_subcommand("scan", "run the scenario's parameter scan");
    scan->add_option("config", path, "scenario file")->required()->check(CLI::ExistingFile);
    scan->add_option("-o,--out", out, "output directory");
    auto* validate = app.add_subcommand("validate", "parse and check a scenario");
    validate->add_option("config", path, "scenario file")->required()->check(CLI::ExistingFile);
    auto* plt = app.add_subcommand("plot", "SVG plot of an output CSV");
    plt->add_option("csv", path, "emitter.csv, ct.csv, scan.csv or completeness.csv")->required()->check(CLI::ExistingFile);
    plt->add_option("-o,--out", out, "SVG path");

    CLI11_PARSE(app, argc, argv);
    set_threads(0);

    try {
        if (*plt) return plot(path, out);
        const ScenarioConfig c = load_any(path);
        if (*validate) {
            std::cout << path << ": ok (" << route_name(c.route) << ", " << c.grid.nx << "x" << c.grid.ny << "x"
                      << c.grid.nz << " cells, " << c.steps << " steps)\n";
            return 0;
        }
        const std::string dir = out.empty() ? c.output_dir : out;
        if (*scan) {
            const auto rows = run_scan(c, dir);
            int failed = 0;
            for (const auto& r : rows) {
                if (r.ok)
                    std::printf("%.9g  tau=%.6g  F=%.6f%s\n", r.parameter, r.fit.tau, r.fit.purcell,
                                r.fit.multiple_crossings ? "  (multiple crossings)" : "");
                else
                    std::printf("%.9g  failed: %s\n", r.parameter, r.error.c_str()), ++failed;
            }
            return failed ? 4 : 0;
        }
        const auto s = run_scenario(c, dir);
        std::cout << "wrote " << s.dir << '\n';
        if (s.decayed) std::printf("tau = %.9g m, F = %.6f\n", s.fit.tau, s.fit.purcell);
        if (s.route == Route::Modes1D) {
            std::printf("max relative error %.3g\n", s.max_rel_error);
            if (!(s.max_rel_error < 1e-2)) return 4;
        }
        return 0;
    } catch (const ConfigError& e) {
        for (const auto& i : e.issues()) std::cerr << path << ": " << i << '\n';
        return 2;
    } catch (const NumericAbort& e) {
        std::cerr << "numeric abort: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
