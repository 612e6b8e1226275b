#include "fdtdqe/runner.hpp"

#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>

#include "fdtdqe/errors.hpp"
#include "fdtdqe/modes1d.hpp"
#include "fdtdqe/output.hpp"
#include "fdtdqe/spectral.hpp"

namespace fdtdqe {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

json base_manifest(const ScenarioConfig& c) {
    json m;
    m["tool"] = "fdtdqe";
    m["version"] = kVersion;
    m["config_hash"] = "fnv1a64:" + hex64(fnv1a64(c.source));
    m["route"] = route_name(c.route);
    m["units"] = {{"system", "natural: c = eps0 = mu0 = hbar = 1"},
                  {"length", "m"},
                  {"time", "m (c t)"},
                  {"omega", "rad/m"},
                  {"rate", "1/m"},
                  {"dipole", "natural units, rate = omega^3 d^2 / (3 pi) in 3D, omega d^2 in 1D"}};
    m["grid"] = {{"dimensions", c.grid.dimensionality()}, {"nx", c.grid.nx}, {"ny", c.grid.ny},
                 {"nz", c.grid.nz}, {"dx", c.grid.dx}, {"dt", c.grid.dt}};
    m["emitter"] = {{"omega_a", c.emitter.omega_a},
                    {"gamma0", c.emitter.gamma0},
                    {"dipole", {c.emitter.dipole.x, c.emitter.dipole.y, c.emitter.dipole.z}},
                    {"position", {c.emitter.position.x, c.emitter.position.y, c.emitter.position.z}},
                    {"mode", c.emitter.mode == EmitterMode::Real ? "real" : "complex"}};
    m["steps"] = c.steps;
    m["config"] = c.source;
    return m;
}

void save(const json& m, const fs::path& dir) {
    std::ofstream out(dir / "manifest.json");
    out << m.dump(2) << '\n';
}

json fit_json(const DecayFit& f) {
    return {{"tau", f.tau}, {"gamma", f.gamma}, {"purcell", f.purcell}, {"multiple_crossings", f.multiple_crossings}};
}

RunSummary time_domain(const ScenarioConfig& c, const fs::path& dir, json& m) {
    RunSummary s;
    Simulation sim(to_setup(c));
    std::vector<double> t, pop;
    std::vector<std::string> outputs{"emitter.csv"};
    auto snapshot = [&](const Simulation& x) {
        const auto img = snapshot_spa(x, c.snapshot->axis, c.snapshot->index);
        char name[32];
        std::snprintf(name, sizeof name, "spa_%08lld", static_cast<long long>(x.step_index()));
        write_image_csv((dir / (std::string(name) + ".csv")).string(), img);
        write_svg_heatmap((dir / (std::string(name) + ".svg")).string(), img);
        outputs.push_back(std::string(name) + ".csv");
    };

    std::vector<double> energy;
    auto observe = [&](const Simulation& x) {
        if (x.step_index() % c.output_every == 0) energy.push_back(x.spa_energy());
        if (c.snapshot && c.snapshot->every > 0 && x.step_index() % c.snapshot->every == 0) snapshot(x);
    };

    std::string status = "ok";
    try {
        energy.push_back(sim.spa_energy());
        sim.run(c.steps, observe);
    } catch (const NumericAbort& e) {
        status = std::string("numeric_abort: ") + e.what();
        write_binary_snapshot((dir / "abort_snapshot.bin").string(), sim);
        outputs.push_back("abort_snapshot.bin");
    }

    // C^n with the drive sampled at the start of step n; the last row gets the
    // drive of the final state.
    const auto& em = sim.emitter();
    std::vector<cplx> cs = em.c_series, es = em.escatt_series;
    cs.push_back(em.c_now);
    es.push_back(sample_scatt(sim.main().state(), sim.grid(), sim.dipole_samples()));
    {
        CsvWriter w((dir / "emitter.csv").string(), {"t", "re_c", "im_c", "pop", "re_e", "im_e", "spa_energy"});
        std::size_t k = 0;
        for (std::size_t n = 0; n < cs.size(); ++n) {
            t.push_back(static_cast<double>(n) * c.grid.dt);
            pop.push_back(std::norm(cs[n]));
            if (n % static_cast<std::size_t>(c.output_every) != 0) continue;
            const double en = k < energy.size() ? energy[k] : std::numeric_limits<double>::quiet_NaN();
            ++k;
            w.row({t.back(), cs[n].real(), cs[n].imag(), pop.back(), es[n].real(), es[n].imag(), en});
        }
    }
    if (c.snapshot && status == "ok") snapshot(sim);

    try {
        s.fit = purcell_from_decay(t, pop, c.emitter.gamma0);
        s.decayed = true;
        m["decay"] = fit_json(s.fit);
    } catch (const std::exception& e) {
        m["decay"] = {{"error", e.what()}};
    }
    m["status"] = status;
    m["outputs"] = outputs;
    save(m, dir);
    if (status != "ok") throw NumericAbort(status);
    return s;
}

RunSummary spectral(const ScenarioConfig& c, const fs::path& dir, json& m) {
    RunSummary s;
    FdfdOptions opt;
    opt.points_per_wavelength = c.spectral.points_per_wavelength;
    const auto slab = to_slab(c);
    const std::size_t nt = static_cast<std::size_t>(c.steps) + 1;
    const auto r = spectral_route(slab, c.emitter, 1.0, c.grid.dt, nt, c.spectral.samples, c.spectral.half_span, opt);
    s.calibration = r.calibration;
    {
        CsvWriter w((dir / "spectrum.csv").string(),
                    {"omega", "im_g", "im_g_vacuum", "re_kernel", "im_kernel", "re_c", "im_c"});
        for (std::size_t i = 0; i < r.im_g.size(); ++i)
            w.row({r.im_g.omega(i), r.im_g.values[i].real(), r.im_g_vacuum.values[i].real(),
                   r.kernel.values[i].real(), r.kernel.values[i].imag(), r.amplitude.values[i].real(),
                   r.amplitude.values[i].imag()});
    }
    std::vector<double> t, pop;
    {
        CsvWriter w((dir / "ct.csv").string(), {"t", "re_c", "im_c", "pop"});
        for (std::size_t n = 0; n < r.ct.size(); ++n) {
            t.push_back(r.ct.time(n));
            pop.push_back(std::norm(r.ct.values[n]));
            if (n % static_cast<std::size_t>(c.output_every) == 0)
                w.row({t.back(), r.ct.values[n].real(), r.ct.values[n].imag(), pop.back()});
        }
    }
    m["calibration"] = {{"kernel_scale", r.calibration},
                        {"meaning", "1D kernel prefactor rescaled so the empty scene gives gamma0"}};
    try {
        s.fit = purcell_from_decay(t, pop, c.emitter.gamma0);
        s.decayed = true;
        m["decay"] = fit_json(s.fit);
    } catch (const std::exception& e) {
        m["decay"] = {{"error", e.what()}};
    }
    m["status"] = "ok";
    m["outputs"] = {"spectrum.csv", "ct.csv"};
    save(m, dir);
    return s;
}

RunSummary modes(const ScenarioConfig& c, const fs::path& dir, json& m) {
    RunSummary s;
    const auto slab = to_slab(c);
    std::vector<double> om;
    for (int i = 0; i < c.modes.count; ++i) {
        const double f = c.modes.count == 1 ? c.modes.from
                                            : c.modes.from + (c.modes.to - c.modes.from) * i / (c.modes.count - 1);
        om.push_back(f * c.emitter.omega_a);
    }
    const auto rows = completeness_scan(slab, om, c.modes.points_per_wavelength);
    CsvWriter w((dir / "completeness.csv").string(), {"omega", "direct", "ba_only", "ba_ma", "rel_error"});
    for (const auto& r : rows) {
        w.row({r.omega, r.direct, r.ba_only, r.ba_ma, r.rel_error});
        s.max_rel_error = std::max(s.max_rel_error, r.rel_error);
    }
    m["max_rel_error"] = s.max_rel_error;
    m["status"] = "ok";
    m["outputs"] = {"completeness.csv"};
    save(m, dir);
    return s;
}

}  // namespace

RunSummary run_scenario(const ScenarioConfig& c, const std::string& dir) {
    fs::create_directories(dir);
    json m = base_manifest(c);
    RunSummary s;
    switch (c.route) {
        case Route::TimeDomain: s = time_domain(c, dir, m); break;
        case Route::Spectral: s = spectral(c, dir, m); break;
        case Route::Modes1D: s = modes(c, dir, m); break;
    }
    s.dir = dir;
    s.route = c.route;
    return s;
}

std::vector<ScanRow> run_scan(const ScenarioConfig& c, const std::string& dir) {
    if (!c.scan) throw ConfigError({"the scenario has no scan block"});
    fs::create_directories(dir);
    const auto& values = c.scan->values;
    std::vector<ScanRow> rows(values.size());
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(values.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        ScanRow& r = rows[i];
        r.parameter = values[i];
        try {
            ScenarioConfig p = parse_config(override_value(c.source, c.scan->parameter, values[i]));
            p.route = Route::TimeDomain;
            p.scan.reset();
            char name[32];
            std::snprintf(name, sizeof name, "point_%02td", i);
            const auto s = run_scenario(p, (fs::path(dir) / name).string());
            if (!s.decayed) throw InsufficientRun("population never reached 1/e within the run");
            r.fit = s.fit;
            r.ok = true;
        } catch (const std::exception& e) {
            r.error = e.what();
        }
    }
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CsvWriter w((fs::path(dir) / "scan.csv").string(), {"parameter", "tau", "gamma", "purcell"});
    json m = base_manifest(c);
    m["route"] = "scan";
    json pts = json::array();
    for (const auto& r : rows) {
        w.row({r.parameter, r.ok ? r.fit.tau : nan, r.ok ? r.fit.gamma : nan, r.ok ? r.fit.purcell : nan});
        json p = {{"parameter", r.parameter}, {"ok", r.ok}};
        if (!r.ok) p["error"] = r.error;
        if (r.ok && r.fit.multiple_crossings) p["multiple_crossings"] = true;
        pts.push_back(p);
    }
    m["scan"] = {{"parameter", c.scan->parameter}, {"points", pts}};
    m["status"] = "ok";
    m["outputs"] = {"scan.csv"};
    save(m, dir);
    return rows;
}

std::string config_from_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError({"cannot open " + path});
    json m;
    try {
        m = json::parse(in);
    } catch (const json::exception& e) {
        throw ConfigError({path + ": " + e.what()});
    }
    if (!m.contains("config") || !m["config"].is_string()) throw ConfigError({path + ": no embedded config"});
    return m["config"].get<std::string>();
}

}  // namespace fdtdqe
