#include "fdtdqe/config.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "fdtdqe/errors.hpp"

namespace fdtdqe {

namespace {

std::string where(const YAML::Mark& m) {
    if (m.line < 0) return "";
    return "line " + std::to_string(m.line + 1) + ", column " + std::to_string(m.column + 1) + ": ";
}

class Reader {
  public:
    std::vector<std::string> issues;

    void bad(const YAML::Node& n, const std::string& msg) {
        issues.push_back((n.IsDefined() ? where(n.Mark()) : std::string()) + msg);
    }
    void bad(const YAML::Mark& m, const std::string& msg) { issues.push_back(where(m) + msg); }

    void keys(const YAML::Node& n, const std::string& block, std::initializer_list<const char*> allowed) {
        if (!n.IsDefined() || !n.IsMap()) {
            if (n.IsDefined() && !n.IsNull()) bad(n, block + " must be a mapping");
            return;
        }
        const std::set<std::string> ok(allowed.begin(), allowed.end());
        for (const auto& kv : n) {
            const auto k = kv.first.as<std::string>();
            if (!ok.count(k)) bad(kv.first, "unknown key '" + k + "' in " + block);
        }
    }

    template <class T>
    std::optional<T> opt(const YAML::Node& n, const std::string& key) {
        const YAML::Node v = n[key];
        if (!v.IsDefined() || v.IsNull()) return std::nullopt;
        try {
            return v.as<T>();
        } catch (const YAML::Exception&) {
            bad(v, "'" + key + "' has the wrong type");
            return std::nullopt;
        }
    }

    template <class T>
    T get(const YAML::Node& n, const std::string& key, T fallback) {
        return opt<T>(n, key).value_or(fallback);
    }

    std::optional<Vec3> vec(const YAML::Node& n, const std::string& key, int dim) {
        const YAML::Node v = n[key];
        if (!v.IsDefined() || v.IsNull()) return std::nullopt;
        Vec3 out;
        if (v.IsScalar() && dim == 1) {
            if (auto x = opt<double>(n, key)) out.x = *x;
            return out;
        }
        if (!v.IsSequence() || (v.size() != 3 && !(dim == 1 && v.size() == 1))) {
            bad(v, "'" + key + "' must be a list of " + (dim == 1 ? "1 or 3" : std::string("3")) + " numbers");
            return std::nullopt;
        }
        for (std::size_t a = 0; a < v.size(); ++a) {
            try {
                out[static_cast<int>(a)] = v[a].as<double>();
            } catch (const YAML::Exception&) {
                bad(v[a], "'" + key + "' entries must be numbers");
            }
        }
        return out;
    }

    int axis(const YAML::Node& n, const std::string& key, int fallback) {
        const auto s = opt<std::string>(n, key);
        if (!s) return fallback;
        if (*s == "x" || *s == "0") return 0;
        if (*s == "y" || *s == "1") return 1;
        if (*s == "z" || *s == "2") return 2;
        bad(n[key], "'" + key + "' must be x, y or z");
        return fallback;
    }
};

const char* kFaceNames[6] = {"x-", "x+", "y-", "y+", "z-", "z+"};

CpmlSpec read_pml(Reader& r, const YAML::Node& n, CpmlSpec base) {
    if (!n.IsDefined() || !n.IsMap()) return base;
    r.keys(n, "pml", {"kind", "thickness", "order", "sigma_scale", "kappa_max", "alpha_max"});
    base.thickness = r.get(n, "thickness", base.thickness);
    base.order = r.get(n, "order", base.order);
    base.sigma_scale = r.get(n, "sigma_scale", base.sigma_scale);
    base.kappa_max = r.get(n, "kappa_max", base.kappa_max);
    base.alpha_max = r.get(n, "alpha_max", base.alpha_max);
    try {
        base.validate();
    } catch (const std::exception& e) {
        r.bad(n, e.what());
    }
    return base;
}

LorentzDrudeParams read_material(Reader& r, const YAML::Node& n) {
    r.keys(n, "material", {"preset", "eps_inf", "drude", "lorentz", "band"});
    LorentzDrudeParams p;
    if (auto preset = r.opt<std::string>(n, "preset")) {
        if (*preset == "mirror_metal")
            p = mirror_metal();
        else if (*preset != "vacuum")
            r.bad(n["preset"], "unknown material preset '" + *preset + "'");
    }
    p.eps_inf = r.get(n, "eps_inf", p.eps_inf);
    if (const auto d = n["drude"]; d.IsDefined()) {
        r.keys(d, "drude", {"omega_p", "gamma"});
        p.omega_p_drude = r.get(d, "omega_p", p.omega_p_drude);
        p.gamma_drude = r.get(d, "gamma", p.gamma_drude);
    }
    if (const auto l = n["lorentz"]; l.IsDefined()) {
        r.keys(l, "lorentz", {"omega_p", "omega_0", "gamma"});
        p.omega_p_lorentz = r.get(l, "omega_p", p.omega_p_lorentz);
        p.omega_0_lorentz = r.get(l, "omega_0", p.omega_0_lorentz);
        p.gamma_lorentz = r.get(l, "gamma", p.gamma_lorentz);
    }
    if (const auto b = n["band"]; b.IsDefined()) {
        if (!b.IsSequence() || b.size() != 2) {
            r.bad(b, "band must be [omega_lo, omega_hi]");
        } else {
            p.band_lo = b[0].as<double>();
            p.band_hi = b[1].as<double>();
        }
    }
    try {
        p.validate();
    } catch (const std::exception& e) {
        r.bad(n, e.what());
    }
    return p;
}

std::optional<Shape> read_shape(Reader& r, const YAML::Node& n, int dim) {
    int found = 0;
    std::optional<Shape> out;
    if (const auto b = n["box"]; b.IsDefined()) {
        ++found;
        r.keys(b, "box", {"lo", "hi"});
        auto lo = r.vec(b, "lo", dim), hi = r.vec(b, "hi", dim);
        if (!lo || !hi) {
            r.bad(b, "box needs lo and hi");
        } else {
            if (dim == 1 && b["lo"].IsSequence() && b["lo"].size() == 1) {
                lo->y = lo->z = -1e300;
                hi->y = hi->z = 1e300;
            }
            out = BoxShape{*lo, *hi};
        }
    }
    if (const auto s = n["slab"]; s.IsDefined()) {
        ++found;
        r.keys(s, "slab", {"axis", "from", "to"});
        SlabShape sl;
        sl.axis = r.axis(s, "axis", 0);
        sl.from = r.get(s, "from", 0.0);
        sl.to = r.get(s, "to", 0.0);
        if (!(sl.to > sl.from)) r.bad(s, "slab needs from < to");
        out = sl;
    }
    if (const auto s = n["sphere"]; s.IsDefined()) {
        ++found;
        r.keys(s, "sphere", {"center", "radius"});
        SphereShape sp;
        sp.center = r.vec(s, "center", dim).value_or(Vec3{});
        sp.radius = r.get(s, "radius", 0.0);
        if (!(sp.radius > 0.0)) r.bad(s, "sphere radius must be positive");
        out = sp;
    }
    if (const auto s = n["cylinder_sector"]; s.IsDefined()) {
        ++found;
        r.keys(s, "cylinder_sector",
               {"axis", "center", "r_inner", "r_outer", "direction_deg", "half_angle_deg", "lo", "hi"});
        CylinderSectorShape c;
        c.axis = r.axis(s, "axis", 2);
        c.center = r.vec(s, "center", dim).value_or(Vec3{});
        c.r_inner = r.get(s, "r_inner", 0.0);
        c.r_outer = r.get(s, "r_outer", 0.0);
        c.direction = r.get(s, "direction_deg", 0.0) * kPi / 180.0;
        c.half_angle = r.get(s, "half_angle_deg", 180.0) * kPi / 180.0;
        c.lo = r.get(s, "lo", c.lo);
        c.hi = r.get(s, "hi", c.hi);
        if (!(c.r_outer > c.r_inner) || c.r_inner < 0.0) r.bad(s, "cylinder_sector needs 0 <= r_inner < r_outer");
        out = c;
    }
    if (found != 1) {
        r.bad(n, "geometry entry needs exactly one of box, slab, sphere, cylinder_sector");
        return std::nullopt;
    }
    return out;
}

Route parse_route(Reader& r, const YAML::Node& n) {
    const auto s = r.opt<std::string>(n, "route");
    if (!s || *s == "time_domain") return Route::TimeDomain;
    if (*s == "spectral") return Route::Spectral;
    if (*s == "modes1d") return Route::Modes1D;
    r.bad(n["route"], "route must be time_domain, spectral or modes1d");
    return Route::TimeDomain;
}

// Walks a dotted path with [n] indices; returns an undefined node on failure.
YAML::Node walk(YAML::Node root, const std::string& path) {
    YAML::Node cur = root;
    std::size_t pos = 0;
    while (pos < path.size()) {
        if (path[pos] == '.') {
            ++pos;
            continue;
        }
        if (path[pos] == '[') {
            const std::size_t close = path.find(']', pos);
            if (close == std::string::npos || !cur.IsSequence()) return YAML::Node(YAML::NodeType::Undefined);
            const std::size_t i = std::stoul(path.substr(pos + 1, close - pos - 1));
            if (i >= cur.size()) return YAML::Node(YAML::NodeType::Undefined);
            cur.reset(cur[i]);
            pos = close + 1;
            continue;
        }
        const std::size_t end = path.find_first_of(".[", pos);
        const std::string key = path.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        if (!cur.IsMap() || !cur[key].IsDefined()) return YAML::Node(YAML::NodeType::Undefined);
        cur.reset(cur[key]);
        pos = end == std::string::npos ? path.size() : end;
    }
    return cur;
}

}  // namespace

const char* route_name(Route r) {
    switch (r) {
        case Route::TimeDomain: return "time_domain";
        case Route::Spectral: return "spectral";
        case Route::Modes1D: return "modes1d";
    }
    return "?";
}

ScenarioConfig parse_config(const std::string& text) {
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::ParserException& e) {
        throw ConfigError({where(e.mark) + "syntax error: " + e.msg});
    }
    if (!root.IsMap()) throw ConfigError({"the scenario must be a YAML mapping"});

    Reader r;
    ScenarioConfig c;
    c.source = text;
    r.keys(root, "scenario", {"name", "grid", "materials", "geometry", "boundaries", "emitter", "tfsf", "run",
                              "spectral", "modes1d", "scan", "output"});

    // grid
    const YAML::Node gn = root["grid"];
    int dim = 3;
    double dx = 0.0;
    int n[3] = {1, 1, 1};
    double courant = 0.99;
    if (!gn.IsMap()) {
        r.bad(root, "missing grid block");
    } else {
        r.keys(gn, "grid", {"dimensions", "dx", "cells", "extent", "courant"});
        dim = r.get(gn, "dimensions", 3);
        if (dim != 1 && dim != 3) {
            r.bad(gn["dimensions"], "dimensions must be 1 or 3");
            dim = 3;
        }
        dx = r.get(gn, "dx", 0.0);
        if (!(dx > 0.0)) r.bad(gn, "grid.dx must be positive");
        // 1D keeps well clear of the band edge, where the emitter's parasitic
        // root finds a diverging density of states.
        courant = r.get(gn, "courant", dim == 1 ? 0.5 : courant);
        const YAML::Node cells = gn["cells"], ext = gn["extent"];
        if (cells.IsDefined() == ext.IsDefined()) {
            r.bad(gn, "grid needs exactly one of cells or extent");
        } else if (cells.IsDefined()) {
            if (cells.IsScalar()) {
                n[0] = cells.as<int>();
            } else if (cells.IsSequence() && (cells.size() == 3 || cells.size() == 1)) {
                for (std::size_t a = 0; a < cells.size(); ++a) n[a] = cells[a].as<int>();
            } else {
                r.bad(cells, "cells must be an integer or a list of 3 integers");
            }
        } else if (dx > 0.0) {
            auto e = r.vec(gn, "extent", dim);
            if (e) {
                for (int a = 0; a < (dim == 1 ? 1 : 3); ++a) {
                    const double q = (*e)[a] / dx;
                    n[a] = static_cast<int>(std::lround(q));
                    if (std::abs(q - n[a]) > 0.5 || n[a] < 1)
                        r.bad(ext, std::string("extent along ") + axis_name(a) + " is not a multiple of dx");
                }
            }
        }
        if (dim == 1) n[1] = n[2] = 1;
    }
    if (r.issues.empty()) {
        try {
            c.grid = YeeGrid::make(n[0], n[1], n[2], dx, cfl_dt(dx, dim, courant),
                                   dim == 1 ? Dimensionality::One : Dimensionality::Three);
        } catch (const std::exception& e) {
            r.bad(gn, e.what());
        }
    }

    // materials
    std::map<std::string, int> index;
    if (const auto mn = root["materials"]; mn.IsDefined()) {
        if (!mn.IsMap()) {
            r.bad(mn, "materials must map names to parameters");
        } else {
            for (const auto& kv : mn) {
                const auto name = kv.first.as<std::string>();
                index[name] = static_cast<int>(c.materials.size());
                c.material_names.push_back(name);
                c.materials.push_back(read_material(r, kv.second));
            }
        }
    }

    // geometry
    if (const auto gl = root["geometry"]; gl.IsDefined()) {
        if (!gl.IsSequence()) {
            r.bad(gl, "geometry must be a list");
        } else {
            for (const auto& item : gl) {
                r.keys(item, "geometry entry", {"material", "box", "slab", "sphere", "cylinder_sector"});
                const auto mat = r.opt<std::string>(item, "material");
                auto shape = read_shape(r, item, dim);
                if (!mat) {
                    r.bad(item, "geometry entry needs a material");
                } else if (!index.count(*mat)) {
                    r.bad(item["material"], "unknown material '" + *mat + "'");
                } else if (shape) {
                    c.placements.push_back({*shape, index[*mat]});
                }
            }
        }
    }

    // boundaries
    CpmlSpec pml;
    FaceKind def = FaceKind::Pml;
    if (const auto bn = root["boundaries"]; bn.IsDefined()) {
        r.keys(bn, "boundaries", {"default", "pml", "aux_pml", "x-", "x+", "y-", "y+", "z-", "z+"});
        if (auto d = r.opt<std::string>(bn, "default")) {
            if (*d == "pec")
                def = FaceKind::Pec;
            else if (*d != "pml")
                r.bad(bn["default"], "boundary kind must be pml or pec");
        }
        pml = read_pml(r, bn["pml"], pml);
        c.aux_pml = read_pml(r, bn["aux_pml"], pml);
        for (int f = 0; f < 6; ++f) {
            c.bounds[f] = {def, pml};
            const YAML::Node fn = bn[kFaceNames[f]];
            if (!fn.IsDefined()) continue;
            std::string kind;
            if (fn.IsScalar()) {
                kind = fn.as<std::string>();
            } else if (fn.IsMap()) {
                kind = r.get<std::string>(fn, "kind", "pml");
                c.bounds[f].pml = read_pml(r, fn, pml);
            }
            if (kind == "pec")
                c.bounds[f].kind = FaceKind::Pec;
            else if (kind == "pml")
                c.bounds[f].kind = FaceKind::Pml;
            else
                r.bad(fn, std::string("face ") + kFaceNames[f] + ": kind must be pml or pec");
        }
    } else {
        c.aux_pml = pml;
        for (int f = 0; f < 6; ++f) c.bounds[f] = {def, pml};
    }

    // emitter
    const YAML::Node en = root["emitter"];
    if (!en.IsMap()) {
        r.bad(root, "missing emitter block");
    } else {
        r.keys(en, "emitter", {"wavelength", "omega", "dipole", "gamma0", "gamma0_rel", "orientation", "position",
                               "position_cells", "mode", "bootstrap"});
        auto& e = c.emitter;
        const auto wl = r.opt<double>(en, "wavelength");
        const auto om = r.opt<double>(en, "omega");
        if (wl.has_value() == om.has_value())
            r.bad(en, "emitter needs exactly one of wavelength or omega");
        else
            e.omega_a = wl ? omega_from_wavelength(*wl) : *om;
        if (!(e.omega_a > 0.0)) r.bad(en, "emitter frequency must be positive");
        Vec3 dir = r.vec(en, "orientation", 3).value_or(Vec3{0.0, 0.0, 1.0});
        if (dim == 1) dir = {0.0, 0.0, 1.0};
        const double dn = dir.norm();
        if (!(dn > 0.0)) r.bad(en, "orientation must be nonzero");
        const auto d = r.opt<double>(en, "dipole");
        const auto g = r.opt<double>(en, "gamma0");
        const auto gr = r.opt<double>(en, "gamma0_rel");
        const int given = d.has_value() + g.has_value() + gr.has_value();
        double mag = 0.0;
        if (given != 1) {
            r.bad(en, "emitter needs exactly one of dipole, gamma0, gamma0_rel");
        } else if ((d && *d < 0.0) || (g && *g < 0.0) || (gr && *gr < 0.0)) {
            r.bad(en, "dipole and rates must be non-negative");
        } else if (e.omega_a > 0.0) {
            const double rate = g ? *g : (gr ? *gr * e.omega_a : 0.0);
            mag = d ? *d : dipole_for_rate(e.omega_a, rate, dim);
        }
        if (dn > 0.0) e.dipole = {dir.x / dn * mag, dir.y / dn * mag, dir.z / dn * mag};
        e.gamma0 = free_rate(e.omega_a, mag, dim);
        const auto pos = r.vec(en, "position", dim);
        const auto posc = r.vec(en, "position_cells", dim);
        if (pos.has_value() == posc.has_value())
            r.bad(en, "emitter needs exactly one of position or position_cells");
        else if (pos)
            e.position = *pos;
        else
            e.position = {posc->x * dx, posc->y * dx, posc->z * dx};
        if (const auto m = r.opt<std::string>(en, "mode")) {
            if (*m == "real")
                e.mode = EmitterMode::Real;
            else if (*m != "complex")
                r.bad(en["mode"], "mode must be complex or real");
        }
        if (const auto b = r.opt<std::string>(en, "bootstrap")) {
            if (*b == "euler")
                e.bootstrap = Bootstrap::Euler;
            else if (*b == "exact")
                e.bootstrap = Bootstrap::Exact;
            else if (*b != "matched")
                r.bad(en["bootstrap"], "bootstrap must be matched, exact or euler");
        }
        if (dim == 1) e.position.y = e.position.z = 0.0;
        for (int a = 0; a < dim; ++a)
            if (dx > 0.0 && (e.position[a] < 0.0 || e.position[a] > n[a] * dx))
                r.bad(en, std::string("emitter position lies outside the grid along ") + axis_name(a));
    }

    // tfsf
    if (const auto tn = root["tfsf"]; tn.IsDefined()) {
        r.keys(tn, "tfsf", {"lo", "hi"});
        const auto lo = r.vec(tn, "lo", dim), hi = r.vec(tn, "hi", dim);
        if (!lo || !hi) {
            r.bad(tn, "tfsf needs lo and hi (cell indices)");
        } else {
            TfsfBox b;
            for (int a = 0; a < 3; ++a) {
                b.lo[a] = static_cast<int>(std::lround((*lo)[a]));
                b.hi[a] = static_cast<int>(std::lround((*hi)[a]));
            }
            if (dim == 1) b.lo.j = b.lo.k = b.hi.j = b.hi.k = 0;
            c.box = b;
            if (dx > 0.0 && en.IsMap()) {
                for (int a = 0; a < dim; ++a) {
                    const double p = c.emitter.position[a] / dx;
                    if (!(p > b.lo[a] && p < b.hi[a])) {
                        std::ostringstream os;
                        os << "emitter at (" << c.emitter.position.x << ", " << c.emitter.position.y << ", "
                           << c.emitter.position.z << ") m lies outside the tfsf box [" << b.lo.i << "," << b.lo.j
                           << "," << b.lo.k << "]..[" << b.hi.i << "," << b.hi.j << "," << b.hi.k << "] (cells)";
                        r.bad(en, os.str());
                        r.bad(tn, "tfsf box does not enclose the emitter");
                        break;
                    }
                }
            }
        }
    }

    // run
    if (const auto rn = root["run"]; rn.IsDefined()) {
        r.keys(rn, "run", {"route", "steps", "duration", "lifetimes", "output_every", "snapshot"});
        c.route = parse_route(r, rn);
        const auto steps = r.opt<std::int64_t>(rn, "steps");
        const auto dur = r.opt<double>(rn, "duration");
        const auto life = r.opt<double>(rn, "lifetimes");
        if (steps.has_value() + dur.has_value() + life.has_value() > 1)
            r.bad(rn, "give only one of steps, duration, lifetimes");
        if (c.grid.dt > 0.0 && r.issues.empty()) {
            if (steps) c.steps = *steps;
            if (dur) c.steps = static_cast<std::int64_t>(std::ceil(*dur / c.grid.dt));
            if (life && c.emitter.gamma0 > 0.0)
                c.steps = static_cast<std::int64_t>(std::ceil(*life / c.emitter.gamma0 / c.grid.dt));
        }
        if (c.steps < 0) r.bad(rn, "run length must be non-negative");
        c.output_every = r.get<std::int64_t>(rn, "output_every", 1);
        if (c.output_every < 1) r.bad(rn["output_every"], "output_every must be >= 1");
        if (const auto sn = rn["snapshot"]; sn.IsDefined()) {
            r.keys(sn, "snapshot", {"axis", "index", "every"});
            SnapshotSpec s;
            s.axis = r.axis(sn, "axis", 2);
            s.index = r.get(sn, "index", 0);
            s.every = r.get<std::int64_t>(sn, "every", 0);
            if (dim == 3 && (s.index < 0 || s.index > n[s.axis])) r.bad(sn, "snapshot plane lies outside the grid");
            c.snapshot = s;
        }
    }
    if (c.route != Route::TimeDomain && dim != 1) r.bad(root["run"], "spectral and modes1d routes need a 1D grid");

    if (const auto sp = root["spectral"]; sp.IsDefined()) {
        r.keys(sp, "spectral", {"samples", "half_span", "points_per_wavelength"});
        c.spectral.samples = r.get<std::size_t>(sp, "samples", c.spectral.samples);
        c.spectral.half_span = r.get(sp, "half_span", c.spectral.half_span);
        c.spectral.points_per_wavelength = r.get(sp, "points_per_wavelength", c.spectral.points_per_wavelength);
        if (c.spectral.points_per_wavelength < 20) r.bad(sp, "points_per_wavelength must be >= 20");
    }
    if (const auto mn = root["modes1d"]; mn.IsDefined()) {
        r.keys(mn, "modes1d", {"from", "to", "count", "points_per_wavelength"});
        c.modes.from = r.get(mn, "from", c.modes.from);
        c.modes.to = r.get(mn, "to", c.modes.to);
        c.modes.count = r.get(mn, "count", c.modes.count);
        c.modes.points_per_wavelength = r.get(mn, "points_per_wavelength", c.modes.points_per_wavelength);
        if (!(c.modes.to >= c.modes.from) || c.modes.from <= 0.0 || c.modes.count < 1)
            r.bad(mn, "modes1d needs 0 < from <= to and count >= 1");
        if (c.modes.points_per_wavelength < 20) r.bad(mn, "points_per_wavelength must be >= 20");
    }
    if (const auto sc = root["scan"]; sc.IsDefined()) {
        r.keys(sc, "scan", {"parameter", "values", "from", "to", "count"});
        ScanSpec s;
        s.parameter = r.get<std::string>(sc, "parameter", "");
        if (s.parameter.empty()) r.bad(sc, "scan needs a parameter path");
        if (sc["values"].IsDefined()) {
            s.values = r.get<std::vector<double>>(sc, "values", {});
        } else {
            const double a = r.get(sc, "from", 0.0), b = r.get(sc, "to", 0.0);
            const int cnt = r.get(sc, "count", 0);
            if (cnt < 1) r.bad(sc, "scan needs values or from/to/count");
            for (int i = 0; i < cnt; ++i) s.values.push_back(cnt == 1 ? a : a + (b - a) * i / (cnt - 1));
        }
        if (!std::is_sorted(s.values.begin(), s.values.end())) r.bad(sc, "scan values must be increasing");
        if (!s.parameter.empty() && !walk(YAML::Clone(root), s.parameter).IsScalar())
            r.bad(sc, "scan parameter '" + s.parameter + "' does not name a scalar in this config");
        c.scan = s;
    }
    if (const auto on = root["output"]; on.IsDefined()) {
        r.keys(on, "output", {"dir"});
        c.output_dir = r.get<std::string>(on, "dir", c.output_dir);
    }

    if (!r.issues.empty()) throw ConfigError(r.issues);
    return c;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError({"cannot open " + path});
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string override_value(const std::string& text, const std::string& path, double value) {
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::ParserException& e) {
        throw ConfigError({where(e.mark) + "syntax error: " + e.msg});
    }
    YAML::Node target = walk(root, path);
    if (!target.IsScalar()) throw ConfigError({"scan parameter '" + path + "' does not name a scalar"});
    std::ostringstream os;
    os.precision(17);
    os << value;
    target = os.str();
    YAML::Emitter out;
    out << root;
    return out.c_str();
}

SimulationSetup to_setup(const ScenarioConfig& c) {
    SimulationSetup s;
    s.grid = c.grid;
    s.media = c.placements.empty() ? MediumMap::vacuum(c.grid) : MediumMap::build(c.grid, c.materials, c.placements);
    s.bounds = c.bounds;
    s.emitter = c.emitter;
    s.box = c.box;
    s.aux_pml = c.aux_pml;
    return s;
}

Slab1D to_slab(const ScenarioConfig& c) {
    if (!c.grid.is_1d()) throw InvalidArgument("to_slab: the scene is not one-dimensional");
    Slab1D s;
    s.x_a = c.emitter.position.x;
    s.left = c.bounds[0].kind == FaceKind::Pec ? End::Pec : End::Open;
    s.right = c.bounds[1].kind == FaceKind::Pec ? End::Pec : End::Open;
    s.x_left = 0.0;
    s.x_right = c.grid.nx * c.grid.dx;
    for (const auto& p : c.placements) {
        double lo = 0.0, hi = 0.0;
        if (const auto* b = std::get_if<BoxShape>(&p.shape)) {
            lo = b->lo.x;
            hi = b->hi.x;
        } else if (const auto* sl = std::get_if<SlabShape>(&p.shape); sl && sl->axis == 0) {
            lo = sl->from;
            hi = sl->to;
        } else {
            throw InvalidArgument("to_slab: only boxes and x slabs describe a 1D layer");
        }
        lo = std::max(lo, s.left == End::Pec ? s.x_left : lo);
        hi = std::min(hi, s.right == End::Pec ? s.x_right : hi);
        if (hi > lo) s.layers.push_back({lo, hi, c.materials[p.medium]});
    }
    std::sort(s.layers.begin(), s.layers.end(), [](const Layer& a, const Layer& b) { return a.start < b.start; });
    s.validate();
    return s;
}

}  // namespace fdtdqe
