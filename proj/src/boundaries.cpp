#include "fdtdqe/boundaries.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fdtdqe/errors.hpp"

namespace fdtdqe {

void CpmlSpec::validate() const {
    if (thickness == 0) return;
    if (thickness < 4) throw InvalidArgument("pml: thickness must be 0 or >= 4 cells");
    if (order < 2 || order > 4) throw InvalidArgument("pml: grading order must be in [2, 4]");
    if (!(sigma_scale >= 0.0)) throw InvalidArgument("pml: sigma_scale must be non-negative");
    if (!(kappa_max >= 1.0)) throw InvalidArgument("pml: kappa_max must be >= 1");
    if (!(alpha_max >= 0.0)) throw InvalidArgument("pml: alpha_max must be non-negative");
}

BoundarySpec all_pml(const CpmlSpec& spec) {
    BoundarySpec b;
    for (auto& f : b) f = {FaceKind::Pml, spec};
    return b;
}

BoundarySpec all_pec() {
    BoundarySpec b;
    for (auto& f : b) f.kind = FaceKind::Pec;
    return b;
}

namespace {

struct Grading {
    double sigma = 0, kappa = 1, alpha = 0;
};

Grading grade(const CpmlSpec& s, double depth, double dx) {
    Grading g;
    if (depth <= 0.0 || s.thickness == 0) return g;
    const double dm = std::pow(depth, s.order);
    g.sigma = s.sigma_scale * 0.8 * (s.order + 1) / dx * dm;
    g.kappa = 1.0 + (s.kappa_max - 1.0) * dm;
    g.alpha = s.alpha_max * (1.0 - depth);
    return g;
}

void fill(const Grading& g, double dt, double& inv_kappa, double& b, double& c) {
    inv_kappa = 1.0 / g.kappa;
    b = std::exp(-(g.sigma / g.kappa + g.alpha) * dt);
    const double den = g.sigma * g.kappa + g.kappa * g.kappa * g.alpha;
    c = den > 0.0 ? g.sigma * (b - 1.0) / den : 0.0;
}

// Extent of the two remaining axes in the flat layout.
std::size_t other_extent(const Layout& lay, int axis) {
    const std::array<int, 3> n{lay.nxp, lay.nyp, lay.nzp};
    return static_cast<std::size_t>(n[(axis + 1) % 3]) * static_cast<std::size_t>(n[(axis + 2) % 3]);
}

}  // namespace

Cpml Cpml::make(const CpmlSpec& spec, const YeeGrid& g, const std::array<bool, 6>& faces) {
    BoundarySpec b = all_pec();
    for (int f = 0; f < 6; ++f)
        if (faces[f]) b[f] = {FaceKind::Pml, spec};
    return make(b, g);
}

Cpml Cpml::make(const BoundarySpec& faces, const YeeGrid& g) {
    Cpml p;
    const int naxes = g.is_1d() ? 1 : 3;
    for (int a = 0; a < naxes; ++a) {
        const int n = g.cells(a);
        const FaceSpec& lo = faces[2 * a];
        const FaceSpec& hi = faces[2 * a + 1];
        const int tlo = lo.kind == FaceKind::Pml ? lo.pml.thickness : 0;
        const int thi = hi.kind == FaceKind::Pml ? hi.pml.thickness : 0;
        if (lo.kind == FaceKind::Pml) lo.pml.validate();
        if (hi.kind == FaceKind::Pml) hi.pml.validate();
        for (int t : {tlo, thi})
            if (t > 0 && 2 * t >= n)
                throw InvalidArgument("pml: layer of " + std::to_string(t) + " cells does not fit in the " +
                                      std::to_string(n) + "-cell " + axis_name(a) + " axis");
        p.thickness_[2 * a] = tlo;
        p.thickness_[2 * a + 1] = thi;

        CpmlAxis& ax = p.axes_[a];
        ax.inv_kappa_e.assign(n + 1, 1.0);
        ax.b_e.assign(n + 1, 1.0);
        ax.c_e.assign(n + 1, 0.0);
        ax.inv_kappa_h.assign(n + 1, 1.0);
        ax.b_h.assign(n + 1, 1.0);
        ax.c_h.assign(n + 1, 0.0);
        ax.slot_of_e.assign(n + 1, -1);
        ax.slot_of_h.assign(n + 1, -1);
        ax.active = tlo > 0 || thi > 0;
        if (!ax.active) continue;

        auto profile = [&](double x) -> Grading {
            if (tlo > 0 && x < tlo) return grade(lo.pml, (tlo - x) / tlo, g.dx);
            if (thi > 0 && x > n - thi) return grade(hi.pml, (x - (n - thi)) / thi, g.dx);
            return {};
        };
        auto inside = [&](double x) { return (tlo > 0 && x < tlo) || (thi > 0 && x > n - thi); };
        for (int i = 0; i <= n; ++i) {
            fill(profile(i), g.dt, ax.inv_kappa_e[i], ax.b_e[i], ax.c_e[i]);
            if (inside(i)) {
                ax.slot_of_e[i] = static_cast<int>(ax.slots_e.size());
                ax.slots_e.push_back(i);
            }
            if (i < n) {
                fill(profile(i + 0.5), g.dt, ax.inv_kappa_h[i], ax.b_h[i], ax.c_h[i]);
                if (inside(i + 0.5)) {
                    ax.slot_of_h[i] = static_cast<int>(ax.slots_h.size());
                    ax.slots_h.push_back(i);
                }
            }
        }
    }

    const Layout lay(g);
    for (int c = 0; c < 3; ++c) {
        const bool h_live = !g.is_1d() || c == 1;
        const bool e_live = !g.is_1d() || c == 2;
        for (int t = 0; t < 2; ++t) {
            const int a = (c + 1 + t) % 3;
            if (!p.axes_[a].active) continue;
            if (h_live) p.psi_h[c][t].assign(p.axes_[a].slots_h.size() * other_extent(lay, a), cplx{});
            if (e_live) p.psi_d[c][t].assign(p.axes_[a].slots_e.size() * other_extent(lay, a), cplx{});
        }
    }
    return p;
}

void Cpml::reset() {
    for (auto* arr : {&psi_h, &psi_d})
        for (auto& comp : *arr)
            for (auto& v : comp) std::fill(v.begin(), v.end(), cplx{});
}

void apply_pec(FieldState& s, const YeeGrid& g, const std::array<bool, 6>& faces) {
    const Layout lay(g);
    const int naxes = g.is_1d() ? 1 : 3;
    for (int a = 0; a < naxes; ++a)
        for (int side = 0; side < 2; ++side) {
            if (!faces[2 * a + side]) continue;
            const int plane = side == 0 ? 0 : g.cells(a);
            for (int c = 0; c < 3; ++c) {
                if (c == a || s.e[c].empty()) continue;
                ComponentRange r = e_range(g, c);
                r.lo[a] = plane;
                r.hi[a] = plane + 1;
                for (int i = r.lo.i; i < r.hi.i; ++i)
                    for (int j = r.lo.j; j < r.hi.j; ++j)
                        for (int k = r.lo.k; k < r.hi.k; ++k) {
                            const std::size_t q = lay.idx(i, j, k);
                            s.e[c][q] = cplx{};
                            s.d[c][q] = cplx{};
                        }
            }
        }
}

}  // namespace fdtdqe
