#include "fdtdqe/tfsf.hpp"

#include <algorithm>
#include <string>

#include "fdtdqe/errors.hpp"

namespace fdtdqe {

namespace {

struct Neighbor {
    int comp;
    Index3 cell;
    double kappa;
};

}  // namespace

TfsfSurface TfsfSurface::make(const YeeGrid& g, const TfsfBox& box, int margin) {
    TfsfSurface s;
    s.box_ = box;
    s.one_d_ = g.is_1d();
    const int naxes = g.is_1d() ? 1 : 3;
    for (int a = 0; a < naxes; ++a) {
        if (box.lo[a] > box.hi[a]) throw InvalidArgument("tfsf box: lo exceeds hi on the " + axis_name(a) + " axis");
        if (box.lo[a] < margin || box.hi[a] > g.cells(a) - margin)
            throw InvalidArgument("tfsf box: the " + axis_name(a) + " extent [" + std::to_string(box.lo[a]) + ", " +
                                  std::to_string(box.hi[a]) + "] leaves the grid interior");
    }

    const Layout lay(g);
    const double cf = g.dt / g.dx;
    auto near = [&](const ComponentRange& r) {
        ComponentRange n = r;
        for (int a = 0; a < naxes; ++a) {
            n.lo[a] = std::max(r.lo[a], box.lo[a] - 2);
            n.hi[a] = std::min(r.hi[a], box.hi[a] + 3);
        }
        return n;
    };

    for (int c = 0; c < 3; ++c) {
        if (g.is_1d() && c != 1) continue;
        const ComponentRange r = near(h_range(g, c));
        for (int i = r.lo.i; i < r.hi.i; ++i)
            for (int j = r.lo.j; j < r.hi.j; ++j)
                for (int k = r.lo.k; k < r.hi.k; ++k) {
                    const Index3 p{i, j, k};
                    // H_c -= (dt/dx) sum kappa E
                    std::vector<Neighbor> nb;
                    if (g.is_1d()) {
                        nb = {{2, {i + 1, 0, 0}, -1.0}, {2, {i, 0, 0}, 1.0}};
                    } else {
                        const int a1 = (c + 1) % 3, a2 = (c + 2) % 3;
                        Index3 p1 = p, p2 = p;
                        p1[a1] += 1;
                        p2[a2] += 1;
                        nb = {{a2, p1, 1.0}, {a2, p, -1.0}, {a1, p2, -1.0}, {a1, p, 1.0}};
                    }
                    const bool h_in = s.contains(h_position(c, p));
                    for (const auto& n : nb) {
                        const bool e_in = s.contains(e_position(n.comp, n.cell));
                        if (e_in == h_in) continue;
                        const double coef = h_in ? cf * n.kappa : -cf * n.kappa;
                        s.h_terms_.push_back({c, lay.idx(p), n.comp, lay.idx(n.cell), coef});
                    }
                }
    }

    for (int c = 0; c < 3; ++c) {
        if (g.is_1d() && c != 2) continue;
        ComponentRange full = e_range(g, c);
        for (int a = 0; a < naxes; ++a)
            if (a != c || g.is_1d()) {
                full.lo[a] = std::max(full.lo[a], 1);
                full.hi[a] = std::min(full.hi[a], g.cells(a));
            }
        const ComponentRange r = near(full);
        for (int i = r.lo.i; i < r.hi.i; ++i)
            for (int j = r.lo.j; j < r.hi.j; ++j)
                for (int k = r.lo.k; k < r.hi.k; ++k) {
                    const Index3 p{i, j, k};
                    // D_c += (dt/dx) sum kappa H
                    std::vector<Neighbor> nb;
                    if (g.is_1d()) {
                        nb = {{1, {i, 0, 0}, 1.0}, {1, {i - 1, 0, 0}, -1.0}};
                    } else {
                        const int a1 = (c + 1) % 3, a2 = (c + 2) % 3;
                        Index3 m1 = p, m2 = p;
                        m1[a1] -= 1;
                        m2[a2] -= 1;
                        nb = {{a2, p, 1.0}, {a2, m1, -1.0}, {a1, p, -1.0}, {a1, m2, 1.0}};
                    }
                    const bool e_in = s.contains(e_position(c, p));
                    for (const auto& n : nb) {
                        const bool h_in = s.contains(h_position(n.comp, n.cell));
                        if (e_in == h_in) continue;
                        const double coef = e_in ? -cf * n.kappa : cf * n.kappa;
                        s.d_terms_.push_back({c, lay.idx(p), n.comp, lay.idx(n.cell), coef});
                    }
                }
    }
    return s;
}

bool TfsfSurface::contains(const Vec3& pos) const {
    const int naxes = one_d_ ? 1 : 3;
    for (int a = 0; a < naxes; ++a)
        if (pos[a] < box_.lo[a] || pos[a] > box_.hi[a]) return false;
    return true;
}

SurfaceCurrents TfsfSurface::collect(const FieldState& aux, const std::vector<Term>& terms, char field,
                                     bool from_e) const {
    SurfaceCurrents out;
    out.step = aux.step;
    out.field = field;
    out.samples.reserve(terms.size());
    const auto& src = from_e ? aux.e : aux.h;
    for (const auto& t : terms) out.samples.push_back({field, t.comp, t.index, t.coef * src[t.src_comp][t.src_index]});
    return out;
}

SurfaceCurrents TfsfSurface::magnetic_currents(const FieldState& aux) const {
    return collect(aux, h_terms_, 'H', true);
}

SurfaceCurrents TfsfSurface::electric_currents(const FieldState& aux) const {
    return collect(aux, d_terms_, 'D', false);
}

void inject(FieldState& main, const SurfaceCurrents& currents) {
    if (main.step != currents.step)
        throw ContractViolation("tfsf: currents of step " + std::to_string(currents.step) +
                                " injected into a grid at step " + std::to_string(main.step));
    for (const auto& s : currents.samples) {
        auto& target = s.field == 'H' ? main.h[s.comp] : main.d[s.comp];
        target[s.index] += s.value;
    }
}

}  // namespace fdtdqe
