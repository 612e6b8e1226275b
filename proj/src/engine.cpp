#include "fdtdqe/engine.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "fdtdqe/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fdtdqe {

namespace {

const std::vector<double>& ones(std::size_t n) {
    static thread_local std::vector<double> v;
    if (v.size() < n) v.assign(n, 1.0);
    return v;
}

const double* inv_kappa(const Cpml* pml, int axis, bool e_node, std::size_t n) {
    if (pml && pml->axis(axis).active) {
        const auto& ax = pml->axis(axis);
        return e_node ? ax.inv_kappa_e.data() : ax.inv_kappa_h.data();
    }
    return ones(n).data();
}

std::size_t psi_offset(const Layout& lay, int axis, int slot, const int p[3]) {
    const std::array<int, 3> n{lay.nxp, lay.nyp, lay.nzp};
    const int o1 = (axis + 1) % 3, o2 = (axis + 2) % 3;
    return (static_cast<std::size_t>(slot) * static_cast<std::size_t>(n[o1]) +
            static_cast<std::size_t>(p[o1])) *
               static_cast<std::size_t>(n[o2]) +
           static_cast<std::size_t>(p[o2]);
}

void advance_h_1d(FieldState& s, const YeeGrid& g, Cpml* pml) {
    auto& hy = s.h[1];
    const auto& ez = s.e[2];
    const double cf = g.dt / g.dx;
    const int n = g.nx;
    const double* ik = inv_kappa(pml, 0, false, n + 1);
    for (int i = 0; i < n; ++i) hy[i] += cf * (ez[i + 1] - ez[i]) * ik[i];
    if (pml && pml->axis(0).active) {
        const auto& ax = pml->axis(0);
        auto& psi = pml->psi_h[1][1];
        for (std::size_t q = 0; q < ax.slots_h.size(); ++q) {
            const int i = ax.slots_h[q];
            psi[q] = ax.b_h[i] * psi[q] + ax.c_h[i] * (ez[i + 1] - ez[i]) / g.dx;
            hy[i] += g.dt * psi[q];
        }
    }
}

void advance_d_1d(FieldState& s, const YeeGrid& g, Cpml* pml) {
    auto& dz = s.d[2];
    const auto& hy = s.h[1];
    const double cf = g.dt / g.dx;
    const int n = g.nx;
    const double* ik = inv_kappa(pml, 0, true, n + 1);
    for (int i = 1; i < n; ++i) dz[i] += cf * (hy[i] - hy[i - 1]) * ik[i];
    if (pml && pml->axis(0).active) {
        const auto& ax = pml->axis(0);
        auto& psi = pml->psi_d[2][0];
        for (std::size_t q = 0; q < ax.slots_e.size(); ++q) {
            const int i = ax.slots_e[q];
            if (i < 1 || i >= n) continue;
            psi[q] = ax.b_e[i] * psi[q] + ax.c_e[i] * (hy[i] - hy[i - 1]) / g.dx;
            dz[i] += g.dt * psi[q];
        }
    }
}

// dst += coef * (d_{a1} A * ik1 - d_{a2} B * ik2) over the range r, with
// forward differences (H update) or backward differences (D update).
template <bool Forward>
void curl_update(std::vector<cplx>& dst, const std::vector<cplx>& A, const std::vector<cplx>& B, int a1,
                 int a2, const double* ik1, const double* ik2, double coef, const ComponentRange& r,
                 const Layout& lay) {
    const std::ptrdiff_t s1 = static_cast<std::ptrdiff_t>(lay.stride(a1));
    const std::ptrdiff_t s2 = static_cast<std::ptrdiff_t>(lay.stride(a2));
#pragma omp parallel for schedule(static)
    for (int i = r.lo.i; i < r.hi.i; ++i)
        for (int j = r.lo.j; j < r.hi.j; ++j) {
            int p[3] = {i, j, 0};
            for (int k = r.lo.k; k < r.hi.k; ++k) {
                p[2] = k;
                const std::ptrdiff_t q = static_cast<std::ptrdiff_t>(lay.idx(i, j, k));
                cplx d1, d2;
                if constexpr (Forward) {
                    d1 = A[q + s1] - A[q];
                    d2 = B[q + s2] - B[q];
                } else {
                    d1 = A[q] - A[q - s1];
                    d2 = B[q] - B[q - s2];
                }
                dst[q] += coef * (d1 * ik1[p[a1]] - d2 * ik2[p[a2]]);
            }
        }
}

// CPML memory update and correction for one (component, term) pair.
template <bool Forward>
void pml_term(std::vector<cplx>& dst, const std::vector<cplx>& src, std::vector<cplx>& psi, int axis,
              const std::vector<int>& slots, const std::vector<double>& b, const std::vector<double>& c,
              double coef, double inv_dx, const ComponentRange& r, const Layout& lay) {
    const std::ptrdiff_t sa = static_cast<std::ptrdiff_t>(lay.stride(axis));
    const int o1 = (axis + 1) % 3, o2 = (axis + 2) % 3;
    const int nslots = static_cast<int>(slots.size());
#pragma omp parallel for schedule(static)
    for (int slot = 0; slot < nslots; ++slot) {
        const int pa = slots[slot];
        if (pa < r.lo[axis] || pa >= r.hi[axis]) continue;
        int p[3];
        p[axis] = pa;
        for (int u = r.lo[o1]; u < r.hi[o1]; ++u)
            for (int v = r.lo[o2]; v < r.hi[o2]; ++v) {
                p[o1] = u;
                p[o2] = v;
                const std::ptrdiff_t q = static_cast<std::ptrdiff_t>(lay.idx(p[0], p[1], p[2]));
                const cplx diff = Forward ? src[q + sa] - src[q] : src[q] - src[q - sa];
                cplx& m = psi[psi_offset(lay, axis, slot, p)];
                m = b[pa] * m + c[pa] * diff * inv_dx;
                dst[q] += coef * m;
            }
    }
}

ComponentRange d_update_range(const YeeGrid& g, int c) {
    ComponentRange r = e_range(g, c);
    for (int a = 0; a < 3; ++a)
        if (a != c) {
            r.lo[a] = 1;
            r.hi[a] = g.cells(a);
        }
    return r;
}

void check_current(const YeeGrid& g, const CurrentSample& j) {
    if (j.comp < 0 || j.comp > 2 || (g.is_1d() && j.comp != 2) || !e_range(g, j.comp).contains(j.cell))
        throw InvalidArgument("current sample at (" + std::to_string(j.cell.i) + "," + std::to_string(j.cell.j) +
                              "," + std::to_string(j.cell.k) + ") component " + std::to_string(j.comp) +
                              " lies outside the grid");
}

}  // namespace

void advance_h(FieldState& s, const YeeGrid& g, Cpml* pml) {
    if (g.is_1d()) {
        advance_h_1d(s, g, pml);
        return;
    }
    const Layout lay(g);
    ones(std::max({g.nx, g.ny, g.nz}) + 1);
    const double cf = -g.dt / g.dx;
    for (int c = 0; c < 3; ++c) {
        const int a1 = (c + 1) % 3, a2 = (c + 2) % 3;
        const ComponentRange r = h_range(g, c);
        curl_update<true>(s.h[c], s.e[a2], s.e[a1], a1, a2, inv_kappa(pml, a1, false, g.cells(a1) + 1),
                          inv_kappa(pml, a2, false, g.cells(a2) + 1), cf, r, lay);
        if (!pml) continue;
        for (int t = 0; t < 2; ++t) {
            const int a = t == 0 ? a1 : a2;
            const auto& ax = pml->axis(a);
            if (!ax.active) continue;
            const double sign = t == 0 ? 1.0 : -1.0;
            pml_term<true>(s.h[c], s.e[t == 0 ? a2 : a1], pml->psi_h[c][t], a, ax.slots_h, ax.b_h, ax.c_h,
                           -g.dt * sign, 1.0 / g.dx, r, lay);
        }
    }
}

void advance_d(FieldState& s, const YeeGrid& g, const std::vector<CurrentSample>& j, Cpml* pml) {
    for (const auto& src : j) check_current(g, src);
    if (g.is_1d()) {
        advance_d_1d(s, g, pml);
    } else {
        const Layout lay(g);
        ones(std::max({g.nx, g.ny, g.nz}) + 1);
        const double cf = g.dt / g.dx;
        for (int c = 0; c < 3; ++c) {
            const int a1 = (c + 1) % 3, a2 = (c + 2) % 3;
            const ComponentRange r = d_update_range(g, c);
            curl_update<false>(s.d[c], s.h[a2], s.h[a1], a1, a2, inv_kappa(pml, a1, true, g.cells(a1) + 1),
                               inv_kappa(pml, a2, true, g.cells(a2) + 1), cf, r, lay);
            if (!pml) continue;
            for (int t = 0; t < 2; ++t) {
                const int a = t == 0 ? a1 : a2;
                const auto& ax = pml->axis(a);
                if (!ax.active) continue;
                const double sign = t == 0 ? 1.0 : -1.0;
                pml_term<false>(s.d[c], s.h[t == 0 ? a2 : a1], pml->psi_d[c][t], a, ax.slots_e, ax.b_e, ax.c_e,
                                g.dt * sign, 1.0 / g.dx, r, lay);
            }
        }
    }
    const Layout lay(g);
    for (const auto& src : j) s.d[src.comp][lay.idx(src.cell)] -= g.dt * src.value;
}

double discrete_energy(const FieldState& s, const YeeGrid& g, const std::array<std::vector<cplx>, 3>& h_prev) {
    double e2 = 0.0, h2 = 0.0;
    for (int c = 0; c < 3; ++c) {
        for (const auto& v : s.e[c]) e2 += std::norm(v);
        const auto& hn = s.h[c];
        const auto& ho = h_prev[c];
        for (std::size_t q = 0; q < hn.size() && q < ho.size(); ++q)
            h2 += ho[q].real() * hn[q].real() + ho[q].imag() * hn[q].imag();
    }
    return 0.5 * (e2 + h2) * g.cell_measure();
}

void set_threads(int n) {
#ifdef _OPENMP
    static const int runtime_default = omp_get_max_threads();
    if (n <= 0) {
        n = runtime_default;
        if (const char* env = std::getenv("FDTDQE_THREADS")) {
            const int v = std::atoi(env);
            if (v > 0) n = v;
        }
    }
    omp_set_num_threads(n);
#else
    (void)n;
#endif
}

Solver::Solver(const YeeGrid& g, MediumMap media, const BoundarySpec& bounds)
    : grid_(g), media_(std::move(media)), bounds_(bounds), pml_(Cpml::make(bounds, g)), state_(g) {
    media_.prepare(g.dt);
    media_.attach(state_);
    pec_faces_.fill(true);
}

void Solver::advance_h() { fdtdqe::advance_h(state_, grid_, &pml_); }

void Solver::advance_d(const std::vector<CurrentSample>& j) { fdtdqe::advance_d(state_, grid_, j, &pml_); }

void Solver::update_e() {
    advance_polarization(state_, media_);
    recover_e(state_, media_);
    apply_pec(state_, grid_, pec_faces_);
    ++state_.step;
}

void Solver::step(const std::vector<CurrentSample>& j) {
    advance_h();
    advance_d(j);
    update_e();
}

void Solver::reset() {
    state_.clear();
    media_.attach(state_);
    pml_.reset();
}

}  // namespace fdtdqe
