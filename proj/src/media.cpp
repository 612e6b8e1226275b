#include "fdtdqe/media.hpp"

#include <cmath>

#include "fdtdqe/errors.hpp"

namespace fdtdqe {

void LorentzDrudeParams::validate() const {
    if (!(eps_inf >= 1.0)) throw InvalidArgument("Lorentz-Drude medium: eps_inf must be >= 1");
    for (double v : {omega_p_drude, gamma_drude, omega_p_lorentz, omega_0_lorentz, gamma_lorentz})
        if (!(v >= 0.0)) throw InvalidArgument("Lorentz-Drude medium: rates must be non-negative");
}

bool LorentzDrudeParams::is_vacuum() const { return eps_inf == 1.0 && !is_dispersive(); }

LorentzDrudeParams mirror_metal() {
    LorentzDrudeParams p;
    p.eps_inf = 5.485;
    p.omega_p_drude = 4.20e7;
    p.gamma_drude = 2.43e5;
    p.omega_p_lorentz = 1.61e7;
    p.omega_0_lorentz = 2.27e7;
    p.gamma_lorentz = 6.33e5;
    return p;
}

cplx permittivity(const LorentzDrudeParams& p, double omega) {
    if (!(omega > 0.0)) throw InvalidArgument("permittivity: omega must be positive");
    const cplx i{0.0, 1.0};
    const double w2 = omega * omega;
    cplx eps = p.eps_inf;
    if (p.omega_p_drude != 0.0)
        eps -= p.omega_p_drude * p.omega_p_drude / (w2 + i * p.gamma_drude * omega);
    if (p.omega_p_lorentz != 0.0)
        eps += p.omega_p_lorentz * p.omega_p_lorentz /
               (p.omega_0_lorentz * p.omega_0_lorentz - w2 - i * p.gamma_lorentz * omega);
    return eps;
}

cplx advance_p_lorentz(cplx pl_n, cplx pl_prev, cplx e_n, const LorentzDrudeParams& p, double dt) {
    const double half = 0.5 * p.gamma_lorentz * dt;
    const double w0dt = p.omega_0_lorentz * dt;
    const double wpdt = p.omega_p_lorentz * dt;
    return ((2.0 - w0dt * w0dt) * pl_n - (1.0 - half) * pl_prev + kEps0 * wpdt * wpdt * e_n) /
           (1.0 + half);
}

cplx advance_p_drude(cplx pd_n, cplx pd_prev, cplx e_n, const LorentzDrudeParams& p, double dt) {
    const double half = 0.5 * p.gamma_drude * dt;
    const double wpdt = p.omega_p_drude * dt;
    return (2.0 * pd_n - (1.0 - half) * pd_prev + kEps0 * wpdt * wpdt * e_n) / (1.0 + half);
}

cplx e_from_d(cplx d, cplx pd, cplx pl, double eps_inf) {
    if (!(eps_inf > 0.0)) throw InvalidArgument("e_from_d: eps_inf must be positive");
    return (d - pd - pl) / (kEps0 * eps_inf);
}

AdeCoefficients AdeCoefficients::make(const LorentzDrudeParams& p, double dt) {
    AdeCoefficients c;
    const double hl = 0.5 * p.gamma_lorentz * dt;
    const double hd = 0.5 * p.gamma_drude * dt;
    c.l1 = (2.0 - p.omega_0_lorentz * p.omega_0_lorentz * dt * dt) / (1.0 + hl);
    c.l2 = -(1.0 - hl) / (1.0 + hl);
    c.l3 = kEps0 * p.omega_p_lorentz * p.omega_p_lorentz * dt * dt / (1.0 + hl);
    c.d1 = 2.0 / (1.0 + hd);
    c.d2 = -(1.0 - hd) / (1.0 + hd);
    c.d3 = kEps0 * p.omega_p_drude * p.omega_p_drude * dt * dt / (1.0 + hd);
    c.inv_eps_inf = 1.0 / (kEps0 * p.eps_inf);
    return c;
}

// --- geometry ----------------------------------------------------------------

namespace {

bool in_half_open(double v, double lo, double hi) { return v >= lo && v < hi; }

struct ContainsVisitor {
    const Vec3& p;
    bool operator()(const BoxShape& b) const {
        for (int a = 0; a < 3; ++a)
            if (!in_half_open(p[a], b.lo[a], b.hi[a])) return false;
        return true;
    }
    bool operator()(const SlabShape& s) const { return in_half_open(p[s.axis], s.from, s.to); }
    bool operator()(const SphereShape& s) const {
        const double dx = p.x - s.center.x, dy = p.y - s.center.y, dz = p.z - s.center.z;
        return dx * dx + dy * dy + dz * dz <= s.radius * s.radius;
    }
    bool operator()(const CylinderSectorShape& c) const {
        const int a = c.axis;
        const int u = (a + 1) % 3, v = (a + 2) % 3;
        if (p[a] < c.lo || p[a] > c.hi) return false;
        const double du = p[u] - c.center[u], dv = p[v] - c.center[v];
        const double r = std::hypot(du, dv);
        if (r < c.r_inner || r > c.r_outer) return false;
        double diff = std::atan2(dv, du) - c.direction;
        diff = std::remainder(diff, 2.0 * kPi);
        return std::abs(diff) <= c.half_angle;
    }
};

// 1D scenes only honour extents along x.
bool contains_1d(const Shape& s, double x) {
    if (const auto* b = std::get_if<BoxShape>(&s)) return in_half_open(x, b->lo.x, b->hi.x);
    if (const auto* sl = std::get_if<SlabShape>(&s))
        return sl->axis == 0 && in_half_open(x, sl->from, sl->to);
    return false;
}

}  // namespace

bool shape_contains(const Shape& s, const Vec3& pos) { return std::visit(ContainsVisitor{pos}, s); }

MediumMap MediumMap::vacuum(const YeeGrid& g) {
    MediumMap m;
    m.prepare(g.dt);
    return m;
}

MediumMap MediumMap::build(const YeeGrid& g, std::vector<LorentzDrudeParams> media,
                           const std::vector<Placement>& placements) {
    for (const auto& p : media) p.validate();
    for (const auto& pl : placements)
        if (pl.medium < 0 || pl.medium >= static_cast<int>(media.size()))
            throw InvalidArgument("MediumMap: placement references an unknown medium");

    MediumMap m;
    m.media_ = std::move(media);
    const Layout lay(g);
    for (int c = 0; c < 3; ++c) {
        const auto r = e_range(g, c);
        for (int i = r.lo.i; i < r.hi.i; ++i)
            for (int j = r.lo.j; j < r.hi.j; ++j)
                for (int k = r.lo.k; k < r.hi.k; ++k) {
                    int found = -1;
                    if (g.is_1d()) {
                        const double x = i * g.dx;
                        for (const auto& pl : placements)
                            if (contains_1d(pl.shape, x)) found = pl.medium;
                    } else {
                        Vec3 pos = e_position(c, {i, j, k});
                        pos.x *= g.dx;
                        pos.y *= g.dx;
                        pos.z *= g.dx;
                        for (const auto& pl : placements)
                            if (shape_contains(pl.shape, pos)) found = pl.medium;
                    }
                    if (found >= 0 && !m.media_[found].is_vacuum())
                        m.samples_[c].push_back({lay.idx(i, j, k), found});
                }
    }
    m.prepare(g.dt);
    return m;
}

bool MediumMap::empty() const {
    return samples_[0].empty() && samples_[1].empty() && samples_[2].empty();
}

int MediumMap::medium_at(int comp, std::size_t index) const {
    for (const auto& s : samples_[comp])
        if (s.index == index) return s.medium;
    return -1;
}

void MediumMap::prepare(double dt) {
    coeffs_.clear();
    for (const auto& p : media_) coeffs_.push_back(AdeCoefficients::make(p, dt));
}

void MediumMap::attach(FieldState& s) const {
    for (int c = 0; c < 3; ++c) s.resize_polarization(c, samples_[c].size());
}

void advance_polarization(FieldState& s, const MediumMap& m) {
    const auto& coeffs = m.coefficients();
    for (int c = 0; c < 3; ++c) {
        const auto& list = m.samples(c);
        auto& e = s.e[c];
        auto& pd = s.pd[c];
        auto& pdp = s.pd_prev[c];
        auto& pl = s.pl[c];
        auto& plp = s.pl_prev[c];
        const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(list.size());
#pragma omp parallel for schedule(static) if (n > 4096)
        for (std::ptrdiff_t q = 0; q < n; ++q) {
            const auto& smp = list[q];
            const auto& k = coeffs[smp.medium];
            const cplx en = e[smp.index];
            const cplx pd_next = k.d1 * pd[q] + k.d2 * pdp[q] + k.d3 * en;
            const cplx pl_next = k.l1 * pl[q] + k.l2 * plp[q] + k.l3 * en;
            pdp[q] = pd[q];
            pd[q] = pd_next;
            plp[q] = pl[q];
            pl[q] = pl_next;
        }
    }
}

void recover_e(FieldState& s, const MediumMap& m) {
    const auto& coeffs = m.coefficients();
    for (int c = 0; c < 3; ++c) {
        if (s.e[c].empty()) continue;
        s.e[c] = s.d[c];
        const auto& list = m.samples(c);
        for (std::size_t q = 0; q < list.size(); ++q) {
            const auto& smp = list[q];
            s.e[c][smp.index] =
                (s.d[c][smp.index] - s.pd[c][q] - s.pl[c][q]) * coeffs[smp.medium].inv_eps_inf;
        }
    }
}

}  // namespace fdtdqe
