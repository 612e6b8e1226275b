#include "fdtdqe/emitter.hpp"

#include <cmath>
#include <string>

#include "fdtdqe/errors.hpp"

namespace fdtdqe {

double free_rate(double omega, double dipole_norm, int dimensionality) {
    const double d2 = dipole_norm * dipole_norm;
    if (dimensionality == 1) return omega * d2;
    return omega * omega * omega * d2 / (3.0 * kPi * kEps0 * kHbar);
}

double dipole_for_rate(double omega, double gamma0, int dimensionality) {
    if (!(omega > 0.0) || gamma0 < 0.0) throw InvalidArgument("dipole_for_rate: need omega > 0 and gamma0 >= 0");
    if (dimensionality == 1) return std::sqrt(gamma0 / omega);
    return std::sqrt(3.0 * kPi * gamma0 / (omega * omega * omega));
}

std::vector<DipoleSample> snap_dipole(const EmitterSpec& spec, const YeeGrid& g) {
    if (spec.dipole.norm() == 0.0) throw InvalidArgument("emitter: dipole must be non-zero");
    if (g.is_1d() && (spec.dipole.x != 0.0 || spec.dipole.y != 0.0))
        throw InvalidArgument("emitter: a 1D lattice only carries Ez, so the dipole must point along z");
    std::vector<DipoleSample> out;
    for (int c = 0; c < 3; ++c) {
        if (spec.dipole[c] == 0.0) continue;
        Index3 cell;
        const int naxes = g.is_1d() ? 1 : 3;
        for (int a = 0; a < naxes; ++a) {
            const double offset = (!g.is_1d() && a == c) ? 0.5 : 0.0;
            cell[a] = static_cast<int>(std::lround(spec.position[a] / g.dx - offset));
        }
        if (!e_range(g, c).contains(cell))
            throw InvalidArgument("emitter: position lies outside the grid for component " + axis_name(c));
        out.push_back({c, cell, spec.dipole[c]});
    }
    return out;
}

cplx sample_scatt(const FieldState& main, const YeeGrid& g, const std::vector<DipoleSample>& samples) {
    const Layout lay(g);
    cplx acc{};
    for (const auto& s : samples) acc -= s.weight * main.e[s.comp][lay.idx(s.cell)] / kHbar;
    return acc;
}

cplx update_amplitude(EmitterState& s, const EmitterSpec& spec, cplx escatt, double dt) {
    const cplx i{0.0, 1.0};
    const cplx rate = i * spec.omega_a + 0.5 * spec.gamma0;
    cplx next;
    if (s.step == 0) {
        switch (spec.bootstrap) {
            case Bootstrap::Matched: next = s.c_now * (std::sqrt(1.0 + rate * rate * dt * dt) - rate * dt); break;
            case Bootstrap::Exact: next = s.c_now * std::exp(-rate * dt); break;
            case Bootstrap::Euler: next = s.c_now * (1.0 - rate * dt); break;
        }
    } else {
        next = s.c_prev - 2.0 * dt * (rate * s.c_now + i * escatt);
    }
    s.c_prev = s.c_now;
    s.c_now = next;
    ++s.step;
    return next;
}

std::vector<CurrentSample> tls_current(cplx c_next, cplx c_now, const std::vector<DipoleSample>& samples,
                                       const YeeGrid& g) {
    std::vector<CurrentSample> out;
    const cplx rate = (c_next - c_now) / (g.dt * g.cell_measure());
    for (const auto& s : samples) out.push_back({s.comp, s.cell, s.weight * rate});
    return out;
}

std::vector<CurrentSample> tls_current_real(cplx c_next, cplx c_now, const EmitterSpec& spec,
                                            const std::vector<DipoleSample>& samples, const YeeGrid& g) {
    if (spec.mode != EmitterMode::Real) throw ContractViolation("tls_current_real called in complex mode");
    std::vector<CurrentSample> out;
    const double amp = 2.0 * spec.omega_a * (0.5 * (c_next + c_now)).imag() / g.cell_measure();
    for (const auto& s : samples) out.push_back({s.comp, s.cell, cplx{s.weight * amp, 0.0}});
    return out;
}

}  // namespace fdtdqe
