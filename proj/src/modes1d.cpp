#include "fdtdqe/modes1d.hpp"

#include <cmath>
#include <exception>
#include <string>

#include "fdtdqe/errors.hpp"
#include "fdtdqe/spectral.hpp"

namespace fdtdqe {

ModeSet ba_modes(const Slab1D& s, double omega) {
    if (!(omega > 0.0)) throw InvalidArgument("ba_modes: omega must be positive");
    s.validate();
    ModeSet m;
    m.omega = omega;
    if (s.left == End::Open) m.ba.push_back({0, incident_left(s, omega, s.x_a)});
    if (s.right == End::Open) m.ba.push_back({1, incident_right(s, omega, s.x_a)});
    return m;
}

ModeSet ma_modes(const Slab1D& s, double omega, int points_per_wavelength) {
    if (!(omega > 0.0)) throw InvalidArgument("ma_modes: omega must be positive");
    if (points_per_wavelength < 20) throw InvalidArgument("ma_modes: need at least 20 points per wavelength");
    s.validate();
    ModeSet m;
    m.omega = omega;
    bool lossy = false;
    for (const auto& l : s.layers) lossy = lossy || s.eps_at(0.5 * (l.start + l.end), omega).imag() > 0.0;
    if (!lossy) return m;

    FdfdOptions opt;
    opt.points_per_wavelength = points_per_wavelength;
    const Fdfd1D f(s, omega, opt);
    const auto g = f.solve(f.node_of(s.x_a));
    const double k2 = omega * omega;
    const auto& w = f.lossy_weights();
    const auto& im = f.lossy_im_eps();
    for (std::size_t n = 0; n < g.size(); ++n) {
        if (w[n] <= 0.0) continue;
        // g(x_n, x_a) = g(x_a, x_n)
        m.ma.push_back({f.nodes()[n], w[n], im[n], k2 * std::sqrt(im[n] / kPi) * g[n]});
    }
    return m;
}

double ba_weight(double omega) { return omega * omega / (4.0 * kPi * omega); }

ImGParts reconstruct_parts(const ModeSet& ba, const ModeSet& ma, double omega) {
    if (ba.omega != omega || ma.omega != omega)
        throw ContractViolation("reconstruct_im_g: mode sets built at a different omega");
    const double scale = kPi / (kHbar * kMu0 * omega * omega);
    ImGParts p;
    for (const auto& m : ba.ba) p.ba += ba_weight(omega) * std::norm(m.e_at_xa);
    for (const auto& m : ma.ma) p.ma += m.weight * std::norm(m.e_at_xa);
    p.ba *= scale;
    p.ma *= scale;
    return p;
}

double reconstruct_im_g(const ModeSet& ba, const ModeSet& ma, double omega) {
    return reconstruct_parts(ba, ma, omega).total();
}

std::vector<CompletenessRow> completeness_scan(const Slab1D& s, const std::vector<double>& omegas,
                                               int points_per_wavelength) {
    std::vector<CompletenessRow> rows(omegas.size());
    FdfdOptions opt;
    opt.points_per_wavelength = points_per_wavelength;
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(omegas.size());
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            const double w = omegas[i];
            const auto parts = reconstruct_parts(ba_modes(s, w), ma_modes(s, w, points_per_wavelength), w);
            CompletenessRow& r = rows[i];
            r.omega = w;
            r.direct = greens_im_1d(s, w, opt);
            r.ba_only = parts.ba;
            r.ba_ma = parts.total();
            r.rel_error = std::abs(r.ba_ma - r.direct) / std::abs(r.direct);
        } catch (...) {
#pragma omp critical
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return rows;
}

}  // namespace fdtdqe
