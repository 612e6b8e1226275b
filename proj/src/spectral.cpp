#include "fdtdqe/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>

#include "fdtdqe/errors.hpp"

namespace fdtdqe {

Spectrum make_band(double omega_a, double linewidth, std::size_t n, double half_span) {
    if (!(omega_a > 0.0) || !(linewidth > 0.0) || n < 2) throw InvalidArgument("make_band: bad band parameters");
    Spectrum s;
    const double lo = omega_a - half_span * linewidth;
    s.domega = 2.0 * half_span * linewidth / static_cast<double>(n);
    s.omega0 = lo > 0.0 ? lo : s.domega;
    s.values.assign(n, cplx{});
    return s;
}

double greens_im_1d(const Slab1D& s, double omega, const FdfdOptions& opt) {
    if (!(omega > 0.0)) throw InvalidArgument("greens_im_1d: omega must be positive");
    const Fdfd1D f(s, omega, opt);
    const int a = f.node_of(s.x_a);
    return f.solve(a)[a].imag();
}

Spectrum im_g_spectrum(const Slab1D& s, const Spectrum& band, const FdfdOptions& opt) {
    s.validate();
    Spectrum out = band;
    out.tag = Quantity::ImG;
    out.units = "m";
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(band.size());
    std::exception_ptr error;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            out.values[i] = greens_im_1d(s, band.omega(i), opt);
        } catch (...) {
#pragma omp critical
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return out;
}

double kernel_calibration_1d(double omega_a, const FdfdOptions& opt) {
    Slab1D vac;
    return 1.0 / (2.0 * omega_a * greens_im_1d(vac, omega_a, opt));
}

Spectrum kernel_spectrum(const Spectrum& im_g, const EmitterSpec& spec, double calibration) {
    if (im_g.size() < 2) throw InvalidArgument("kernel_spectrum: empty Im g spectrum");
    const double margin = 10.0 * spec.gamma0;
    const double lo = im_g.omega(0), hi = im_g.omega(im_g.size() - 1);
    if (spec.omega_a - margin < lo && lo > im_g.domega) throw InvalidArgument("kernel_spectrum: band starts too close to omega_a");
    if (spec.omega_a + margin > hi) throw InvalidArgument("kernel_spectrum: band ends too close to omega_a");
    Spectrum k = im_g;
    k.tag = Quantity::Kernel;
    k.units = "1/m";
    const double d2 = spec.dipole.norm() * spec.dipole.norm();
    for (std::size_t i = 0; i < k.size(); ++i) {
        const double w = k.omega(i);
        k.values[i] = 2.0 * calibration * kMu0 / kHbar * w * w * d2 * im_g.values[i];
    }
    return k;
}

Spectrum causal_part(const Spectrum& kernel) {
    const std::size_t n = kernel.size();
    Spectrum out = kernel;
    if (n == 0) return out;
    std::vector<cplx> buf(kernel.values);
    auto* data = reinterpret_cast<fftw_complex*>(buf.data());
    const int ni = static_cast<int>(n);
    fftw_plan fwd, bwd;
#pragma omp critical(fftw_planner)
    {
        fwd = fftw_plan_dft_1d(ni, data, data, FFTW_FORWARD, FFTW_ESTIMATE);
        bwd = fftw_plan_dft_1d(ni, data, data, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    fftw_execute(fwd);
    // buf[m] ~ K(tau_m); keep tau > 0, halve tau = 0 and the Nyquist lag.
    const std::size_t half = n / 2;
    for (std::size_t m = 0; m < n; ++m) {
        double w = 0.0;
        if (m == 0) {
            w = 0.5;
        } else if (m < half || (n % 2 == 1 && m == half)) {
            w = 1.0;
        } else if (m == half) {
            w = 0.5;
        }
        buf[m] *= w / static_cast<double>(n);
    }
    fftw_execute(bwd);
#pragma omp critical(fftw_planner)
    {
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(bwd);
    }
    out.values = buf;
    return out;
}

Spectrum amplitude_spectrum(const Spectrum& kernel, const EmitterSpec& spec, cplx c0) {
    const Spectrum kc = causal_part(kernel);
    Spectrum a = kernel;
    a.tag = Quantity::Amplitude;
    a.units = "m";
    const cplx i{0.0, 1.0};
    for (std::size_t j = 0; j < a.size(); ++j) {
        const cplx den = -i * a.omega(j) + i * spec.omega_a + kc.values[j];
        if (std::abs(den) < 1e-12)
            throw DegeneratePole("amplitude spectrum denominator vanishes at omega = " + std::to_string(a.omega(j)));
        a.values[j] = c0 / den;
    }
    return a;
}

namespace {

cplx lorentz(double omega, double omega_a, double gamma, cplx c0) {
    const cplx i{0.0, 1.0};
    return c0 / (-i * omega + i * omega_a + 0.5 * gamma);
}

// Inverse transform of the residual at time t (trapezoid in omega).
cplx residual_at(const std::vector<cplx>& r, double omega0, double domega, double t) {
    const cplx step = std::exp(cplx{0.0, -domega * t});
    cplx ph = std::exp(cplx{0.0, -omega0 * t});
    cplx acc{};
    for (std::size_t j = 0; j < r.size(); ++j) {
        const double w = (j == 0 || j + 1 == r.size()) ? 0.5 : 1.0;
        acc += w * r[j] * ph;
        ph *= step;
        if ((j & 1023) == 1023) ph = std::exp(cplx{0.0, -(omega0 + domega * static_cast<double>(j + 1)) * t});
    }
    return acc * domega / (2.0 * kPi);
}

}  // namespace

TimeSeries to_time(const Spectrum& amp, const EmitterSpec& spec, cplx c0, double dt, std::size_t n) {
    const double lw = spec.gamma0;
    if (!(lw > 0.0)) throw InvalidArgument("to_time: the linewidth gamma0 must be positive");
    const double span = amp.domega * static_cast<double>(amp.size());
    if (span < 20.0 * lw) throw InvalidArgument("to_time: spectrum spans fewer than 20 linewidths");
    if (amp.domega > lw / 20.0) throw InvalidArgument("to_time: spectral spacing coarser than linewidth/20");
    const double period = 2.0 * kPi / amp.domega;
    const double t_max = dt * static_cast<double>(n > 0 ? n - 1 : 0);
    if (t_max >= 0.5 * period)
        throw WindowTooShort("to_time: requested times reach half the aliasing period " + std::to_string(0.5 * period));

    std::vector<cplx> r(amp.size());
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = amp.values[j] - lorentz(amp.omega(j), spec.omega_a, lw, c0);
    auto c_at = [&](double t) {
        const cplx free = c0 * std::exp(-(cplx{0.0, spec.omega_a} + 0.5 * lw) * t);
        return free + residual_at(r, amp.omega0, amp.domega, t);
    };
    const double edge = std::abs(c_at(0.5 * period));
    if (edge > 1e-3)
        throw WindowTooShort("to_time: |C| = " + std::to_string(edge) + " at half the aliasing period");

    TimeSeries ts;
    ts.dt = dt;
    ts.units = "1";
    ts.values.resize(n);
    const std::ptrdiff_t ni = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t m = 0; m < ni; ++m) ts.values[m] = c_at(dt * static_cast<double>(m));
    return ts;
}

SpectralResult spectral_route(const Slab1D& s, const EmitterSpec& spec, cplx c0, double dt, std::size_t nt,
                              std::size_t n_omega, double half_span, const FdfdOptions& opt) {
    SpectralResult res;
    const Spectrum band = make_band(spec.omega_a, spec.gamma0, n_omega, half_span);
    res.im_g = im_g_spectrum(s, band, opt);
    Slab1D vac;
    vac.x_a = s.x_a;
    res.im_g_vacuum = im_g_spectrum(vac, band, opt);
    res.calibration = kernel_calibration_1d(spec.omega_a, opt);
    const Spectrum k_tot = kernel_spectrum(res.im_g, spec, res.calibration);
    const Spectrum k_vac = kernel_spectrum(res.im_g_vacuum, spec, res.calibration);
    // Environment part plus the Markovian vacuum rate (a constant maps to
    // gamma0/2 under the causal transform).
    res.kernel = k_tot;
    for (std::size_t j = 0; j < res.kernel.size(); ++j)
        res.kernel.values[j] = k_tot.values[j] - k_vac.values[j] + spec.gamma0;
    res.amplitude = amplitude_spectrum(res.kernel, spec, c0);
    res.ct = to_time(res.amplitude, spec, c0, dt, nt);
    return res;
}

}  // namespace fdtdqe
