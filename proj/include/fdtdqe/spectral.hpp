#pragma once

#include <string>
#include <vector>

#include "fdtdqe/emitter.hpp"
#include "fdtdqe/scene1d.hpp"

namespace fdtdqe {

enum class Quantity { ImG, Kernel, Amplitude };

// Uniformly sampled complex function of omega (rad/m).
struct Spectrum {
    double omega0 = 0.0;
    double domega = 1.0;
    std::vector<cplx> values;
    Quantity tag = Quantity::ImG;
    std::string units;

    std::size_t size() const { return values.size(); }
    double omega(std::size_t i) const { return omega0 + domega * static_cast<double>(i); }
};

// Uniformly sampled complex function of time (natural units, meters).
struct TimeSeries {
    double t0 = 0.0;
    double dt = 1.0;
    std::vector<cplx> values;
    std::string units;

    std::size_t size() const { return values.size(); }
    double time(std::size_t i) const { return t0 + dt * static_cast<double>(i); }
};

// n samples spanning omega_a +- half_span linewidths, shifted up so that every
// sample is positive.
Spectrum make_band(double omega_a, double linewidth, std::size_t n = 1u << 14, double half_span = 200.0);

// Im g(x_a, x_a; omega) of the layered scene from the finite-difference solver.
double greens_im_1d(const Slab1D& s, double omega, const FdfdOptions& opt = {});
// Same on every sample of a band (tag ImG).
Spectrum im_g_spectrum(const Slab1D& s, const Spectrum& band, const FdfdOptions& opt = {});

// 1/(2 omega Im g_vac(omega)) for the solver's own vacuum: rescales the 1D
// kernel so the empty scene reproduces the configured rate exactly.
double kernel_calibration_1d(double omega_a, const FdfdOptions& opt = {});

// K(omega) = 2 kappa omega^2 |d|^2 Im g. Throws InvalidArgument when the band
// does not cover omega_a +- 10 gamma0.
Spectrum kernel_spectrum(const Spectrum& im_g, const EmitterSpec& spec, double calibration = 1.0);

// One-sided (causal) transform of a kernel given on the full line:
// int_0^inf K(tau) e^{i omega tau} d tau, with K(tau) the inverse transform of
// the samples. Periodic on the band; a constant K maps to K/2.
Spectrum causal_part(const Spectrum& kernel);

// C(omega) = C0 / (-i omega + i omega_a + K_c(omega)), K_c the causal part of
// the kernel. Throws DegeneratePole when the denominator drops below 1e-12.
Spectrum amplitude_spectrum(const Spectrum& kernel, const EmitterSpec& spec, cplx c0);

// C(t) on t = 0, dt, ..., (n-1) dt by inverse transform (e^{-i omega t}). The
// free Lorentzian at (omega_a, gamma0) is subtracted in frequency and added
// back in closed form. Throws InvalidArgument when the band spans fewer than
// 20 linewidths or is sampled coarser than linewidth/20, WindowTooShort when
// the time range reaches half the aliasing period or |C| there exceeds 1e-3.
TimeSeries to_time(const Spectrum& amp, const EmitterSpec& spec, cplx c0, double dt, std::size_t n);

struct SpectralResult {
    Spectrum im_g, im_g_vacuum, kernel, amplitude;
    TimeSeries ct;
    double calibration = 1.0;
};

// Full frequency-domain route for a 1D scene: vacuum rate kept Markovian,
// environment-induced kernel transformed causally.
SpectralResult spectral_route(const Slab1D& s, const EmitterSpec& spec, cplx c0, double dt, std::size_t nt,
                              std::size_t n_omega = 1u << 14, double half_span = 200.0,
                              const FdfdOptions& opt = {});

}  // namespace fdtdqe
