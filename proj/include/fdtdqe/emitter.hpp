#pragma once

#include <cstdint>
#include <vector>

#include "fdtdqe/engine.hpp"
#include "fdtdqe/grid.hpp"

namespace fdtdqe {

enum class EmitterMode { Complex, Real };

// How C^1 is obtained from C^0. Matched multiplies by the physical root of
// the free leapfrog recursion, so the alternating parasitic root starts at
// round-off. The recursion damps the physical root but amplifies the
// parasitic one by e^{G0 t / 2}, so this matters for runs of many lifetimes.
// Exact uses the free Wigner-Weisskopf evolution over one step; Euler is the
// first-order step 1 - (i w_a + G0/2) dt.
enum class Bootstrap { Matched, Exact, Euler };

struct EmitterSpec {
    double omega_a = 1.0;
    Vec3 dipole{0.0, 0.0, 1.0};  // real orientation times magnitude
    Vec3 position;               // meters
    double gamma0 = 0.0;         // Markovian vacuum rate used by the amplitude update
    EmitterMode mode = EmitterMode::Complex;
    Bootstrap bootstrap = Bootstrap::Matched;
};

// Vacuum rate of a dipole |d| at w in the given dimensionality:
// w^3 |d|^2 / (3 pi) in 3D, w |d|^2 for a current sheet in 1D.
double free_rate(double omega, double dipole_norm, int dimensionality);
// Inverse of free_rate for the dipole magnitude.
double dipole_for_rate(double omega, double gamma0, int dimensionality);

// One E-component sample the dipole couples to, weighted by d_c.
struct DipoleSample {
    int comp;
    Index3 cell;
    double weight;
};

// Each non-zero dipole component snaps to its own nearest E_c sample. Throws
// InvalidArgument for a zero dipole, a non-z dipole in 1D, or a position
// outside the grid.
std::vector<DipoleSample> snap_dipole(const EmitterSpec& spec, const YeeGrid& g);

struct EmitterState {
    cplx c_prev{1.0, 0.0};
    cplx c_now{1.0, 0.0};
    std::int64_t step = 0;
    std::vector<cplx> c_series;       // C^n, n = 0, 1, ...
    std::vector<cplx> escatt_series;  // interaction term at the same steps
};

// -d . E at the dipole samples of the main grid (hbar = 1).
cplx sample_scatt(const FieldState& main, const YeeGrid& g, const std::vector<DipoleSample>& samples);

// Advances (C^{n-1}, C^n) to (C^n, C^{n+1}) with the central-difference
// recursion. The first call (step 0) performs the bootstrap instead.
// Returns C^{n+1}.
cplx update_amplitude(EmitterState& s, const EmitterSpec& spec, cplx escatt, double dt);

// J^{n+1/2} = d (C^{n+1} - C^n)/dt per cell measure, on each dipole sample.
std::vector<CurrentSample> tls_current(cplx c_next, cplx c_now, const std::vector<DipoleSample>& samples,
                                       const YeeGrid& g);
// J = 2 w_a Im[(C^{n+1} + C^n)/2] d per cell measure. Throws
// ContractViolation unless spec.mode is Real.
std::vector<CurrentSample> tls_current_real(cplx c_next, cplx c_now, const EmitterSpec& spec,
                                            const std::vector<DipoleSample>& samples, const YeeGrid& g);

}  // namespace fdtdqe
