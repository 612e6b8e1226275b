#pragma once

#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fdtdqe/field_state.hpp"
#include "fdtdqe/grid.hpp"

namespace fdtdqe {

// Single Drude + single Lorentz pole medium, e^{-i omega t} convention.
// Frequencies and rates in rad/m (natural units).
struct LorentzDrudeParams {
    double eps_inf = 1.0;
    double omega_p_drude = 0.0;
    double gamma_drude = 0.0;
    double omega_p_lorentz = 0.0;
    double omega_0_lorentz = 0.0;
    double gamma_lorentz = 0.0;
    // Band (rad/m) over which the model is declared valid.
    double band_lo = 0.0;
    double band_hi = std::numeric_limits<double>::infinity();

    bool in_band(double omega) const { return omega >= band_lo && omega <= band_hi; }
    // Throws InvalidArgument when eps_inf < 1 or any rate is negative.
    void validate() const;
    bool is_vacuum() const;
    bool is_dispersive() const { return omega_p_drude != 0.0 || omega_p_lorentz != 0.0; }
};

// The metal used for every mirror scenario (eps(600 nm) ~ -9.95 + 0.38i).
LorentzDrudeParams mirror_metal();

// eps(w) = eps_inf - wpD^2/(w^2 + i gD w) + wpL^2/(w0L^2 - w^2 - i gL w).
cplx permittivity(const LorentzDrudeParams& p, double omega);

// ADE recursions, exactly as discretized in time (eps0 = 1).
cplx advance_p_lorentz(cplx pl_n, cplx pl_prev, cplx e_n, const LorentzDrudeParams& p, double dt);
cplx advance_p_drude(cplx pd_n, cplx pd_prev, cplx e_n, const LorentzDrudeParams& p, double dt);

// E = (D - P_D - P_L) / (eps0 eps_inf).
cplx e_from_d(cplx d, cplx pd, cplx pl, double eps_inf);

// Precomputed recursion coefficients for one medium at a fixed dt:
//   P^{n+1} = c1 P^n + c2 P^{n-1} + c3 E^n
struct AdeCoefficients {
    double l1 = 0, l2 = 0, l3 = 0;
    double d1 = 0, d2 = 0, d3 = 0;
    double inv_eps_inf = 1.0;

    static AdeCoefficients make(const LorentzDrudeParams& p, double dt);
};

// --- geometry --------------------------------------------------------------
// All coordinates in meters, origin at E node (0,0,0).

struct BoxShape {
    Vec3 lo, hi;
};
struct SlabShape {
    int axis = 0;
    double from = 0, to = 0;
};
struct SphereShape {
    Vec3 center;
    double radius = 0;
};
// Cylindrical shell sector: points whose distance from the axis line lies in
// [r_inner, r_outer], within +-half_angle of the direction angle measured in
// the plane normal to the axis, and within [lo, hi] along the axis.
struct CylinderSectorShape {
    int axis = 2;
    Vec3 center;
    double r_inner = 0, r_outer = 0;
    double direction = 0;   // radians, in-plane angle of the sector bisector
    double half_angle = 0;  // radians
    double lo = -1e300, hi = 1e300;
};

using Shape = std::variant<BoxShape, SlabShape, SphereShape, CylinderSectorShape>;

bool shape_contains(const Shape& s, const Vec3& pos);

struct Placement {
    Shape shape;
    int medium = 0;  // index into the medium table
};

struct DispersiveSample {
    std::size_t index;
    int medium;
};

// Per-E-component medium assignment. A sample belongs to the last placement
// whose shape contains its physical position; everything else is vacuum.
class MediumMap {
  public:
    MediumMap() = default;
    static MediumMap vacuum(const YeeGrid& g);
    static MediumMap build(const YeeGrid& g, std::vector<LorentzDrudeParams> media,
                           const std::vector<Placement>& placements);

    const std::vector<DispersiveSample>& samples(int comp) const { return samples_[comp]; }
    const std::vector<LorentzDrudeParams>& media() const { return media_; }
    const std::vector<AdeCoefficients>& coefficients() const { return coeffs_; }
    bool empty() const;
    // Medium index at an E sample, or -1 for vacuum.
    int medium_at(int comp, std::size_t index) const;

    // Rebuilds the ADE coefficient table for a new time step.
    void prepare(double dt);
    // Sizes the polarization arrays of a state to match the sample lists.
    void attach(FieldState& s) const;

  private:
    std::vector<LorentzDrudeParams> media_;
    std::vector<AdeCoefficients> coeffs_;
    std::array<std::vector<DispersiveSample>, 3> samples_;
};

// P^{n+1} from (P^n, P^{n-1}, E^n) at every medium sample of the state.
void advance_polarization(FieldState& s, const MediumMap& m);
// E = D everywhere, then the constitutive recovery at medium samples.
void recover_e(FieldState& s, const MediumMap& m);

}  // namespace fdtdqe
