#pragma once

#include <array>
#include <vector>

#include "fdtdqe/boundaries.hpp"
#include "fdtdqe/field_state.hpp"
#include "fdtdqe/grid.hpp"
#include "fdtdqe/media.hpp"

namespace fdtdqe {

// Current density sample registered at an E-component Yee location.
struct CurrentSample {
    int comp = 2;
    Index3 cell;
    cplx value;
};

// Faraday half step: H^{n-1/2} -> H^{n+1/2}. The optional CPML stretches the
// derivatives and carries the convolution memories.
void advance_h(FieldState& s, const YeeGrid& g, Cpml* pml = nullptr);

// Ampere half step: D^n -> D^{n+1} = D^n + dt (curl H - J). Tangential samples
// on the outer walls are never touched. Throws InvalidArgument for a current
// outside the E range of its component.
void advance_d(FieldState& s, const YeeGrid& g, const std::vector<CurrentSample>& j = {},
               Cpml* pml = nullptr);

// 1/2 sum (|E^n|^2 + Re H^{n-1/2} . conj H^{n+1/2}) dV. The state must hold
// E^n and H^{n+1/2}; h_prev holds H^{n-1/2}. Conserved exactly by the lossless
// leapfrog in a closed lattice.
double discrete_energy(const FieldState& s, const YeeGrid& g,
                       const std::array<std::vector<cplx>, 3>& h_prev);

// Sets the OpenMP worker count (no-op without OpenMP). n <= 0 restores the
// FDTDQE_THREADS environment value, or the runtime default.
void set_threads(int n);

// One Yee lattice with its media and terminations.
class Solver {
  public:
    Solver(const YeeGrid& g, MediumMap media, const BoundarySpec& bounds);

    const YeeGrid& grid() const { return grid_; }
    const MediumMap& media() const { return media_; }
    const BoundarySpec& bounds() const { return bounds_; }
    FieldState& state() { return state_; }
    const FieldState& state() const { return state_; }
    Cpml& pml() { return pml_; }

    void advance_h();
    void advance_d(const std::vector<CurrentSample>& j = {});
    // P^{n+1} from E^n, then E^{n+1} from D^{n+1}; walls re-zeroed; step++.
    void update_e();
    void step(const std::vector<CurrentSample>& j = {});

    void reset();

  private:
    YeeGrid grid_;
    MediumMap media_;
    BoundarySpec bounds_;
    Cpml pml_;
    FieldState state_;
    std::array<bool, 6> pec_faces_{};
};

}  // namespace fdtdqe
