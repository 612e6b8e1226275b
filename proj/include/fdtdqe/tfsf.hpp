#pragma once

#include <cstdint>
#include <vector>

#include "fdtdqe/field_state.hpp"
#include "fdtdqe/grid.hpp"

namespace fdtdqe {

// Closed box of cell indices. Samples whose Yee position lies in
// [lo, hi] on every active axis form the scattered-field region; the rest of
// the main grid carries the total field.
struct TfsfBox {
    Index3 lo, hi;
};

// One equivalent surface-current contribution: target += value at a main-grid
// sample. field is 'H' (magnetic current, consumed by the Faraday update) or
// 'D' (electric current, consumed by the Ampere update).
struct SurfaceCurrent {
    char field = 'H';
    int comp = 0;
    std::size_t index = 0;
    cplx value;
};

struct SurfaceCurrents {
    std::int64_t step = 0;
    char field = 'H';
    std::vector<SurfaceCurrent> samples;
};

class TfsfSurface {
  public:
    TfsfSurface() = default;
    // Throws InvalidArgument when the box is empty or does not sit at least
    // `margin` cells inside the grid on every active axis.
    static TfsfSurface make(const YeeGrid& g, const TfsfBox& box, int margin = 2);

    const TfsfBox& box() const { return box_; }
    bool contains(const Vec3& pos) const;
    bool contains_e(int comp, const Index3& p) const { return contains(e_position(comp, p)); }

    // M_s = -n x E_aux, from aux E^n, for the H^{n+1/2} update of main.
    SurfaceCurrents magnetic_currents(const FieldState& aux) const;
    // J_s = n x H_aux, from aux H^{n+1/2}, for the D^{n+1} update of main.
    SurfaceCurrents electric_currents(const FieldState& aux) const;

    std::size_t term_count() const { return h_terms_.size() + d_terms_.size(); }

  private:
    struct Term {
        int comp;
        std::size_t index;
        int src_comp;
        std::size_t src_index;
        double coef;
    };
    SurfaceCurrents collect(const FieldState& aux, const std::vector<Term>& terms, char field, bool from_e) const;

    TfsfBox box_;
    bool one_d_ = false;
    std::vector<Term> h_terms_, d_terms_;
};

// Adds the currents to the main state. Magnetic currents must be injected
// right after the main Faraday update of step n (main.step == currents.step),
// electric currents right after the main Ampere update of the same step.
// Throws ContractViolation on a step mismatch.
void inject(FieldState& main, const SurfaceCurrents& currents);

}  // namespace fdtdqe
