#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "fdtdqe/grid.hpp"

namespace fdtdqe {

// Complex field samples of one Yee lattice. E, H and D are dense
// (structure-of-arrays per component, see Layout); the Drude and Lorentz
// polarizations are stored only at dispersive E samples, in the order given
// by the MediumMap sample lists. In 1D only Ez/Dz/Hy are allocated.
struct FieldState {
    std::array<std::vector<cplx>, 3> e, h, d;
    std::array<std::vector<cplx>, 3> pd, pd_prev, pl, pl_prev;
    std::int64_t step = 0;

    FieldState() = default;
    explicit FieldState(const YeeGrid& g);

    void resize_polarization(int comp, std::size_t count);
    void clear();
};

}  // namespace fdtdqe
