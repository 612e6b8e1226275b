#pragma once

#include <vector>

#include "fdtdqe/scene1d.hpp"

namespace fdtdqe {

// Boundary-assisted mode: total field at x_a for a unit plane wave entering
// through one open side.
struct BaMode {
    int side = 0;  // 0: incident from the left, 1: from the right
    cplx e_at_xa;
};

// Medium-assisted mode: field at x_a radiated by a noise source at x in a
// lossy layer, already scaled by k^2 sqrt(Im chi / pi).
struct MaMode {
    double x = 0.0;
    double weight = 0.0;  // quadrature length around x
    double im_chi = 0.0;
    cplx e_at_xa;
};

struct ModeSet {
    double omega = 0.0;
    std::vector<BaMode> ba;
    std::vector<MaMode> ma;
};

// One mode per open side, by transfer matrices. A PEC side contributes none.
ModeSet ba_modes(const Slab1D& s, double omega);

// Quadrature over every lossy node of the finite-difference mesh. One solve
// with the source at x_a gives all source points by reciprocity. Needs at
// least 20 points per in-medium wavelength. No lossy layer gives an empty set.
ModeSet ma_modes(const Slab1D& s, double omega, int points_per_wavelength = 400);

// BA weight k^2 * Delta with Delta = 1 / (4 pi k), fixed by vacuum.
double ba_weight(double omega);

struct ImGParts {
    double ba = 0.0, ma = 0.0;
    double total() const { return ba + ma; }
};

// Im g(x_a, x_a) = (pi / A) [sum_BA k^2 Delta |E|^2 + sum_MA dV |E|^2],
// A = omega^2. Throws ContractViolation when a set was built at another omega.
ImGParts reconstruct_parts(const ModeSet& ba, const ModeSet& ma, double omega);
double reconstruct_im_g(const ModeSet& ba, const ModeSet& ma, double omega);

struct CompletenessRow {
    double omega = 0.0;
    double direct = 0.0;
    double ba_only = 0.0;
    double ba_ma = 0.0;
    double rel_error = 0.0;  // |ba_ma - direct| / direct
};

// Direct and reconstructed Im g at each omega (parallel, ordered as given).
std::vector<CompletenessRow> completeness_scan(const Slab1D& s, const std::vector<double>& omegas,
                                               int points_per_wavelength = 400);

}  // namespace fdtdqe
