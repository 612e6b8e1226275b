#pragma once

#include <array>
#include <vector>

#include "fdtdqe/field_state.hpp"
#include "fdtdqe/grid.hpp"

namespace fdtdqe {

// Faces are numbered 2*axis + side: 0 = -x, 1 = +x, 2 = -y, 3 = +y, 4 = -z, 5 = +z.
enum class FaceKind { Pec, Pml };

struct CpmlSpec {
    int thickness = 10;
    int order = 3;
    double sigma_scale = 1.0;
    double kappa_max = 1.0;
    double alpha_max = 0.0;

    // thickness 0 is accepted (no-op layer); otherwise thickness >= 4.
    void validate() const;
};

struct FaceSpec {
    FaceKind kind = FaceKind::Pml;
    CpmlSpec pml;
};

using BoundarySpec = std::array<FaceSpec, 6>;

BoundarySpec all_pml(const CpmlSpec& spec = {});
BoundarySpec all_pec();

// Stretched-coordinate tables for one axis, sampled at integer (E-node) and
// half-integer (H-node) positions, and the slab-local convolution memories.
struct CpmlAxis {
    bool active = false;
    std::vector<double> inv_kappa_e, b_e, c_e;  // size n + 1
    std::vector<double> inv_kappa_h, b_h, c_h;  // size n + 1, entry n unused
    std::vector<int> slots_e, slots_h;          // indices along the axis that carry memory
    std::vector<int> slot_of_e, slot_of_h;      // index -> slot or -1
};

class Cpml {
  public:
    Cpml() = default;
    // Tables for the faces whose kind is Pml. Throws InvalidArgument when a
    // layer pair does not fit in its axis.
    static Cpml make(const BoundarySpec& faces, const YeeGrid& g);
    static Cpml make(const CpmlSpec& spec, const YeeGrid& g, const std::array<bool, 6>& faces);

    const CpmlAxis& axis(int a) const { return axes_[a]; }
    bool any() const { return axes_[0].active || axes_[1].active || axes_[2].active; }
    // Memory arrays: [component][term]; term 0 is the derivative along
    // (c+1)%3, term 1 along (c+2)%3.
    std::array<std::array<std::vector<cplx>, 2>, 3> psi_h, psi_d;
    void reset();
    // Thickness in cells of the layer on a face (0 when absent).
    int thickness(int face) const { return thickness_[face]; }

  private:
    std::array<CpmlAxis, 3> axes_;
    std::array<int, 6> thickness_{};
};

// Forces tangential E (and D) on the listed faces to zero.
void apply_pec(FieldState& s, const YeeGrid& g, const std::array<bool, 6>& faces);

}  // namespace fdtdqe
