#pragma once

#include <vector>

#include "fdtdqe/media.hpp"
#include "fdtdqe/units.hpp"

namespace fdtdqe {

enum class End { Open, Pec };

struct Layer {
    double start = 0, end = 0;  // meters, start < end
    LorentzDrudeParams medium;
};

// Layered 1D geometry along x. Space between layers is vacuum. A PEC end
// puts a wall at x_left / x_right; an open end lets vacuum extend to
// infinity beyond the outermost layer.
struct Slab1D {
    std::vector<Layer> layers;
    double x_a = 0.0;
    End left = End::Open, right = End::Open;
    double x_left = 0.0, x_right = 0.0;

    // Throws InvalidArgument for unordered or overlapping layers, x_a inside a
    // layer or outside the walls, or layers crossing a wall.
    void validate() const;
    // Relative permittivity at x; throws OutOfBand when a layer's model is
    // not declared valid at omega.
    cplx eps_at(double x, double omega) const;
    // Interfaces, walls and x_a, sorted and deduplicated.
    std::vector<double> breakpoints() const;
};

// (E, dE/dx) pair propagated by transfer matrices.
struct Wave {
    cplx e, de;
};

// Propagates through the piecewise-constant profile from x0 to x1 (either
// direction) for -E'' - k^2 eps E = 0.
Wave propagate(const Slab1D& s, double omega, Wave w, double x0, double x1);

// Solution obeying the left (right) end condition, evaluated at x: outgoing
// e^{-ikx} (e^{+ikx}) beyond an open end, E = 0 with E' = 1 on a wall.
Wave left_solution(const Slab1D& s, double omega, double x);
Wave right_solution(const Slab1D& s, double omega, double x);

// Green's function of -g'' - k^2 eps g = delta(x - xp) from transfer
// matrices. Vacuum: g = i e^{ik|x - xp|} / (2k).
cplx green_tmm(const Slab1D& s, double omega, double x, double xp);

// Field at x for the incident wave e^{ikx} from the left (e^{-ikx} from the
// right) open side; zero if that side is a wall.
cplx incident_left(const Slab1D& s, double omega, double x);
cplx incident_right(const Slab1D& s, double omega, double x);

struct FdfdOptions {
    int points_per_wavelength = 400;  // relative to the in-medium wavelength
    double padding_wavelengths = 0.25;
};

// Nonuniform three-point finite-difference discretization of
// -g'' - k^2 eps g = delta with nodes on every breakpoint and exact discrete
// outgoing closures on open ends.
class Fdfd1D {
  public:
    Fdfd1D(const Slab1D& s, double omega, const FdfdOptions& opt = {});

    const std::vector<double>& nodes() const { return x_; }
    // Dual-cell length of each node.
    const std::vector<double>& weights() const { return w_; }
    // Dual-cell averaged permittivity at each node.
    const std::vector<cplx>& eps() const { return eps_; }
    // Dual-cell volume of lossy material around a node (Im eps > 0 portion)
    // and the matching average Im eps.
    const std::vector<double>& lossy_weights() const { return lossy_w_; }
    const std::vector<double>& lossy_im_eps() const { return lossy_im_; }
    int node_of(double x) const;

    // Field at all nodes for a unit source at node j.
    std::vector<cplx> solve(int j) const;
    double omega() const { return omega_; }

  private:
    double omega_;
    std::vector<double> x_, w_, lossy_w_, lossy_im_;
    std::vector<cplx> eps_;
    std::vector<cplx> lower_, diag_, upper_;
    bool pec_left_, pec_right_;
};

}  // namespace fdtdqe
