#include "fdtdqe/grid.hpp"

#include <cmath>
#include <sstream>

#include "fdtdqe/errors.hpp"

namespace fdtdqe {

double Vec3::norm() const { return std::sqrt(x * x + y * y + z * z); }

double cfl_dt(double grid_spacing, int dimensionality, double safety) {
    if (!(grid_spacing > 0.0)) throw InvalidArgument("cfl_dt: grid spacing must be positive");
    if (!(safety > 0.0 && safety <= 1.0))
        throw InvalidArgument("cfl_dt: safety factor must lie in (0, 1]");
    if (dimensionality != 1 && dimensionality != 3)
        throw InvalidArgument("cfl_dt: dimensionality must be 1 or 3");
    return safety * grid_spacing / std::sqrt(static_cast<double>(dimensionality));
}

YeeGrid YeeGrid::make(int nx, int ny, int nz, double dx, double dt, Dimensionality dim) {
    std::ostringstream err;
    if (nx < 1 || ny < 1 || nz < 1) err << "all cell counts must be >= 1; ";
    if (!(dx > 0.0)) err << "dx must be positive; ";
    if (!(dt > 0.0)) err << "dt must be positive; ";
    if (dim == Dimensionality::One && (ny != 1 || nz != 1)) err << "1D grids require ny = nz = 1; ";
    if (dx > 0.0 && dt > 0.0) {
        const double limit = dx / std::sqrt(static_cast<double>(static_cast<int>(dim)));
        if (dt >= limit) err << "dt violates the Courant bound (dt < dx/sqrt(D)); ";
    }
    if (!err.str().empty()) throw InvalidArgument("YeeGrid: " + err.str());
    return YeeGrid{nx, ny, nz, dx, dt, dim};
}

ComponentRange e_range(const YeeGrid& g, int comp) {
    if (g.is_1d()) {
        if (comp != 2) return {{0, 0, 0}, {0, 0, 0}};
        return {{0, 0, 0}, {g.nx + 1, 1, 1}};
    }
    ComponentRange r{{0, 0, 0}, {g.nx + 1, g.ny + 1, g.nz + 1}};
    r.hi[comp] -= 1;  // staggered along its own axis
    return r;
}

ComponentRange h_range(const YeeGrid& g, int comp) {
    if (g.is_1d()) {
        if (comp != 1) return {{0, 0, 0}, {0, 0, 0}};
        return {{0, 0, 0}, {g.nx, 1, 1}};
    }
    ComponentRange r{{0, 0, 0}, {g.nx, g.ny, g.nz}};
    r.hi[comp] += 1;  // integer along its own axis, staggered along the others
    return r;
}

Vec3 e_position(int comp, const Index3& p) {
    Vec3 v{double(p.i), double(p.j), double(p.k)};
    v[comp] += 0.5;
    // In 1D the z-offset of Ez is irrelevant; callers only use x.
    return v;
}

Vec3 h_position(int comp, const Index3& p) {
    Vec3 v{p.i + 0.5, p.j + 0.5, p.k + 0.5};
    v[comp] -= 0.5;
    return v;
}

std::string axis_name(int axis) { return axis == 0 ? "x" : (axis == 1 ? "y" : "z"); }

}  // namespace fdtdqe
