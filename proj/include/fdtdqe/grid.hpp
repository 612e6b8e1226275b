#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "fdtdqe/units.hpp"

namespace fdtdqe {

enum class Dimensionality { One = 1, Three = 3 };

// Field component identifiers. Yee offsets (in cell units):
//   Ex (i+1/2, j, k)      Hx (i, j+1/2, k+1/2)
//   Ey (i, j+1/2, k)      Hy (i+1/2, j, k+1/2)
//   Ez (i, j, k+1/2)      Hz (i+1/2, j+1/2, k)
// In 1D only Ez (at x = i) and Hy (at x = i+1/2) exist.
enum class Axis { X = 0, Y = 1, Z = 2 };

struct Vec3 {
    double x = 0, y = 0, z = 0;
    double operator[](int a) const { return a == 0 ? x : (a == 1 ? y : z); }
    double& operator[](int a) { return a == 0 ? x : (a == 1 ? y : z); }
    double norm() const;
};

struct Index3 {
    int i = 0, j = 0, k = 0;
    int operator[](int a) const { return a == 0 ? i : (a == 1 ? j : k); }
    int& operator[](int a) { return a == 0 ? i : (a == 1 ? j : k); }
    bool operator==(const Index3&) const = default;
};

// Uniform cubic Yee lattice with its time step.
struct YeeGrid {
    int nx = 1, ny = 1, nz = 1;
    double dx = 1.0;
    double dt = 0.5;
    Dimensionality dim = Dimensionality::One;

    // Validates every invariant (positive sizes, 1D collapse, Courant bound).
    static YeeGrid make(int nx, int ny, int nz, double dx, double dt, Dimensionality dim);

    bool is_1d() const { return dim == Dimensionality::One; }
    int dimensionality() const { return static_cast<int>(dim); }
    int cells(int axis) const { return axis == 0 ? nx : (axis == 1 ? ny : nz); }
    // Volume a point source is spread over: dx^3 in 3D, dx (a sheet) in 1D.
    double cell_measure() const { return is_1d() ? dx : dx * dx * dx; }
};

// safety * dx / sqrt(D). Throws InvalidArgument on dx <= 0 or safety outside (0,1].
double cfl_dt(double grid_spacing, int dimensionality, double safety);

// Flat storage layout shared by all components: node extents (n+1) per active
// axis, 1 along collapsed axes. k runs fastest.
struct Layout {
    int nxp = 1, nyp = 1, nzp = 1;

    explicit Layout(const YeeGrid& g)
        : nxp(g.nx + 1), nyp(g.is_1d() ? 1 : g.ny + 1), nzp(g.is_1d() ? 1 : g.nz + 1) {}
    Layout() = default;

    std::size_t size() const {
        return static_cast<std::size_t>(nxp) * static_cast<std::size_t>(nyp) *
               static_cast<std::size_t>(nzp);
    }
    std::size_t stride(int axis) const {
        if (axis == 0) return static_cast<std::size_t>(nyp) * static_cast<std::size_t>(nzp);
        if (axis == 1) return static_cast<std::size_t>(nzp);
        return 1;
    }
    std::size_t idx(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * static_cast<std::size_t>(nyp) +
                static_cast<std::size_t>(j)) *
                   static_cast<std::size_t>(nzp) +
               static_cast<std::size_t>(k);
    }
    std::size_t idx(const Index3& p) const { return idx(p.i, p.j, p.k); }
    Index3 index3(std::size_t q) const {
        const std::size_t nz = static_cast<std::size_t>(nzp), ny = static_cast<std::size_t>(nyp);
        return {static_cast<int>(q / (ny * nz)), static_cast<int>((q / nz) % ny), static_cast<int>(q % nz)};
    }
};

// Range of valid indices [lo, hi) of an electric (field == 'E') or magnetic
// component along each axis.
struct ComponentRange {
    Index3 lo, hi;
    bool contains(const Index3& p) const {
        for (int a = 0; a < 3; ++a)
            if (p[a] < lo[a] || p[a] >= hi[a]) return false;
        return true;
    }
};
ComponentRange e_range(const YeeGrid& g, int comp);
ComponentRange h_range(const YeeGrid& g, int comp);

// Position (cell units) of an E or H component sample.
Vec3 e_position(int comp, const Index3& p);
Vec3 h_position(int comp, const Index3& p);

std::string axis_name(int axis);

}  // namespace fdtdqe
