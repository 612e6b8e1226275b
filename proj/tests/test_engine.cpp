#include <doctest.h>

#include <cmath>

#include "fdtdqe/engine.hpp"
#include "fdtdqe/errors.hpp"

using namespace fdtdqe;

namespace {

YeeGrid grid1d(int n, double safety = 0.5) { return YeeGrid::make(n, 1, 1, 1.0, cfl_dt(1.0, 1, safety), Dimensionality::One); }
YeeGrid grid3d(int n, double safety = 0.5) { return YeeGrid::make(n, n, n, 1.0, cfl_dt(1.0, 3, safety), Dimensionality::Three); }

// Seeds every interior E sample of a 3D state with a smooth complex bump.
void seed_bump(FieldState& s, const YeeGrid& g, Index3 center, cplx amp) {
    const Layout lay(g);
    for (int c = 0; c < 3; ++c) {
        const auto r = e_range(g, c);
        for (int i = r.lo.i + 1; i < r.hi.i - 1; ++i)
            for (int j = r.lo.j + 1; j < r.hi.j - 1; ++j)
                for (int k = r.lo.k + 1; k < r.hi.k - 1; ++k) {
                    const double rr = std::pow(i - center.i, 2) + std::pow(j - center.j, 2) + std::pow(k - center.k, 2);
                    const cplx v = amp * std::exp(-rr / 4.0) * double(c + 1);
                    s.e[c][lay.idx(i, j, k)] = v;
                    s.d[c][lay.idx(i, j, k)] = v;
                }
    }
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double m = 0;
    for (std::size_t q = 0; q < a.size(); ++q) m = std::max(m, std::abs(a[q] - b[q]));
    return m;
}

}  // namespace

TEST_CASE("cfl_dt") {
    CHECK(cfl_dt(1.0, 1, 1.0) == doctest::Approx(1.0));
    CHECK(cfl_dt(1.0, 3, 1.0) == doctest::Approx(0.5773502691896258));
    const double dx = 6.67e-9;
    CHECK(cfl_dt(dx, 3, 0.99) == doctest::Approx(0.99 * dx / std::sqrt(3.0)));
    CHECK(cfl_dt(dx, 3, 0.99) == doctest::Approx(3.813e-9).epsilon(1e-3));
    CHECK_THROWS_AS(cfl_dt(0.0, 1, 0.5), InvalidArgument);
    CHECK_THROWS_AS(cfl_dt(1.0, 1, 1.5), InvalidArgument);
    CHECK_THROWS_AS(cfl_dt(1.0, 1, 0.0), InvalidArgument);
}

TEST_CASE("grid invariants") {
    CHECK_THROWS_AS(YeeGrid::make(10, 2, 1, 1.0, 0.5, Dimensionality::One), InvalidArgument);
    CHECK_THROWS_AS(YeeGrid::make(10, 10, 10, 1.0, 0.6, Dimensionality::Three), InvalidArgument);
    CHECK_THROWS_AS(YeeGrid::make(0, 1, 1, 1.0, 0.5, Dimensionality::One), InvalidArgument);
    CHECK_NOTHROW(YeeGrid::make(10, 10, 10, 1.0, 0.5, Dimensionality::Three));
}

TEST_CASE("advance_h: zero stays zero and a spike gives the two-point stencil") {
    const auto g = grid1d(20);
    FieldState s(g);
    advance_h(s, g);
    for (auto v : s.h[1]) CHECK(v == cplx{});
    s.e[2][10] = {1.0, 2.0};
    advance_h(s, g);
    const cplx expect = g.dt / g.dx * cplx{1.0, 2.0};
    CHECK(std::abs(s.h[1][9] - expect) < 1e-15);
    CHECK(std::abs(s.h[1][10] + expect) < 1e-15);
    for (int i = 0; i < 20; ++i)
        if (i != 9 && i != 10) CHECK(s.h[1][i] == cplx{});
}

TEST_CASE("advance_d: current sign, locality and range check") {
    const auto g = grid1d(20);
    FieldState s(g);
    advance_d(s, g);
    for (auto v : s.d[2]) CHECK(v == cplx{});
    advance_d(s, g, {CurrentSample{2, {7, 0, 0}, {1.0, 0.0}}});
    for (int i = 0; i <= 20; ++i) CHECK(s.d[2][i] == (i == 7 ? cplx{-g.dt, 0.0} : cplx{}));
    CHECK_THROWS_AS(advance_d(s, g, {CurrentSample{2, {21, 0, 0}, {1.0, 0.0}}}), InvalidArgument);
    CHECK_THROWS_AS(advance_d(s, g, {CurrentSample{0, {3, 0, 0}, {1.0, 0.0}}}), InvalidArgument);

    const auto g3 = grid3d(8);
    FieldState s3(g3);
    advance_d(s3, g3, {CurrentSample{0, {7, 8, 8}, {1.0, 0.0}}});
    CHECK_THROWS_AS(advance_d(s3, g3, {CurrentSample{0, {8, 3, 3}, {1.0, 0.0}}}), InvalidArgument);
}

TEST_CASE("1D dipole pulse fronts travel at the grid speed") {
    const int n = 800;
    const auto g = grid1d(n, 0.5);
    Solver sv(g, MediumMap::vacuum(g), all_pec());
    const int src = 400;
    const int steps = 400;  // 200 cells of travel
    for (int t = 0; t < steps; ++t) {
        const double tt = (t + 0.5) * g.dt - 12.0;
        const cplx j = std::exp(-tt * tt / 8.0);
        sv.step({CurrentSample{2, {src, 0, 0}, j}});
    }
    const auto& ez = sv.state().e[2];
    // Pulse peak emitted at t = 12 travels (steps*dt - 12) cells.
    const double travel = steps * g.dt - 12.0;
    int left = 0, right = 0;
    double lmax = 0, rmax = 0;
    for (int i = 0; i < src; ++i)
        if (std::abs(ez[i]) > lmax) lmax = std::abs(ez[i]), left = i;
    for (int i = src + 1; i <= n; ++i)
        if (std::abs(ez[i]) > rmax) rmax = std::abs(ez[i]), right = i;
    CHECK(std::abs((src - left) - travel) <= 2.0);
    CHECK(std::abs((right - src) - travel) <= 2.0);
    CHECK(std::abs(ez[src - 100] - ez[src + 100]) < 1e-12);
}

TEST_CASE("cavity standing mode oscillates at the discrete eigenfrequency") {
    const int n = 64;
    const auto g = grid1d(n, 0.5);
    FieldState s(g);
    const double k = kPi / n;  // half wave across the cavity
    const double w = 2.0 / g.dt * std::asin(g.dt / g.dx * std::sin(k * g.dx / 2.0));
    // E^n = cos(w n dt) sin(kx) is a lattice eigenmode; its H^{-1/2} is
    // -(dt/dx) sin(k/2) cos(k(i+1/2)), which equals the half-step below.
    for (int i = 0; i <= n; ++i) s.e[2][i] = s.d[2][i] = std::sin(k * i);
    for (int i = 0; i < n; ++i) s.h[1][i] = -0.5 * g.dt / g.dx * (s.e[2][i + 1] - s.e[2][i]);
    const int steps = 1000;
    for (int t = 0; t < steps; ++t) {
        advance_h(s, g);
        advance_d(s, g);
        s.e[2] = s.d[2];
    }
    const int probe = n / 2;
    CHECK(s.e[2][probe].real() == doctest::Approx(std::cos(w * steps * g.dt)).epsilon(1e-9));
}

TEST_CASE("eigenfrequency is close to the continuum cavity value") {
    const int n = 64;
    const auto g = grid1d(n, 0.5);
    const double k = kPi / n;
    const double w = 2.0 / g.dt * std::asin(g.dt / g.dx * std::sin(k / 2.0));
    CHECK(std::abs(w - kPi / n) / (kPi / n) < 1e-3);
}

TEST_CASE("closed lossless lattice conserves the discrete energy") {
    SUBCASE("1D") {
        const auto g = grid1d(200, 0.9);
        Solver sv(g, MediumMap::vacuum(g), all_pec());
        for (int i = 1; i < 200; ++i) {
            const double x = i - 100.0;
            sv.state().e[2][i] = sv.state().d[2][i] = cplx{std::exp(-x * x / 50.0), std::sin(x / 7.0) * std::exp(-x * x / 200.0)};
        }
        double e0 = 0, emax = 0, emin = 1e300;
        for (int t = 0; t < 10000; ++t) {
            const auto hp = sv.state().h;
            sv.advance_h();
            const double e = discrete_energy(sv.state(), g, hp);
            if (t == 0) e0 = e;
            emax = std::max(emax, e);
            emin = std::min(emin, e);
            sv.advance_d();
            sv.update_e();
        }
        CHECK((emax - emin) / e0 < 1e-10);
    }
    SUBCASE("3D") {
        const auto g = grid3d(16, 0.9);
        Solver sv(g, MediumMap::vacuum(g), all_pec());
        seed_bump(sv.state(), g, {8, 8, 8}, {1.0, -0.5});
        double e0 = 0, emax = 0, emin = 1e300;
        for (int t = 0; t < 10000; ++t) {
            const auto hp = sv.state().h;
            sv.advance_h();
            const double e = discrete_energy(sv.state(), g, hp);
            if (t == 0) e0 = e;
            emax = std::max(emax, e);
            emin = std::min(emin, e);
            sv.advance_d();
            sv.update_e();
        }
        CHECK((emax - emin) / e0 < 1e-10);
    }
}

TEST_CASE("leapfrog reversibility in a closed vacuum lattice") {
    const auto g = grid3d(12, 0.5);
    FieldState s(g);
    seed_bump(s, g, {6, 6, 6}, {0.3, 1.0});
    const FieldState s0 = s;
    for (int t = 0; t < 200; ++t) {
        advance_h(s, g);
        advance_d(s, g);
    }
    YeeGrid back = g;
    back.dt = -g.dt;
    for (int t = 0; t < 200; ++t) {
        advance_d(s, back);
        advance_h(s, back);
    }
    double peak = 0;
    for (int c = 0; c < 3; ++c)
        for (auto v : s0.d[c]) peak = std::max(peak, std::abs(v));
    for (int c = 0; c < 3; ++c) {
        CHECK(max_diff(s.d[c], s0.d[c]) < 1e-12 * peak);
        CHECK(max_diff(s.h[c], s0.h[c]) < 1e-12 * peak);
    }
}

TEST_CASE("complex linearity") {
    const auto g = grid3d(14, 0.5);
    const CpmlSpec thin{4, 3, 1.0, 1.0, 0.0};
    auto run = [&](std::vector<std::pair<Index3, cplx>> srcs) {
        Solver sv(g, MediumMap::vacuum(g), all_pml(thin));
        for (int t = 0; t < 30; ++t) {
            const double tt = t * g.dt - 4.0;
            std::vector<CurrentSample> j;
            for (auto& [cell, amp] : srcs) j.push_back({2, cell, amp * std::exp(-tt * tt)});
            sv.step(j);
        }
        return sv.state().e[2];
    };
    const cplx a{0.7, -1.3}, b{-0.2, 0.4};
    const auto f1 = run({{{6, 6, 6}, 1.0}});
    const auto f2 = run({{{7, 6, 6}, 1.0}});
    const auto both = run({{{6, 6, 6}, a}, {{7, 6, 6}, b}});
    double m = 0;
    for (std::size_t q = 0; q < f1.size(); ++q) m = std::max(m, std::abs(both[q] - (a * f1[q] + b * f2[q])));
    CHECK(m < 1e-14);
}

TEST_CASE("translation equivariance before the walls are reached") {
    const int n = 56, steps = 24;
    const auto g = grid3d(n, 0.5);
    auto run = [&](Index3 cell) {
        Solver sv(g, MediumMap::vacuum(g), all_pec());
        for (int t = 0; t < steps; ++t) {
            const double tt = t * g.dt - 4.0;
            sv.step({CurrentSample{2, cell, std::exp(-tt * tt)}});
        }
        return sv.state().e[2];
    };
    const auto f1 = run({27, 27, 27});
    const auto f2 = run({28, 27, 27});
    const Layout lay(g);
    bool same = true;
    for (int i = 1; i < n - 1; ++i)
        for (int j = 1; j < n; ++j)
            for (int k = 1; k < n - 1; ++k) same = same && f1[lay.idx(i, j, k)] == f2[lay.idx(i + 1, j, k)];
    CHECK(same);
}

TEST_CASE("results do not depend on the worker count") {
    const auto g = grid3d(20, 0.5);
    auto run = [&](int threads) {
        set_threads(threads);
        Solver sv(g, MediumMap::vacuum(g), all_pml({5, 3, 1.0, 1.0, 0.0}));
        for (int t = 0; t < 40; ++t) {
            const double tt = t * g.dt - 4.0;
            sv.step({CurrentSample{1, {10, 10, 10}, cplx{1.0, 0.5} * std::exp(-tt * tt)}});
        }
        return sv.state();
    };
    const auto a = run(1);
    const auto b = run(4);
    set_threads(0);
    for (int c = 0; c < 3; ++c) {
        CHECK(a.e[c] == b.e[c]);
        CHECK(a.h[c] == b.h[c]);
    }
}
