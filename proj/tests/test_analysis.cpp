#include <doctest.h>

#include <cmath>

#include "fdtdqe/analysis.hpp"
#include "fdtdqe/errors.hpp"

using namespace fdtdqe;

namespace {

std::vector<double> times(std::size_t n, double dt) {
    std::vector<double> t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = dt * static_cast<double>(i);
    return t;
}

// 1D scene: PEC wall at x = 0 (or none), emitter h cells away, PML elsewhere.
SimulationSetup mirror_scene(double h_cells, bool wall) {
    const double lam = 80.0;
    const auto g = YeeGrid::make(260, 1, 1, 1.0, cfl_dt(1.0, 1, 0.5), Dimensionality::One);
    SimulationSetup st;
    st.grid = g;
    st.media = MediumMap::vacuum(g);
    st.bounds = all_pml();
    if (wall) st.bounds[0].kind = FaceKind::Pec;
    const double w = 2.0 * kPi / lam;
    st.emitter.omega_a = w;
    st.emitter.gamma0 = 0.02 * w;
    st.emitter.dipole = {0.0, 0.0, dipole_for_rate(w, st.emitter.gamma0, 1)};
    st.emitter.position = {wall ? h_cells : 130.0, 0.0, 0.0};
    return st;
}

}  // namespace

TEST_CASE("free-space rate") {
    EmitterSpec e;
    e.omega_a = omega_from_wavelength(600e-9);
    e.dipole = {0.0, 0.0, 0.0};
    CHECK(gamma0(e) == 0.0);
    e.dipole = {0.0, 0.0, 5e-8};
    CHECK(gamma0(e) == doctest::Approx(304617.4197867085).epsilon(1e-12));
    const double g1 = gamma0(e);
    e.omega_a *= 2.0;
    CHECK(gamma0(e) == doctest::Approx(8.0 * g1));
    // Decay time of a few optical periods.
    const double periods = (1.0 / g1) / 600e-9;
    CHECK(periods > 1.0);
    CHECK(periods < 100.0);
}

TEST_CASE("SFA Purcell factor") {
    const double k = 3.0;
    CHECK(purcell_sfa(k / (6.0 * kPi), k) == doctest::Approx(1.0));
    CHECK(purcell_sfa(2.0 * k / (6.0 * kPi), k) == doctest::Approx(2.0));

    // Perfect mirror, dipole parallel at h = lambda/4: image dipole -p at
    // R = 2h, transverse dyadic term of the free-space Green's function.
    const double h = 0.25 * 2.0 * kPi / k, R = 2.0 * h, kr = k * R;
    const cplx i{0.0, 1.0};
    const cplx gt = std::exp(i * kr) / (4.0 * kPi * R) * (1.0 + i / kr - 1.0 / (kr * kr));
    const double im_g = k / (6.0 * kPi) - gt.imag();
    const double x = 2.0 * k * h;
    const double image = 1.0 - 1.5 * (std::sin(x) / x + std::cos(x) / (x * x) - std::sin(x) / (x * x * x));
    CHECK(purcell_sfa(im_g, k) == doctest::Approx(image).epsilon(1e-12));
    CHECK(purcell_sfa(im_g, k) > 1.0);
}

TEST_CASE("1D transfer-matrix Purcell factor") {
    Slab1D s;
    const double k = 2.0 * kPi / 600e-9;
    CHECK(purcell_1d(s, k) == doctest::Approx(1.0).epsilon(1e-12));
    s.left = End::Pec;
    s.x_left = 0.0;
    s.x_a = 150e-9;
    CHECK(purcell_1d(s, k) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("decay extraction") {
    const double g = 0.7;
    const auto t = times(4000, 1e-3);
    std::vector<double> p1(t.size()), p2(t.size());
    for (std::size_t n = 0; n < t.size(); ++n) {
        p1[n] = std::exp(-g * t[n]);
        p2[n] = std::exp(-2.0 * g * t[n]);
    }
    const auto f1 = purcell_from_decay(t, p1, g);
    CHECK(f1.purcell == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(f1.tau == doctest::Approx(1.0 / g).epsilon(1e-3));
    CHECK_FALSE(f1.multiple_crossings);
    CHECK(purcell_from_decay(t, p2, g).purcell == doctest::Approx(2.0).epsilon(1e-3));

    std::vector<double> slow(t.size());
    for (std::size_t n = 0; n < t.size(); ++n) slow[n] = std::exp(-0.1 * t[n]);
    CHECK_THROWS_AS(purcell_from_decay(t, slow, g), InsufficientRun);

    // Rabi-like revival after the first crossing.
    std::vector<double> rabi(t.size());
    for (std::size_t n = 0; n < t.size(); ++n) rabi[n] = std::pow(std::cos(2.0 * t[n]), 2);
    const auto fr = purcell_from_decay(t, rabi, g);
    CHECK(fr.multiple_crossings);
    CHECK(fr.tau == doctest::Approx(std::acos(std::exp(-0.5)) / 2.0).epsilon(1e-4));

    CHECK_THROWS_AS(purcell_from_decay({0.0}, {1.0}, g), InvalidArgument);
}

TEST_CASE("scan over a PEC mirror distance") {
    // Parameter < 0 is rejected by the factory; that row records the error.
    const auto rows = resonance_scan(
        {-1.0, 0.0, 20.0, 40.0},
        [](double h) {
            if (h < 0.0) throw InvalidArgument("negative distance");
            return h == 0.0 ? mirror_scene(0.0, false) : mirror_scene(h, true);
        },
        3000);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].parameter == -1.0);
    CHECK_FALSE(rows[0].ok);
    CHECK(rows[0].error.find("negative") != std::string::npos);
    REQUIRE(rows[1].ok);
    CHECK(rows[1].fit.purcell == doctest::Approx(1.0).epsilon(0.02));
    // Quarter wave: enhanced towards 2. Half wave: suppressed towards 0.
    REQUIRE(rows[2].ok);
    CHECK(rows[2].fit.purcell > 1.7);
    CHECK(rows[2].fit.purcell < 2.1);
    if (rows[3].ok) CHECK(rows[3].fit.purcell < 0.3);
}
