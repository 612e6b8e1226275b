#include "fdtdqe/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fdtdqe/errors.hpp"

namespace fdtdqe {

namespace {

constexpr std::int64_t kCheckEvery = 100;

// Distance in cells from a point to the absorbing interface (or wall) on
// each side of an axis.
double clearance(const YeeGrid& g, const BoundarySpec& b, const BoundarySpec& aux, int a, double x) {
    auto thick = [&](int face) {
        int t = 0;
        if (b[face].kind == FaceKind::Pml) t = std::max(t, b[face].pml.thickness);
        if (aux[face].kind == FaceKind::Pml) t = std::max(t, aux[face].pml.thickness);
        return t;
    };
    return std::min(x - thick(2 * a), g.cells(a) - thick(2 * a + 1) - x);
}

Vec3 dominant_position(const std::vector<DipoleSample>& samples) {
    const DipoleSample* best = &samples.front();
    for (const auto& s : samples)
        if (std::abs(s.weight) > std::abs(best->weight)) best = &s;
    return e_position(best->comp, best->cell);
}

}  // namespace

BoundarySpec aux_bounds(const BoundarySpec& main, const CpmlSpec& aux_pml) {
    BoundarySpec b = main;
    for (auto& f : b)
        if (f.kind == FaceKind::Pec) f = {FaceKind::Pml, aux_pml};
    return b;
}

TfsfBox default_tfsf_box(const SimulationSetup& setup) {
    const YeeGrid& g = setup.grid;
    const int naxes = g.is_1d() ? 1 : 3;
    const auto samples = snap_dipole(setup.emitter, g);
    const Vec3 e = dominant_position(samples);

    double d_scat = std::numeric_limits<double>::infinity();
    const Layout lay(g);
    for (int c = 0; c < 3; ++c)
        for (const auto& smp : setup.media.samples(c)) {
            const std::size_t q = smp.index;
            const Index3 p = lay.index3(q);
            const Vec3 pos = e_position(c, p);
            double cheb = 0.0;
            for (int a = 0; a < naxes; ++a) cheb = std::max(cheb, std::abs(pos[a] - e[a]));
            d_scat = std::min(d_scat, cheb);
        }

    const BoundarySpec aux = aux_bounds(setup.bounds, setup.aux_pml);
    double d_pml = std::numeric_limits<double>::infinity();
    for (int a = 0; a < naxes; ++a) d_pml = std::min(d_pml, clearance(g, setup.bounds, aux, a, e[a]) - 2.0);

    const int half = static_cast<int>(std::floor(std::min(d_scat / 2.0, d_pml)));
    if (half < 1)
        throw InvalidArgument("tfsf box: no room for a default box around the emitter (scatterer or PML too close)");
    TfsfBox box;
    for (int a = 0; a < naxes; ++a) {
        box.lo[a] = static_cast<int>(std::ceil(e[a] - half));
        box.hi[a] = static_cast<int>(std::floor(e[a] + half));
    }
    return box;
}

Simulation::Simulation(SimulationSetup setup)
    : setup_(std::move(setup)),
      main_(setup_.grid, setup_.media, setup_.bounds),
      aux_(setup_.grid, MediumMap::vacuum(setup_.grid), aux_bounds(setup_.bounds, setup_.aux_pml)) {
    const YeeGrid& g = setup_.grid;
    samples_ = snap_dipole(setup_.emitter, g);
    if (!setup_.box) setup_.box = default_tfsf_box(setup_);
    const TfsfBox& box = *setup_.box;
    surface_ = TfsfSurface::make(g, box);

    const int naxes = g.is_1d() ? 1 : 3;
    for (int a = 0; a < naxes; ++a) {
        const int tlo = std::max(main_.pml().thickness(2 * a), aux_.pml().thickness(2 * a));
        const int thi = std::max(main_.pml().thickness(2 * a + 1), aux_.pml().thickness(2 * a + 1));
        if (box.lo[a] < tlo + 2 || box.hi[a] > g.cells(a) - thi - 2)
            throw InvalidArgument("tfsf box must stay at least 2 cells away from the PML on the " + axis_name(a) +
                                  " axis");
    }

    for (const auto& s : samples_) {
        const Vec3 pos = e_position(s.comp, s.cell);
        for (int a = 0; a < naxes; ++a)
            if (!(pos[a] > box.lo[a] && pos[a] < box.hi[a]))
                throw ContractViolation("emitter sample lies outside the scattered-field region of the tfsf box");
    }

    const Layout lay(g);
    for (int c = 0; c < 3; ++c)
        for (const auto& smp : setup_.media.samples(c)) {
            const std::size_t q = smp.index;
            const Index3 p = lay.index3(q);
            if (surface_.contains_e(c, p))
                throw InvalidArgument("tfsf box overlaps a scatterer: medium sample at cell (" + std::to_string(p.i) +
                                      "," + std::to_string(p.j) + "," + std::to_string(p.k) + ")");
        }
}

void Simulation::step() {
    const YeeGrid& g = setup_.grid;
    const cplx esc = sample_scatt(main_.state(), g, samples_);
    em_.c_series.push_back(em_.c_now);
    em_.escatt_series.push_back(esc);
    update_amplitude(em_, setup_.emitter, esc, g.dt);
    const auto j = setup_.emitter.mode == EmitterMode::Real
                       ? tls_current_real(em_.c_now, em_.c_prev, setup_.emitter, samples_, g)
                       : tls_current(em_.c_now, em_.c_prev, samples_, g);

    aux_.advance_h();
    main_.advance_h();
    inject(main_.state(), surface_.magnetic_currents(aux_.state()));
    aux_.advance_d(j);
    main_.advance_d();
    inject(main_.state(), surface_.electric_currents(aux_.state()));
    aux_.update_e();
    main_.update_e();

    if (em_.step == 1 || em_.step % kCheckEvery == 0) check_numerics();
}

void Simulation::run(std::int64_t n, const std::function<void(const Simulation&)>& observer) {
    for (std::int64_t t = 0; t < n; ++t) {
        step();
        if (observer) observer(*this);
    }
}

void Simulation::check_numerics() {
    const double m = max_field();
    const bool bad_c = !std::isfinite(std::abs(em_.c_now)) || std::abs(em_.c_now) > 1e12;
    if (field_scale_ == 0.0 && m > 0.0 && std::isfinite(m)) field_scale_ = m;
    if (bad_c || !std::isfinite(m) || (field_scale_ > 0.0 && m > 1e12 * field_scale_))
        throw NumericAbort("numeric blow-up at step " + std::to_string(em_.step) + ": max |E| = " +
                           std::to_string(m) + ", initial scale " + std::to_string(field_scale_) + ", |C| = " +
                           std::to_string(std::abs(em_.c_now)));
}

double Simulation::max_field() const {
    double m = 0.0;
    for (const Solver* s : {&main_, &aux_})
        for (int c = 0; c < 3; ++c)
            for (const auto& v : s->state().e[c]) {
                const double a = std::abs(v);
                if (!(a <= m)) m = a;  // keeps NaN
            }
    return m;
}

cplx Simulation::spa_e(int comp, std::size_t index) const {
    const YeeGrid& g = setup_.grid;
    const Layout lay(g);
    const Index3 p = lay.index3(index);
    const Vec3 pos = e_position(comp, p);
    cplx v = main_.state().e[comp][index];
    if (surface_.contains(pos)) v += aux_.state().e[comp][index];
    return v;
}

cplx Simulation::spa_h(int comp, std::size_t index) const {
    const YeeGrid& g = setup_.grid;
    const Layout lay(g);
    const Index3 p = lay.index3(index);
    const Vec3 pos = h_position(comp, p);
    cplx v = main_.state().h[comp][index];
    if (surface_.contains(pos)) v += aux_.state().h[comp][index];
    return v;
}

double Simulation::spa_energy() const {
    double acc = 0.0;
    for (int c = 0; c < 3; ++c) {
        const std::size_t ne = main_.state().e[c].size();
        for (std::size_t q = 0; q < ne; ++q) acc += std::norm(spa_e(c, q));
        const std::size_t nh = main_.state().h[c].size();
        for (std::size_t q = 0; q < nh; ++q) acc += std::norm(spa_h(c, q));
    }
    return 0.5 * acc * setup_.grid.cell_measure();
}

}  // namespace fdtdqe
