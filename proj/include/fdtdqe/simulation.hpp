#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "fdtdqe/boundaries.hpp"
#include "fdtdqe/emitter.hpp"
#include "fdtdqe/engine.hpp"
#include "fdtdqe/media.hpp"
#include "fdtdqe/tfsf.hpp"

namespace fdtdqe {

struct SimulationSetup {
    YeeGrid grid;
    MediumMap media;
    BoundarySpec bounds = all_pml();
    EmitterSpec emitter;
    std::optional<TfsfBox> box;  // default_tfsf_box when absent
    CpmlSpec aux_pml;            // aux layer on faces where the main grid is PEC
};

// Largest box centred on the emitter that keeps half the emitter-scatterer
// (Chebyshev) distance as standoff and stays two cells clear of every PML.
// Throws InvalidArgument when no such box of half-size >= 1 exists.
TfsfBox default_tfsf_box(const SimulationSetup& setup);

// The aux grid is vacuum with absorbing layers on every face: the main grid's
// layer where it has one, aux_pml elsewhere.
BoundarySpec aux_bounds(const BoundarySpec& main, const CpmlSpec& aux_pml);

// Two-grid emitter simulation. The aux grid carries the emitter's own field,
// the main grid the environment; the emitter reads the scattered field of
// the main grid inside the TFSF box.
class Simulation {
  public:
    explicit Simulation(SimulationSetup setup);

    void step();
    // Runs n steps; the observer (if any) sees the state after each step.
    void run(std::int64_t n, const std::function<void(const Simulation&)>& observer = {});

    const SimulationSetup& setup() const { return setup_; }
    const YeeGrid& grid() const { return setup_.grid; }
    Solver& main() { return main_; }
    Solver& aux() { return aux_; }
    const Solver& main() const { return main_; }
    const Solver& aux() const { return aux_; }
    const TfsfSurface& surface() const { return surface_; }
    const EmitterState& emitter() const { return em_; }
    const std::vector<DipoleSample>& dipole_samples() const { return samples_; }
    std::int64_t step_index() const { return em_.step; }
    double time() const { return static_cast<double>(em_.step) * setup_.grid.dt; }

    // Single-photon-amplitude field: main total field outside the box,
    // main scattered plus aux field inside.
    cplx spa_e(int comp, std::size_t index) const;
    cplx spa_h(int comp, std::size_t index) const;
    // 1/2 sum (|E_spa|^2 + |H_spa|^2) dV over the whole lattice.
    double spa_energy() const;

    // Largest |E| over both grids.
    double max_field() const;

  private:
    void check_numerics();

    SimulationSetup setup_;
    Solver main_;
    Solver aux_;
    TfsfSurface surface_;
    std::vector<DipoleSample> samples_;
    EmitterState em_;
    double field_scale_ = 0.0;
};

}  // namespace fdtdqe
