#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fdtdqe/scene1d.hpp"
#include "fdtdqe/simulation.hpp"

namespace fdtdqe {

// Free-space rate w_a^3 |d|^2 / (3 pi) (3D) or w_a |d|^2 (1D).
double gamma0(const EmitterSpec& spec, int dimensionality = 3);

// F = (6 pi / k0) e.Im G.e for the projected 3D self term.
double purcell_sfa(double im_g_projected, double omega_a);

// 1D analogue from transfer matrices: Im g / Im g_vacuum = 2k Im g.
double purcell_1d(const Slab1D& s, double omega_a);

struct DecayFit {
    double tau = 0.0;
    double gamma = 0.0;
    double purcell = 0.0;
    bool multiple_crossings = false;  // population rose above e^-1 again later
};

// First e^-1 crossing of the population, linearly interpolated between
// samples. Throws InsufficientRun when it never crosses.
DecayFit purcell_from_decay(const std::vector<double>& t, const std::vector<double>& population, double gamma0);

struct ScanRow {
    double parameter = 0.0;
    DecayFit fit;
    bool ok = false;
    std::string error;
};

// Runs the time-domain route for every parameter value; the factory builds
// the scene, each run lasts `steps` steps. Failed points are recorded and
// the scan continues. Rows come back in parameter order.
std::vector<ScanRow> resonance_scan(const std::vector<double>& parameters,
                                    const std::function<SimulationSetup(double)>& make, std::int64_t steps);

// Population series of one run (t = n dt, |C^n|^2 for n = 0..steps).
void run_population(Simulation& sim, std::int64_t steps, std::vector<double>& t, std::vector<double>& pop);

}  // namespace fdtdqe
