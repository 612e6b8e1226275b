#include "fdtdqe/analysis.hpp"

#include <cmath>

#include "fdtdqe/errors.hpp"

namespace fdtdqe {

double gamma0(const EmitterSpec& spec, int dimensionality) {
    return free_rate(spec.omega_a, spec.dipole.norm(), dimensionality);
}

double purcell_sfa(double im_g_projected, double omega_a) {
    return 6.0 * kPi / (omega_a / kC) * im_g_projected;
}

double purcell_1d(const Slab1D& s, double omega_a) {
    return 2.0 * omega_a * green_tmm(s, omega_a, s.x_a, s.x_a).imag();
}

DecayFit purcell_from_decay(const std::vector<double>& t, const std::vector<double>& population, double gamma0) {
    if (t.size() != population.size() || t.size() < 2)
        throw InvalidArgument("purcell_from_decay: time and population series must match and hold two samples");
    if (!(gamma0 > 0.0)) throw InvalidArgument("purcell_from_decay: gamma0 must be positive");
    const double level = std::exp(-1.0);
    for (std::size_t n = 1; n < t.size(); ++n) {
        if (population[n] > level) continue;
        const double p0 = population[n - 1], p1 = population[n];
        DecayFit f;
        f.tau = t[n - 1] + (p0 - level) / (p0 - p1) * (t[n] - t[n - 1]);
        f.gamma = 1.0 / f.tau;
        f.purcell = f.gamma / gamma0;
        for (std::size_t m = n + 1; m < t.size(); ++m)
            if (population[m] > level) f.multiple_crossings = true;
        return f;
    }
    throw InsufficientRun("population never reached 1/e within the run (t = " + std::to_string(t.back()) + ")");
}

void run_population(Simulation& sim, std::int64_t steps, std::vector<double>& t, std::vector<double>& pop) {
    t.clear();
    pop.clear();
    t.reserve(static_cast<std::size_t>(steps) + 1);
    pop.reserve(static_cast<std::size_t>(steps) + 1);
    auto record = [&](const Simulation& s) {
        t.push_back(s.time());
        pop.push_back(std::norm(s.emitter().c_now));
    };
    record(sim);
    sim.run(steps, record);
}

std::vector<ScanRow> resonance_scan(const std::vector<double>& parameters,
                                    const std::function<SimulationSetup(double)>& make, std::int64_t steps) {
    std::vector<ScanRow> rows(parameters.size());
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(parameters.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        ScanRow& r = rows[i];
        r.parameter = parameters[i];
        try {
            SimulationSetup setup = make(parameters[i]);
            const double g0 = setup.emitter.gamma0;
            Simulation sim(std::move(setup));
            std::vector<double> t, pop;
            run_population(sim, steps, t, pop);
            r.fit = purcell_from_decay(t, pop, g0);
            r.ok = true;
        } catch (const std::exception& e) {
            r.error = e.what();
        }
    }
    return rows;
}

}  // namespace fdtdqe
