#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fdtdqe/scene1d.hpp"
#include "fdtdqe/simulation.hpp"

namespace fdtdqe {

enum class Route { TimeDomain, Spectral, Modes1D };

struct SnapshotSpec {
    int axis = 2;       // plane normal
    int index = 0;      // cell index along the normal
    std::int64_t every = 0;  // 0: only at the end of the run
};

struct SpectralSpec {
    std::size_t samples = 1u << 14;
    double half_span = 200.0;  // linewidths on each side of omega_a
    int points_per_wavelength = 400;
};

struct ModesSpec {
    double from = 0.7, to = 1.3;  // relative to omega_a
    int count = 50;
    int points_per_wavelength = 400;
};

struct ScanSpec {
    std::string parameter;  // path into the config, e.g. emitter.position[0]
    std::vector<double> values;
};

struct ScenarioConfig {
    YeeGrid grid;
    std::vector<std::string> material_names;
    std::vector<LorentzDrudeParams> materials;
    std::vector<Placement> placements;
    BoundarySpec bounds = all_pml();
    CpmlSpec aux_pml;
    EmitterSpec emitter;
    std::optional<TfsfBox> box;

    Route route = Route::TimeDomain;
    std::int64_t steps = 0;
    std::int64_t output_every = 1;
    std::optional<SnapshotSpec> snapshot;
    SpectralSpec spectral;
    ModesSpec modes;
    std::optional<ScanSpec> scan;
    std::string output_dir = "out";

    std::string source;  // the YAML text this was parsed from
};

// Parses and validates a YAML scenario. Throws ConfigError listing every
// problem found, each prefixed with its line and column.
ScenarioConfig parse_config(const std::string& text);
ScenarioConfig load_config(const std::string& path);

// Returns the YAML text with the scalar at `path` (dot keys, [n] indices)
// replaced by value. Throws ConfigError when the path does not resolve.
std::string override_value(const std::string& text, const std::string& path, double value);

SimulationSetup to_setup(const ScenarioConfig& c);
// 1D scenes only: media along x become layers; PEC x faces become walls at
// x = 0 and x = nx dx, PML faces open ends.
Slab1D to_slab(const ScenarioConfig& c);

const char* route_name(Route r);

}  // namespace fdtdqe
