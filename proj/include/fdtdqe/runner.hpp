#pragma once

#include <string>
#include <vector>

#include "fdtdqe/analysis.hpp"
#include "fdtdqe/config.hpp"

namespace fdtdqe {

inline constexpr const char* kVersion = "1.0.0";

struct RunSummary {
    std::string dir;
    Route route = Route::TimeDomain;
    bool decayed = false;
    DecayFit fit;
    double max_rel_error = 0.0;  // modes1d
    double calibration = 1.0;    // spectral
};

// Runs the configured route into dir (created if needed) and writes a
// manifest.json beside the outputs. A numeric blow-up leaves the partial
// emitter series, a binary field snapshot and the manifest, then rethrows.
RunSummary run_scenario(const ScenarioConfig& c, const std::string& dir);

// One time-domain run per scan value under dir/point_NN, then scan.csv.
std::vector<ScanRow> run_scan(const ScenarioConfig& c, const std::string& dir);

// Embedded config text of a manifest.json.
std::string config_from_manifest(const std::string& path);

}  // namespace fdtdqe
