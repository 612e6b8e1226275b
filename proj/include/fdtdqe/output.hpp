#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include "fdtdqe/simulation.hpp"

namespace fdtdqe {

// CSV with a header row; numbers at 17 significant digits.
class CsvWriter {
  public:
    CsvWriter(const std::string& path, const std::vector<std::string>& header);
    void row(const std::vector<double>& values);

  private:
    std::ofstream out_;
    std::size_t width_;
};

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
    // Column index by name; throws InvalidArgument when absent.
    std::size_t column(const std::string& name) const;
};
CsvTable read_csv(const std::string& path);

struct Series {
    std::string name;
    std::vector<double> x, y;
};
// Static SVG line plot.
void write_svg_plot(const std::string& path, const std::string& title, const std::string& xlabel,
                    const std::string& ylabel, const std::vector<Series>& series);

// Row-major image, values in [0, 1].
struct PlaneImage {
    int nu = 0, nv = 0;
    std::vector<double> values;
    double at(int u, int v) const { return values[static_cast<std::size_t>(v) * nu + u]; }
};
// |E_spa| on a lattice plane (3D) or along the line (1D), normalized so the
// largest sample is exactly 1 (all zeros stay zero). Throws InvalidArgument
// when the plane misses the grid.
PlaneImage snapshot_spa(const Simulation& sim, int axis, int index);
void write_image_csv(const std::string& path, const PlaneImage& img);
void write_svg_heatmap(const std::string& path, const PlaneImage& img);

// Flat little-endian dump of the main-grid E components behind a 64-byte
// header: "FDTDQE01", int32 nx ny nz, int32 pad, f64 dx dt, int64 step,
// int32 component count, 12 reserved bytes. Complex values as (re, im) f64.
void write_binary_snapshot(const std::string& path, const Simulation& sim);

std::uint64_t fnv1a64(const std::string& data);
std::string hex64(std::uint64_t v);

}  // namespace fdtdqe
