#include "fdtdqe/output.hpp"

#include <algorithm>
#include <cmath>
#include <bit>
#include <cstring>
#include <iomanip>
#include <limits>
#include <sstream>

#include "fdtdqe/errors.hpp"

namespace fdtdqe {

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& header)
    : out_(path), width_(header.size()) {
    if (!out_) throw InvalidArgument("cannot write " + path);
    out_ << std::setprecision(17);
    for (std::size_t i = 0; i < header.size(); ++i) out_ << (i ? "," : "") << header[i];
    out_ << '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
    if (values.size() != width_) throw ContractViolation("csv row width does not match the header");
    for (std::size_t i = 0; i < values.size(); ++i) out_ << (i ? "," : "") << values[i];
    out_ << '\n';
}

std::size_t CsvTable::column(const std::string& name) const {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw InvalidArgument("csv has no column '" + name + "'");
    return static_cast<std::size_t>(it - header.begin());
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot read " + path);
    CsvTable t;
    std::string line;
    auto split = [](const std::string& s) {
        std::vector<std::string> out;
        std::stringstream ss(s);
        std::string cell;
        while (std::getline(ss, cell, ',')) out.push_back(cell);
        return out;
    };
    if (std::getline(in, line)) t.header = split(line);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> r;
        for (const auto& c : split(line)) r.push_back(std::strtod(c.c_str(), nullptr));
        t.rows.push_back(std::move(r));
    }
    return t;
}

namespace {

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};

std::string esc(const std::string& s) {
    std::string o;
    for (char c : s) {
        if (c == '<')
            o += "&lt;";
        else if (c == '>')
            o += "&gt;";
        else if (c == '&')
            o += "&amp;";
        else
            o += c;
    }
    return o;
}

}  // namespace

void write_svg_plot(const std::string& path, const std::string& title, const std::string& xlabel,
                    const std::string& ylabel, const std::vector<Series>& series) {
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot write " + path);
    const double W = 640, H = 420, L = 70, R = 20, T = 40, B = 50;
    double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
    for (const auto& s : series)
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            x0 = std::min(x0, s.x[i]);
            x1 = std::max(x1, s.x[i]);
            y0 = std::min(y0, s.y[i]);
            y1 = std::max(y1, s.y[i]);
        }
    if (!(x1 > x0)) x1 = x0 + 1.0;
    if (!(y1 > y0)) y1 = y0 + 1.0;
    auto px = [&](double x) { return L + (x - x0) / (x1 - x0) * (W - L - R); };
    auto py = [&](double y) { return H - B - (y - y0) / (y1 - y0) * (H - T - B); };

    out << std::setprecision(6);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" << esc(title) << "</text>\n";
    out << "<rect x=\"" << L << "\" y=\"" << T << "\" width=\"" << W - L - R << "\" height=\"" << H - T - B
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int k = 0; k <= 4; ++k) {
        const double xv = x0 + (x1 - x0) * k / 4, yv = y0 + (y1 - y0) * k / 4;
        out << "<text x=\"" << px(xv) << "\" y=\"" << H - B + 16 << "\" text-anchor=\"middle\" font-size=\"11\">"
            << xv << "</text>\n";
        out << "<text x=\"" << L - 6 << "\" y=\"" << py(yv) + 4 << "\" text-anchor=\"end\" font-size=\"11\">" << yv
            << "</text>\n";
    }
    out << "<text x=\"" << W / 2 << "\" y=\"" << H - 10 << "\" text-anchor=\"middle\" font-size=\"13\">"
        << esc(xlabel) << "</text>\n";
    out << "<text x=\"16\" y=\"" << H / 2 << "\" transform=\"rotate(-90 16 " << H / 2
        << ")\" text-anchor=\"middle\" font-size=\"13\">" << esc(ylabel) << "</text>\n";
    for (std::size_t k = 0; k < series.size(); ++k) {
        const auto& s = series[k];
        const char* col = kColors[k % 6];
        out << "<polyline fill=\"none\" stroke=\"" << col << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i)
            if (std::isfinite(s.x[i]) && std::isfinite(s.y[i])) out << px(s.x[i]) << ',' << py(s.y[i]) << ' ';
        out << "\"/>\n";
        out << "<text x=\"" << W - R - 8 << "\" y=\"" << T + 16 + 16 * k << "\" text-anchor=\"end\" font-size=\"12\" fill=\""
            << col << "\">" << esc(s.name) << "</text>\n";
    }
    out << "</svg>\n";
}

PlaneImage snapshot_spa(const Simulation& sim, int axis, int index) {
    const YeeGrid& g = sim.grid();
    const Layout lay(g);
    PlaneImage img;
    auto mag = [&](std::size_t q) {
        double acc = 0.0;
        for (int c = 0; c < 3; ++c)
            if (!sim.main().state().e[c].empty()) acc += std::norm(sim.spa_e(c, q));
        return std::sqrt(acc);
    };
    if (g.is_1d()) {
        img.nu = lay.nxp;
        img.nv = 1;
        for (int i = 0; i < lay.nxp; ++i) img.values.push_back(mag(lay.idx(i, 0, 0)));
    } else {
        if (axis < 0 || axis > 2 || index < 0 || index > g.cells(axis))
            throw InvalidArgument("snapshot plane lies outside the grid");
        const int ua = (axis + 1) % 3, va = (axis + 2) % 3;
        img.nu = g.cells(ua) + 1;
        img.nv = g.cells(va) + 1;
        img.values.resize(static_cast<std::size_t>(img.nu) * img.nv);
        for (int v = 0; v < img.nv; ++v)
            for (int u = 0; u < img.nu; ++u) {
                Index3 p;
                p[axis] = index;
                p[ua] = u;
                p[va] = v;
                img.values[static_cast<std::size_t>(v) * img.nu + u] = mag(lay.idx(p.i, p.j, p.k));
            }
    }
    const double m = *std::max_element(img.values.begin(), img.values.end());
    if (m > 0.0)
        for (auto& v : img.values) v /= m;
    return img;
}

void write_image_csv(const std::string& path, const PlaneImage& img) {
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot write " + path);
    out << std::setprecision(17);
    for (int v = 0; v < img.nv; ++v) {
        for (int u = 0; u < img.nu; ++u) out << (u ? "," : "") << img.at(u, v);
        out << '\n';
    }
}

void write_svg_heatmap(const std::string& path, const PlaneImage& img) {
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot write " + path);
    const int px = std::max(1, 480 / std::max(img.nu, img.nv));
    const int h = img.nv == 1 ? 40 : px;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << img.nu * px << "\" height=\"" << img.nv * h
        << "\" shape-rendering=\"crispEdges\">\n";
    for (int v = 0; v < img.nv; ++v)
        for (int u = 0; u < img.nu; ++u) {
            const double a = std::clamp(img.at(u, v), 0.0, 1.0);
            // black -> red -> yellow
            const int r = static_cast<int>(255 * std::min(1.0, 2.0 * a));
            const int gg = static_cast<int>(255 * std::max(0.0, 2.0 * a - 1.0));
            out << "<rect x=\"" << u * px << "\" y=\"" << (img.nv - 1 - v) * h << "\" width=\"" << px
                << "\" height=\"" << h << "\" fill=\"rgb(" << r << ',' << gg << ",0)\"/>\n";
        }
    out << "</svg>\n";
}

namespace {

template <class T>
void put(std::ofstream& out, T v) {
    static_assert(std::endian::native == std::endian::little, "snapshot writer assumes a little-endian host");
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

}  // namespace

void write_binary_snapshot(const std::string& path, const Simulation& sim) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidArgument("cannot write " + path);
    const YeeGrid& g = sim.grid();
    const auto& e = sim.main().state().e;
    std::int32_t ncomp = 0;
    for (int c = 0; c < 3; ++c) ncomp += e[c].empty() ? 0 : 1;
    out.write("FDTDQE01", 8);
    put<std::int32_t>(out, g.nx);
    put<std::int32_t>(out, g.ny);
    put<std::int32_t>(out, g.nz);
    put<std::int32_t>(out, 0);
    put<double>(out, g.dx);
    put<double>(out, g.dt);
    put<std::int64_t>(out, sim.step_index());
    put<std::int32_t>(out, ncomp);
    const char reserved[12] = {};
    out.write(reserved, 12);
    for (int c = 0; c < 3; ++c)
        for (const cplx& v : e[c]) {
            put<double>(out, v.real());
            put<double>(out, v.imag());
        }
}

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << v;
    return os.str();
}

}  // namespace fdtdqe
