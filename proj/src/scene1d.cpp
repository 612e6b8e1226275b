#include "fdtdqe/scene1d.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fdtdqe/errors.hpp"

namespace fdtdqe {

void Slab1D::validate() const {
    for (std::size_t i = 0; i < layers.size(); ++i) {
        const auto& l = layers[i];
        if (!(l.end > l.start)) throw InvalidArgument("slab layer " + std::to_string(i) + " has end <= start");
        l.medium.validate();
        if (i > 0 && l.start < layers[i - 1].end)
            throw InvalidArgument("slab layers " + std::to_string(i - 1) + " and " + std::to_string(i) +
                                  " overlap or are out of order");
        if (x_a > l.start && x_a < l.end)
            throw InvalidArgument("emitter position lies inside slab layer " + std::to_string(i));
        if ((left == End::Pec && l.start < x_left) || (right == End::Pec && l.end > x_right))
            throw InvalidArgument("slab layer " + std::to_string(i) + " crosses a PEC wall");
    }
    if ((left == End::Pec && !(x_a > x_left)) || (right == End::Pec && !(x_a < x_right)))
        throw InvalidArgument("emitter position must lie strictly between the PEC walls");
    if (left == End::Pec && right == End::Pec && !(x_right > x_left))
        throw InvalidArgument("PEC walls out of order");
}

cplx Slab1D::eps_at(double x, double omega) const {
    for (const auto& l : layers)
        if (x >= l.start && x < l.end) {
            if (!l.medium.in_band(omega))
                throw OutOfBand("omega = " + std::to_string(omega) + " rad/m lies outside the fitted band of a layer");
            if (l.medium.is_vacuum()) return 1.0;
            return permittivity(l.medium, omega);
        }
    return 1.0;
}

std::vector<double> Slab1D::breakpoints() const {
    std::vector<double> b{x_a};
    for (const auto& l : layers) {
        b.push_back(l.start);
        b.push_back(l.end);
    }
    if (left == End::Pec) b.push_back(x_left);
    if (right == End::Pec) b.push_back(x_right);
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    return b;
}

namespace {

Wave step(Wave w, cplx q, double d) {
    if (d == 0.0) return w;
    const cplx qd = q * d;
    const cplx c = std::cos(qd);
    const cplx s = std::sin(qd);
    const cplx s_over_q = std::abs(q) > 1e-300 ? s / q : cplx{d, 0.0};
    return {c * w.e + s_over_q * w.de, -q * s * w.e + c * w.de};
}

cplx wavenumber(const Slab1D& s, double omega, double x_mid) {
    return omega * std::sqrt(s.eps_at(x_mid, omega));
}

}  // namespace

Wave propagate(const Slab1D& s, double omega, Wave w, double x0, double x1) {
    if (x0 == x1) return w;
    std::vector<double> cuts{x0, x1};
    for (const auto& l : s.layers)
        for (double b : {l.start, l.end})
            if ((b - x0) * (b - x1) < 0.0) cuts.push_back(b);
    if (x1 > x0)
        std::sort(cuts.begin(), cuts.end());
    else
        std::sort(cuts.begin(), cuts.end(), std::greater<>());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double a = cuts[i], b = cuts[i + 1];
        w = step(w, wavenumber(s, omega, 0.5 * (a + b)), b - a);
    }
    return w;
}

Wave left_solution(const Slab1D& s, double omega, double x) {
    const cplx i{0.0, 1.0};
    if (s.left == End::Pec) return propagate(s, omega, {0.0, 1.0}, s.x_left, x);
    return propagate(s, omega, {1.0, -i * omega}, s.breakpoints().front(), x);
}

Wave right_solution(const Slab1D& s, double omega, double x) {
    const cplx i{0.0, 1.0};
    if (s.right == End::Pec) return propagate(s, omega, {0.0, 1.0}, s.x_right, x);
    return propagate(s, omega, {1.0, i * omega}, s.breakpoints().back(), x);
}

cplx green_tmm(const Slab1D& s, double omega, double x, double xp) {
    const double lo = std::min(x, xp), hi = std::max(x, xp);
    const Wave l = left_solution(s, omega, lo);
    const Wave r = right_solution(s, omega, hi);
    const Wave r_lo = right_solution(s, omega, lo);
    const cplx wr = l.e * r_lo.de - l.de * r_lo.e;
    return -l.e * r.e / wr;
}

cplx incident_left(const Slab1D& s, double omega, double x) {
    if (s.left == End::Pec) return 0.0;
    const cplx ik{0.0, omega};
    const double x0 = s.breakpoints().front();
    const Wave w = right_solution(s, omega, x0);
    const cplx alpha = 0.5 * (w.e + w.de / ik);
    return right_solution(s, omega, x).e * std::exp(ik * x0) / alpha;
}

cplx incident_right(const Slab1D& s, double omega, double x) {
    if (s.right == End::Pec) return 0.0;
    const cplx ik{0.0, omega};
    const double x1 = s.breakpoints().back();
    const Wave w = left_solution(s, omega, x1);
    const cplx beta = 0.5 * (w.e - w.de / ik);
    return left_solution(s, omega, x).e * std::exp(-ik * x1) / beta;
}

// --- finite differences -----------------------------------------------------

Fdfd1D::Fdfd1D(const Slab1D& s, double omega, const FdfdOptions& opt)
    : omega_(omega), pec_left_(s.left == End::Pec), pec_right_(s.right == End::Pec) {
    if (!(omega > 0.0)) throw InvalidArgument("fdfd: omega must be positive");
    if (opt.points_per_wavelength < 4) throw InvalidArgument("fdfd: need at least 4 points per wavelength");
    const double k = omega;
    const double lambda0 = 2.0 * kPi / k;
    std::vector<double> b = s.breakpoints();
    const double pad = opt.padding_wavelengths * lambda0;
    if (!pec_left_) b.insert(b.begin(), b.front() - pad);
    if (!pec_right_) b.push_back(b.back() + pad);

    x_.push_back(b.front());
    std::vector<cplx> seg_eps;
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
        const double len = b[i + 1] - b[i];
        const cplx eps = s.eps_at(0.5 * (b[i] + b[i + 1]), omega);
        const double local = lambda0 / std::max(1.0, std::abs(std::sqrt(eps)));
        const int m = std::max(1, static_cast<int>(std::ceil(len * opt.points_per_wavelength / local)));
        for (int j = 1; j <= m; ++j) {
            x_.push_back(j == m ? b[i + 1] : b[i] + len * j / m);
            seg_eps.push_back(eps);
        }
    }

    const std::size_t n = x_.size();
    w_.assign(n, 0.0);
    eps_.assign(n, 0.0);
    lossy_w_.assign(n, 0.0);
    lossy_im_.assign(n, 0.0);
    lower_.assign(n, 0.0);
    diag_.assign(n, 0.0);
    upper_.assign(n, 0.0);
    const double k2 = k * k;
    for (std::size_t j = 0; j < n; ++j) {
        cplx acc_eps = 0.0;
        double acc_im = 0.0;
        for (int side = 0; side < 2; ++side) {
            const bool left = side == 0;
            if ((left && j == 0) || (!left && j + 1 == n)) continue;
            const std::size_t sg = left ? j - 1 : j;
            const double h = x_[sg + 1] - x_[sg];
            w_[j] += 0.5 * h;
            acc_eps += 0.5 * h * seg_eps[sg];
            if (seg_eps[sg].imag() > 0.0) {
                lossy_w_[j] += 0.5 * h;
                acc_im += 0.5 * h * seg_eps[sg].imag();
            }
            if (left) {
                lower_[j] = -1.0 / h;
            } else {
                upper_[j] = -1.0 / h;
            }
            diag_[j] += 1.0 / h;
        }
        eps_[j] = acc_eps / w_[j];
        if (lossy_w_[j] > 0.0) lossy_im_[j] = acc_im / lossy_w_[j];
        diag_[j] -= k2 * acc_eps;
    }

    auto closure = [&](std::size_t end, double h) {
        // Ghost node e^{iq} E_end with 2 - 2 cos q = k^2 h^2, Im q >= 0.
        cplx q = std::acos(cplx{1.0 - 0.5 * k2 * h * h, 0.0});
        if (q.imag() < 0.0) q = -q;
        diag_[end] += (1.0 - std::exp(cplx{0.0, 1.0} * q)) / h - 0.5 * k2 * h;
    };
    if (pec_left_) {
        diag_[0] = 1.0;
        upper_[0] = 0.0;
    } else {
        closure(0, x_[1] - x_[0]);
    }
    if (pec_right_) {
        diag_[n - 1] = 1.0;
        lower_[n - 1] = 0.0;
    } else {
        closure(n - 1, x_[n - 1] - x_[n - 2]);
    }
}

int Fdfd1D::node_of(double x) const {
    const auto it = std::lower_bound(x_.begin(), x_.end(), x);
    std::size_t j = static_cast<std::size_t>(it - x_.begin());
    if (j == x_.size() || (j > 0 && std::abs(x_[j - 1] - x) < std::abs(x_[j] - x))) --j;
    return static_cast<int>(j);
}

std::vector<cplx> Fdfd1D::solve(int src) const {
    const std::size_t n = x_.size();
    if (src < 0 || static_cast<std::size_t>(src) >= n) throw InvalidArgument("fdfd: source node out of range");
    std::vector<cplx> c(n), d(n, 0.0);
    d[src] = 1.0;
    // Thomas algorithm.
    c[0] = upper_[0] / diag_[0];
    d[0] = d[0] / diag_[0];
    for (std::size_t j = 1; j < n; ++j) {
        const cplx m = diag_[j] - lower_[j] * c[j - 1];
        c[j] = upper_[j] / m;
        d[j] = (d[j] - lower_[j] * d[j - 1]) / m;
    }
    for (std::size_t j = n - 1; j-- > 0;) d[j] -= c[j] * d[j + 1];
    return d;
}

}  // namespace fdtdqe
