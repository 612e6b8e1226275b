#include "fdtdqe/field_state.hpp"

#include <algorithm>

namespace fdtdqe {

FieldState::FieldState(const YeeGrid& g) {
    const std::size_t n = Layout(g).size();
    for (int c = 0; c < 3; ++c) {
        const bool e_live = !g.is_1d() || c == 2;
        const bool h_live = !g.is_1d() || c == 1;
        if (e_live) {
            e[c].assign(n, cplx{});
            d[c].assign(n, cplx{});
        }
        if (h_live) h[c].assign(n, cplx{});
    }
}

void FieldState::resize_polarization(int comp, std::size_t count) {
    pd[comp].assign(count, cplx{});
    pd_prev[comp].assign(count, cplx{});
    pl[comp].assign(count, cplx{});
    pl_prev[comp].assign(count, cplx{});
}

void FieldState::clear() {
    for (auto* arr : {&e, &h, &d, &pd, &pd_prev, &pl, &pl_prev})
        for (auto& v : *arr) std::fill(v.begin(), v.end(), cplx{});
    step = 0;
}

}  // namespace fdtdqe
