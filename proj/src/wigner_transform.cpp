#include "fvw/wigner_transform.hpp"

#include "fvw/fft.hpp"

#include <numbers>
#include <stdexcept>

namespace fvw {

PhaseSpaceField cross_wigner(const MomentumGrid& grid, std::span<const cplx> f,
                             std::span<const cplx> g, const PairWeight& weight) {
    const std::size_t n = grid.n;
    const std::size_t nh = grid.half_n();
    if (f.size() != nh || g.size() != nh)
        throw std::invalid_argument("cross_wigner: states must be sampled on the half-step grid");

    PhaseSpaceField out(grid);
    const double norm = grid.dp / (2.0 * std::numbers::pi * grid.hbar);
    std::vector<cplx> row(n);
    for (std::size_t j = 0; j < n; ++j) {
        const long center = 2 * static_cast<long>(j);
        for (std::size_t r = 0; r < n; ++r) {
            const long lag = lag_of(r, n);
            const std::size_t ia = grid.wrap_half(center + lag);
            const std::size_t ib = grid.wrap_half(center - lag);
            const double w = weight ? weight(grid.u(center + lag), grid.u(center - lag)) : 1.0;
            const double sign = (lag & 1L) ? -1.0 : 1.0; // e^{-i P q_min / hbar} phase
            row[r] = sign * w * std::conj(f[ia]) * g[ib];
        }
        fft_inplace(row.data(), n, -1);
        for (std::size_t m = 0; m < n; ++m) out.at(j, m) = norm * row[m];
    }
    return out;
}

PhaseSpaceField cross_wigner(const MomentumGrid& grid, std::span<const cplx> f,
                             std::span<const cplx> g) {
    return cross_wigner(grid, f, g, PairWeight{});
}

std::vector<cplx> lag_transform(const PhaseSpaceField& w) {
    const std::size_t n = w.n();
    const double dq = w.grid().dq();
    std::vector<cplx> t(n * n);
    std::vector<cplx> row(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t m = 0; m < n; ++m) row[m] = w.at(j, m);
        fft_inplace(row.data(), n, +1);
        for (std::size_t r = 0; r < n; ++r) {
            const double sign = (lag_of(r, n) & 1L) ? -1.0 : 1.0;
            t[j * n + r] = sign * dq * row[r];
        }
    }
    return t;
}

} // namespace fvw
