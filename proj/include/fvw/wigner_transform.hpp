#pragma once

#include "fvw/grid.hpp"

#include <functional>
#include <span>
#include <vector>

namespace fvw {

// Pairwise real weight w(p1, p2) applied under the Wigner integral.
using PairWeight = std::function<double(double, double)>;

// Discrete weighted cross-Wigner transform
//
//   W(p, q) = (1/2 pi hbar) sum_P w(p+P/2, p-P/2) f*(p+P/2) g(p-P/2)
//             e^{-i P q / hbar} dP
//
// of two states sampled on the 2N-point half-step momentum grid. The lag
// variable P runs over integer multiples of dp in [-N/2 dp, N/2 dp), so the
// momentum arguments p +- P/2 land exactly on half-step samples; larger lags
// carry no weight, which is negligible for states keeping the required
// support margins. One FFT per momentum row.
PhaseSpaceField cross_wigner(const MomentumGrid& grid, std::span<const cplx> f,
                             std::span<const cplx> g, const PairWeight& weight);

// Unweighted version (w == 1).
PhaseSpaceField cross_wigner(const MomentumGrid& grid, std::span<const cplx> f,
                             std::span<const cplx> g);

// Inverse of the final DFT of cross_wigner: recovers the weighted lag
// correlation T(j, r) = integral of W(p_j, q) e^{+i P_r q / hbar} dq with
// P_r = lag_of(r) * dp. Row-major N x N output.
std::vector<cplx> lag_transform(const PhaseSpaceField& w);

// Signed lag index for DFT bin r of an N-point row: r for r < N/2, r - N
// otherwise.
inline long lag_of(std::size_t r, std::size_t n) {
    return r < n / 2 ? static_cast<long>(r) : static_cast<long>(r) - static_cast<long>(n);
}

} // namespace fvw
