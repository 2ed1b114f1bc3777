#pragma once

#include "fvw/grid.hpp"

#include <Eigen/Dense>

namespace fvw {

// Lag-space representation of a scalar phase-space symbol, equivalently the
// momentum-representation integral kernel of the operator it quantises.
//
// Data L(c, k) with c the fine (half-step) midpoint index in [0, 2N) and k
// the lag index mod N carries the kernel value at the momentum pair
// p1 = u_{c+k}, p2 = u_{c-k}:
//
//   K(p1, p2) = (1/2 pi hbar) integral A((p1+p2)/2, q) e^{-i (p1-p2) q / hbar} dq.
//
// Same-parity grid pairs split into two closed blocks (both momenta on the
// coarse grid / both on the shifted grid); operator products act blockwise,
// which realises the Moyal star product exactly for p-band-limited symbols.
class LagKernel {
public:
    LagKernel() = default;
    explicit LagKernel(const MomentumGrid& g);

    static LagKernel from_symbol(const PhaseSpaceField& a);
    PhaseSpaceField to_symbol() const;

    const MomentumGrid& grid() const { return grid_; }

    cplx& at(std::size_t c, std::size_t k) { return l_[c * grid_.n + k]; }
    const cplx& at(std::size_t c, std::size_t k) const { return l_[c * grid_.n + k]; }

    // Momentum pair represented by entry (c, k), resolved through the parity
    // block mapping: both momenta are concrete grid points of one sublattice.
    void pair_momenta(std::size_t c, std::size_t k, double& p1, double& p2) const;

    // Kernel matrix over one momentum sublattice. parity 0: coarse points
    // u_{2j}; parity 1: shifted points u_{2j+1}. Entry (j1, j2) = K(x_{j1}, x_{j2}).
    Eigen::MatrixXcd parity_block(int parity) const;
    static LagKernel from_parity_blocks(const MomentumGrid& g, const Eigen::MatrixXcd& even,
                                        const Eigen::MatrixXcd& odd);

    // Operator composition: kernel of A. B with the dp quadrature measure.
    LagKernel compose(const LagKernel& other) const;

private:
    MomentumGrid grid_;
    std::vector<cplx> l_; // [c * n + k]
};

// Moyal star product of two symbols on one phase-space grid, computed
// through operator composition of their kernels. Exact for periodic,
// p-band-limited symbols; A == 1 is the exact unit.
PhaseSpaceField star_product(const PhaseSpaceField& a, const PhaseSpaceField& b);

} // namespace fvw
