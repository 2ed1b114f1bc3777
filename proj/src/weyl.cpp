#include "fvw/weyl.hpp"

#include "fvw/fft.hpp"

#include <numbers>
#include <stdexcept>

namespace fvw {

LagKernel::LagKernel(const MomentumGrid& g) : grid_(g), l_(2 * g.n * g.n, cplx{}) {}

LagKernel LagKernel::from_symbol(const PhaseSpaceField& a) {
    const MomentumGrid& g = a.grid();
    const std::size_t n = g.n;
    LagKernel out(g);

    // Band-limited upsampling along p: fine symbol on 2N x N.
    std::vector<std::vector<cplx>> fine(2 * n);
    {
        std::vector<cplx> col(n);
        std::vector<std::vector<cplx>> cols(n);
        for (std::size_t m = 0; m < n; ++m) {
            for (std::size_t j = 0; j < n; ++j) col[j] = a.at(j, m);
            cols[m] = upsample2(col);
        }
        for (std::size_t c = 0; c < 2 * n; ++c) {
            fine[c].resize(n);
            for (std::size_t m = 0; m < n; ++m) fine[c][m] = cols[m][c];
        }
    }

    const double norm = g.dq() / (2.0 * std::numbers::pi * g.hbar); // = 1 / (N dp)
    std::vector<cplx> row(n);
    for (std::size_t c = 0; c < 2 * n; ++c) {
        row = fine[c];
        fft_inplace(row.data(), n, -1);
        for (std::size_t k = 0; k < n; ++k) {
            const double sign = (k & 1U) ? -1.0 : 1.0; // q_min shift phase
            out.at(c, k) = norm * sign * row[k];
        }
    }
    return out;
}

PhaseSpaceField LagKernel::to_symbol() const {
    const std::size_t n = grid_.n;
    PhaseSpaceField out(grid_);
    std::vector<cplx> row(n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t c = 2 * j;
        for (std::size_t k = 0; k < n; ++k) {
            const double sign = (k & 1U) ? -1.0 : 1.0;
            row[k] = sign * at(c, k);
        }
        fft_inplace(row.data(), n, +1);
        for (std::size_t m = 0; m < n; ++m) out.at(j, m) = grid_.dp * row[m];
    }
    return out;
}

void LagKernel::pair_momenta(std::size_t c, std::size_t k, double& p1, double& p2) const {
    const std::size_t n = grid_.n;
    if ((c + k) % 2 == 0) {
        const std::size_t j1 = ((c + k) / 2) % n;
        const std::size_t j2 = ((c + 2 * n - k) / 2) % n;
        p1 = grid_.p(j1);
        p2 = grid_.p(j2);
    } else {
        const std::size_t j1 = ((c + k - 1) / 2) % n;
        const std::size_t j2 = ((c + 2 * n - k - 1) / 2) % n;
        p1 = grid_.u(2 * static_cast<long>(j1) + 1);
        p2 = grid_.u(2 * static_cast<long>(j2) + 1);
    }
}

Eigen::MatrixXcd LagKernel::parity_block(int parity) const {
    const std::size_t n = grid_.n;
    Eigen::MatrixXcd blk(n, n);
    for (std::size_t j1 = 0; j1 < n; ++j1)
        for (std::size_t j2 = 0; j2 < n; ++j2) {
            const std::size_t c = (j1 + j2 + (parity ? 1 : 0)) % (2 * n);
            const std::size_t k = (j1 + n - j2) % n;
            blk(static_cast<Eigen::Index>(j1), static_cast<Eigen::Index>(j2)) = at(c, k);
        }
    return blk;
}

LagKernel LagKernel::from_parity_blocks(const MomentumGrid& g, const Eigen::MatrixXcd& even,
                                        const Eigen::MatrixXcd& odd) {
    const std::size_t n = g.n;
    if (even.rows() != static_cast<Eigen::Index>(n) || even.cols() != static_cast<Eigen::Index>(n) ||
        odd.rows() != static_cast<Eigen::Index>(n) || odd.cols() != static_cast<Eigen::Index>(n))
        throw std::invalid_argument("LagKernel: parity block size mismatch");
    LagKernel out(g);
    for (std::size_t c = 0; c < 2 * n; ++c)
        for (std::size_t k = 0; k < n; ++k) {
            if ((c + k) % 2 == 0) {
                const std::size_t j1 = ((c + k) / 2) % n;
                const std::size_t j2 = ((c + 2 * n - k) / 2) % n;
                out.at(c, k) = even(static_cast<Eigen::Index>(j1), static_cast<Eigen::Index>(j2));
            } else {
                const std::size_t j1 = ((c + k - 1) / 2) % n;
                const std::size_t j2 = ((c + 2 * n - k - 1) / 2) % n;
                out.at(c, k) = odd(static_cast<Eigen::Index>(j1), static_cast<Eigen::Index>(j2));
            }
        }
    return out;
}

LagKernel LagKernel::compose(const LagKernel& other) const {
    if (!(grid_ == other.grid_)) throw std::invalid_argument("LagKernel: grid mismatch");
    const Eigen::MatrixXcd even = parity_block(0) * other.parity_block(0) * grid_.dp;
    const Eigen::MatrixXcd odd = parity_block(1) * other.parity_block(1) * grid_.dp;
    return from_parity_blocks(grid_, even, odd);
}

PhaseSpaceField star_product(const PhaseSpaceField& a, const PhaseSpaceField& b) {
    a.require_same_grid(b);
    const LagKernel ka = LagKernel::from_symbol(a);
    const LagKernel kb = LagKernel::from_symbol(b);
    return ka.compose(kb).to_symbol();
}

} // namespace fvw
