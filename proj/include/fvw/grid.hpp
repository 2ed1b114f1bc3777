#pragma once

#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace fvw {

using cplx = std::complex<double>;

// Uniform momentum grid of N points (N a power of two), symmetric about
// zero: p_j = -(N/2) dp + j dp. The conjugate position grid has
// dq = 2 pi hbar / (N dp), so one phase-space cell has volume 2 pi hbar / N.
// States are sampled on the twice-refined half-step grid u_i = -(N/2) dp
// + i dp/2 (2N points), which realises the p +- P/2 momentum arguments of
// the Wigner transform without interpolation.
struct MomentumGrid {
    std::size_t n = 0; // point count, power of two
    double dp = 0.0;   // momentum spacing
    double hbar = 1.0;

    MomentumGrid() = default;
    MomentumGrid(std::size_t n_points, double spacing, double hbar_)
        : n(n_points), dp(spacing), hbar(hbar_) {
        if (n < 4 || (n & (n - 1)) != 0)
            throw std::invalid_argument("MomentumGrid: point count must be a power of two >= 4");
        if (!(dp > 0.0)) throw std::invalid_argument("MomentumGrid: dp must be > 0");
        if (!(hbar > 0.0)) throw std::invalid_argument("MomentumGrid: hbar must be > 0");
    }

    double p_min() const { return -0.5 * static_cast<double>(n) * dp; }
    double p(std::size_t j) const { return p_min() + static_cast<double>(j) * dp; }
    double span() const { return static_cast<double>(n) * dp; }

    double dq() const { return 2.0 * std::numbers::pi * hbar / (static_cast<double>(n) * dp); }
    double q_min() const { return -0.5 * static_cast<double>(n) * dq(); }
    double q(std::size_t m) const { return q_min() + static_cast<double>(m) * dq(); }
    double q_span() const { return static_cast<double>(n) * dq(); }

    // Half-step refinement used for state sampling.
    std::size_t half_n() const { return 2 * n; }
    double half_step() const { return 0.5 * dp; }
    // Momentum at half-grid index i, periodically wrapped.
    double u(long i) const {
        const long m = static_cast<long>(half_n());
        long w = i % m;
        if (w < 0) w += m;
        return p_min() + static_cast<double>(w) * half_step();
    }
    std::size_t wrap_half(long i) const {
        const long m = static_cast<long>(half_n());
        long w = i % m;
        if (w < 0) w += m;
        return static_cast<std::size_t>(w);
    }

    bool operator==(const MomentumGrid& o) const {
        return n == o.n && dp == o.dp && hbar == o.hbar;
    }
};

// Complex samples on the N x N phase-space grid. Row index j runs over
// momentum, column index m over position.
class PhaseSpaceField {
public:
    PhaseSpaceField() = default;
    explicit PhaseSpaceField(const MomentumGrid& g) : grid_(g), a_(g.n * g.n, cplx{}) {}

    const MomentumGrid& grid() const { return grid_; }
    std::size_t n() const { return grid_.n; }

    cplx& at(std::size_t j, std::size_t m) { return a_[j * grid_.n + m]; }
    const cplx& at(std::size_t j, std::size_t m) const { return a_[j * grid_.n + m]; }

    cplx* row(std::size_t j) { return a_.data() + j * grid_.n; }
    const cplx* row(std::size_t j) const { return a_.data() + j * grid_.n; }

    std::vector<cplx>& data() { return a_; }
    const std::vector<cplx>& data() const { return a_; }

    // Riemann sum with the phase-space measure dp dq.
    cplx integral() const {
        cplx s{};
        for (const auto& v : a_) s += v;
        return s * grid_.dp * grid_.dq();
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : a_) m = std::max(m, std::abs(v));
        return m;
    }

    double max_abs_imag() const {
        double m = 0.0;
        for (const auto& v : a_) m = std::max(m, std::abs(v.imag()));
        return m;
    }

    PhaseSpaceField& operator+=(const PhaseSpaceField& o) {
        require_same_grid(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }

    PhaseSpaceField& operator*=(cplx s) {
        for (auto& v : a_) v *= s;
        return *this;
    }

    void require_same_grid(const PhaseSpaceField& o) const {
        if (!(grid_ == o.grid_))
            throw std::invalid_argument("PhaseSpaceField: grid mismatch");
    }

private:
    MomentumGrid grid_;
    std::vector<cplx> a_;
};

} // namespace fvw
