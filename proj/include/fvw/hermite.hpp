#pragma once

#include "fvw/grid.hpp"
#include "fvw/params.hpp"

#include <vector>

namespace fvw {

// Momentum-space oscillator eigenfunctions phi_n(p), n < n_max, sampled on
// the half-step grid. Real orthonormal convention; momentum scale
// p0 = sqrt(m hbar omega). Built with the stable three-term recurrence.
class HermiteBasis {
public:
    HermiteBasis(std::size_t n_max, const MomentumGrid& grid, const PhysicalParams& params);

    std::size_t n_max() const { return n_max_; }
    const MomentumGrid& grid() const { return grid_; }
    const PhysicalParams& params() const { return params_; }

    // phi_n at half-grid index i (i < 2N).
    double at(std::size_t n, std::size_t i) const { return phi_[n][i]; }
    const std::vector<double>& level(std::size_t n) const { return phi_[n]; }

    // phi_n on the coarse grid point p_j.
    double coarse(std::size_t n, std::size_t j) const { return phi_[n][2 * j]; }

    // Quadrature of phi_m phi_n over the half-step grid; identity matrix up
    // to grid truncation error.
    double overlap(std::size_t m, std::size_t n) const;

private:
    std::size_t n_max_;
    MomentumGrid grid_;
    PhysicalParams params_;
    std::vector<std::vector<double>> phi_; // [n][half-grid index]
};

} // namespace fvw
