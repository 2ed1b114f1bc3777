#include "fvw/hermite.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fvw {

HermiteBasis::HermiteBasis(std::size_t n_max, const MomentumGrid& grid,
                           const PhysicalParams& params)
    : n_max_(n_max), grid_(grid), params_(params) {
    params.validate();
    if (n_max_ == 0 || n_max_ > 128)
        throw std::invalid_argument("HermiteBasis: n_max must be in [1, 128]");

    const double p0 = std::sqrt(params.mass * params.hbar * params.omega);
    // Resolution guard: the highest level must fit inside the grid with
    // margin, and its oscillation must be sampled by several half-steps.
    const double turning = p0 * std::sqrt(2.0 * static_cast<double>(n_max_) - 1.0);
    const double half_span = 0.5 * grid.span();
    if (half_span < turning + 4.0 * p0)
        throw std::invalid_argument(
            "HermiteBasis: grid span too small for n_max (need half-span >= " +
            std::to_string(turning + 4.0 * p0) + ", have " + std::to_string(half_span) + ")");
    const double min_wavelength = std::numbers::pi * p0 / std::sqrt(2.0 * n_max_ + 1.0);
    if (grid.half_step() > 0.25 * min_wavelength)
        throw std::invalid_argument("HermiteBasis: half-step too coarse to resolve level " +
                                    std::to_string(n_max_ - 1));

    const std::size_t nh = grid.half_n();
    phi_.assign(n_max_, std::vector<double>(nh, 0.0));
    const double norm0 = 1.0 / (std::pow(std::numbers::pi, 0.25) * std::sqrt(p0));
    for (std::size_t i = 0; i < nh; ++i) {
        const double xi = grid.u(static_cast<long>(i)) / p0;
        phi_[0][i] = norm0 * std::exp(-0.5 * xi * xi);
        if (n_max_ > 1) phi_[1][i] = std::sqrt(2.0) * xi * phi_[0][i];
        for (std::size_t k = 2; k < n_max_; ++k) {
            const double n = static_cast<double>(k);
            phi_[k][i] = std::sqrt(2.0 / n) * xi * phi_[k - 1][i] -
                         std::sqrt((n - 1.0) / n) * phi_[k - 2][i];
        }
    }
}

double HermiteBasis::overlap(std::size_t m, std::size_t n) const {
    double s = 0.0;
    const std::size_t nh = grid_.half_n();
    for (std::size_t i = 0; i < nh; ++i) s += phi_[m][i] * phi_[n][i];
    return s * grid_.half_step();
}

} // namespace fvw
