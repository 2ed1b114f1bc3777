#include "fvw/states.hpp"

#include "fvw/kinematics.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fvw {

void ChargeMixture::validate() const {
    if (weights.size() != states.size() || weights.empty())
        throw std::invalid_argument("ChargeMixture: weights/states size mismatch");
    double sum = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw std::invalid_argument("ChargeMixture: negative weight");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("ChargeMixture: weights must sum to 1");
}

double state_norm(const TwoComponentMomentumState& s) {
    double acc = 0.0;
    for (const auto& v : s.plus) acc += std::norm(v);
    for (const auto& v : s.minus) acc += std::norm(v);
    return acc * s.grid.half_step();
}

void normalize(TwoComponentMomentumState& s) {
    const double n = state_norm(s);
    if (!(n > 0.0)) throw std::invalid_argument("normalize: zero-norm state");
    const double f = 1.0 / std::sqrt(n);
    for (auto& v : s.plus) v *= f;
    for (auto& v : s.minus) v *= f;
}

double mean_momentum(const TwoComponentMomentumState& s) {
    double acc = 0.0;
    const std::size_t nh = s.grid.half_n();
    for (std::size_t i = 0; i < nh; ++i) {
        const double u = s.grid.u(static_cast<long>(i));
        acc += u * (std::norm(s.plus[i]) + std::norm(s.minus[i]));
    }
    return acc * s.grid.half_step() / state_norm(s);
}

double momentum_variance(const TwoComponentMomentumState& s) {
    const double mean = mean_momentum(s);
    double acc = 0.0;
    const std::size_t nh = s.grid.half_n();
    for (std::size_t i = 0; i < nh; ++i) {
        const double u = s.grid.u(static_cast<long>(i)) - mean;
        acc += u * u * (std::norm(s.plus[i]) + std::norm(s.minus[i]));
    }
    return acc * s.grid.half_step() / state_norm(s);
}

namespace {

void check_packet_margins(const MomentumGrid& grid, const PhysicalParams& params, double p0,
                          double q0, double sigma_p) {
    if (!(sigma_p > 0.0)) throw std::invalid_argument("gaussian_packet: sigma_p must be > 0");
    const double p_margin = 0.5 * grid.span() - std::abs(p0);
    if (p_margin < 4.0 * sigma_p)
        throw std::invalid_argument("gaussian_packet: momentum support margin " +
                                    std::to_string(p_margin / sigma_p) +
                                    " sigma < 4 sigma; widen the grid or shrink sigma_p");
    const double sigma_q = 0.5 * params.hbar / sigma_p;
    const double q_margin = 0.5 * grid.q_span() - std::abs(q0);
    if (q_margin < 4.0 * sigma_q)
        throw std::invalid_argument("gaussian_packet: position support margin " +
                                    std::to_string(q_margin / sigma_q) +
                                    " sigma < 4 sigma; refine dp or move q0");
}

std::vector<cplx> gaussian_samples(const MomentumGrid& grid, const PhysicalParams& params,
                                   double p0, double q0, double sigma_p) {
    const std::size_t nh = grid.half_n();
    std::vector<cplx> v(nh);
    for (std::size_t i = 0; i < nh; ++i) {
        const double u = grid.u(static_cast<long>(i));
        const double d = (u - p0) / (2.0 * sigma_p);
        const double phase = -u * q0 / params.hbar;
        v[i] = std::exp(-d * d) * cplx(std::cos(phase), std::sin(phase));
    }
    return v;
}

} // namespace

TwoComponentMomentumState gaussian_packet(const MomentumGrid& grid, const PhysicalParams& params,
                                          double p0, double q0, double sigma_p, int charge) {
    if (charge != 1 && charge != -1)
        throw std::invalid_argument("gaussian_packet: charge must be +1 or -1");
    check_packet_margins(grid, params, p0, q0, sigma_p);
    TwoComponentMomentumState s{grid, std::vector<cplx>(grid.half_n(), cplx{}),
                                std::vector<cplx>(grid.half_n(), cplx{})};
    s.component(charge) = gaussian_samples(grid, params, p0, q0, sigma_p);
    normalize(s);
    return s;
}

TwoComponentMomentumState gaussian_superposition(const MomentumGrid& grid,
                                                 const PhysicalParams& params, cplx amp_plus,
                                                 double p0_plus, double q0_plus, double sigma_plus,
                                                 cplx amp_minus, double p0_minus, double q0_minus,
                                                 double sigma_minus) {
    check_packet_margins(grid, params, p0_plus, q0_plus, sigma_plus);
    check_packet_margins(grid, params, p0_minus, q0_minus, sigma_minus);
    TwoComponentMomentumState s{grid, gaussian_samples(grid, params, p0_plus, q0_plus, sigma_plus),
                                gaussian_samples(grid, params, p0_minus, q0_minus, sigma_minus)};
    // Normalise each packet before weighting so the amplitudes act as
    // probability amplitudes.
    double np = 0.0, nm = 0.0;
    for (const auto& v : s.plus) np += std::norm(v);
    for (const auto& v : s.minus) nm += std::norm(v);
    np = std::sqrt(np * grid.half_step());
    nm = std::sqrt(nm * grid.half_step());
    for (auto& v : s.plus) v *= amp_plus / np;
    for (auto& v : s.minus) v *= amp_minus / nm;
    normalize(s);
    return s;
}

double support_margin_sigmas(const TwoComponentMomentumState& s) {
    const std::size_t nh = s.grid.half_n();
    const double sigma = std::sqrt(momentum_variance(s));
    // Outermost sample carrying more than e^{-16} of the peak density marks
    // the support edge.
    double peak = 0.0;
    for (std::size_t i = 0; i < nh; ++i)
        peak = std::max(peak, std::norm(s.plus[i]) + std::norm(s.minus[i]));
    const double floor = peak * std::exp(-16.0);
    std::size_t lo = nh, hi = 0;
    for (std::size_t i = 0; i < nh; ++i) {
        if (std::norm(s.plus[i]) + std::norm(s.minus[i]) > floor) {
            lo = std::min(lo, i);
            hi = std::max(hi, i);
        }
    }
    if (lo > hi) return 0.0;
    const double edge = std::min(static_cast<double>(lo), static_cast<double>(nh - 1 - hi)) *
                        s.grid.half_step();
    return edge / sigma;
}

TwoComponentField klein_gordon_to_fv(const MomentumGrid& grid, const std::vector<cplx>& psi,
                                     const std::vector<cplx>& psi_dot,
                                     const PhysicalParams& params) {
    if (psi.size() != psi_dot.size())
        throw std::invalid_argument("klein_gordon_to_fv: field size mismatch");
    const cplx iu(0.0, 1.0);
    const double inv_mc2 = 1.0 / params.rest_energy();
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    TwoComponentField f{grid, std::vector<cplx>(psi.size()), std::vector<cplx>(psi.size())};
    for (std::size_t i = 0; i < psi.size(); ++i) {
        const cplx d = iu * params.hbar * inv_mc2 * psi_dot[i];
        f.upper[i] = (psi[i] + d) * inv_sqrt2;
        f.lower[i] = (psi[i] - d) * inv_sqrt2;
    }
    return f;
}

void klein_gordon_from_fv(const TwoComponentField& f, const PhysicalParams& params,
                          std::vector<cplx>& psi, std::vector<cplx>& psi_dot) {
    const cplx iu(0.0, 1.0);
    const double mc2 = params.rest_energy();
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    psi.resize(f.upper.size());
    psi_dot.resize(f.upper.size());
    for (std::size_t i = 0; i < f.upper.size(); ++i) {
        psi[i] = (f.upper[i] + f.lower[i]) * inv_sqrt2;
        psi_dot[i] = mc2 * inv_sqrt2 * (f.upper[i] - f.lower[i]) / (iu * params.hbar);
    }
}

TwoComponentMomentumState to_energy_representation(const TwoComponentField& f,
                                                   const PhysicalParams& params) {
    TwoComponentMomentumState s{f.grid, std::vector<cplx>(f.upper.size()),
                                std::vector<cplx>(f.upper.size())};
    for (std::size_t i = 0; i < f.upper.size(); ++i) {
        const double e = energy_free(f.grid.u(static_cast<long>(i)), params);
        const ChargeMatrix u = fv_transform_matrix(e, params);
        s.plus[i] = u(0, 0) * f.upper[i] + u(0, 1) * f.lower[i];
        s.minus[i] = u(1, 0) * f.upper[i] + u(1, 1) * f.lower[i];
    }
    return s;
}

cplx charge_inner_product(const TwoComponentField& a, const TwoComponentField& b) {
    if (a.upper.size() != b.upper.size())
        throw std::invalid_argument("charge_inner_product: size mismatch");
    cplx acc{};
    for (std::size_t i = 0; i < a.upper.size(); ++i)
        acc += std::conj(a.upper[i]) * b.upper[i] - std::conj(a.lower[i]) * b.lower[i];
    return acc * a.grid.half_step();
}

} // namespace fvw
