#pragma once

#include "fvw/grid.hpp"
#include "fvw/params.hpp"

#include <vector>

namespace fvw {

// Two-component state in the energy (diagonal) representation, sampled on
// the half-step momentum grid. Component `plus` carries charge index
// alpha = +1 (particle), `minus` alpha = -1 (antiparticle). Normalised
// states satisfy sum_alpha sum_i |psi_alpha(u_i)|^2 h = 1.
struct TwoComponentMomentumState {
    MomentumGrid grid;
    std::vector<cplx> plus;
    std::vector<cplx> minus;

    const std::vector<cplx>& component(int alpha) const { return alpha > 0 ? plus : minus; }
    std::vector<cplx>& component(int alpha) { return alpha > 0 ? plus : minus; }
};

// Generic two-component momentum field used for the quasi-Schroedinger
// (phi, chi) representation at the conversion boundary.
struct TwoComponentField {
    MomentumGrid grid;
    std::vector<cplx> upper; // phi
    std::vector<cplx> lower; // chi
};

// Convex mixture of pure states; weights non-negative and summing to 1.
struct ChargeMixture {
    std::vector<double> weights;
    std::vector<TwoComponentMomentumState> states;
    void validate() const;
};

double state_norm(const TwoComponentMomentumState& s);
void normalize(TwoComponentMomentumState& s);
double mean_momentum(const TwoComponentMomentumState& s);
double momentum_variance(const TwoComponentMomentumState& s);

// Normalised Gaussian packet exp(-(p-p0)^2/(4 sigma_p^2)) exp(-i p q0/hbar)
// on the charge component `charge` (+1 or -1). Rejects packets whose 4-sigma
// support leaves the grid in either momentum or position.
TwoComponentMomentumState gaussian_packet(const MomentumGrid& grid, const PhysicalParams& params,
                                          double p0, double q0, double sigma_p, int charge);

// Coherent charge superposition of two Gaussian packets with complex
// amplitudes (amp_plus on the +, amp_minus on the - component), normalised.
TwoComponentMomentumState gaussian_superposition(const MomentumGrid& grid,
                                                 const PhysicalParams& params, cplx amp_plus,
                                                 double p0_plus, double q0_plus, double sigma_plus,
                                                 cplx amp_minus, double p0_minus, double q0_minus,
                                                 double sigma_minus);

// Smallest support margin of a state in units of its own spread, used for
// wrap-around warnings. Computed from the sampled amplitudes.
double support_margin_sigmas(const TwoComponentMomentumState& s);

// Change of variables between Klein-Gordon data (psi, dpsi/dt) and the
// two-component (phi, chi) form:
//   phi = (psi + (i hbar / mc^2) psi_dot) / sqrt(2),
//   chi = (psi - (i hbar / mc^2) psi_dot) / sqrt(2).
TwoComponentField klein_gordon_to_fv(const MomentumGrid& grid, const std::vector<cplx>& psi,
                                     const std::vector<cplx>& psi_dot,
                                     const PhysicalParams& params);

// Inverse map back to (psi, psi_dot).
void klein_gordon_from_fv(const TwoComponentField& f, const PhysicalParams& params,
                          std::vector<cplx>& psi, std::vector<cplx>& psi_dot);

// Pointwise application of the momentum-dependent transform U(E(p)) taking
// the (phi, chi) form to the energy representation; free-particle context.
TwoComponentMomentumState to_energy_representation(const TwoComponentField& f,
                                                   const PhysicalParams& params);

// Indefinite charge inner product <a| tau3 |b> summed over the half grid;
// preserved by the energy-representation transform.
cplx charge_inner_product(const TwoComponentField& a, const TwoComponentField& b);

} // namespace fvw
