#pragma once

#include "fvw/charge_matrix.hpp"
#include "fvw/params.hpp"

namespace fvw {

// Symmetric/antisymmetric energy combinations weighting the even and odd
// parts of the two-point charge structure. They satisfy
// epsilon^2 - chi^2 = 1 identically and epsilon >= 1, with chi = 0 iff the
// two energies coincide.
struct KinematicFactor {
    double epsilon;
    double chi;
};

// Relativistic free-particle energy sqrt(m^2 c^4 + c^2 p^2). Even in p,
// bounded below by the rest energy.
double energy_free(double p, const PhysicalParams& params);

// Relativistic rotator spectrum sqrt(m^2 c^4 + 2 m c^2 hbar omega (n + 1/2)),
// strictly increasing in the level index. Negative levels are rejected.
double energy_rotator(int n, const PhysicalParams& params);

// epsilon = (E1+E2) / (2 sqrt(E1 E2)), chi = (E1-E2) / (2 sqrt(E1 E2)).
// Rejects non-positive energies.
KinematicFactor kinematic_factors(double e1, double e2);

// Transform matrix between the quasi-Schroedinger two-component form and the
// energy (diagonal) representation:
//   U(E) = [(E + mc^2) + (E - mc^2) tau1] / (2 sqrt(mc^2 E)).
// With `inverse` the sign of the tau1 term flips; U * U^{-1} = I.
ChargeMatrix fv_transform_matrix(double e, const PhysicalParams& params, bool inverse = false);

// R(s1, s2) = U(s1) U^{-1}(s2) = epsilon(s1,s2) I + chi(s1,s2) tau1.
ChargeMatrix r_matrix(double e1, double e2);

} // namespace fvw
