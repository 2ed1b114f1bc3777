#include "fvw/kinematics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fvw {

double energy_free(double p, const PhysicalParams& params) {
    const double mc2 = params.rest_energy();
    return std::hypot(mc2, params.c * p);
}

double energy_rotator(int n, const PhysicalParams& params) {
    if (n < 0)
        throw std::invalid_argument("energy_rotator: level index must be >= 0, got " +
                                    std::to_string(n));
    const double mc2 = params.rest_energy();
    return std::sqrt(mc2 * mc2 + 2.0 * mc2 * params.hbar * params.omega * (n + 0.5));
}

KinematicFactor kinematic_factors(double e1, double e2) {
    if (!(e1 > 0.0) || !(e2 > 0.0))
        throw std::invalid_argument("kinematic_factors: energies must be positive");
    const double denom = 2.0 * std::sqrt(e1 * e2);
    return {(e1 + e2) / denom, (e1 - e2) / denom};
}

ChargeMatrix fv_transform_matrix(double e, const PhysicalParams& params, bool inverse) {
    const double mc2 = params.rest_energy();
    if (!(e > 0.0))
        throw std::invalid_argument("fv_transform_matrix: energy must be positive");
    const double norm = 2.0 * std::sqrt(mc2 * e);
    const double a = (e + mc2) / norm;
    double b = (e - mc2) / norm;
    if (inverse) b = -b;
    ChargeMatrix u;
    u(0, 0) = a;
    u(1, 1) = a;
    u(0, 1) = b;
    u(1, 0) = b;
    return u;
}

ChargeMatrix r_matrix(double e1, double e2) {
    const KinematicFactor f = kinematic_factors(e1, e2);
    ChargeMatrix r;
    r(0, 0) = f.epsilon;
    r(1, 1) = f.epsilon;
    r(0, 1) = f.chi;
    r(1, 0) = f.chi;
    return r;
}

} // namespace fvw
