#pragma once

#include <stdexcept>
#include <string>

namespace fvw {

// Physical constants for a run. Natural units (m = c = hbar = 1) are the
// default; all four stay configurable so the classical-limit behaviour can
// be probed by scaling hbar, and omega sets the oscillator spectrum for the
// magnetic scenario.
struct PhysicalParams {
    double mass = 1.0;
    double c = 1.0;
    double hbar = 1.0;
    double omega = 1.0;

    double rest_energy() const { return mass * c * c; }

    void validate() const {
        if (!(mass > 0.0)) throw std::invalid_argument("PhysicalParams: mass must be > 0");
        if (!(c > 0.0)) throw std::invalid_argument("PhysicalParams: c must be > 0");
        if (!(hbar > 0.0)) throw std::invalid_argument("PhysicalParams: hbar must be > 0");
        if (!(omega > 0.0)) throw std::invalid_argument("PhysicalParams: omega must be > 0");
    }
};

} // namespace fvw
