#pragma once

#include "fvw/grid.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace fvw {

// Unnormalised in-place complex DFT, sign = -1 forward (e^{-2 pi i k m / n}),
// sign = +1 backward. Plans are cached per (size, sign).
void fft_inplace(cplx* data, std::size_t n, int sign);

enum class FourierDirection { forward, backward };

// Unitary DFT along the position axis of a phase-space field (each momentum
// row independently). Forward/backward round trip is the identity and the
// L2 norm is preserved.
PhaseSpaceField fourier_q(const PhaseSpaceField& f, FourierDirection dir);

// Band-limited (zero-padding) upsampling of n complex samples to 2n samples
// on the half-step refinement. Exact at the original nodes.
std::vector<cplx> upsample2(const std::vector<cplx>& v);

} // namespace fvw
