#include "fvw/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace fvw {

namespace {

// FFTW planning is not thread safe; execution with fftw_execute_dft is.
// Plans are created once per (size, sign) with FFTW_UNALIGNED so they can be
// applied to arbitrary buffers.
fftw_plan plan_for(std::size_t n, int sign) {
    static std::mutex mu;
    static std::map<std::pair<std::size_t, int>, fftw_plan> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, sign);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<cplx> scratch(n);
    fftw_plan p = fftw_plan_dft_1d(static_cast<int>(n),
                                   reinterpret_cast<fftw_complex*>(scratch.data()),
                                   reinterpret_cast<fftw_complex*>(scratch.data()),
                                   sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!p) throw std::runtime_error("fft_inplace: plan creation failed");
    cache.emplace(key, p);
    return p;
}

} // namespace

void fft_inplace(cplx* data, std::size_t n, int sign) {
    fftw_plan p = plan_for(n, sign);
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(data),
                     reinterpret_cast<fftw_complex*>(data));
}

PhaseSpaceField fourier_q(const PhaseSpaceField& f, FourierDirection dir) {
    PhaseSpaceField out = f;
    const std::size_t n = out.n();
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    const int sign = dir == FourierDirection::forward ? -1 : +1;
    for (std::size_t j = 0; j < n; ++j) {
        cplx* row = out.row(j);
        fft_inplace(row, n, sign);
        for (std::size_t m = 0; m < n; ++m) row[m] *= scale;
    }
    return out;
}

std::vector<cplx> upsample2(const std::vector<cplx>& v) {
    const std::size_t n = v.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("upsample2: length must be a power of two");
    std::vector<cplx> spec = v;
    fft_inplace(spec.data(), n, -1);
    std::vector<cplx> pad(2 * n, cplx{});
    const std::size_t h = n / 2;
    for (std::size_t k = 0; k < h; ++k) pad[k] = spec[k];
    for (std::size_t k = h + 1; k < n; ++k) pad[k + n] = spec[k];
    // Split the Nyquist coefficient symmetrically so real inputs stay real.
    pad[h] = 0.5 * spec[h];
    pad[2 * n - h] = 0.5 * spec[h];
    fft_inplace(pad.data(), 2 * n, +1);
    const double scale = 1.0 / static_cast<double>(n);
    for (auto& x : pad) x *= scale;
    return pad;
}

} // namespace fvw
