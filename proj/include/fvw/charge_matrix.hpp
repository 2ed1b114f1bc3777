#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace fvw {

using cplx = std::complex<double>;

// Dense complex 2x2 matrix over the charge index alpha = +1, -1.
// Row/column 0 corresponds to alpha = +1 (particle), 1 to alpha = -1
// (antiparticle). The tau matrices are the Pauli matrices acting on this
// two-valued charge space.
struct ChargeMatrix {
    std::array<cplx, 4> m{}; // row-major

    cplx& operator()(std::size_t r, std::size_t c) { return m[2 * r + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return m[2 * r + c]; }

    static ChargeMatrix zero() { return {}; }

    static ChargeMatrix identity() {
        ChargeMatrix a;
        a(0, 0) = 1.0;
        a(1, 1) = 1.0;
        return a;
    }

    static ChargeMatrix tau1() {
        ChargeMatrix a;
        a(0, 1) = 1.0;
        a(1, 0) = 1.0;
        return a;
    }

    static ChargeMatrix tau2() {
        ChargeMatrix a;
        a(0, 1) = cplx(0.0, -1.0);
        a(1, 0) = cplx(0.0, 1.0);
        return a;
    }

    static ChargeMatrix tau3() {
        ChargeMatrix a;
        a(0, 0) = 1.0;
        a(1, 1) = -1.0;
        return a;
    }

    ChargeMatrix operator+(const ChargeMatrix& o) const {
        ChargeMatrix r;
        for (std::size_t i = 0; i < 4; ++i) r.m[i] = m[i] + o.m[i];
        return r;
    }

    ChargeMatrix operator-(const ChargeMatrix& o) const {
        ChargeMatrix r;
        for (std::size_t i = 0; i < 4; ++i) r.m[i] = m[i] - o.m[i];
        return r;
    }

    ChargeMatrix operator*(const ChargeMatrix& o) const {
        ChargeMatrix r;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                r(i, j) = (*this)(i, 0) * o(0, j) + (*this)(i, 1) * o(1, j);
        return r;
    }

    friend ChargeMatrix operator*(cplx s, const ChargeMatrix& a) {
        ChargeMatrix r;
        for (std::size_t i = 0; i < 4; ++i) r.m[i] = s * a.m[i];
        return r;
    }

    ChargeMatrix transpose() const {
        ChargeMatrix r = *this;
        std::swap(r(0, 1), r(1, 0));
        return r;
    }

    ChargeMatrix adjoint() const {
        ChargeMatrix r = transpose();
        for (auto& v : r.m) v = std::conj(v);
        return r;
    }

    double max_abs_diff(const ChargeMatrix& o) const {
        double d = 0.0;
        for (std::size_t i = 0; i < 4; ++i) d = std::max(d, std::abs(m[i] - o.m[i]));
        return d;
    }
};

} // namespace fvw
