#ifndef LUE_FD_HPP
#define LUE_FD_HPP

#include <vector>

#include "lue/real.hpp"

namespace lue::fd {

// Sample offsets of the 7-point Richardson stencil, in units of the step h:
// indices 0..6 at {-2, -1, -1/2, 0, +1/2, +1, +2} h.
inline constexpr double offsets[7] = {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0};

// 4th-order central first derivative at steps h and h/2, Richardson-combined
// to 6th order. err receives |combined - finer estimate|.
inline Real d1(const std::vector<Real>& f, const Real& h, Real* err = nullptr) {
    Real d_h = (f[0] - 8 * f[1] + 8 * f[5] - f[6]) / (12 * h);
    Real d_h2 = (f[1] - 8 * f[2] + 8 * f[4] - f[5]) / (6 * h);
    Real r = (16 * d_h2 - d_h) / 15;
    if (err) *err = abs(r - d_h2);
    return r;
}

// Same for the second derivative.
inline Real d2(const std::vector<Real>& f, const Real& h, Real* err = nullptr) {
    Real d_h = (-f[0] + 16 * f[1] - 30 * f[3] + 16 * f[5] - f[6]) / (12 * sqr(h));
    Real d_h2 = (-f[1] + 16 * f[2] - 30 * f[3] + 16 * f[4] - f[5]) / (3 * sqr(h));
    Real r = (16 * d_h2 - d_h) / 15;
    if (err) *err = abs(r - d_h2);
    return r;
}

} // namespace lue::fd

#endif
