#ifndef LUE_SPECIALFUN_HPP
#define LUE_SPECIALFUN_HPP

#include <vector>

#include "lue/real.hpp"

namespace lue {

// Modified Bessel function of the second kind (MacDonald function) K_nu(x),
// x > 0. K is even in the order, so nu is normalized to |nu|. Evaluated by
// double-exponential quadrature of integral representation
//   K_nu(x) = integral_0^inf exp(-x cosh t) cosh(nu t) dt
// for two base orders in [0, 2), then upward recurrence
//   K_{nu+1}(x) = K_{nu-1}(x) + (2 nu / x) K_nu(x),
// which is the stable direction for K. Relative error <= ctx.quad_tol.
Real bessel_k(const Real& nu, const Real& x, const PrecisionContext& ctx);

// K at the integer-spaced orders nu0, nu0+1, ..., nu0+count-1 (nu0 >= 0)
// from one pair of base quadratures.
std::vector<Real> bessel_k_sequence(const Real& nu0, int count, const Real& x,
                                    const PrecisionContext& ctx);

// Half-integer order closed form,
//   K_{p+1/2}(x) = sqrt(pi/(2x)) e^{-x} sum_{k=0}^{p} (p+k)! / (k! (p-k)! (2x)^k),
// exact in the working precision of x.
Real bessel_k_halfint(long p, const Real& x);

Real log_gamma(const Real& x);
Real gamma_fn(const Real& x);

// D_n at s = 0 for the weight x^alpha e^{-x}: the Barnes-G ratio
// G(n+1) G(n+alpha+1) / G(alpha+1) unrolled with G(z+1) = Gamma(z) G(z) into
//   prod_{j=0}^{n-1} j! Gamma(alpha+1+j),
// computed as a summed log-gamma then exponentiated. n = 0 gives 1.
Real laguerre_hankel_d0(int n, const Real& alpha, const PrecisionContext& ctx);

} // namespace lue

#endif
