#include "lue/specialfun.hpp"

#include "lue/quadrature.hpp"

namespace lue {

namespace {

// Direct quadrature of the cosh-kernel representation. The integrand extends
// to an even analytic function of t that decays like exp(-(x/2) e^|t|), so
// the real-line trapezoid engine applies after halving.
Real bessel_k_quadrature(const Real& nu, const Real& x, long work_bits,
                         const Real& rel_tol) {
    auto integrand = [&](const Real& t) -> Real {
        return exp(-x * cosh(t)) * cosh(nu * t);
    };
    QuadResult q = integrate_real_line(integrand, work_bits, rel_tol);
    return q.value / 2;
}

} // namespace

std::vector<Real> bessel_k_sequence(const Real& nu0, int count, const Real& x,
                                    const PrecisionContext& ctx) {
    if (!(x > 0)) throw DomainError("bessel_k: requires x > 0");
    if (nu0 < 0) throw DomainError("bessel_k_sequence: requires nu0 >= 0");
    if (count < 1) return {};

    const long wb = ctx.bits + 64;
    const Real xw = x.round_to(wb);
    const Real tol = ctx.quad_tol.round_to(wb) / 16;

    // Base orders mu, mu+1 with mu = frac(nu0) in [0, 1).
    Real nu_w = nu0.round_to(wb);
    Real fl = floor(nu_w);
    long steps = fl.to_long();
    Real mu = nu_w - fl;

    // Invariant: k_lo = K_ord(x), k_hi = K_{ord+1}(x).
    Real k_lo = bessel_k_quadrature(mu, xw, wb, tol);
    Real k_hi = bessel_k_quadrature(mu + 1, xw, wb, tol);
    Real ord = mu;
    auto advance = [&] {
        Real k_next = k_lo + (2 * (ord + 1) / xw) * k_hi;
        k_lo = k_hi;
        k_hi = k_next;
        ord += 1;
    };

    for (long m = 0; m < steps; ++m) advance();
    std::vector<Real> out;
    out.reserve(count);
    out.push_back(k_lo.round_to(ctx.bits));
    for (int k = 1; k < count; ++k) {
        advance();
        out.push_back(k_lo.round_to(ctx.bits));
    }
    return out;
}

Real bessel_k(const Real& nu, const Real& x, const PrecisionContext& ctx) {
    Real anu = abs(nu);  // K_nu = K_{-nu}
    return bessel_k_sequence(anu, 1, x, ctx)[0];
}

Real bessel_k_halfint(long p, const Real& x) {
    if (!(x > 0)) throw DomainError("bessel_k_halfint: requires x > 0");
    if (p < 0) throw DomainError("bessel_k_halfint: requires p >= 0");
    const long wb = x.prec() + 32;
    const Real xw = x.round_to(wb);
    Real inv2x = 1 / (2 * xw);
    Real term = Real::of(1L, wb);  // (p+k)!/(k!(p-k)!) (2x)^{-k} at k = 0
    Real sum = term;
    for (long k = 1; k <= p; ++k) {
        // ratio of consecutive summands: (p+k)(p-k+1)/k * 1/(2x)
        term *= (p + k) * (p - k + 1);
        term /= k;
        term *= inv2x;
        sum += term;
    }
    Real pref = sqrt(Real::pi(wb) / (2 * xw)) * exp(-xw);
    return (pref * sum).round_to(x.prec());
}

Real log_gamma(const Real& x) {
    if (!(x > 0)) throw DomainError("log_gamma: requires x > 0");
    Real r(x.prec());
    int sign = 0;
    mpfr_lgamma(r.raw(), &sign, x.raw(), MPFR_RNDN);
    return r;
}

Real gamma_fn(const Real& x) {
    Real r(x.prec());
    mpfr_gamma(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real laguerre_hankel_d0(int n, const Real& alpha, const PrecisionContext& ctx) {
    if (n < 0) throw DomainError("laguerre_hankel_d0: requires n >= 0");
    const long wb = ctx.bits + 32;
    Real acc = Real::of(0L, wb);
    Real a = alpha.round_to(wb);
    for (int j = 0; j < n; ++j)
        acc += log_gamma(Real::of(static_cast<long>(j) + 1, wb)) + log_gamma(a + 1 + j);
    return exp(acc).round_to(ctx.bits);
}

} // namespace lue
