#ifndef LUE_TODA_HPP
#define LUE_TODA_HPP

#include <utility>
#include <vector>

#include "lue/ladder.hpp"
#include "lue/moments.hpp"
#include "lue/report.hpp"

namespace lue {

// Everything the differential-difference checks need at one (n, s) point:
// base values from the moments route plus Richardson-extrapolated central
// finite-difference derivative estimates over a 7-point s-stencil with step
// h = s 2^{-bits/5}. The stencil lies strictly inside s > 0.
struct TodaSnapshot {
    int n;
    Real s;
    Real h_n, h_nm1, beta_n, beta_np1, alpha_n, p1_n, D_n, a_n, a_nm1, b_n, b_np1, sum_a;
    // plain d/ds estimates
    Real d_ln_h, d_ln_beta, d_p1, d_alpha, d_sum_a, d_ln_D, d_a, d_b;
    // d^2/ds^2 of ln(s^{-n(n+alpha)} D_n)
    Real d2_ln_Dtilde;
    Real fd_err;   // relative error scale of the first-derivative estimates
    Real fd_err2;  // and of the second derivative
};

// Builds the 7-point stencil pipelines once and serves snapshots for any
// n <= n_max.
class TodaStencil {
public:
    TodaStencil(int n_max, const EnsembleParams& params);
    TodaSnapshot at(int n) const;
    int n_max() const { return n_max_; }
    const EnsembleParams& params() const { return params_; }

private:
    struct Bundle {
        std::vector<Real> ln_h, ln_beta, p1, alpha_n, beta_n, sum_a, ln_D, a, b;
    };
    // offsets: -2h, -h, -h/2, 0, +h/2, +h, +2h
    EnsembleParams params_;
    int n_max_;
    Real step_;
    std::vector<Bundle> at_;
};

TodaSnapshot toda_snapshot(int n, const EnsembleParams& params);

// Right-hand sides of the coupled Riccati pair,
//   s da_n/ds = 2 b_n + (2n+1+alpha+a_n) a_n - s,
//   s db_n/ds = (2/a_n)(b_n^2 - s b_n) + (2n+alpha+1) b_n - n s.
// Throws DomainError when a_n = 0.
std::pair<Real, Real> riccati_rhs(int n, const Real& a_n, const Real& b_n,
                                  const EnsembleParams& params);

// Verifies the Toda relations against the FD estimates at every n <= n_max:
//   s d ln h_n = -a_n                              ("3.1")
//   s d ln beta_n = a_{n-1} - a_n                  ("3.2")
//   s d p1(n) = b_n                                ("3.5")
//   s d alpha_n = b_n - b_{n+1}
//               = beta_n - beta_{n+1} + alpha_n    ("3.6")
//   s d sum_{j<n} a_j = -b_n                       ("3.7")
//   s d ln D_n = -sum_{j<n} a_j                    ("3.8")
// and the Toda molecule equation for the scaled determinant
// Dt_n = s^{-n(n+alpha)} D_n,
//   d^2/ds^2 ln Dt_n = Dt_{n+1} Dt_{n-1} / Dt_n^2  ("3.9", n >= 1),
// plus the Riccati consistency of the FD slopes of a_n and b_n.
// Each record passes when the residual is below max(tol, FD error bound).
IdentityReport verify_toda(int n_max, const EnsembleParams& params, const Real& tol);

} // namespace lue

#endif
