#ifndef LUE_LADDER_HPP
#define LUE_LADDER_HPP

#include <vector>

#include "lue/moments.hpp"
#include "lue/orthopoly.hpp"
#include "lue/report.hpp"

namespace lue {

enum class AuxRoute { moments, hierarchy, toda_ode };

// Auxiliary quantities of the ladder-operator coefficients
//   A_n(z) = 1/z + a_n/z^2,   B_n(z) = -n/z + b_n/z^2,
// with
//   a_n = (s/h_n)     integral P_n^2 / y     w dy   (> 0 for s > 0),
//   b_n = (s/h_{n-1}) integral P_n P_{n-1}/y w dy,  b_0 = 0,
// and a_n(0) = b_n(0) = 0 in the Laguerre limit.
struct AuxTable {
    EnsembleParams params;
    AuxRoute route;
    std::vector<Real> a;  // 0 .. n_max
    std::vector<Real> b;  // 0 .. n_max, b[0] = 0
};

// Moments route: each integral expands to a bilinear form in the moments
// mu_{-1} .. mu_{2n-1} through the monic coefficient vectors.
AuxTable aux_from_moments(const MomentTable& moments, const RecurrenceTable& table,
                          int n_max);
AuxTable aux_from_moments(int n_max, const EnsembleParams& params);

// Hierarchy route: forward iteration of the coupled difference equations
//   b_{n+1} = s - (2n+1+alpha+a_n) a_n - b_n,
//   (b_n^2 - s b_n)(a_n + a_{n-1}) = [n s - (2n+alpha) b_n] a_n a_{n-1},
// the second solved as a linear equation for a_n, with initial data
//   a_0 = sqrt(s) K_alpha(2 sqrt(s)) / K_{alpha+1}(2 sqrt(s)),  b_0 = 0.
// Throws PivotError when the linear coefficient of a_n vanishes.
AuxTable hierarchy_iterate(int n_max, const EnsembleParams& params);

// Bessel-ratio initial datum a_0(s).
Real hierarchy_a0(const EnsembleParams& params);

// Residue-identity suite: checks, to relative tol,
//   alpha_n = 2n+1+alpha+a_n                      ("2.9")
//   b_{n+1} + b_n = s - alpha_n a_n               ("2.10")
//   beta_n = n(n+alpha) + b_n + sum_{j<n} a_j     ("2.11")
//   beta_n (a_n + a_{n-1}) = n s - (2n+alpha) b_n ("2.12")
//   b_n^2 - s b_n = beta_n a_n a_{n-1}            ("2.13")
// and the local closed forms bypassing the finite sum,
//   beta_n a_n^2 = [n s - (2n+alpha) b_n] a_n - (b_n^2 - s b_n)       ("2.14")
//   sum_{j<n} a_j = -n(n+alpha) - b_n
//                   + [n s-(2n+alpha) b_n]/a_n - (b_n^2-s b_n)/a_n^2  ("2.15")
// with all inputs from the moments route.
IdentityReport verify_residue_identities(int n_max, const EnsembleParams& params,
                                         const Real& tol);

// Default identity tolerance at a given precision: 2^{-bits+75}
// (10^{-15}ish relative at 256 bits).
Real default_identity_tol(long bits);

} // namespace lue

#endif
