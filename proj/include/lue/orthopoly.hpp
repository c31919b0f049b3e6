#ifndef LUE_ORTHOPOLY_HPP
#define LUE_ORTHOPOLY_HPP

#include <vector>

#include "lue/moments.hpp"

namespace lue {

// Three-term recurrence data of the monic polynomials orthogonal with
// respect to the deformed weight:
//   z P_n = P_{n+1} + alpha_n P_n + beta_n P_{n-1},  P_0 = 1, beta_0 P_{-1} = 0,
// plus the sub-leading coefficient p1(n) of P_n = z^n + p1(n) z^{n-1} + ...
//
// alpha_n and beta_n are read off the Cholesky factor of the moment matrix
// (Jacobi-matrix relations between the factor entries); beta_n is recomputed
// from the determinant ratio D_{n+1} D_{n-1} / D_n^2 and both routes must
// agree to 2^{-bits/2}.
struct RecurrenceTable {
    EnsembleParams params;
    int n_max;
    std::vector<Real> alpha_n;  // 0 .. n_max
    std::vector<Real> beta_n;   // 1 .. n_max (entry 0 unused, kept 0)
    std::vector<Real> p1;       // p1(n), 0 .. n_max+1, p1(0) = 0
    std::vector<Real> h;        // norms h_0 .. h_{n_max+1}
    std::vector<Real> D;        // determinants D_0 .. h-compatible length

    static RecurrenceTable build(const MomentTable& moments, int n_max);
    static RecurrenceTable build(const EnsembleParams& params, int n_max);
};

struct PolynomialValue {
    int n;
    Real z;
    Real value;
};

// P_n(z) by the three-term recurrence.
PolynomialValue eval_pn(int n, const Real& z, const RecurrenceTable& table);

// (P_n, P_n', P_n'') at z, by the differentiated recurrence.
struct PolynomialJet {
    Real p, dp, d2p;
};
PolynomialJet eval_pn_jet(int n, const Real& z, const RecurrenceTable& table);

// Monic coefficient vectors of P_0 .. P_{n_max}; coeff[n][k] multiplies z^k.
std::vector<std::vector<Real>> monic_coeffs(const RecurrenceTable& table, int n_max);

// (-1)^n P_n(0, s). Asserts the Heine-formula determinant-ratio identity
//   (-1)^n P_n(0, s) = D_n[w(., s, alpha+1)] / D_n[w(., s, alpha)]
// to 2^{-bits/2}, and at s = 0 additionally the closed form
// Gamma(n+alpha+1)/Gamma(alpha+1).
Real pn_zero_ratio(int n, const EnsembleParams& params);

} // namespace lue

#endif
