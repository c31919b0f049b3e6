#include "lue/ladder.hpp"

#include "lue/specialfun.hpp"

namespace lue {

Real default_identity_tol(long bits) { return Real::pow2(-bits + 75, bits); }

AuxTable aux_from_moments(const MomentTable& moments, const RecurrenceTable& table,
                          int n_max) {
    const EnsembleParams& params = moments.params();
    const long bits = params.ctx.bits;
    AuxTable t{params, AuxRoute::moments, {}, {}};
    t.a.reserve(n_max + 1);
    t.b.reserve(n_max + 1);

    if (params.laguerre_limit()) {
        for (int n = 0; n <= n_max; ++n) {
            t.a.push_back(Real::of(0L, bits));
            t.b.push_back(Real::of(0L, bits));
        }
        return t;
    }

    auto coeff = monic_coeffs(table, n_max);
    // bilinear(m, n) = integral P_m P_n / y w dy = sum c^m_j c^n_k mu_{j+k-1}
    auto bilinear = [&](int m, int n) {
        Real acc = Real::of(0L, bits);
        for (int j = 0; j <= m; ++j)
            for (int k = 0; k <= n; ++k) acc += coeff[m][j] * coeff[n][k] * moments.mu(j + k - 1);
        return acc;
    };
    for (int n = 0; n <= n_max; ++n) {
        t.a.push_back(params.s / table.h[n] * bilinear(n, n));
        if (n == 0)
            t.b.push_back(Real::of(0L, bits));
        else
            t.b.push_back(params.s / table.h[n - 1] * bilinear(n, n - 1));
    }
    return t;
}

AuxTable aux_from_moments(int n_max, const EnsembleParams& params) {
    MomentTable moments = MomentTable::build(params, 2 * n_max + 2);
    RecurrenceTable table = RecurrenceTable::build(moments, n_max);
    return aux_from_moments(moments, table, n_max);
}

Real hierarchy_a0(const EnsembleParams& params) {
    if (params.laguerre_limit()) return Real::of(0L, params.ctx.bits);
    Real two_rt = 2 * sqrt(params.s);
    std::vector<Real> ks = bessel_k_sequence(params.alpha, 2, two_rt, params.ctx);
    return sqrt(params.s) * ks[0] / ks[1];
}

AuxTable hierarchy_iterate(int n_max, const EnsembleParams& params) {
    if (params.laguerre_limit())
        throw DomainError("hierarchy_iterate: requires s > 0");
    const long bits = params.ctx.bits;
    const Real& s = params.s;
    const Real& alpha = params.alpha;

    AuxTable t{params, AuxRoute::hierarchy, {}, {}};
    t.a.push_back(hierarchy_a0(params));
    t.b.push_back(Real::of(0L, bits));

    for (int n = 1; n <= n_max; ++n) {
        const Real& a_prev = t.a[n - 1];
        const Real& b_prev = t.b[n - 1];
        Real b = s - (2 * (n - 1) + 1 + alpha + a_prev) * a_prev - b_prev;
        // linear solve for a_n:
        //   (b^2 - s b)(a_n + a_prev) = [n s - (2n+alpha) b] a_n a_prev
        Real q = sqr(b) - s * b;
        Real lin1 = (n * s - (2 * n + alpha) * b) * a_prev;
        Real lin = lin1 - q;
        Real scale = max(abs(lin1), abs(q));
        if (lin.is_zero() ||
            (!scale.is_zero() && lin.exponent() < scale.exponent() - (bits - 16)))
            throw PivotError("hierarchy_iterate: degenerate pivot solving for a_n at n = " +
                                 std::to_string(n) + ", s = " + s.str(8),
                             n);
        Real a = q * a_prev / lin;
        t.a.push_back(a);
        t.b.push_back(b);
    }
    return t;
}

IdentityReport verify_residue_identities(int n_max, const EnsembleParams& params,
                                         const Real& tol) {
    const long bits = params.ctx.bits;
    MomentTable moments = MomentTable::build(params, 2 * n_max + 4);
    RecurrenceTable table = RecurrenceTable::build(moments, n_max + 1);
    AuxTable aux = aux_from_moments(moments, table, n_max + 1);

    IdentityReport rep{"residue", {}};
    const Real& s = params.s;
    const Real& alpha = params.alpha;
    Real sum_a = Real::of(0L, bits);

    for (int n = 0; n <= n_max; ++n) {
        const Real& a = aux.a[n];
        const Real& b = aux.b[n];
        rep.add("2.9", n, alpha, s, rel_err(table.alpha_n[n], 2 * n + 1 + alpha + a), tol);
        rep.add("2.10", n, alpha, s,
                rel_err(aux.b[n + 1] + b, s - table.alpha_n[n] * a), tol);
        if (n >= 1) {
            const Real& beta = table.beta_n[n];
            const Real& a_prev = aux.a[n - 1];
            Real nna = Real::of(static_cast<long>(n), bits) * (n + alpha);
            Real q = sqr(b) - s * b;
            Real lin = n * s - (2 * n + alpha) * b;
            rep.add("2.11", n, alpha, s, rel_err(beta, nna + b + sum_a), tol);
            rep.add("2.12", n, alpha, s, rel_err(beta * (a + a_prev), lin), tol);
            rep.add("2.13", n, alpha, s, rel_err(q, beta * a * a_prev), tol);
            rep.add("2.14", n, alpha, s, rel_err(beta * sqr(a), lin * a - q), tol);
            if (!a.is_zero())  // the sum formula divides by a_n; vacuous at s = 0
                rep.add("2.15", n, alpha, s,
                        rel_err(sum_a, -nna - b + lin / a - q / sqr(a)), tol);
        }
        sum_a += a;
    }
    return rep;
}

} // namespace lue
