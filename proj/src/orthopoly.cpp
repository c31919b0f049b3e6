#include "lue/orthopoly.hpp"

#include "lue/specialfun.hpp"

namespace lue {

RecurrenceTable RecurrenceTable::build(const MomentTable& moments, int n_max) {
    if (n_max < 0) throw DomainError("RecurrenceTable: requires n_max >= 0");
    const EnsembleParams& params = moments.params();
    const long bits = params.ctx.bits;
    const int dim = n_max + 2;  // alpha_n needs the factor column n_max+1
    HankelData hd = HankelData::build(moments, dim);

    RecurrenceTable t{params, n_max, {}, {}, {}, {}, {}};
    t.alpha_n.reserve(n_max + 1);
    t.beta_n.reserve(n_max + 1);
    const Real gate = Real::pow2(-(bits / 2), bits);

    for (int k = 0; k <= n_max; ++k) {
        Real a = hd.r(k, k + 1) / hd.r(k, k);
        if (k > 0) a -= hd.r(k - 1, k) / hd.r(k - 1, k - 1);
        t.alpha_n.push_back(a);
        if (k == 0) {
            t.beta_n.push_back(Real::of(0L, bits));  // beta_0 P_{-1} = 0 convention
        } else {
            Real b = sqr(hd.r(k, k) / hd.r(k - 1, k - 1));
            Real b_det = hd.D(k + 1) * hd.D(k - 1) / sqr(hd.D(k));
            if (rel_err(b, b_det) > gate)
                throw Error("recurrence: beta_n routes disagree at n = " + std::to_string(k));
            t.beta_n.push_back(b);
        }
    }
    t.p1.push_back(Real::of(0L, bits));
    for (int n = 0; n <= n_max; ++n) t.p1.push_back(t.p1[n] - t.alpha_n[n]);
    for (int n = 0; n < dim; ++n) t.h.push_back(hd.h(n));
    for (int n = 0; n <= dim; ++n) t.D.push_back(hd.D(n));
    return t;
}

RecurrenceTable RecurrenceTable::build(const EnsembleParams& params, int n_max) {
    return build(MomentTable::build(params, 2 * n_max + 2), n_max);
}

PolynomialValue eval_pn(int n, const Real& z, const RecurrenceTable& table) {
    if (n < 0 || n > table.n_max + 1)
        throw DomainError("eval_pn: degree out of table range");
    const long bits = table.params.ctx.bits;
    Real pm = Real::of(0L, bits);  // P_{-1}
    Real p = Real::of(1L, bits);   // P_0
    for (int k = 0; k < n; ++k) {
        Real next = (z - table.alpha_n[k]) * p - (k > 0 ? table.beta_n[k] * pm : Real::of(0L, bits));
        pm = p;
        p = next;
    }
    return {n, z, p};
}

PolynomialJet eval_pn_jet(int n, const Real& z, const RecurrenceTable& table) {
    if (n < 0 || n > table.n_max + 1)
        throw DomainError("eval_pn_jet: degree out of table range");
    const long bits = table.params.ctx.bits;
    Real zero = Real::of(0L, bits);
    Real pm = zero, dpm = zero, d2pm = zero;
    Real p = Real::of(1L, bits), dp = zero, d2p = zero;
    for (int k = 0; k < n; ++k) {
        Real zk = z - table.alpha_n[k];
        Real bk = k > 0 ? table.beta_n[k] : zero;
        Real next = zk * p - bk * pm;
        Real dnext = p + zk * dp - bk * dpm;
        Real d2next = 2 * dp + zk * d2p - bk * d2pm;
        pm = p; dpm = dp; d2pm = d2p;
        p = next; dp = dnext; d2p = d2next;
    }
    return {p, dp, d2p};
}

std::vector<std::vector<Real>> monic_coeffs(const RecurrenceTable& table, int n_max) {
    if (n_max > table.n_max + 1)
        throw DomainError("monic_coeffs: degree out of table range");
    const long bits = table.params.ctx.bits;
    const Real zero = Real::of(0L, bits);
    std::vector<std::vector<Real>> c;
    c.push_back({Real::of(1L, bits)});
    if (n_max == 0) return c;
    c.push_back({-table.alpha_n[0], Real::of(1L, bits)});
    for (int n = 1; n < n_max; ++n) {
        std::vector<Real> next(n + 2, zero);
        for (int k = 0; k <= n; ++k) {
            next[k + 1] += c[n][k];                      // z * P_n
            next[k] -= table.alpha_n[n] * c[n][k];       // -alpha_n P_n
        }
        for (int k = 0; k <= n - 1; ++k) next[k] -= table.beta_n[n] * c[n - 1][k];
        c.push_back(std::move(next));
    }
    return c;
}

Real pn_zero_ratio(int n, const EnsembleParams& params) {
    const long bits = params.ctx.bits;
    if (n == 0) return Real::of(1L, bits);

    RecurrenceTable table = RecurrenceTable::build(params, n - 1);
    Real p0 = eval_pn(n, Real::of(0L, bits), table).value;
    Real value = (n % 2 == 0) ? p0 : -p0;

    const Real gate = Real::pow2(-(bits / 2), bits);
    Real dn_up = hankel_det(n, params.with_alpha(params.alpha + 1));
    Real dn = hankel_det(n, params);
    if (rel_err(value, dn_up / dn) > gate)
        throw Error("pn_zero_ratio: determinant-ratio identity violated at n = " +
                    std::to_string(n));
    if (params.laguerre_limit()) {
        const long wb = bits + 32;
        Real a = params.alpha.round_to(wb);
        Real closed = exp(log_gamma(a + 1 + n) - log_gamma(a + 1)).round_to(bits);
        if (rel_err(value, closed) > gate)
            throw Error("pn_zero_ratio: Laguerre closed form violated at n = " +
                        std::to_string(n));
    }
    return value;
}

} // namespace lue
