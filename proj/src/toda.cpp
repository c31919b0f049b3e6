#include "lue/toda.hpp"

#include "lue/fd.hpp"

namespace lue {

TodaStencil::TodaStencil(int n_max, const EnsembleParams& params)
    : params_(params), n_max_(n_max), step_(params.s * Real::pow2(-(params.ctx.bits / 5), params.ctx.bits)) {
    if (!(params.s > 0)) throw DomainError("TodaStencil: requires s > 0");
    if (n_max < 0) throw DomainError("TodaStencil: requires n_max >= 0");

    const long bits = params.ctx.bits;
    const int table_n = n_max + 1;
    at_.reserve(7);
    for (double off : fd::offsets) {
        EnsembleParams p = params.with_s(params.s + off * step_);
        MomentTable moments = MomentTable::build(p, 2 * table_n + 4);
        RecurrenceTable table = RecurrenceTable::build(moments, table_n + 1);
        AuxTable aux = aux_from_moments(moments, table, table_n);

        Bundle b;
        Real ln_d = Real::of(0L, bits);
        Real sum_a = Real::of(0L, bits);
        for (int n = 0; n <= table_n; ++n) {
            b.ln_h.push_back(log(table.h[n]));
            b.ln_beta.push_back(n >= 1 ? log(table.beta_n[n]) : Real::of(0L, bits));
            b.p1.push_back(table.p1[n]);
            b.alpha_n.push_back(table.alpha_n[n]);
            b.beta_n.push_back(table.beta_n[n]);
            b.sum_a.push_back(sum_a);
            b.ln_D.push_back(ln_d);
            b.a.push_back(aux.a[n]);
            b.b.push_back(aux.b[n]);
            sum_a += aux.a[n];
            ln_d += b.ln_h.back();
        }
        // one extra ln_D entry so the molecule equation can reach D_{n+1}
        b.ln_D.push_back(ln_d);
        at_.push_back(std::move(b));
    }
}

TodaSnapshot TodaStencil::at(int n) const {
    if (n < 0 || n > n_max_) throw DomainError("TodaStencil::at: n out of range");
    const long bits = params_.ctx.bits;
    const Bundle& c = at_[3];  // center

    TodaSnapshot snap;
    snap.n = n;
    snap.s = params_.s;
    snap.h_n = exp(c.ln_h[n]);
    snap.h_nm1 = n >= 1 ? exp(c.ln_h[n - 1]) : Real::nan(bits);
    snap.beta_n = c.beta_n[n];
    snap.beta_np1 = c.beta_n.size() > static_cast<size_t>(n + 1) ? c.beta_n[n + 1]
                                                                 : Real::nan(bits);
    snap.alpha_n = c.alpha_n[n];
    snap.p1_n = c.p1[n];
    snap.D_n = exp(c.ln_D[n]);
    snap.a_n = c.a[n];
    snap.a_nm1 = n >= 1 ? c.a[n - 1] : Real::nan(bits);
    snap.b_n = c.b[n];
    snap.b_np1 = c.b.size() > static_cast<size_t>(n + 1) ? c.b[n + 1] : Real::nan(bits);
    snap.sum_a = c.sum_a[n];

    auto gather = [&](auto member) {
        std::vector<Real> f;
        f.reserve(7);
        for (const Bundle& bd : at_) f.push_back((bd.*member)[n]);
        return f;
    };
    Real err = Real::of(0L, bits), worst = Real::of(0L, bits);
    auto d1 = [&](auto member) {
        Real v = fd::d1(gather(member), step_, &err);
        worst = max(worst, err);
        return v;
    };
    snap.d_ln_h = d1(&Bundle::ln_h);
    snap.d_ln_beta = n >= 1 ? d1(&Bundle::ln_beta) : Real::of(0L, bits);
    snap.d_p1 = d1(&Bundle::p1);
    snap.d_alpha = d1(&Bundle::alpha_n);
    snap.d_sum_a = d1(&Bundle::sum_a);
    snap.d_ln_D = d1(&Bundle::ln_D);
    snap.d_a = d1(&Bundle::a);
    snap.d_b = d1(&Bundle::b);

    // ln Dt_n = ln D_n - n(n+alpha) ln s on the stencil
    {
        std::vector<Real> f;
        f.reserve(7);
        Real nna = Real::of(static_cast<long>(n), bits) * (n + params_.alpha);
        for (size_t i = 0; i < at_.size(); ++i) {
            Real s_i = params_.s + fd::offsets[i] * step_;
            f.push_back(at_[i].ln_D[n] - nna * log(s_i));
        }
        snap.d2_ln_Dtilde = fd::d2(f, step_, &err);
    }

    // roundoff floor: stencil values carry ~quad_tol relative error which the
    // difference quotient divides by h (h^2 for the second derivative)
    Real round1 = Real::pow2(-(params_.ctx.bits - 32), bits) / step_;
    Real round2 = round1 / step_;
    snap.fd_err = worst + round1;
    snap.fd_err2 = err + round2;
    return snap;
}

TodaSnapshot toda_snapshot(int n, const EnsembleParams& params) {
    return TodaStencil(n, params).at(n);
}

std::pair<Real, Real> riccati_rhs(int n, const Real& a_n, const Real& b_n,
                                  const EnsembleParams& params) {
    if (a_n.is_zero()) throw DomainError("riccati_rhs: a_n = 0");
    const Real& s = params.s;
    const Real& alpha = params.alpha;
    Real da = 2 * b_n + (2 * n + 1 + alpha + a_n) * a_n - s;
    Real db = (2 / a_n) * (sqr(b_n) - s * b_n) + (2 * n + alpha + 1) * b_n - n * s;
    return {da, db};
}

IdentityReport verify_toda(int n_max, const EnsembleParams& params, const Real& tol) {
    const long bits = params.ctx.bits;
    TodaStencil stencil(n_max, params);
    IdentityReport rep{"toda", {}};
    const Real& s = params.s;
    const Real& alpha = params.alpha;

    const Real zero = Real::of(0L, bits);
    for (int n = 0; n <= n_max; ++n) {
        TodaSnapshot snap = stencil.at(n);
        // residuals are relative to the identity's own scale; the pass gate
        // widens to the FD error bound when that dominates the tolerance
        auto check = [&](const std::string& id, const Real& lhs, const Real& rhs,
                         const Real& fd_abs) {
            Real scale = max(abs(lhs), abs(rhs));
            Real res = scale.is_zero() ? zero : abs(lhs - rhs) / scale;
            Real gate = scale.is_zero() ? tol : max(tol, 10 * fd_abs / scale);
            rep.add(id, n, alpha, s, res, gate);
        };
        Real fd1 = s * snap.fd_err;

        check("3.1", s * snap.d_ln_h, -snap.a_n, fd1);
        if (n >= 1) check("3.2", s * snap.d_ln_beta, snap.a_nm1 - snap.a_n, fd1);
        check("3.5", s * snap.d_p1, snap.b_n, fd1);
        check("3.6a", s * snap.d_alpha, snap.b_n - snap.b_np1, fd1);
        check("3.6b", s * snap.d_alpha, snap.beta_n - snap.beta_np1 + snap.alpha_n, fd1);
        check("3.7", s * snap.d_sum_a, -snap.b_n, fd1);
        if (n >= 1) check("3.8", s * snap.d_ln_D, -snap.sum_a, fd1);
        if (n >= 1) {
            // Dt_{n+1} Dt_{n-1} / Dt_n^2 with Dt_n = s^{-n(n+alpha)} D_n
            // reduces to beta_n / s^2 (the scaling exponents telescope to 2)
            check("3.9", snap.d2_ln_Dtilde, snap.beta_n / sqr(s), snap.fd_err2);
        }
        auto [da, db] = riccati_rhs(n, snap.a_n, snap.b_n, params);
        check("3.10-fd", s * snap.d_a, da, fd1);
        check("3.11-fd", s * snap.d_b, db, fd1);
    }
    return rep;
}

} // namespace lue
