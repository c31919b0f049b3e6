#include "lue/lax.hpp"

#include "lue/fd.hpp"
#include "lue/toda.hpp"

namespace lue {

namespace {

// Everything the triple needs at levels n-1, n, n+1, moments route.
struct LaxInputs {
    Real h_nm1, h_n, h_np1;
    Real a_nm1, a_n, a_np1;
    Real b_n, b_np1;
    Real alpha_n, alpha_np1;
    Real beta_n;
};

LaxInputs lax_inputs(int n, const EnsembleParams& params) {
    if (n < 1) throw DomainError("lax: requires n >= 1 (the triple involves h_{n-1})");
    MomentTable moments = MomentTable::build(params, 2 * n + 8);
    RecurrenceTable table = RecurrenceTable::build(moments, n + 2);
    AuxTable aux = aux_from_moments(moments, table, n + 1);
    return {table.h[n - 1], table.h[n],     table.h[n + 1],  aux.a[n - 1],
            aux.a[n],       aux.a[n + 1],   aux.b[n],        aux.b[n + 1],
            table.alpha_n[n], table.alpha_n[n + 1], table.beta_n[n]};
}

Mat2 make_a1(int n, const EnsembleParams& params, const Real& h_n, const Real& h_nm1,
             const Real& c) {
    Real half = params.alpha / 2 + n;
    return {half, -h_n / c, c / h_nm1, -half};
}

Mat2 make_a2(const EnsembleParams& params, const Real& h_n, const Real& a,
             const Real& b, const Real& c) {
    const Real& s = params.s;
    return {s / 2 - b, -h_n * a / c, c * b * (b - s) / (a * h_n), b - s / 2};
}

Mat2 make_u0(const Real& alpha_n, const Real& h_n, const Real& c) {
    Real zero = Real::of(0L, h_n.prec());
    return {-alpha_n, h_n / c, -c / h_n, zero};
}

LaxData build_lax_from(int n, const EnsembleParams& params, const LaxInputs& in,
                       const Real& c) {
    return {n,
            params.s,
            in.h_n,
            in.h_nm1,
            in.a_n,
            in.b_n,
            in.alpha_n,
            make_a1(n, params, in.h_n, in.h_nm1, c),
            make_a2(params, in.h_n, in.a_n, in.b_n, c),
            make_u0(in.alpha_n, in.h_n, c)};
}

} // namespace

LaxData build_lax(int n, const EnsembleParams& params, const Real& gauge_c) {
    return build_lax_from(n, params, lax_inputs(n, params), gauge_c);
}

LaxData build_lax(int n, const EnsembleParams& params) {
    return build_lax(n, params, Real::of(1L, params.ctx.bits));
}

JMParams jm_params(int n, const EnsembleParams& params) {
    LaxInputs in = lax_inputs(n, params);
    const long bits = params.ctx.bits;
    Real t = sqrt(params.s);
    Real tp = pow(t, Real::of(2L, bits) * n + params.alpha);  // t^{2n+alpha}
    Real u = -in.h_n / tp;
    Real v = tp / in.h_nm1;
    Real zeta = -in.b_n / t;
    Real w = in.b_n.is_zero() ? Real::nan(bits) : -in.h_n * (in.a_n / in.b_n) / tp;
    return {n, t, u, v, zeta, w, -params.alpha - 2 * n, params.alpha};
}

Real theta0_first_integral(int n, const EnsembleParams& params) {
    LaxInputs in = lax_inputs(n, params);
    const Real& s = params.s;
    // (5.40) with the t-powers and w cancelled: u/w = b/a, w v = -beta a/b,
    // so -(2 zeta/t) w v = -2 beta_n a_n / s stays finite for all b_n.
    Real term1 = (2 * n + params.alpha) * (1 - 2 * in.b_n / s);
    Real term2 = (2 * in.b_n / in.a_n) * (s - in.b_n) / s;
    Real term3 = -2 * in.beta_n * in.a_n / s;
    return term1 + term2 + term3;
}

CompatResiduals compatibility_residuals(int n, const EnsembleParams& params,
                                        const std::vector<Cplx>& z_samples,
                                        const Real& gauge_c) {
    const long bits = params.ctx.bits;
    const Real& s = params.s;
    const Real zero = Real::of(0L, bits);
    const Real& c = gauge_c;
    LaxInputs in = lax_inputs(n, params);

    LaxData dn = build_lax_from(n, params, in, c);
    LaxInputs in_up{in.h_n,     in.h_np1,     Real::nan(bits), in.a_n, in.a_np1,
                    Real::nan(bits), in.b_np1, Real::nan(bits), in.alpha_np1,
                    Real::nan(bits), Real::nan(bits)};
    LaxData dn1 = build_lax_from(n + 1, params, in_up, c);

    // closed-form s-derivatives: s h' = -h a, s a' = Riccati, s b' = Riccati
    auto [sa, sb] = riccati_rhs(n, in.a_n, in.b_n, params);
    Real ap = sa / s, bp = sb / s;
    Real hnp = -in.h_n * in.a_n / s;
    Real hnm1p = -in.h_nm1 * in.a_nm1 / s;

    Mat2 dA1_n{zero, -hnp / c, -c * hnm1p / sqr(in.h_nm1), zero};
    Mat2 dA2_n = [&]() -> Mat2 {
        Real e11 = Real::of(0.5, bits) - bp;
        Real e12 = -(hnp * in.a_n + in.h_n * ap) / c;
        Real g = in.b_n * (in.b_n - s) / (in.a_n * in.h_n);
        Real dg = (bp * (in.b_n - s) + in.b_n * (bp - 1)) / (in.a_n * in.h_n) -
                  g * (ap / in.a_n + hnp / in.h_n);
        return {e11, e12, c * dg, -e11};
    }();
    Mat2 dU0 = {-ap, hnp / c, c * hnp / sqr(in.h_n), zero};

    const Mat2 sigma3_half{Real::of(-0.5, bits), zero, zero, Real::of(0.5, bits)};
    const Mat2 e11m{Real::of(1L, bits), zero, zero, zero};

    auto a_of = [&](const LaxData& d, const Cplx& z) {
        Cplx iz = z.inverse();
        return CMat2::lift(sigma3_half) + CMat2::lift(d.A1) * iz +
               CMat2::lift(d.A2) * (iz * iz);
    };
    auto b_of = [&](const LaxData& d, const Cplx& z) {
        Cplx iz = z.inverse();
        return CMat2::lift(d.A2) * (iz * (-1 / s));
    };
    auto u_of = [&](const LaxData& d, const Cplx& z) {
        CMat2 u = CMat2::lift(d.U0);
        u.a = u.a + z;
        return u;
    };

    CompatResiduals out{zero, zero, zero};
    for (const Cplx& z : z_samples) {
        Cplx iz = z.inverse();
        CMat2 A = a_of(dn, z), A1 = a_of(dn1, z);
        CMat2 B = b_of(dn, z), B1 = b_of(dn1, z);
        CMat2 U = u_of(dn, z);

        // 5.19: dA/ds - dB/dz = [B, A]
        CMat2 dA_ds = CMat2::lift(dA1_n) * iz + CMat2::lift(dA2_n) * (iz * iz);
        CMat2 dB_dz = CMat2::lift(dn.A2) * (iz * iz * (1 / s));
        CMat2 comm = B * A - A * B;
        CMat2 r1 = dA_ds - dB_dz - comm;
        Real scale1 = max(max(dA_ds.max_abs(), dB_dz.max_abs()),
                          max(comm.max_abs(), Real::pow2(-bits, bits)));
        out.r_zs = max(out.r_zs, r1.max_abs() / scale1);

        // 5.20: dU/ds = B(n+1) U - U B(n); z E11 is s-independent so dU/ds = dU0
        CMat2 rhs20 = B1 * U - U * B;
        CMat2 r2 = CMat2::lift(dU0) - rhs20;
        Real scale2 = max(CMat2::lift(dU0).max_abs(),
                          max(rhs20.max_abs(), Real::pow2(-bits, bits)));
        out.r_sn = max(out.r_sn, r2.max_abs() / scale2);

        // 5.21: dU/dz = A(n+1) U - U A(n)
        CMat2 rhs21 = A1 * U - U * A;
        CMat2 r3 = CMat2::lift(e11m) - rhs21;
        Real scale3 = max(CMat2::lift(e11m).max_abs(),
                          max(rhs21.max_abs(), Real::pow2(-bits, bits)));
        out.r_zn = max(out.r_zn, r3.max_abs() / scale3);
    }
    return out;
}

CompatResiduals compatibility_residuals(int n, const EnsembleParams& params,
                                        const std::vector<Cplx>& z_samples) {
    return compatibility_residuals(n, params, z_samples, Real::of(1L, params.ctx.bits));
}

IdentityReport jm_scalar_system(int n, const EnsembleParams& params, const Real& tol) {
    if (n < 1) throw DomainError("jm_scalar_system: requires n >= 1");
    const long bits = params.ctx.bits;
    IdentityReport rep{"jm-scalar", {}};
    const Real& s = params.s;
    const Real& alpha = params.alpha;

    LaxInputs in = lax_inputs(n, params);
    TodaStencil stencil(n, params);
    TodaSnapshot sn = stencil.at(n);
    TodaSnapshot sm = stencil.at(n - 1);

    auto check = [&](const std::string& id, const Real& lhs, const Real& rhs,
                     const Real& fd_abs) {
        Real scale = max(abs(lhs), abs(rhs));
        Real res = scale.is_zero() ? Real::of(0L, bits) : abs(lhs - rhs) / scale;
        Real gate = scale.is_zero() ? tol : max(tol, 10 * fd_abs / scale);
        rep.add(id, n, alpha, s, res, gate);
    };
    Real fd1 = s * sn.fd_err * max(Real::of(1L, bits), max(in.h_n, in.h_nm1));

    check("5.45", s * sn.d_ln_h * in.h_n, -in.h_n * in.a_n, fd1);
    check("5.46", s * sm.d_ln_h * in.h_nm1,
          sqr(in.h_nm1) / in.h_n * (in.b_n / in.a_n) * (s - in.b_n), fd1);
    check("5.47", s * sn.d_b,
          in.b_n - (in.b_n / in.a_n) * (s - in.b_n) - (in.h_n / in.h_nm1) * in.a_n,
          s * sn.fd_err);
    check("5.48", s * sn.d_a, 2 * in.b_n + (2 * n + 1 + alpha + in.a_n) * in.a_n - s,
          s * sn.fd_err);
    rep.add("5.40", n, alpha, s, rel_err(theta0_first_integral(n, params), alpha), tol);
    JMParams jm = jm_params(n, params);
    rep.add("uv=-beta", n, alpha, s, rel_err(jm.u * jm.v, -in.beta_n), tol);
    return rep;
}

IdentityReport s_ladder_check(int n, const std::vector<Real>& z_samples,
                              const EnsembleParams& params, const Real& tol) {
    if (n < 1) throw DomainError("s_ladder_check: requires n >= 1");
    const long bits = params.ctx.bits;
    IdentityReport rep{"s-ladder", {}};
    const Real& s = params.s;
    const Real& alpha = params.alpha;
    Real step = s * Real::pow2(-(params.ctx.bits / 5), bits);

    // stencil tables for P_n(z, s_i)
    std::vector<RecurrenceTable> tables;
    tables.reserve(7);
    for (double off : fd::offsets)
        tables.push_back(RecurrenceTable::build(params.with_s(s + off * step), n));
    const RecurrenceTable& center = tables[3];

    AuxTable aux = aux_from_moments(n, params);
    const Real& a_n = aux.a[n];
    const Real& a_nm1 = aux.a[n - 1];
    const Real& b_n = aux.b[n];
    const Real& b_nm1 = aux.b[n - 1];
    const Real& beta_n = center.beta_n[n];
    const Real& alpha_nm1 = center.alpha_n[n - 1];

    Real fd_floor = Real::pow2(-(bits - 32), bits) / step;
    for (const Real& z : z_samples) {
        std::vector<Real> pn, pnm1;
        for (const auto& t : tables) {
            pn.push_back(eval_pn(n, z, t).value);
            pnm1.push_back(eval_pn(n - 1, z, t).value);
        }
        Real err1, err2;
        Real dpn = fd::d1(pn, step, &err1);
        Real dpnm1 = fd::d1(pnm1, step, &err2);
        Real fd_abs = s * abs(z) * (max(err1, err2) + fd_floor);

        Real lhs53 = z * s * dpn - b_n * pn[3];
        Real rhs53 = -beta_n * a_n * pnm1[3];
        Real scale53 = max(max(abs(lhs53), abs(rhs53)), Real::pow2(-bits, bits));
        rep.add("5.53", n, alpha, s, abs(lhs53 - rhs53) / scale53,
                max(tol, 10 * fd_abs / scale53), "z = " + z.str(6));

        Real lhs54 = z * s * dpnm1 - (b_nm1 + alpha_nm1 * a_nm1) * pnm1[3] +
                     z * a_nm1 * pnm1[3];
        Real rhs54 = a_nm1 * pn[3];
        Real scale54 = max(max(abs(lhs54), abs(rhs54)), Real::pow2(-bits, bits));
        rep.add("5.54", n, alpha, s, abs(lhs54 - rhs54) / scale54,
                max(tol, 10 * fd_abs / scale54), "z = " + z.str(6));
    }
    // z = 0 reduction of 5.53 is algebraic: -b_n P_n(0) = -beta_n a_n P_{n-1}(0)
    Real zero = Real::of(0L, bits);
    Real p0n = eval_pn(n, zero, center).value;
    Real p0m = eval_pn(n - 1, zero, center).value;
    rep.add("5.53@z=0", n, alpha, s, rel_err(-b_n * p0n, -beta_n * a_n * p0m), tol);
    return rep;
}

} // namespace lue
