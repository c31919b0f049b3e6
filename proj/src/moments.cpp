#include "lue/moments.hpp"

#include "lue/specialfun.hpp"

namespace lue {

Real moment(int j, const EnsembleParams& params) {
    if (j < -1) throw DomainError("moment: requires j >= -1");
    const long bits = params.ctx.bits;
    if (params.laguerre_limit()) {
        if (j == -1) throw DomainError("moment: mu_{-1} diverges at s = 0");
        return gamma_fn(params.alpha.round_to(bits + 32) + (j + 1)).round_to(bits);
    }
    const long wb = bits + 32;
    Real s = params.s.round_to(wb);
    Real nu = params.alpha.round_to(wb) + (j + 1);
    Real k = bessel_k(nu, 2 * sqrt(s), params.ctx);
    return (2 * pow(sqrt(s), nu) * k).round_to(bits);
}

MomentTable MomentTable::build(const EnsembleParams& params, int j_max) {
    if (j_max < 0) throw DomainError("MomentTable: requires j_max >= 0");
    MomentTable t(params, j_max);
    t.mu_.reserve(j_max + 2);
    const long bits = params.ctx.bits;
    if (params.laguerre_limit()) {
        t.mu_.push_back(Real::nan(bits));  // mu_{-1} undefined at s = 0
        const long wb = bits + 32;
        Real g = gamma_fn(params.alpha.round_to(wb) + 1);  // Gamma(alpha+1)
        Real a = params.alpha.round_to(wb);
        for (int j = 0; j <= j_max; ++j) {
            t.mu_.push_back(g.round_to(bits));
            g *= a + (j + 1);  // Gamma(alpha+j+2) = (alpha+j+1) Gamma(alpha+j+1)
        }
        return t;
    }
    const long wb = bits + 32;
    Real s = params.s.round_to(wb);
    Real rt = sqrt(s);
    // orders alpha, alpha+1, ..., alpha+j_max+1 from one base pair
    std::vector<Real> ks =
        bessel_k_sequence(params.alpha.round_to(wb), j_max + 3, 2 * rt, params.ctx);
    Real pref = 2 * pow(rt, params.alpha.round_to(wb));  // 2 s^{alpha/2}
    for (int j = -1; j <= j_max; ++j) {
        t.mu_.push_back((pref * ks[j + 1]).round_to(bits));
        pref *= rt;
    }
    return t;
}

const Real& MomentTable::mu(int j) const {
    if (j < -1 || j > j_max_) throw DomainError("MomentTable::mu: index out of range");
    if (j == -1 && params_.laguerre_limit())
        throw DomainError("MomentTable::mu: mu_{-1} undefined at s = 0");
    return mu_[j + 1];
}

HankelData HankelData::build(const MomentTable& moments, int dim) {
    if (dim < 0) throw DomainError("HankelData: requires dim >= 0");
    if (2 * dim - 2 > moments.j_max())
        throw DomainError("HankelData: moment table too short");
    const EnsembleParams& params = moments.params();
    const long bits = params.ctx.bits;

    HankelData out(params, dim);
    out.D_.push_back(Real::of(1L, bits));  // empty-determinant convention
    out.r_.assign(dim, {});

    // Column-by-column Cholesky of M_{jk} = mu_{j+k}: M = R^T R with R upper
    // triangular, stored by rows as r_[j][k-j] = R(j,k).
    for (int k = 0; k < dim; ++k) {
        std::vector<Real> col(k + 1, Real::of(0L, bits));
        for (int j = 0; j < k; ++j) {
            Real acc = moments.mu(j + k);
            for (int i = 0; i < j; ++i) acc -= col[i] * out.r_[i][j - i];
            col[j] = acc / out.r_[j][0];
        }
        // pivot: R_kk^2 = mu_2k - sum_{i<k} R_ik^2
        Real pivot = moments.mu(2 * k);
        for (int i = 0; i < k; ++i) pivot -= sqr(col[i]);
        if (!(pivot > 0))
            throw ConditioningError("hankel: non-positive Cholesky pivot", k, bits);
        long lost = moments.mu(2 * k).exponent() - pivot.exponent();
        if (lost > bits - 32)
            throw ConditioningError("hankel: Cholesky pivot lost too many bits", k, lost);
        col[k] = sqrt(pivot);
        out.D_.push_back(out.D_[k] * pivot);
        out.h_.push_back(pivot);  // h_k = R_kk^2 = D_{k+1}/D_k
        for (int j = 0; j <= k; ++j) out.r_[j].push_back(col[j]);
    }
    return out;
}

HankelData HankelData::build(const EnsembleParams& params, int dim) {
    int j_max = dim > 0 ? 2 * dim - 2 : 0;
    return build(MomentTable::build(params, j_max), dim);
}

const Real& HankelData::D(int n) const {
    if (n < 0 || n > dim_) throw DomainError("HankelData::D: index out of range");
    return D_[n];
}

const Real& HankelData::h(int n) const {
    if (n < 0 || n >= dim_) throw DomainError("HankelData::h: index out of range");
    return h_[n];
}

const Real& HankelData::r(int j, int k) const {
    if (j < 0 || k < j || k >= dim_) throw DomainError("HankelData::r: index out of range");
    return r_[j][k - j];
}

Real hankel_det(int n, const EnsembleParams& params) {
    if (n == 0) return Real::of(1L, params.ctx.bits);
    if (params.laguerre_limit()) return laguerre_hankel_d0(n, params.alpha, params.ctx);
    return HankelData::build(params, n).D(n);
}

Real mgf(int n, const EnsembleParams& params) {
    if (n < 1) throw DomainError("mgf: requires n >= 1");
    Real d0 = laguerre_hankel_d0(n, params.alpha, params.ctx);
    if (params.laguerre_limit()) return Real::of(1L, params.ctx.bits);
    return hankel_det(n, params) / d0;
}

} // namespace lue
