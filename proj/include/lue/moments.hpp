#ifndef LUE_MOMENTS_HPP
#define LUE_MOMENTS_HPP

#include <vector>

#include "lue/real.hpp"

namespace lue {

// Parameters of the deformed Laguerre weight x^alpha e^{-x} e^{-s/x} on
// (0, inf), together with the working precision.
struct EnsembleParams {
    Real alpha;
    Real s;
    PrecisionContext ctx;

    EnsembleParams(Real alpha_, Real s_, PrecisionContext ctx_)
        : alpha(alpha_.round_to(ctx_.bits)), s(s_.round_to(ctx_.bits)), ctx(std::move(ctx_)) {
        if (!(alpha > 0)) throw DomainError("EnsembleParams: requires alpha > 0");
        if (s < 0) throw DomainError("EnsembleParams: requires s >= 0");
    }
    static EnsembleParams parse(const std::string& alpha, const std::string& s, long bits) {
        auto ctx = PrecisionContext::make(bits);
        return EnsembleParams(Real::parse(alpha, bits), Real::parse(s, bits), ctx);
    }
    bool laguerre_limit() const { return s.is_zero(); }
    EnsembleParams with_s(const Real& s_new) const { return {alpha, s_new, ctx}; }
    EnsembleParams with_alpha(const Real& a_new) const { return {a_new, s, ctx}; }
    EnsembleParams with_bits(long bits) const {
        auto c = PrecisionContext::make(bits);
        return {alpha.round_to(bits), s.round_to(bits), c};
    }
};

// Moment of the weight,
//   mu_j(s) = integral_0^inf x^{j+alpha} e^{-x-s/x} dx
//           = 2 s^{(j+alpha+1)/2} K_{j+alpha+1}(2 sqrt(s)),   s > 0,
//           = Gamma(j+alpha+1),                               s = 0 (j >= 0).
// j = -1 is admitted for s > 0 only.
Real moment(int j, const EnsembleParams& params);

// Moments mu_{-1}, mu_0, ..., mu_{j_max}, all orders from one base Bessel
// pair (mu_{-1} omitted in the Laguerre limit s = 0).
class MomentTable {
public:
    static MomentTable build(const EnsembleParams& params, int j_max);

    const EnsembleParams& params() const { return params_; }
    int j_max() const { return j_max_; }
    // j >= -1
    const Real& mu(int j) const;

private:
    MomentTable(EnsembleParams p, int j_max) : params_(std::move(p)), j_max_(j_max) {}
    EnsembleParams params_;
    int j_max_;
    std::vector<Real> mu_;  // mu_[j + 1] = mu_j
};

// Hankel determinants D_0 = 1, D_1, ..., D_dim and norms h_n = D_{n+1}/D_n,
// from one Cholesky factorization M = R^T R of the dim x dim moment matrix
// M_{jk} = mu_{j+k}: D_n is the product of the first n squared pivots. The
// upper-triangular factor is kept for the recurrence-coefficient extraction.
//
// Throws ConditioningError when a pivot loses more than bits-32 bits against
// the corresponding diagonal moment, which signals that the working
// precision must be raised.
class HankelData {
public:
    static HankelData build(const MomentTable& moments, int dim);
    static HankelData build(const EnsembleParams& params, int dim);

    const EnsembleParams& params() const { return params_; }
    int dim() const { return dim_; }
    const Real& D(int n) const;       // 0 <= n <= dim
    const Real& h(int n) const;       // 0 <= n < dim
    const Real& r(int j, int k) const;  // Cholesky factor entry, j <= k < dim

private:
    HankelData(EnsembleParams p, int dim) : params_(std::move(p)), dim_(dim) {}
    EnsembleParams params_;
    int dim_;
    std::vector<Real> D_, h_;
    std::vector<std::vector<Real>> r_;
};

// Single Hankel determinant D_n(s).
Real hankel_det(int n, const EnsembleParams& params);

// Moment generating function of the linear statistic sum_j 1/x_j over the
// n x n Laguerre unitary ensemble:
//   M_f(s) = D_n[w(., s)] / D_n[w(., 0)].
// The denominator is the analytic s = 0 branch (Barnes product).
Real mgf(int n, const EnsembleParams& params);

// Runs f(params); on ConditioningError retries once at doubled precision.
template <class F>
auto with_precision_escalation(const EnsembleParams& params, F&& f) {
    try {
        return f(params);
    } catch (const ConditioningError&) {
        return f(params.with_bits(2 * params.ctx.bits));
    }
}

} // namespace lue

#endif
