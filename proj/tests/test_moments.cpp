#include <doctest.h>

#include <cmath>

#include "lue/moments.hpp"
#include "lue/quadrature.hpp"
#include "lue/specialfun.hpp"
#include "testutil.hpp"

using namespace lue;

namespace {

// Independent oracle: the defining integral of mu_j, computed by the
// substitution x = e^u which decays double-exponentially both ways for s > 0.
Real moment_by_quadrature(int j, const EnsembleParams& p) {
    const long wb = p.ctx.bits + 16;
    Real a = p.alpha.round_to(wb);
    Real s = p.s.round_to(wb);
    auto f = [&](const Real& u) {
        Real x = exp(u);
        return exp((j + a + 1) * u - x - s / x);
    };
    return integrate_real_line(f, wb, p.ctx.quad_tol).value;
}

} // namespace

TEST_CASE("moment closed form vs defining integral") {
    double tol = PrecisionContext::make(256).quad_tol.to_double();
    for (int j : {0, 1, 3}) {
        for (const char* ss : {"0.25", "1", "4"}) {
            auto p = params_of("0.7", ss);
            CHECK(relf(moment(j, p), moment_by_quadrature(j, p)) <= 16 * tol);
        }
    }
    auto p = params_of("0.5", "1");
    CHECK(relf(moment(-1, p), moment_by_quadrature(-1, p)) <= 16 * tol);
}

TEST_CASE("moment hand values") {
    auto p = params_of("0.5", "1");
    // mu_0 = (3 sqrt(pi)/2) e^{-2}
    CHECK(relf(moment(0, p), 3 * sqrt(Real::pi(256)) / 2 * exp(R("-2"))) < 1e-70);
    // mu_{-1} = 2 K_{1/2}(2) = sqrt(pi) e^{-2}
    CHECK(relf(moment(-1, p), sqrt(Real::pi(256)) * exp(R("-2"))) < 1e-70);
    // Laguerre limit: mu_2 = Gamma(4) = 6 at alpha = 1
    CHECK(relf(moment(2, params_of("1", "0")), Real::of(6L, 256)) < 1e-74);
}

TEST_CASE("moment domain errors") {
    CHECK_THROWS_AS(moment(-1, params_of("0.5", "0")), DomainError);
    CHECK_THROWS_AS(moment(-2, params_of("0.5", "1")), DomainError);
}

TEST_CASE("moment table positivity") {
    auto table = MomentTable::build(params_of("0.3", "0.5"), 12);
    for (int j = -1; j <= 12; ++j) CHECK(table.mu(j) > 0);
}

TEST_CASE("hankel determinants: convention, positivity, hand values") {
    auto p = params_of("0.5", "1");
    CHECK(hankel_det(0, p) == Real::of(1L, 256));
    // 1x1 determinant is mu_0
    CHECK(relf(hankel_det(1, p), moment(0, p)) < 1e-74);
    // s = 0 factorization matches the gamma-product route
    auto p0 = params_of("0.5", "0");
    auto hd = HankelData::build(MomentTable::build(p0, 18), 10);
    for (int n = 1; n <= 10; ++n) {
        // the factorization sheds a few dozen bits to conditioning by n = 10
        CHECK(relf(hd.D(n), laguerre_hankel_d0(n, p0.alpha, p0.ctx)) < 1e-65);
        CHECK(hd.D(n) > 0);
        CHECK(hd.h(n - 1) > 0);
    }
    // n=2, alpha=1/2, s=0 -> 3 pi/8
    CHECK(relf(hd.D(2), 3 * Real::pi(256) / 8) < 1e-70);
}

TEST_CASE("laguerre limit of D_n(s) as s -> 0") {
    auto p = params_of("0.8", "1e-8");
    auto hd = HankelData::build(p, 6);
    for (int n = 1; n <= 6; ++n)
        CHECK(relf(hd.D(n), laguerre_hankel_d0(n, p.alpha, p.ctx)) <= 1e-6);
}

TEST_CASE("mgf values and monotonicity") {
    auto p = params_of("0.5", "1");
    CHECK(relf(mgf(1, p), 3 * exp(R("-2"))) < 1e-70);
    CHECK(mgf(3, params_of("0.5", "0")) == Real::of(1L, 256));
    Real prev = Real::of(1L, 256);
    for (const char* ss : {"0.125", "0.5", "1", "2", "5"}) {
        Real m = mgf(5, params_of("0.5", ss));
        CHECK(m > 0);
        CHECK(m < prev);
        prev = m;
    }
}

TEST_CASE("conditioning failure and escalation") {
    // 64-bit arithmetic cannot hold the 20x20 moment matrix
    auto p_small = params_of("0.5", "1", 64);
    CHECK_THROWS_AS(HankelData::build(p_small, 20), ConditioningError);
    Real escalated = with_precision_escalation(
        p_small, [](const EnsembleParams& q) { return HankelData::build(q, 20).D(20); });
    Real reference = HankelData::build(params_of("0.5", "1", 320), 20).D(20);
    CHECK(relf(escalated, reference) < 1e-9);
}

TEST_CASE("moment precision doubling") {
    Real lo = moment(2, params_of("1.3", "0.7", 256));
    Real hi = moment(2, params_of("1.3", "0.7", 512));
    CHECK(relf(lo, hi) <= std::pow(2.0, -256 + 8));
}
