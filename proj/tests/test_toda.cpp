#include <doctest.h>

#include <cmath>

#include "lue/fd.hpp"
#include "lue/specialfun.hpp"
#include "lue/toda.hpp"
#include "testutil.hpp"

using namespace lue;

TEST_CASE("riccati right-hand sides at the hand point") {
    auto p = params_of("0.5", "1");
    auto [da, db] = riccati_rhs(1, RQ(52, 93), RQ(-4, 9), p);
    CHECK(relf(db, RQ(-7, 27)) < 1e-74);
    // n=0 with b_0 = 0: s a' = (1+alpha+a) a - s, Bessel-ratio solution
    auto [da0, db0] = riccati_rhs(0, RQ(2, 3), Real::of(0L, 256), p);
    CHECK(relf(da0, (1 + R("0.5") + RQ(2, 3)) * RQ(2, 3) - 1) < 1e-74);
    CHECK(db0.is_zero());
    CHECK_THROWS_AS(riccati_rhs(1, Real::of(0L, 256), RQ(1, 2), p), DomainError);
}

TEST_CASE("toda flow relations against finite differences") {
    for (const char* ss : {"0.5", "1", "2"}) {
        auto rep = verify_toda(6, params_of("0.5", ss), R("1e-10"));
        INFO("s=", ss, " max=", rep.max_residual().str(4));
        CHECK(rep.all_pass());
    }
    CHECK(verify_toda(4, params_of("1.3", "1"), R("1e-10")).all_pass());
}

TEST_CASE("log-derivative of D_1 equals -a_0 at the hand point") {
    auto p = params_of("0.5", "1");
    TodaSnapshot snap = toda_snapshot(1, p);
    CHECK(relf(p.s * snap.d_ln_D, RQ(-2, 3)) < 1e-40);
    // and (3.1) for h_0 as a finite-difference oracle of the closed form
    TodaSnapshot snap0 = toda_snapshot(0, p);
    CHECK(relf(p.s * snap0.d_ln_h, RQ(-2, 3)) < 1e-40);
}

TEST_CASE("bessel-ratio solution satisfies the n=0 flow") {
    // s a_0' = (1 + alpha + a_0) a_0 - s with a_0 = sqrt(s) K_a(2 sqrt s)/K_{a+1}(2 sqrt s)
    auto ctx = PrecisionContext::make(256);
    Real alpha = R("1.3");
    Real s = R("0.8");
    Real h = s * Real::pow2(-50, 256);
    std::vector<Real> f;
    for (double off : fd::offsets) {
        Real si = s + off * h;
        auto p = EnsembleParams(alpha, si, ctx);
        f.push_back(hierarchy_a0(p));
    }
    Real da = fd::d1(f, h);
    Real a0 = f[3];
    CHECK(relf(s * da, (1 + alpha + a0) * a0 - s) < 1e-40);
}

TEST_CASE("ln D telescopes over ln h on the stencil data") {
    auto p = params_of("0.7", "1.3");
    auto hd = HankelData::build(p, 6);
    Real acc = Real::of(0L, 256);
    for (int n = 1; n <= 6; ++n) {
        acc += log(hd.h(n - 1));
        CHECK(relf(acc, log(hd.D(n))) < std::pow(2.0, -128));
    }
}

TEST_CASE("molecule equation excluded at n=0, holds from n=1") {
    auto rep = verify_toda(3, params_of("0.5", "1"), R("1e-8"));
    bool saw_n0 = false;
    for (const auto& r : rep.records)
        if (r.id == "3.9") {
            CHECK(r.n >= 1);
            if (r.n == 0) saw_n0 = true;
        }
    CHECK_FALSE(saw_n0);
}
