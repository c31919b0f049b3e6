// Acceptance suite: the toolkit's exit gate. Each criterion prints exactly
// one line, [PASS] or [FAIL], with the measured worst-case figure; the
// process exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "lue/ladder.hpp"
#include "lue/lax.hpp"
#include "lue/mcsim.hpp"
#include "lue/moments.hpp"
#include "lue/orthopoly.hpp"
#include "lue/painleve.hpp"
#include "lue/specialfun.hpp"
#include "lue/toda.hpp"

using namespace lue;

namespace {

const char* kAlphaGrid[] = {"0.3", "0.5", "1.3", "2.0"};
const char* kSGrid[] = {"0.1", "1", "5"};

struct Outcome {
    bool pass;
    std::string detail;
};

Real RR(const char* text) { return Real::parse(text, 256); }
Real RQ(long n, long d) { return Real::of(n, 256) / d; }

// 1. moments route vs hierarchy route for a_n, b_n: relative 1e-15,
//    n <= 10, alpha in {0.3,0.5,1.3,2.0}, s in {0.1,1,5}; under 60 s.
Outcome criterion1() {
    Real worst = Real::of(0L, 256);
    for (const char* as : kAlphaGrid) {
        for (const char* ss : kSGrid) {
            auto p = EnsembleParams::parse(as, ss, 256);
            AuxTable am = aux_from_moments(10, p);
            AuxTable ah = hierarchy_iterate(10, p);
            Real diff = Real::of(0L, 256), scale = Real::of(0L, 256);
            for (int n = 0; n <= 10; ++n) {
                diff = max(diff, abs(am.a[n] - ah.a[n]));
                diff = max(diff, abs(am.b[n] - ah.b[n]));
                scale = max(scale, max(abs(am.a[n]), abs(am.b[n])));
            }
            worst = max(worst, diff / scale);
        }
    }
    return {worst <= RR("1e-15"), "max relative gap " + worst.str(3)};
}

// 2. hand-derived rationals at alpha=1/2, s=1, to 1e-20 relative.
Outcome criterion2() {
    auto p = EnsembleParams::parse("0.5", "1", 256);
    AuxTable aux = aux_from_moments(2, p);
    RecurrenceTable table = RecurrenceTable::build(p, 1);
    SigmaData sd = sigma_data(1, aux);
    Real worst = Real::of(0L, 256);
    auto take = [&](const Real& got, const Real& want) {
        worst = max(worst, rel_err(got, want));
    };
    take(aux.a[0], RQ(2, 3));
    take(aux.b[1], RQ(-4, 9));
    take(aux.a[1], RQ(52, 93));
    take(table.beta_n[1], RQ(31, 18));
    take(sd.H, RQ(-2, 3));
    take(sd.H_prime, RQ(-4, 9));
    take(sd.H_second, RQ(5, 27));
    return {worst <= RR("1e-20"), "max relative error " + worst.str(3)};
}

// 3. sigma-form residual <= 1e-12 on the grid; hand point equals 25/729.
Outcome criterion3() {
    Real worst = Real::of(0L, 256);
    for (const char* as : kAlphaGrid)
        for (const char* ss : kSGrid) {
            auto rep = verify_sigma(10, EnsembleParams::parse(as, ss, 256), RR("1e-12"));
            worst = max(worst, rep.max_residual());
        }
    auto p = EnsembleParams::parse("0.5", "1", 256);
    SigmaData sd = sigma_data(1, p);
    Real lhs = sqr(p.s * sd.H_second);
    Real rhs = sqr(1 - RQ(5, 2) * sd.H_prime) -
               4 * sd.beta_n * sd.H_prime * (sd.H_prime - 1);
    bool hand = rel_err(lhs, RQ(25, 729)) <= RR("1e-70") &&
                rel_err(rhs, RQ(25, 729)) <= RR("1e-70");
    return {worst <= RR("1e-12") && hand,
            "max residual " + worst.str(3) + (hand ? ", hand point = 25/729" : ", hand point FAILED")};
}

// 4. discrete sigma-form (n >= 1) plus the cross relations, 1e-12.
Outcome criterion4() {
    Real worst = Real::of(0L, 256);
    bool pass = true;
    for (const char* as : kAlphaGrid)
        for (const char* ss : kSGrid) {
            auto rep = verify_discrete_sigma(10, EnsembleParams::parse(as, ss, 256),
                                             RR("1e-12"));
            pass = pass && rep.all_pass();
            worst = max(worst, rep.max_residual());
        }
    return {pass && worst <= RR("1e-12"), "max residual " + worst.str(3)};
}

// 5. ODE route: hierarchy agreement to 1e-8 (n <= 5), Bessel ratio at n = 0
//    to 1e-10, s in {0.5, 1, 4}.
Outcome criterion5() {
    Real rtol = RR("1e-12");
    Real worst_h = Real::of(0L, 256), worst_b = Real::of(0L, 256);
    for (const char* ss : {"0.5", "1", "4"}) {
        auto p = EnsembleParams::parse("0.5", ss, 256);
        AuxTable ah = hierarchy_iterate(5, p);
        for (int n = 1; n <= 5; ++n) {
            PainleveState st = p3_solve(n, p, p.s, rtol);
            worst_h = max(worst_h, rel_err(st.a, ah.a[n]));
        }
        PainleveState st0 = p3_solve(0, p, p.s, rtol);
        Real two_rt = 2 * sqrt(p.s);
        auto ks = bessel_k_sequence(p.alpha, 2, two_rt, p.ctx);
        worst_b = max(worst_b, rel_err(st0.a, sqrt(p.s) * ks[0] / ks[1]));
    }
    return {worst_h <= RR("1e-8") && worst_b <= RR("1e-10"),
            "hierarchy gap " + worst_h.str(3) + ", bessel gap " + worst_b.str(3)};
}

// 6. Toda relations vs Richardson finite differences; molecule equation.
Outcome criterion6() {
    bool pass = true;
    Real worst = Real::of(0L, 256);
    for (const char* ss : {"0.5", "1", "2"}) {
        auto rep = verify_toda(6, EnsembleParams::parse("0.5", ss, 256), RR("1e-10"));
        pass = pass && rep.all_pass();
        worst = max(worst, rep.max_residual());
        for (const auto& r : rep.records)
            if (r.id == "3.9" && r.n >= 1 && r.n <= 4)
                pass = pass && abs(r.residual) <= RR("1e-8");
    }
    return {pass, "max residual " + worst.str(3)};
}

// 7. Lax suite: zero-curvature residuals 1e-12, theta_0 = alpha to 1e-12,
//    s-ladder within FD bounds.
Outcome criterion7() {
    bool pass = true;
    Real worst = Real::of(0L, 256);
    const Real zero = Real::of(0L, 256);
    std::vector<Cplx> zs = {Cplx::of(RR("0.7"), zero), Cplx::of(RR("2.3"), zero),
                            Cplx::of(RR("-1.1"), zero), Cplx::of(RR("0.4"), RR("1.3"))};
    for (const char* as : {"0.5", "1.3"}) {
        for (const char* ss : {"0.5", "1", "3"}) {
            auto p = EnsembleParams::parse(as, ss, 256);
            for (int n : {1, 2, 5}) {
                CompatResiduals cr = compatibility_residuals(n, p, zs);
                worst = max(worst, max(cr.r_zs, max(cr.r_sn, cr.r_zn)));
                pass = pass && max(cr.r_zs, max(cr.r_sn, cr.r_zn)) <= RR("1e-12");
                pass = pass && rel_err(theta0_first_integral(n, p), p.alpha) <= RR("1e-12");
            }
            auto ladder = s_ladder_check(2, {RR("2"), RR("0.5")}, p, RR("1e-12"));
            pass = pass && ladder.all_pass();
        }
    }
    return {pass, "max compat residual " + worst.str(3)};
}

// 8. Hamiltonian equalities to 1e-12; integral representations reproduce
//    the determinant log-ratio to 1e-8 for n <= 3, s <= 2.
Outcome criterion8() {
    bool pass = true;
    Real worst_h = Real::of(0L, 256), worst_i = Real::of(0L, 256);
    for (const char* as : {"0.5", "1.3"})
        for (const char* ss : kSGrid)
            for (int n = 0; n <= 5; ++n) {
                auto rep = tau_relations(n, EnsembleParams::parse(as, ss, 256), RR("1e-12"));
                pass = pass && rep.all_pass();
                worst_h = max(worst_h, rep.max_residual());
            }
    for (const char* ss : {"0.5", "1", "2"})
        for (int n = 1; n <= 3; ++n) {
            auto p = EnsembleParams::parse("0.5", ss, 256);
            Real via_int = log_det_integral(n, p, RR("1e-16"));
            Real via_int_x = log_det_integral_x(n, p, RR("1e-16"));
            Real via_det = log(mgf(n, p));
            worst_i = max(worst_i, rel_err(via_int, via_det));
            worst_i = max(worst_i, rel_err(via_int_x, via_det));
        }
    pass = pass && worst_i <= RR("1e-8");
    return {pass, "hamiltonian " + worst_h.str(3) + ", integrals " + worst_i.str(3)};
}

// 9. Laguerre limit at s = 1e-8 (1e-6) and the Barnes product at s = 0 (1e-20).
Outcome criterion9() {
    Real worst_lim = Real::of(0L, 256), worst_d0 = Real::of(0L, 256);
    for (const char* as : {"0.5", "1.3"}) {
        auto p = EnsembleParams::parse(as, "1e-8", 256);
        RecurrenceTable table = RecurrenceTable::build(p, 10);
        for (int n = 0; n <= 10; ++n) {
            worst_lim = max(worst_lim, rel_err(table.alpha_n[n], 2 * n + 1 + p.alpha));
            if (n >= 1)
                worst_lim =
                    max(worst_lim, rel_err(table.beta_n[n], Real::of(n, 256) * (n + p.alpha)));
        }
        auto p0 = EnsembleParams::parse(as, "0", 256);
        HankelData hd = HankelData::build(MomentTable::build(p0, 18), 10);
        for (int n = 0; n <= 10; ++n)
            worst_d0 = max(worst_d0, rel_err(hd.D(n), laguerre_hankel_d0(n, p0.alpha, p0.ctx)));
    }
    return {worst_lim <= RR("1e-6") && worst_d0 <= RR("1e-20"),
            "limit gap " + worst_lim.str(3) + ", product gap " + worst_d0.str(3)};
}

// 10. Monte Carlo: (1, 0.5, 1) within 3 std errors of 3 e^{-2}; (5, 0.5, 1)
//     within 3 std errors of the determinant MGF; 1e6 draws each.
Outcome criterion10() {
    MCConfig cfg;
    cfg.alpha = 0.5;
    cfg.s = 1.0;
    cfg.samples = 1000000;
    cfg.seed = 20260808;

    cfg.n = 1;
    MCResult r1 = mc_mgf(cfg);
    double exact1 = (3 * exp(Real::of(-2L, 256))).to_double();
    double dev1 = std::abs(r1.estimate - exact1) / r1.std_error;

    cfg.n = 5;
    MCResult r5 = mc_mgf(cfg);
    double exact5 = mgf(5, EnsembleParams::parse("0.5", "1", 256)).to_double();
    double dev5 = std::abs(r5.estimate - exact5) / r5.std_error;

    char buf[128];
    std::snprintf(buf, sizeof buf, "deviations %.2f and %.2f std errors", dev1, dev5);
    return {dev1 <= 3.0 && dev5 <= 3.0, buf};
}

} // namespace

int main() {
    struct Entry {
        int id;
        const char* name;
        std::function<Outcome()> run;
        double budget_s;  // wall-clock target, 0 = none
    };
    std::vector<Entry> entries = {
        {1, "two-route agreement of a_n, b_n", criterion1, 60.0},
        {2, "hand-derived rationals at alpha=1/2, s=1", criterion2, 0.0},
        {3, "sigma-form residuals", criterion3, 0.0},
        {4, "discrete sigma-form and cross relations", criterion4, 0.0},
        {5, "Painleve ODE route", criterion5, 0.0},
        {6, "Toda flow vs finite differences", criterion6, 0.0},
        {7, "Lax compatibility, first integral, s-ladder", criterion7, 0.0},
        {8, "Hamiltonian and integral representations", criterion8, 0.0},
        {9, "Laguerre limit and Barnes product", criterion9, 0.0},
        {10, "Monte Carlo statistical oracle", criterion10, 120.0},
    };

    int failures = 0;
    for (auto& e : entries) {
        auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = e.run();
        } catch (const std::exception& ex) {
            out = {false, std::string("exception: ") + ex.what()};
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_budget = e.budget_s <= 0.0 || elapsed <= e.budget_s;
        bool pass = out.pass && in_budget;
        if (!pass) ++failures;
        std::printf("[%s] criterion %2d: %s — %s (%.1f s%s)\n", pass ? "PASS" : "FAIL",
                    e.id, e.name, out.detail.c_str(), elapsed,
                    in_budget ? "" : ", OVER BUDGET");
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(entries.size()) - failures,
                entries.size());
    return failures == 0 ? 0 : 1;
}
