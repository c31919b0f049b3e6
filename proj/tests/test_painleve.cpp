#include <doctest.h>

#include <cmath>

#include "lue/fd.hpp"
#include "lue/painleve.hpp"
#include "lue/specialfun.hpp"
#include "testutil.hpp"

using namespace lue;

namespace {

// FD jet of a_n(s) over the 7-point stencil, hierarchy route.
struct Jet {
    Real a, da, d2a;
};

Jet hierarchy_jet(int n, const EnsembleParams& p) {
    Real h = p.s * Real::pow2(-45, 256);
    std::vector<Real> f;
    for (double off : fd::offsets) f.push_back(hierarchy_iterate(n, p.with_s(p.s + off * h)).a[n]);
    return {f[3], fd::d1(f, h), fd::d2(f, h)};
}

} // namespace

TEST_CASE("painleve equation holds along the bessel-ratio orbit (n = 0)") {
    for (const char* ss : {"0.1", "0.5", "1", "3", "10"}) {
        auto p = params_of("1.3", ss);
        Jet jet = hierarchy_jet(0, p);
        PainleveState st{0, p.s, jet.a, jet.da};
        CHECK(relf(jet.d2a, p3_rhs(st, p)) < 1e-12);
    }
}

TEST_CASE("painleve equation, half-integer closed form a_0 = 2s/(1+2 sqrt s)") {
    for (const char* ss : {"0.25", "1", "4"}) {
        auto p = params_of("0.5", ss);
        Jet jet = hierarchy_jet(0, p);
        CHECK(relf(jet.a, 2 * p.s / (1 + 2 * sqrt(p.s))) < 1e-60);
        PainleveState st{0, p.s, jet.a, jet.da};
        CHECK(relf(jet.d2a, p3_rhs(st, p)) < 1e-12);
    }
}

TEST_CASE("X-form is the a-form after the change of variables") {
    for (int n : {0, 2}) {
        auto p = params_of("0.5", "1.7");
        Jet jet = hierarchy_jet(n, p);
        PainleveState st{n, p.s, jet.a, jet.da};
        // with a'' from the equation itself the X-residual is pure algebra
        CHECK(p3_x_residual(st, p3_rhs(st, p), p).to_double() < 1e-12);
        // with the FD a'' it is an independent consistency check
        CHECK(p3_x_residual(st, jet.d2a, p).to_double() < 1e-12);
    }
}

TEST_CASE("p3_rhs singular states") {
    auto p = params_of("0.5", "1");
    CHECK_THROWS_AS(p3_rhs({0, p.s, Real::of(0L, 256), Real::of(1L, 256)}, p),
                    SingularityError);
}

TEST_CASE("ode solve matches the hierarchy route") {
    Real rtol = R("1e-12");
    auto p1 = params_of("0.5", "1");
    PainleveState st = p3_solve(1, p1, p1.s, rtol);
    CHECK(relf(st.a, RQ(52, 93)) < 1e-10);

    auto p4 = params_of("0.5", "4");
    PainleveState st0 = p3_solve(0, p4, p4.s, rtol);
    CHECK(relf(st0.a, RQ(8, 5)) < 1e-10);

    for (int n : {2, 3}) {
        for (const char* ss : {"0.5", "4"}) {
            auto p = params_of("1.3", ss);
            PainleveState st_n = p3_solve(n, p, p.s, rtol);
            Real ref = hierarchy_iterate(n, p).a[n];
            INFO("n=", n, " s=", ss);
            CHECK(relf(st_n.a, ref) < 1e-9);
        }
    }
}

TEST_CASE("ode integration is reversible along the orbit") {
    auto p = params_of("1.3", "2");
    Real rtol = R("1e-12");
    PainleveState fwd = p3_solve(2, p, p.s, rtol);
    PainleveState back = p3_solve_from(fwd, p, p.s / 8, rtol);
    Real ref = hierarchy_iterate(2, p.with_s(p.s / 8)).a[2];
    CHECK(relf(back.a, ref) < 1e-9);
}

TEST_CASE("slope at the origin approaches 1/alpha") {
    // a_n(s)/s -> 1/alpha; the approach carries an O(s^alpha) term
    auto slope = [](int n, const char* ss) {
        auto p = params_of("0.5", ss);
        return hierarchy_iterate(n, p).a[n] / p.s;
    };
    for (int n : {0, 2}) {
        Real two = Real::of(2L, 256);
        Real d8 = abs(slope(n, "1e-8") - two) / two;
        Real d10 = abs(slope(n, "1e-10") - two) / two;
        CHECK(d8.to_double() < 1e-3);
        CHECK(d10.to_double() < 1e-4);
        CHECK(d10 < d8);  // O(s^alpha) approach
    }
}

TEST_CASE("sigma data at the hand point") {
    auto p = params_of("0.5", "1");
    SigmaData sd = sigma_data(1, p);
    CHECK(relf(sd.H, RQ(-2, 3)) < 1e-70);
    CHECK(relf(sd.H_prime, RQ(-4, 9)) < 1e-70);
    CHECK(relf(sd.H_second, RQ(5, 27)) < 1e-70);
    CHECK(relf(sd.beta_n, RQ(31, 18)) < 1e-70);
    CHECK(relf(sd.alpha_n, RQ(7, 2) + RQ(52, 93)) < 1e-70);
}

TEST_CASE("sigma-form: hand point gives both sides 25/729") {
    auto p = params_of("0.5", "1");
    SigmaData sd = sigma_data(1, p);
    Real lhs = sqr(p.s * sd.H_second);
    CHECK(relf(lhs, RQ(25, 729)) < 1e-70);
    CHECK(sigma_form_residual(sd, p).to_double() < 1e-70);
}

TEST_CASE("sigma-form vanishes identically at n=0") {
    auto p = params_of("0.9", "2.4");
    SigmaData sd = sigma_data(0, p);
    CHECK(sd.H.is_zero());
    CHECK(sigma_form_residual(sd, p).to_double() == 0.0);
}

TEST_CASE("sigma-form sweep") {
    for (const char* ss : {"0.3", "2", "7"}) {
        auto rep = verify_sigma(8, params_of("1.3", ss), R("1e-12"));
        CHECK(rep.all_pass());
    }
}

TEST_CASE("discrete sigma-form with hand H values") {
    auto p = params_of("0.5", "1");
    Real H0 = Real::of(0L, 256);
    Real H1 = RQ(-2, 3);
    Real H2 = RQ(-2, 3) - RQ(52, 93);
    CHECK(discrete_sigma_residual(H0, H1, H2, 1, p).to_double() < 1e-20);
    auto rep = verify_discrete_sigma(3, p, R("1e-12"));
    CHECK(rep.all_pass());
    // the reconstructions at n = 1
    for (const auto& r : rep.records) {
        if (r.n != 1) continue;
        CHECK(r.pass);
    }
    // alpha_1 = 2 + 1 + alpha + H_1 - H_2 = 7/2 + 52/93
    auto table = RecurrenceTable::build(p, 1);
    CHECK(relf(table.alpha_n[1], RQ(7, 2) + RQ(52, 93)) < 1e-70);
}

TEST_CASE("residuals respond to perturbed inputs") {
    // negative control: the checks must not be vacuously zero
    auto p = params_of("0.5", "1");
    SigmaData sd = sigma_data(1, p);
    SigmaData bad = sd;
    bad.H_prime = sd.H_prime + R("1e-6");
    CHECK(sigma_form_residual(bad, p).to_double() > 1e-8);
    Real H0 = Real::of(0L, 256), H1 = RQ(-2, 3), H2 = RQ(-2, 3) - RQ(52, 93);
    CHECK(discrete_sigma_residual(H0, H1 + R("1e-6"), H2, 1, p).to_double() > 1e-8);
}

TEST_CASE("discrete sigma-form sweep") {
    for (const char* as : {"0.5", "1.3"}) {
        for (const char* ss : {"0.3", "1", "5"}) {
            auto rep = verify_discrete_sigma(6, params_of(as, ss), R("1e-12"));
            INFO("alpha=", as, " s=", ss);
            CHECK(rep.all_pass());
        }
    }
}

TEST_CASE("quartic root") {
    auto p = params_of("0.5", "1");
    QuarticRoot qr = quartic_root(1, p);
    CHECK(qr.X > 0);
    CHECK(qr.residual.to_double() < std::pow(2.0, -128));
}

TEST_CASE("determinant log-ratio by quadrature") {
    auto p = params_of("0.5", "1");
    Real ldi = log_det_integral(1, p, R("1e-14"));
    CHECK(relf(ldi, log(Real::of(3L, 256)) - 2) < 1e-12);
    // n = 0: D_0 = 1 for every s, and the closed-form integrand vanishes
    // identically, term against term
    Real ld0 = log_det_integral(0, p, R("1e-14"));
    CHECK(ld0.is_zero());
    for (const char* ts : {"0.3", "1.7"}) {
        auto pt = params_of("0.5", ts);
        auto aux = hierarchy_iterate(0, pt);
        const Real& a = aux.a[0];
        const Real& t = pt.s;
        Real ap = riccati_rhs(0, a, aux.b[0], pt).first / t;
        Real bracket = t / 2 - sqr(t / a - pt.alpha) / 4 - a * pt.alpha / 2 -
                       sqr(a) / 4 + sqr(1 - t * ap / a) / 4;
        CHECK((abs(bracket) / t).to_double() < 1e-70);
    }
    // both written forms agree
    auto p2 = params_of("1.3", "2");
    Real a16 = log_det_integral(2, p2, R("1e-14"));
    Real a17 = log_det_integral_x(2, p2, R("1e-14"));
    CHECK(relf(a16, a17) < 1e-13);
    // against the determinant route
    Real lnref = log(mgf(2, p2));
    CHECK(relf(a16, lnref) < 1e-12);
}

TEST_CASE("hamiltonian relations at the hand point") {
    auto p = params_of("0.5", "1");
    // (1/t)(-2 beta_1 + 2 b_1 - s + n(n+alpha)) = -23/6 at t = 1
    auto table = RecurrenceTable::build(p, 1);
    auto aux = aux_from_moments(1, p);
    Real nna = 1 + R("0.5");
    Real h_iii = -2 * table.beta_n[1] + 2 * aux.b[1] - p.s + nna;
    CHECK(relf(h_iii, RQ(-23, 6)) < 1e-70);
    // and the log-derivative form 2 H_1 - t^2 - n(n+alpha) at t = 1
    SigmaData sd = sigma_data(1, p);
    CHECK(relf(2 * sd.H - 1 - nna, RQ(-23, 6)) < 1e-70);
    CHECK(tau_relations(1, p, R("1e-12")).all_pass());
}

TEST_CASE("hamiltonian relations: n = 0 reduces to -t") {
    auto p = params_of("0.7", "2");
    auto rep = tau_relations(0, p, R("1e-12"));
    CHECK(rep.all_pass());
}

TEST_CASE("hamiltonian relations sweep") {
    for (int n : {1, 2, 4}) {
        auto rep = tau_relations(n, params_of("1.3", "2"), R("1e-12"));
        INFO("n=", n);
        CHECK(rep.all_pass());
    }
}
