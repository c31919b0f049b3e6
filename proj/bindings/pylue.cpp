// Python bindings for the main operations. High-precision values cross the
// boundary as decimal strings so nothing is truncated through a double.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lue/ladder.hpp"
#include "lue/lax.hpp"
#include "lue/mcsim.hpp"
#include "lue/moments.hpp"
#include "lue/orthopoly.hpp"
#include "lue/painleve.hpp"
#include "lue/specialfun.hpp"
#include "lue/toda.hpp"

namespace py = pybind11;
using namespace lue;

namespace {

EnsembleParams make_params(const std::string& alpha, const std::string& s, long bits) {
    return EnsembleParams::parse(alpha, s, bits);
}

int digits_of(long bits) { return static_cast<int>(bits / 4); }

py::dict report_to_dict(const IdentityReport& rep) {
    py::list records;
    for (const auto& r : rep.records) {
        py::dict d;
        d["id"] = r.id;
        d["n"] = r.n;
        d["alpha"] = r.alpha;
        d["s"] = r.s;
        d["residual"] = r.residual.str(12);
        d["tol"] = r.tol.str(6);
        d["pass"] = r.pass;
        if (!r.note.empty()) d["note"] = r.note;
        records.append(std::move(d));
    }
    py::dict out;
    out["suite"] = rep.suite;
    out["all_pass"] = rep.all_pass();
    out["max_residual"] = rep.max_residual().str(6);
    out["records"] = std::move(records);
    return out;
}

} // namespace

PYBIND11_MODULE(pylue, m) {
    m.doc() = "High-precision toolkit for the singular linear statistic sum 1/x_j "
              "of the Laguerre unitary ensemble (weight x^alpha e^{-x-s/x})";

    m.def(
        "bessel_k",
        [](const std::string& nu, const std::string& x, long bits) {
            auto ctx = PrecisionContext::make(bits);
            return bessel_k(Real::parse(nu, bits), Real::parse(x, bits), ctx)
                .str(digits_of(bits));
        },
        py::arg("nu"), py::arg("x"), py::arg("bits") = 256,
        "Modified Bessel function of the second kind, as a decimal string");

    m.def(
        "moment",
        [](int j, const std::string& alpha, const std::string& s, long bits) {
            return moment(j, make_params(alpha, s, bits)).str(digits_of(bits));
        },
        py::arg("j"), py::arg("alpha"), py::arg("s"), py::arg("bits") = 256);

    m.def(
        "mgf",
        [](int n, const std::string& alpha, const std::string& s, long bits) {
            return mgf(n, make_params(alpha, s, bits)).str(digits_of(bits));
        },
        py::arg("n"), py::arg("alpha"), py::arg("s"), py::arg("bits") = 256,
        "Moment generating function D_n(s)/D_n(0) as a decimal string");

    m.def(
        "recurrence_table",
        [](int n_max, const std::string& alpha, const std::string& s, long bits) {
            auto table = RecurrenceTable::build(make_params(alpha, s, bits), n_max);
            py::dict out;
            py::list an, bn, p1;
            for (int n = 0; n <= n_max; ++n) {
                an.append(table.alpha_n[n].str(digits_of(bits)));
                bn.append(n >= 1 ? table.beta_n[n].str(digits_of(bits)) : std::string());
                p1.append(table.p1[n].str(digits_of(bits)));
            }
            out["alpha_n"] = std::move(an);
            out["beta_n"] = std::move(bn);
            out["p1"] = std::move(p1);
            return out;
        },
        py::arg("n_max"), py::arg("alpha"), py::arg("s"), py::arg("bits") = 256);

    m.def(
        "aux_table",
        [](int n_max, const std::string& alpha, const std::string& s, long bits,
           const std::string& route) {
            auto p = make_params(alpha, s, bits);
            AuxTable aux = route == "hierarchy" ? hierarchy_iterate(n_max, p)
                                                : aux_from_moments(n_max, p);
            py::dict out;
            py::list a, b;
            for (int n = 0; n <= n_max; ++n) {
                a.append(aux.a[n].str(digits_of(bits)));
                b.append(aux.b[n].str(digits_of(bits)));
            }
            out["a"] = std::move(a);
            out["b"] = std::move(b);
            out["route"] = route;
            return out;
        },
        py::arg("n_max"), py::arg("alpha"), py::arg("s"), py::arg("bits") = 256,
        py::arg("route") = "moments");

    m.def(
        "sigma",
        [](int n, const std::string& alpha, const std::string& s, long bits) {
            auto p = make_params(alpha, s, bits);
            SigmaData sd = sigma_data(n, p);
            py::dict out;
            out["H"] = sd.H.str(digits_of(bits));
            out["H_prime"] = sd.H_prime.str(digits_of(bits));
            out["H_second"] = sd.H_second.str(digits_of(bits));
            out["alpha_n"] = sd.alpha_n.str(digits_of(bits));
            out["beta_n"] = sd.beta_n.str(digits_of(bits));
            out["sigma_form_residual"] = sigma_form_residual(sd, p).str(6);
            return out;
        },
        py::arg("n"), py::arg("alpha"), py::arg("s"), py::arg("bits") = 256);

    m.def(
        "p3_solve",
        [](int n, const std::string& alpha, const std::string& s, long bits,
           const std::string& rtol) {
            auto p = make_params(alpha, s, bits);
            PainleveState st = p3_solve(n, p, p.s, Real::parse(rtol, bits));
            py::dict out;
            out["a"] = st.a.str(digits_of(bits));
            out["a_prime"] = st.a_prime.str(digits_of(bits));
            return out;
        },
        py::arg("n"), py::arg("alpha"), py::arg("s"), py::arg("bits") = 256,
        py::arg("rtol") = "1e-12");

    m.def(
        "log_det_integral",
        [](int n, const std::string& alpha, const std::string& s, long bits,
           const std::string& quad_tol) {
            auto p = make_params(alpha, s, bits);
            return log_det_integral(n, p, Real::parse(quad_tol, bits)).str(digits_of(bits));
        },
        py::arg("n"), py::arg("alpha"), py::arg("s"), py::arg("bits") = 256,
        py::arg("quad_tol") = "1e-16");

    m.def(
        "theta0",
        [](int n, const std::string& alpha, const std::string& s, long bits) {
            return theta0_first_integral(n, make_params(alpha, s, bits)).str(digits_of(bits));
        },
        py::arg("n"), py::arg("alpha"), py::arg("s"), py::arg("bits") = 256,
        "First integral of the isomonodromy flow; equals alpha");

    m.def(
        "verify",
        [](const std::string& suite, int n_max, const std::string& alpha,
           const std::string& s, long bits, const std::string& tol) {
            auto p = make_params(alpha, s, bits);
            Real t = tol.empty() ? Real::parse("1e-12", bits) : Real::parse(tol, bits);
            IdentityReport rep;
            if (suite == "residue")
                rep = verify_residue_identities(
                    n_max, p, tol.empty() ? default_identity_tol(bits) : t);
            else if (suite == "toda")
                rep = verify_toda(n_max, p, tol.empty() ? Real::parse("1e-10", bits) : t);
            else if (suite == "sigma")
                rep = verify_sigma(n_max, p, t);
            else if (suite == "discrete")
                rep = verify_discrete_sigma(n_max, p, t);
            else if (suite == "tau") {
                rep.suite = "tau";
                for (int n = 0; n <= n_max; ++n) rep.merge(tau_relations(n, p, t));
            } else if (suite == "jm")
                rep = jm_scalar_system(std::max(1, n_max), p, t);
            else
                throw DomainError("unknown suite: " + suite);
            return report_to_dict(rep);
        },
        py::arg("suite"), py::arg("n_max"), py::arg("alpha"), py::arg("s"),
        py::arg("bits") = 256, py::arg("tol") = "");

    m.def(
        "mc_mgf",
        [](int n, double alpha, double s, long samples, std::uint64_t seed, long chunk,
           int threads) {
            MCConfig cfg;
            cfg.n = n;
            cfg.alpha = alpha;
            cfg.s = s;
            cfg.samples = samples;
            cfg.seed = seed;
            cfg.chunk = chunk;
            cfg.threads = threads;
            MCResult r = mc_mgf(cfg);
            return py::make_tuple(r.estimate, r.std_error, r.samples_used);
        },
        py::arg("n"), py::arg("alpha"), py::arg("s"), py::arg("samples") = 100000,
        py::arg("seed") = 1, py::arg("chunk") = 8192, py::arg("threads") = 0,
        "Monte Carlo MGF estimate: (estimate, std_error, samples_used)");

    py::register_exception<DomainError>(m, "DomainError");
    py::register_exception<ConditioningError>(m, "ConditioningError");
    py::register_exception<PrecisionError>(m, "PrecisionError");
}
