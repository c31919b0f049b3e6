"""Smoke tests for the pylue module."""

import math

import pylue


def test_mgf_hand_value():
    # n=1, alpha=1/2, s=1: D_1(1)/D_1(0) = 3 e^{-2}
    got = float(pylue.mgf(1, "0.5", "1"))
    assert abs(got - 3 * math.exp(-2)) < 1e-14


def test_bessel_k_half_order():
    # K_{1/2}(2) = sqrt(pi/4) e^{-2}
    got = float(pylue.bessel_k("0.5", "2"))
    assert abs(got - math.sqrt(math.pi / 4) * math.exp(-2)) < 1e-14


def test_aux_table_hand_rationals():
    aux = pylue.aux_table(1, "0.5", "1")
    assert abs(float(aux["a"][0]) - 2 / 3) < 1e-14
    assert abs(float(aux["b"][1]) + 4 / 9) < 1e-14
    assert abs(float(aux["a"][1]) - 52 / 93) < 1e-14


def test_routes_agree():
    m = pylue.aux_table(6, "1.3", "0.7", 256, "moments")
    h = pylue.aux_table(6, "1.3", "0.7", 256, "hierarchy")
    for x, y in zip(m["a"], h["a"]):
        assert abs(float(x) - float(y)) <= 1e-15 * max(1.0, abs(float(x)))


def test_recurrence_laguerre_limit():
    table = pylue.recurrence_table(3, "0.5", "0")
    assert [round(float(a), 6) for a in table["alpha_n"]] == [1.5, 3.5, 5.5, 7.5]
    assert abs(float(table["beta_n"][2]) - 5.0) < 1e-14


def test_sigma_hand_values():
    sd = pylue.sigma(1, "0.5", "1")
    assert abs(float(sd["H"]) + 2 / 3) < 1e-14
    assert abs(float(sd["H_prime"]) + 4 / 9) < 1e-14
    assert abs(float(sd["H_second"]) - 5 / 27) < 1e-14
    assert float(sd["sigma_form_residual"]) < 1e-12


def test_verify_suites_pass():
    for suite in ("residue", "sigma", "discrete", "tau"):
        rep = pylue.verify(suite, 4, "0.5", "1")
        assert rep["all_pass"], (suite, rep["max_residual"])


def test_theta0_is_alpha():
    assert abs(float(pylue.theta0(2, "1.3", "2")) - 1.3) < 1e-12


def test_p3_solve_matches_hierarchy():
    got = float(pylue.p3_solve(1, "0.5", "1")["a"])
    assert abs(got - 52 / 93) < 1e-9


def test_mc_reproducible_and_close():
    est1, err1, used1 = pylue.mc_mgf(1, 0.5, 1.0, samples=20000, seed=9)
    est2, err2, used2 = pylue.mc_mgf(1, 0.5, 1.0, samples=20000, seed=9)
    assert (est1, err1, used1) == (est2, err2, used2)
    assert used1 == 20000
    assert abs(est1 - 3 * math.exp(-2)) <= 4 * err1


def test_domain_error_maps_to_python():
    try:
        pylue.mgf(1, "-1", "1")
    except pylue.DomainError:
        pass
    else:
        raise AssertionError("expected DomainError")
