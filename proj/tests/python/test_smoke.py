import cmath
import math
from fractions import Fraction

import mpmath
import pytest

import jackdunkl as jd


def as_dict(terms):
    return {tuple(e): Fraction(c) for e, c in terms}


def test_lowest_nonsymmetric_polynomials():
    assert jd.jack_E_str([0, 1], "1/2") == "x2"
    for k in (Fraction(1, 2), Fraction(1), Fraction(5, 3)):
        got = as_dict(jd.jack_E_terms([1, 0], str(k)))
        assert got == {(1, 0): Fraction(1), (0, 1): k / (1 + k)}


def test_symmetric_polynomial_of_a_column():
    # P_(1,1,...) is the elementary symmetric function for every k
    assert as_dict(jd.jack_P_terms([1, 1, 1], "2")) == {(1, 1, 1): Fraction(1)}
    assert as_dict(jd.jack_P_terms([1, 1, 0], "1/2")) == {(1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1}


def test_value_at_one_matches_coefficient_sum():
    for eta in ([2, 0, 1], [0, 2], [1, 1, 0]):
        total = sum(Fraction(c) for _, c in jd.jack_E_terms(eta, "1/2"))
        assert Fraction(jd.eval_E_at_one(eta, "1/2")) == total


def test_eigenvalues_are_exact_strings():
    # eta_j minus k times the number of parts that outrank it
    assert jd.eigenvalues([0, 1], "1/2") == ["-1/2", "1"]
    assert jd.eigenvalues([2, 0, 2], "1/3") == ["2", "-2/3", "5/3"]


def test_exponential_collapse():
    r = jd.eval_series("0F0", [1.0, 1.0], [1.0, 1.0], "1", tol=1e-12)
    assert r["converged"]
    assert abs(r["value"] - math.e**2) <= 1e-12 * math.e**2


@pytest.mark.parametrize("z", [0.3, -1.2, 0.9 + 0.4j])
def test_one_variable_series_are_classical(z):
    r = jd.eval_series("1F1", [z], [1.0], "1/2", upper=[0.7], lower=[2.5])
    assert abs(r["value"] - complex(mpmath.hyp1f1(0.7, 2.5, z))) <= 1e-12 + r["tailBound"]
    if abs(z) < 0.8:
        r = jd.eval_series("2F1", [z], [1.0], "1", upper=[0.5, 1.25], lower=[1.5])
        assert abs(r["value"] - complex(mpmath.hyp2f1(0.5, 1.25, 1.5, z))) <= 1e-11 + r["tailBound"]


def test_gamma_n_one_variable():
    assert abs(jd.gamma_n([2.5], "3") - math.gamma(2.5)) < 1e-13
    assert abs(jd.gamma_n([0.5 + 1j], "1") - complex(mpmath.gamma(0.5 + 1j))) < 1e-13


def test_exact_identity_report():
    rep = jd.verify_main1([1, 0, 2], "1/2")
    assert rep["pass"] and rep["relError"] == 0.0


def test_master_anchor():
    rep = jd.verify_master([0, 0], 2.0, [2.0, 3.0], "1/2")
    assert rep["pass"]
    assert abs(rep["lhs"] - 1 / 36) < 1e-9


def test_suite_summary():
    s = jd.run_suite("desk", [3])
    assert s["pass"] and s["criteria"][0]["id"] == 3 and s["criteria"][0]["checks"] > 0


def test_errors():
    with pytest.raises(ValueError):
        jd.jack_E_str([0, 1], "0.5")
    with pytest.raises(ValueError):
        jd.eval_series("0F1", [1.0], [1.0], "1", lower=[0.0])
    with pytest.raises(ValueError):
        jd.eval_series("0F1", [1.0], [1.0], "1")
    with pytest.raises(ValueError):
        jd.run_suite("nightly")
