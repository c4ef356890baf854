"""Smoke tests for the python bindings."""

import math
from fractions import Fraction

import pytest

import relnet


def frac(s):
    return Fraction(s)


def test_reliability_coeffs():
    assert relnet.reliability_coeffs("series", 4) == ["0", "0", "0", "0", "1"]
    assert relnet.reliability_coeffs("k4ladder", 1) == ["0", "1", "2", "0", "-7", "7", "-2"]
    assert relnet.reliability_coeffs("street3xn", 0) == ["0", "0", "1"]


def test_reliability_at():
    exact, value = relnet.reliability_at("series", 2, "1/2")
    assert exact == "1/4"
    assert value == 0.25
    exact, _ = relnet.reliability_at("doublefan", 2, "1/2")
    assert exact == "1/2"


def test_brute_force_matches_formula():
    for family, n in [("k4ladder", 2), ("street3xn", 1), ("doublefan", 3), ("fan", 3)]:
        assert relnet.brute_force_coeffs(family, n) == relnet.reliability_coeffs(family, n)


def test_moments_and_cumulants():
    assert frac(relnet.moment("parallel", 3)["exact_lambda_scaled"]) == Fraction(11, 6)
    assert frac(relnet.moment("k4ladder", 1)["exact_lambda_scaled"]) == Fraction(79, 60)
    assert relnet.moment("series", 4, 1, 2.0)["value"] == pytest.approx(0.125)
    assert frac(relnet.cumulants("kofn", 3, 2, k=2)[1]) == Fraction(13, 36)
    assert frac(relnet.kn_cumulant(2, 3, 2)) == Fraction(13, 36)


def test_mgf():
    assert relnet.mgf("series", 2, 1.0) == pytest.approx(2.0)


def test_signature():
    sig = relnet.signature("street3xn")
    assert sig["i"] == 3
    assert sig["head"][3] == "1"
    assert sig["head"][4] == "4"
    assert sig["amplitude"][2] == "-2"
    sig2 = relnet.signature_from_sizes("street3xn", [20, 21, 22])
    assert sig2["head"] == sig["head"]
    assert sig2["amplitude"] == sig["amplitude"]


def test_expansion_and_cv():
    terms = relnet.expansion_terms("k4ladder", 1)
    assert terms[0][0] == pytest.approx(0.25)
    assert terms[0][1] == pytest.approx(math.gamma(1.25), rel=1e-12)
    assert relnet.cv_limit(1) == pytest.approx(1.0)


def test_weibull_equivalent():
    w = relnet.weibull_equivalent("street3xn", 1)
    assert (w["i"], w["a_i"], w["a_ip1"]) == (3, "1", "5/2")


def test_classify():
    assert relnet.classify("fan")["regime"] == "saturating"
    assert relnet.classify("fan")["r_infinity_at_half"] == "4/9"
    assert relnet.classify("k4ladder")["regime"] == "series-like"


def test_fan_limit():
    assert relnet.fan_limit_moment(1) == pytest.approx(0.736400, abs=1e-6)


def test_mc_reproducible():
    a = relnet.mc_moments("parallel", 3, samples=20000, seed=5, threads=1)
    b = relnet.mc_moments("parallel", 3, samples=20000, seed=5, threads=4)
    assert a[0]["mean"] == b[0]["mean"]
    assert abs(a[0]["mean"] - 11 / 6) < 4 * a[0]["std_error"]


def test_errors_are_typed():
    with pytest.raises(relnet.RelnetError):
        relnet.reliability_coeffs("kofn", 3, k=7)
    with pytest.raises(relnet.RelnetError):
        relnet.graph_info("kofn", 3)
