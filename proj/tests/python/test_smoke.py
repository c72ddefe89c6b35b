"""Smoke tests for the pybind11 module."""

import cmath
import json
import math

import pytest

import cesarolab as cl


def test_norm_constants():
    assert cl.operator_norm("cesaro", 1.0, 2.0) == pytest.approx(2.0, abs=1e-14)
    assert cl.operator_norm("cesaro", 2.0, 2.0) == pytest.approx(8.0 / 3.0, abs=1e-14)
    for p in (1.5, 2.0, 4.0):
        assert cl.operator_norm("cesaro-dual", 1.0, p) == pytest.approx(p, rel=1e-12)


def test_special_functions():
    assert cl.log_gamma(1.0 + 0j) == pytest.approx(0.0, abs=1e-14)
    assert cl.gamma_ratio(2.0 + 0j, 3.0 + 0j).real == pytest.approx(0.5, rel=1e-13)
    assert cl.beta_fn(1.0 + 0j, 0.5 + 0j).real == pytest.approx(2.0, rel=1e-13)
    # 2F1(1, 2; 2; -1) = 1/2
    assert cl.gauss_2f1(1.0 + 0j, 2.0 + 0j, 2.0 + 0j, -1.0).real == pytest.approx(0.5, rel=1e-12)
    assert cl.mittag_leffler(1.0, 1.0 + 0j).real == pytest.approx(math.e, rel=1e-12)


def test_operator_application():
    f = cl.FnExpr.parse("exp:1")
    got = cl.apply("cesaro", 1.0, "half-line", 2.0, f, 1.0)
    assert got.real == pytest.approx(1.0 - math.exp(-1.0), abs=1e-10)
    dual = cl.apply("cesaro-dual", 1.0, "half-line", 2.0, cl.FnExpr.parse("powerkernel:0.5"), 1.0)
    assert dual.real == pytest.approx(1.1283791670955126, abs=1e-8)
    # subordination agrees and is p-independent
    for p in (1.5, 2.0, 4.0):
        sub = cl.subordination("cesaro", 1.0, p, f, 1.0)
        assert sub.real == pytest.approx(got.real, abs=1e-8)


def test_errors_are_typed():
    with pytest.raises(cl.CesarolabError):
        cl.FnExpr.parse("nosuch:1")
    with pytest.raises(cl.CesarolabError):
        cl.apply("cesaro", 1.0, "half-line", 1.0, cl.FnExpr.parse("exp:1"), 1.0)


def test_circle_deviation():
    assert cl.circle_deviation("cesaro", 2.0) <= 1e-10
    assert cl.circle_deviation("cesaro-dual", 3.0) <= 1e-10


def test_spectral_curve_shape():
    params, points = cl.spectral_curve("cesaro", 1.0, 2.0, -20.0, 20.0, 401)
    assert len(params) == 401 and len(points) == 401
    mid = points[200]
    assert cmath.isclose(mid, 2.0 + 0j, abs_tol=1e-12)


def test_fnexpr_json_roundtrip():
    f = cl.FnExpr.parse("0.5*gauss:1+2*gauss:2")
    back = cl.FnExpr.from_json(f.to_json())
    data = json.loads(back.to_json())
    assert data["type"] == "lincomb"
    assert back.eval(0.7) == pytest.approx(f.eval(0.7))


def test_sobolev_and_pairing():
    sp1 = cl.FnExpr.parse("shiftedpower:1:1")
    assert cl.sobolev_norm(sp1, 1.0, 2.0) == pytest.approx(1.0 / math.sqrt(3.0), abs=1e-9)
    e1 = cl.FnExpr.parse("exp:1")
    assert cl.pairing(e1, e1, 0.0).real == pytest.approx(0.5, abs=1e-10)


def test_verify_suite_runs_green():
    checks = cl.run_suite("specfun")
    assert len(checks) > 0
    for c in checks:
        assert c["pass"], c
        assert "paper_ref" in c


def test_weyl_and_generator():
    sp1 = cl.FnExpr.parse("shiftedpower:1:1")
    # W^1 (1+t)^-1 = (1+t)^-2
    assert cl.weyl_plus(sp1, 1.0, 1.0).real == pytest.approx(0.25, abs=1e-12)
    g = cl.FnExpr.parse("gauss:1")
    # W_0^1 = d/dt on the real line
    assert cl.weyl_zero(g, 1.0, -1.0).real == pytest.approx(
        math.exp(-0.5), rel=1e-9
    )
    e1 = cl.FnExpr.parse("exp:1")
    lam = cl.generator(2.0, e1, 1.0)
    assert lam.real == pytest.approx(0.5 * math.exp(-1.0), abs=1e-13)


def test_resolvent_and_composition():
    e1 = cl.FnExpr.parse("exp:1")
    r = cl.resolvent(0.5 + 0j, 2.0, e1, 1.0)
    direct = cl.apply("cesaro", 1.0, "half-line", 2.0, e1, 1.0)
    assert r.real == pytest.approx(direct.real, abs=1e-9)
    both = cl.composition(1.0, 1.0, e1, 1.0)
    dual = cl.apply("cesaro-dual", 1.0, "half-line", 2.0, e1, 1.0)
    assert both.real == pytest.approx(direct.real + dual.real, abs=1e-8)


def test_fourier_and_norm_ratio():
    g = cl.FnExpr.parse("gauss:1")
    assert cl.fourier_transform(g, 0.0).real == pytest.approx(math.sqrt(2 * math.pi), rel=1e-12)
    ratio = cl.empirical_norm_ratio("cesaro", 1.0, 2.0, cl.FnExpr.parse("exp:1"))
    assert 0.5 < ratio < 2.0 + 1e-6


def test_group_action():
    e1 = cl.FnExpr.parse("exp:1")
    got = cl.group_action_eval(0.7, 2.0, e1, 1.0)
    want = math.exp(-0.35) * math.exp(-math.exp(-0.7))
    assert got.real == pytest.approx(want, rel=1e-13)
