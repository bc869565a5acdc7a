import numpy as np
import pytest
from hypothesis import given, strategies as st

from isoflow.taylor import Jet, jet_cos, jet_exp, jet_log, jet_sin, jet_sqrt


def fd_deriv(f, x, k):
    """Reference k-th derivative by central differences, with the step
    chosen per order so roundoff stays below truncation."""
    h = {1: 1e-5, 2: 1e-4, 3: 1e-3, 4: 1e-2}[k]
    if k == 1:
        return (f(x + h) - f(x - h)) / (2 * h)
    if k == 2:
        return (f(x + h) - 2 * f(x) + f(x - h)) / h**2
    if k == 3:
        return (f(x + 2 * h) - 2 * f(x + h) + 2 * f(x - h) - f(x - 2 * h)) / (2 * h**3)
    return (f(x + 2 * h) - 4 * f(x + h) + 6 * f(x) - 4 * f(x - h) + f(x - 2 * h)) / h**4


FD_TOL = {1: 1e-8, 2: 1e-6, 3: 1e-4, 4: 5e-3}


@pytest.mark.parametrize(
    "name,jfn,f",
    [
        ("exp", jet_exp, np.exp),
        ("log", jet_log, np.log),
        ("sqrt", jet_sqrt, np.sqrt),
        ("sin", jet_sin, np.sin),
        ("cos", jet_cos, np.cos),
    ],
)
def test_elementary_jets_match_fd(name, jfn, f):
    x = np.linspace(0.4, 2.3, 11)
    j = jfn(Jet.variable(x))
    d = j.derivatives()
    assert np.allclose(d[0], f(x), rtol=1e-14)
    for k in range(1, 5):
        ref = fd_deriv(f, x, k)
        scale = np.maximum(1.0, np.abs(ref))
        assert np.max(np.abs(d[k] - ref) / scale) < FD_TOL[k], name


def test_composite_rational_jet():
    # f(x) = x^2 / (1 + x^3); closed-form first derivative check
    x = np.linspace(0.1, 2.0, 9)
    jx = Jet.variable(x)
    j = (jx * jx) / (1.0 + jx**3)
    d = j.derivatives()
    f = x**2 / (1 + x**3)
    fp = (2 * x * (1 + x**3) - x**2 * 3 * x**2) / (1 + x**3) ** 2
    assert np.allclose(d[0], f, rtol=1e-14)
    assert np.allclose(d[1], fp, rtol=1e-12)


def test_reciprocal_of_product_is_quotient():
    x = np.linspace(0.3, 1.7, 7)
    jx = Jet.variable(x)
    a = jet_exp(jx)
    lhs = (a * jx).reciprocal()
    rhs = a.reciprocal() * jx.reciprocal()
    assert np.allclose(lhs.c, rhs.c, rtol=1e-12, atol=1e-12)


@given(st.floats(min_value=0.2, max_value=3.0),
       st.floats(min_value=-2.0, max_value=2.0))
def test_exp_log_roundtrip(x, s):
    j = Jet.affine(np.array([x]), s)
    back = jet_log(jet_exp(j))
    assert np.allclose(back.c, j.c, rtol=1e-10, atol=1e-10)


def test_affine_seed_chain_rule():
    # g(t) = sin(a + s*t): derivatives carry factors of s
    a, s = 0.7, 2.5
    j = jet_sin(Jet.affine(np.array([a]), s))
    d = j.derivatives()[:, 0]
    assert np.isclose(d[1], s * np.cos(a), rtol=1e-14)
    assert np.isclose(d[2], -(s**2) * np.sin(a), rtol=1e-14)
    assert np.isclose(d[3], -(s**3) * np.cos(a), rtol=1e-14)
    assert np.isclose(d[4], s**4 * np.sin(a), rtol=1e-14)
