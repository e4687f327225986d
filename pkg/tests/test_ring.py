import json
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rootdeform.ring import (
    C,
    I,
    KAPPA,
    LAMBDA,
    ONE,
    ZERO,
    GaussianRational,
    RingFraction,
    RingScalar,
)

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)
gauss = st.builds(GaussianRational, small, small)
polys = st.lists(gauss, max_size=4)
scalars = st.builds(RingScalar, polys, polys)
epsilons = st.floats(min_value=-2, max_value=2, allow_nan=False)


def test_kappa_squared():
    assert KAPPA * KAPPA == C * C - C


def test_conjugate_pair_product():
    assert (C + I * KAPPA) * (C - I * KAPPA) == 2 * C * C - C


def test_theta_entry_from_lambda():
    entry = LAMBDA * 2 - I * KAPPA
    assert entry == RingScalar([2, -2], [GaussianRational(0, -1)])
    assert str(entry) == "2 - 2c - iκ"


def test_conj_examples():
    entry = 2 * LAMBDA - I * KAPPA
    assert entry.conj() == 2 * LAMBDA + I * KAPPA
    assert C.conj() == C


def test_eval_examples():
    assert LAMBDA.evaluate(0) == 0
    assert KAPPA.evaluate(0) == 0
    assert (2 * C - 1).evaluate(1.0) == pytest.approx(2 * math.cosh(1) - 1)
    assert abs((2 * C - 1).evaluate(1.0) - 2.0861612696304874) < 1e-12


def test_kappa_is_nonnegative_real():
    for eps in (-1.5, 0.2, 3.0):
        z = KAPPA.evaluate(eps)
        assert z.imag == 0 and z.real >= 0
        c = math.cosh(eps)
        assert z.real == pytest.approx(math.sqrt(c * c - c))


def test_eval_rejects_nonfinite():
    with pytest.raises(ValueError):
        C.evaluate(float("inf"))


def test_canonical_zero():
    x = RingScalar([0, 0, 0], [0])
    assert x.p == () and x.q == ()
    assert x == ZERO and x.degree() == -1
    assert (C - C).is_zero()


def test_immutable():
    with pytest.raises(AttributeError):
        C.p = ()


@settings(max_examples=200)
@given(scalars, scalars, scalars)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a and a * ONE == a
    assert a - a == ZERO


@settings(max_examples=200)
@given(scalars, scalars)
def test_conj_homomorphism(a, b):
    assert (a * b).conj() == a.conj() * b.conj()
    assert (a + b).conj() == a.conj() + b.conj()
    assert a.conj().conj() == a


@settings(max_examples=200)
@given(scalars, scalars, epsilons)
def test_eval_homomorphism(a, b, eps):
    lhs = (a * b).evaluate(eps)
    rhs = a.evaluate(eps) * b.evaluate(eps)
    assert abs(lhs - rhs) < 1e-9 * max(1.0, abs(rhs))
    assert abs((a + b).evaluate(eps) - a.evaluate(eps) - b.evaluate(eps)) < 1e-9


@given(scalars)
def test_json_roundtrip(a):
    data = json.loads(json.dumps(a.to_json()))
    assert RingScalar.from_json(data) == a


def test_json_layout():
    x = RingScalar([Fraction(1, 2)], [GaussianRational(0, -3)])
    assert x.to_json() == {"p": [[1, 2, 0, 1]], "q": [[0, 1, -3, 1]]}


@settings(max_examples=100)
@given(scalars, scalars)
def test_exact_division(a, b):
    if b.is_zero():
        return
    assert (a * b).divmod_exact(b) == a


def test_inexact_division_raises():
    with pytest.raises(ArithmeticError):
        ONE.divmod_exact(C)
    with pytest.raises(ZeroDivisionError):
        ONE.divmod_exact(ZERO)


def test_norm_matches_kappa_conjugate():
    x = C + 3 * KAPPA - I
    assert RingScalar(x.norm()) == x * x.kappa_conj()


def test_fraction_field():
    f = RingFraction(ONE, C) + RingFraction(KAPPA, C)
    assert f * RingFraction(C) == 1 + KAPPA
    assert (RingFraction(C * KAPPA, C)).to_ring() == KAPPA
    assert RingFraction(ONE, KAPPA) == RingFraction(KAPPA, C * C - C)
