import numpy as np
import pytest
import sympy as sp

from rootdeform.deform import (
    LITERAL,
    AnsatzError,
    DeformMatrix,
    ansatz_powers,
    build_theta,
    deform_simple_roots,
    determinant,
    factorize,
    factorize_word,
    verify_constraints,
)
from rootdeform.ring import C, I, KAPPA, ONE, RingScalar
from rootdeform.weyl import RootSystemError, WeylElement, build_root_system

from reference_values import ORDER_LIST, SIGMA_TILDE, deformed_simple_roots, theta_matrix

c_sym, k_sym = sp.symbols("c k")


def _to_sympy(x: RingScalar):
    def poly(coeffs):
        return sum((sp.Rational(q.re.numerator, q.re.denominator)
                    + sp.I * sp.Rational(q.im.numerator, q.im.denominator)) * c_sym ** d
                   for d, q in enumerate(coeffs))
    return sp.expand(poly(x.p) + k_sym * poly(x.q))


def _reduce(expr):
    # normal form modulo k^2 - c^2 + c
    return sp.expand(sp.rem(sp.expand(expr), k_sym ** 2 - c_sym ** 2 + c_sym, k_sym))


def _sympy_theta(sigma, real_pow, imag_pow):
    s = sp.Matrix(sigma)
    return (c_sym * sp.eye(s.rows) + (1 - c_sym) * s ** real_pow
            + sp.I * k_sym * (s ** imag_pow - s ** -imag_pow))


def test_factorize_example(example):
    assert [list(r) for r in example.sigma.matrix] == SIGMA_TILDE
    assert example.order == 8
    assert (example.sigma_minus * example.sigma_minus).is_identity()
    assert (example.sigma_plus * example.sigma_plus).is_identity()
    assert example.sigma == example.sigma_minus * example.sigma_plus


def test_factorize_empty(e8):
    fe = factorize(e8, [], [])
    assert fe.sigma.is_identity() and fe.order == 1


@pytest.mark.parametrize("minus,plus,order", ORDER_LIST)
def test_listed_orders(e8, minus, plus, order):
    assert factorize(e8, minus, plus).order == order


def test_factorize_wrong_color(e8):
    with pytest.raises(RootSystemError):
        factorize(e8, [2], [])
    with pytest.raises(RootSystemError):
        factorize(e8, [], [3])


def test_factorize_word(e8, example):
    assert factorize_word(e8, [3, 5, 7, 2, 4, 6, 8]) == example
    with pytest.raises(RootSystemError):
        factorize_word(e8, [2, 3])
    with pytest.raises(RootSystemError):
        factorize_word(e8, [3, 3])


def test_theta_matches_reference(theta):
    expected = theta_matrix()
    for i in range(8):
        for j in range(8):
            assert theta[i, j] == expected[i][j], (i, j)
    assert theta[4, 4] == 2 * (C - I * KAPPA) - 1


def test_theta_matches_sympy_oracle(example, theta):
    oracle = _sympy_theta(SIGMA_TILDE, 4, 2)
    for i in range(8):
        for j in range(8):
            assert sp.expand(oracle[i, j] - _to_sympy(theta[i, j])) == 0


def test_theta_identity_at_zero(theta):
    assert np.allclose(theta.evaluate(0.0), np.eye(8), atol=0)
    assert theta.at_undeformed() == [[int(i == j) for j in range(8)] for i in range(8)]


def test_ansatz_inapplicable(e8):
    fe = factorize(e8, [1, 3, 5, 7], [2, 4, 6, 8])
    assert fe.order == 30
    with pytest.raises(AnsatzError, match="ansatz inapplicable"):
        build_theta(fe)


def test_ansatz_powers():
    assert ansatz_powers(8) == (4, 2)
    assert ansatz_powers(8, LITERAL) == (2, 4)
    with pytest.raises(ValueError):
        ansatz_powers(8, "other")


def test_constraints_example(example, theta):
    report = verify_constraints(theta, example)
    assert report.passed
    assert report.det_value == ONE


def test_det_matches_sympy_oracle(example, theta):
    oracle = _sympy_theta(SIGMA_TILDE, 4, 2)
    assert _reduce(oracle.det(method="berkowitz")) == 1
    assert _to_sympy(determinant(theta)) == 1


def test_constraints_identity(example):
    report = verify_constraints(DeformMatrix.identity(8), example)
    assert report.passed


def test_corrupted_theta_fails_antiunitarity(example, theta):
    rows = [list(r) for r in theta.entries]
    rows[0][2] = -rows[0][2]
    report = verify_constraints(DeformMatrix(rows), example)
    assert not report.antiunitary
    assert not report.passed


def test_literal_variant_is_classified(example):
    theta = build_theta(example, LITERAL)
    report = verify_constraints(theta, example)
    assert theta.is_trivial()
    assert not report.antiunitary
    assert report.commutes_with_sigma


def test_det_of_integer_matrix():
    m = DeformMatrix([[2, 1, 0], [1, 3, 1], [0, 1, 4]])
    assert determinant(m) == RingScalar.constant(18)
    assert determinant(DeformMatrix([[0, 1], [1, 0]])) == -ONE
    assert determinant(DeformMatrix([[1, 2], [2, 4]])).is_zero()


def test_det_symbolic_against_sympy():
    m = DeformMatrix([[C, KAPPA, I], [ONE, C * KAPPA, 2], [KAPPA, ONE, C + I]])
    oracle = sp.Matrix([[_to_sympy(x) for x in row] for row in m.entries]).det()
    assert sp.expand(_reduce(oracle) - _to_sympy(determinant(m))) == 0


def test_inverse_is_conjugate(theta):
    inv = theta.inverse()
    tc = theta.conj()
    assert all(inv[i][j] == tc[i, j] for i in range(8) for j in range(8))


def test_deformed_simple_roots_match_reference(e8, theta):
    assert deform_simple_roots(theta, e8) == deformed_simple_roots()


def test_deformed_roots_undeformed_limit(e8, theta):
    for i, vec in enumerate(deform_simple_roots(theta, e8), start=1):
        assert [x.at_undeformed() for x in vec] == list(e8.simple_root(i))


@pytest.mark.parametrize("eps", [0.3, 1.0, 2.0])
def test_antilinear_factor_is_involution(example, eps):
    rng = np.random.default_rng(3)
    x = rng.normal(size=8) + 1j * rng.normal(size=8)
    for s in (example.sigma_minus, example.sigma_plus):
        m = np.array(s.matrix, dtype=float)
        twice = (x.conj() @ m).conj() @ m
        assert np.abs(twice - x).max() < 1e-9


@pytest.mark.parametrize("eps", [0.3, 1.0, 2.0])
def test_intertwining_numeric(example, theta, eps):
    t = theta.evaluate(eps)
    for s in (example.sigma_minus, example.sigma_plus):
        m = np.array(s.matrix, dtype=float)
        assert np.abs(t.conj() @ m - m @ t).max() < 1e-9
    assert np.abs(t.conj() @ t - np.eye(8)).max() < 1e-9


def _applicable(rs):
    from rootdeform.scan import enumerate_candidates
    out = []
    for m, p in enumerate_candidates(rs):
        fe = factorize(rs, m, p)
        if fe.order % 4 == 0:
            out.append(fe)
    return out


@pytest.mark.parametrize("name", ["A3", "D4", "B2", "G2", "E6"])
def test_ansatz_family_constraints(name):
    rs = build_root_system(name)
    for fe in _applicable(rs):
        theta = build_theta(fe)
        report = verify_constraints(theta, fe)
        assert report.commutes_with_sigma and report.limit_ok
        assert report.passed
        assert report.det_value == ONE
        assert not theta.is_trivial()


def test_matmul_with_weyl_element(theta, example):
    lhs = theta @ example.sigma
    rhs = theta @ DeformMatrix.from_int(example.sigma.matrix)
    assert lhs == rhs
    assert example.sigma @ theta == DeformMatrix.from_int(example.sigma.matrix) @ theta
    assert isinstance(example.sigma, WeylElement)


def test_theta_json_roundtrip(theta):
    assert DeformMatrix.from_json(theta.to_json()) == theta
    num = theta.numeric_json(1.0)
    assert num[4][4] == pytest.approx([2 * np.cosh(1) - 1, -2 * KAPPA.evaluate(1.0).real])
