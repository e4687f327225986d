"""Deformation matrices built from factorized Weyl group elements.

A factorized element is ``s = s_minus * s_plus`` where each factor is a
product of commuting simple reflections taken from one color class of the
bicolored Dynkin diagram.  For ``4 | order(s)`` the deformation matrix is

    theta = c*I + (1 - c) s^(h/2) + i*kappa (s^(h/4) - s^(-h/4))

with ``c = cosh(eps)`` and ``kappa = sqrt(c^2 - c)``; all entries live in
:class:`~rootdeform.ring.RingScalar`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .ring import C, I, KAPPA, ONE, ZERO, RingFraction, RingScalar
from .weyl import (
    RootSystem,
    RootSystemError,
    WeylElement,
    compose,
    element_order,
)

CONSISTENT = "consistent"
LITERAL = "literal"
VARIANTS = (CONSISTENT, LITERAL)


class AnsatzError(ValueError):
    """The deformation ansatz needs an element order divisible by 4."""


@dataclass(frozen=True)
class FactorizedElement:
    rs: RootSystem
    v_minus: tuple[int, ...]
    v_plus: tuple[int, ...]
    sigma_minus: WeylElement
    sigma_plus: WeylElement
    sigma: WeylElement
    order: int

    @property
    def word(self) -> tuple[int, ...]:
        return self.v_minus + self.v_plus

    def factor(self, which: str) -> WeylElement:
        if which in ("minus", "-"):
            return self.sigma_minus
        if which in ("plus", "+"):
            return self.sigma_plus
        raise ValueError(f"unknown factor {which!r}")

    def to_json(self) -> dict:
        return {
            "system": self.rs.name,
            "minus": list(self.v_minus),
            "plus": list(self.v_plus),
            "order": self.order,
            "sigma": self.sigma.to_json()["matrix"],
            "sigma_minus": self.sigma_minus.to_json()["matrix"],
            "sigma_plus": self.sigma_plus.to_json()["matrix"],
        }


def factorize(rs: RootSystem, v_minus: Iterable[int], v_plus: Iterable[int]) -> FactorizedElement:
    v_minus = tuple(sorted(set(v_minus)))
    v_plus = tuple(sorted(set(v_plus)))
    for v in v_minus:
        if rs.color(v) != "minus":
            raise RootSystemError(f"vertex {v} is not minus-colored in {rs.name}")
    for v in v_plus:
        if rs.color(v) != "plus":
            raise RootSystemError(f"vertex {v} is not plus-colored in {rs.name}")
    s_minus = compose(v_minus, rs)
    s_plus = compose(v_plus, rs)
    # reflections of one color commute, so the order inside a factor is irrelevant
    assert compose(reversed(v_minus), rs) == s_minus
    assert compose(reversed(v_plus), rs) == s_plus
    sigma = s_minus * s_plus
    return FactorizedElement(rs, v_minus, v_plus, s_minus, s_plus, sigma, element_order(sigma))


def factorize_word(rs: RootSystem, word: Sequence[int]) -> FactorizedElement:
    """Read ``word`` as a minus-colored block followed by a plus-colored block."""
    word = list(word)
    if len(set(word)) != len(word):
        raise RootSystemError("word repeats a generator; not of bicolored form")
    split = 0
    while split < len(word) and rs.color(word[split]) == "minus":
        split += 1
    if any(rs.color(v) != "plus" for v in word[split:]):
        raise RootSystemError(
            "word is not a minus-colored block followed by a plus-colored block")
    return factorize(rs, word[:split], word[split:])


class DeformMatrix:
    """Square matrix with :class:`RingScalar` entries."""

    __slots__ = ("entries",)

    def __init__(self, entries: Sequence[Sequence]):
        self.entries = tuple(tuple(RingScalar.coerce(x) for x in row) for row in entries)

    @classmethod
    def identity(cls, n: int) -> DeformMatrix:
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def from_int(cls, m: Sequence[Sequence[int]]) -> DeformMatrix:
        return cls(m)

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if isinstance(other, WeylElement):
            other = DeformMatrix.from_int(other.matrix)
        if not isinstance(other, DeformMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __add__(self, other: DeformMatrix) -> DeformMatrix:
        return DeformMatrix([[x + y for x, y in zip(r, s)]
                             for r, s in zip(self.entries, other.entries)])

    def __sub__(self, other: DeformMatrix) -> DeformMatrix:
        return DeformMatrix([[x - y for x, y in zip(r, s)]
                             for r, s in zip(self.entries, other.entries)])

    def scale(self, s) -> DeformMatrix:
        s = RingScalar.coerce(s)
        return DeformMatrix([[s * x for x in r] for r in self.entries])

    def __matmul__(self, other) -> DeformMatrix:
        b = other.matrix if isinstance(other, WeylElement) else other.entries
        n = len(b[0])
        out = []
        for row in self.entries:
            acc = [ZERO] * n
            for x, brow in zip(row, b):
                if not x:
                    continue
                for j, y in enumerate(brow):
                    if y:
                        acc[j] = acc[j] + x * y
            out.append(acc)
        return DeformMatrix(out)

    def __rmatmul__(self, other) -> DeformMatrix:
        if isinstance(other, WeylElement):
            return DeformMatrix.from_int(other.matrix) @ self
        return NotImplemented

    def conj(self) -> DeformMatrix:
        return DeformMatrix([[x.conj() for x in r] for r in self.entries])

    def transpose(self) -> DeformMatrix:
        return DeformMatrix(list(zip(*self.entries)))

    def is_identity(self) -> bool:
        return self == DeformMatrix.identity(self.size)

    def at_undeformed(self) -> list[list]:
        """Exact entries at ``c = 1, kappa = 0``."""
        return [[x.at_undeformed() for x in r] for r in self.entries]

    def evaluate(self, epsilon: float) -> np.ndarray:
        return np.array([[x.evaluate(epsilon) for x in r] for r in self.entries],
                        dtype=complex)

    def is_trivial(self) -> bool:
        """True when no entry has a kappa component."""
        return all(not x.q for r in self.entries for x in r)

    def det(self) -> RingScalar:
        return determinant(self)

    def inverse(self) -> list[list[RingFraction]]:
        return inverse(self)

    def to_json(self) -> list:
        return [[x.to_json() for x in r] for r in self.entries]

    @classmethod
    def from_json(cls, data) -> DeformMatrix:
        return cls([[RingScalar.from_json(x) for x in r] for r in data])

    def numeric_json(self, epsilon: float) -> list:
        m = self.evaluate(epsilon)
        return [[[z.real, z.imag] for z in row] for row in m.tolist()]

    def __repr__(self):
        return f"DeformMatrix({self.size}x{self.size})"


def _bareiss_forward(a: list[list[RingScalar]], n: int) -> int:
    """In-place fraction-free elimination on the first ``n`` columns.

    Returns the row-swap sign, or 0 if the leading block is singular.
    """
    sign, prev = 1, ONE
    width = len(a[0])
    for k in range(n):
        candidates = [(a[r][k].degree(), r) for r in range(k, n) if a[r][k]]
        if not candidates:
            return 0
        _, piv = min(candidates)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, width):
                num = a[i][j] * akk - aik * a[k][j]
                a[i][j] = num if prev == ONE else num.divmod_exact(prev)
            a[i][k] = ZERO
        prev = akk
    return sign


def determinant(m: DeformMatrix) -> RingScalar:
    """Fraction-free (Bareiss) elimination with exact division in the ring.

    Pivots are the lowest-degree nonzero entries of each column, ties broken
    by row index.
    """
    n = m.size
    if n == 0:
        return ONE
    a = [list(r) for r in m.entries]
    sign = _bareiss_forward(a, n)
    if not sign:
        return ZERO
    return a[n - 1][n - 1] if sign > 0 else -a[n - 1][n - 1]


def inverse(m: DeformMatrix) -> list[list[RingFraction]]:
    """Inverse over the fraction field of the ring.

    Fraction-free elimination of ``[m | 1]`` followed by exact
    back-substitution gives ``det(m) * m^-1`` with ring entries.
    """
    n = m.size
    a = [list(row) + [ONE if i == j else ZERO for j in range(n)]
         for i, row in enumerate(m.entries)]
    sign = _bareiss_forward(a, n)
    if not sign:
        raise ZeroDivisionError("matrix is singular")
    det_u = a[n - 1][n - 1]
    out = [[None] * n for _ in range(n)]
    for col in range(n):
        x = [ZERO] * n
        for i in range(n - 1, -1, -1):
            acc = a[i][n + col] * det_u
            for j in range(i + 1, n):
                if a[i][j]:
                    acc = acc - a[i][j] * x[j]
            x[i] = acc.divmod_exact(a[i][i])
        for i in range(n):
            out[i][col] = RingFraction(x[i], det_u)
    return out


def _poly_in_sigma(fe: FactorizedElement, real_pow: int, imag_pow: int) -> DeformMatrix:
    n = fe.rs.rank
    s_real = fe.sigma ** real_pow
    s_up = fe.sigma ** imag_pow
    s_down = fe.sigma ** (-imag_pow)
    ik = I * KAPPA
    lam = ONE - C
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            x = C if i == j else ZERO
            x = x + lam * s_real.matrix[i][j]
            x = x + ik * (s_up.matrix[i][j] - s_down.matrix[i][j])
            row.append(x)
        out.append(row)
    return DeformMatrix(out)


def ansatz_powers(order: int, variant: str = CONSISTENT) -> tuple[int, int]:
    """(power of the real shift, power of the imaginary part)."""
    if order % 4:
        raise AnsatzError(f"ansatz inapplicable: element order {order} is not divisible by 4")
    if variant == CONSISTENT:
        return order // 2, order // 4
    if variant == LITERAL:
        return order // 4, order // 2
    raise ValueError(f"unknown ansatz variant {variant!r}; expected one of {VARIANTS}")


def build_theta(fe: FactorizedElement, variant: str = CONSISTENT) -> DeformMatrix:
    """Deformation matrix for ``fe``.

    ``variant="literal"`` swaps the two exponents (real shift at ``h/4``,
    imaginary part at ``+-h/2``); for ``h = 8`` its imaginary part cancels
    and the antiunitarity check fails.
    """
    real_pow, imag_pow = ansatz_powers(fe.order, variant)
    return _poly_in_sigma(fe, real_pow, imag_pow)


@dataclass(frozen=True)
class ConstraintReport:
    intertwine_minus: bool
    intertwine_plus: bool
    commutes_with_sigma: bool
    antiunitary: bool
    det_value: RingScalar
    det_ok: bool
    limit_ok: bool

    @property
    def passed(self) -> bool:
        return (self.intertwine_minus and self.intertwine_plus and self.commutes_with_sigma
                and self.antiunitary and self.det_ok and self.limit_ok)

    def items(self) -> list[tuple[str, bool]]:
        return [
            ("intertwine_minus", self.intertwine_minus),
            ("intertwine_plus", self.intertwine_plus),
            ("commutes_with_sigma", self.commutes_with_sigma),
            ("antiunitary", self.antiunitary),
            ("det_ok", self.det_ok),
            ("limit_ok", self.limit_ok),
        ]

    def to_json(self) -> dict:
        out = dict(self.items())
        out["det_value"] = self.det_value.to_json()
        out["passed"] = self.passed
        return out


def verify_constraints(theta: DeformMatrix, fe: FactorizedElement) -> ConstraintReport:
    """Exact check of the five conditions on a deformation matrix.

    conj(theta) s_pm = s_pm theta, [s, theta] = 0, conj(theta) theta = 1,
    det theta = +-1 and theta -> 1 as eps -> 0.
    """
    if theta.size != fe.rs.rank:
        raise ValueError("theta and element dimensions differ")
    n = theta.size
    tc = theta.conj()
    ident = DeformMatrix.identity(n)

    def intertwines(s: WeylElement) -> bool:
        return tc @ s == s @ theta

    det = determinant(theta)
    limit = theta.at_undeformed()
    return ConstraintReport(
        intertwine_minus=intertwines(fe.sigma_minus),
        intertwine_plus=intertwines(fe.sigma_plus),
        commutes_with_sigma=(theta @ fe.sigma == fe.sigma @ theta),
        antiunitary=(tc @ theta == ident),
        det_value=det,
        det_ok=det in (ONE, -ONE),
        limit_ok=all(limit[i][j] == int(i == j) for i in range(n) for j in range(n)),
    )


RingVector = tuple[RingScalar, ...]


def deform_root(theta: DeformMatrix, root: Sequence[int]) -> RingVector:
    """``theta`` applied to an undeformed root given in simple-root coordinates."""
    n = theta.size
    acc = [ZERO] * n
    for x, row in zip(root, theta.entries):
        if x:
            for j, y in enumerate(row):
                if y:
                    acc[j] = acc[j] + y * x
    return tuple(acc)


def deform_simple_roots(theta: DeformMatrix, rs: RootSystem) -> list[RingVector]:
    """Coordinates of each deformed simple root over the undeformed simple roots."""
    if theta.size != rs.rank:
        raise ValueError("theta and root system dimensions differ")
    return [deform_root(theta, rs.simple_root(i)) for i in rs.vertices]


def format_ring_vector(vec: Sequence[RingScalar], symbol: str = "α") -> str:
    terms = []
    for j, x in enumerate(vec, start=1):
        if not x:
            continue
        s = str(x)
        if x == ONE:
            terms.append(f"{symbol}{j}")
        elif x == -ONE:
            terms.append(f"-{symbol}{j}")
        else:
            terms.append(f"({s}){symbol}{j}")
    return " + ".join(terms).replace("+ -", "- ") if terms else "0"
