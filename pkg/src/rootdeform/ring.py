"""Exact arithmetic in Q(i)[c, kappa] / (kappa^2 - c^2 + c).

Every element is stored in the normal form ``p(c) + kappa * q(c)`` where
``p`` and ``q`` are polynomials in ``c`` with Gaussian-rational
coefficients.  The symbols are meant to be evaluated at ``c = cosh(eps)``
and ``kappa = sqrt(c^2 - c)``, so both are real and complex conjugation
only touches the coefficients.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union


class GaussianRational:
    """A number ``re + i*im`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, Fraction) else Fraction(re)
        self.im = im if isinstance(im, Fraction) else Fraction(im)

    @classmethod
    def coerce(cls, x) -> GaussianRational:
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, complex):
            return cls(Fraction(x.real), Fraction(x.imag))
        return cls(x)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if not isinstance(other, (GaussianRational, int, Fraction)):
            return NotImplemented
        other = GaussianRational.coerce(other)
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __add__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        other = GaussianRational.coerce(other)
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussianRational.coerce(other)
        n = other.re * other.re + other.im * other.im
        if not n:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return self * GaussianRational(other.re / n, -other.im / n)

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def to_list(self) -> list[int]:
        return [self.re.numerator, self.re.denominator,
                self.im.numerator, self.im.denominator]

    @classmethod
    def from_list(cls, data: Sequence[int]) -> GaussianRational:
        if len(data) != 4:
            raise ValueError(f"expected [re_num, re_den, im_num, im_den], got {data!r}")
        return cls(Fraction(data[0], data[1]), Fraction(data[2], data[3]))

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return _imag_str(self.im)
        sign = "-" if self.im < 0 else "+"
        return f"({self.re} {sign} {_imag_str(abs(self.im))})"


def _imag_str(x: Fraction) -> str:
    if x == 1:
        return "i"
    if x == -1:
        return "-i"
    return f"{x}i"


ZERO_Q = GaussianRational(0)
ONE_Q = GaussianRational(1)

# Polynomials in c are tuples of GaussianRational in ascending degree with no
# trailing zeros; the zero polynomial is the empty tuple.
Poly = tuple


def _trim(coeffs: Iterable[GaussianRational]) -> Poly:
    out = list(coeffs)
    while out and not out[-1]:
        out.pop()
    return tuple(out)


def _padd(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    return _trim([x + y for x, y in zip(a, b)] + list(a[len(b):]))


def _pneg(a: Poly) -> Poly:
    return tuple(-x for x in a)


def _psub(a: Poly, b: Poly) -> Poly:
    return _padd(a, _pneg(b))


def _pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [ZERO_Q] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = out[i + j] + x * y
    return _trim(out)


def _pscale(a: Poly, s: GaussianRational) -> Poly:
    return _trim([x * s for x in a])


def _pdivmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    lead = b[-1]
    quot = [ZERO_Q] * max(len(a) - len(b) + 1, 0)
    while len(rem) >= len(b) and rem:
        shift = len(rem) - len(b)
        f = rem[-1] / lead
        quot[shift] = f
        for j, y in enumerate(b):
            rem[shift + j] = rem[shift + j] - f * y
        rem.pop()
        while rem and not rem[-1]:
            rem.pop()
    return _trim(quot), tuple(rem)


def _peval(a: Poly, x):
    acc = 0
    for coeff in reversed(a):
        acc = acc * x + complex(coeff)
    return acc


# kappa^2 = c^2 - c
_KAPPA_SQ: Poly = (ZERO_Q, -ONE_Q, ONE_Q)

Scalar = Union["RingScalar", GaussianRational, int, Fraction]


class RingScalar:
    """Element ``p(c) + kappa*q(c)`` of the deformation coefficient ring.

    Instances are immutable and hashable; equality is exact.
    """

    __slots__ = ("p", "q")

    def __init__(self, p: Iterable = (), q: Iterable = ()):
        object.__setattr__(self, "p", _trim(GaussianRational.coerce(x) for x in p))
        object.__setattr__(self, "q", _trim(GaussianRational.coerce(x) for x in q))

    def __setattr__(self, name, value):
        raise AttributeError("RingScalar is immutable")

    def __reduce__(self):
        return (RingScalar._raw, (self.p, self.q))

    @classmethod
    def _raw(cls, p: Poly, q: Poly) -> RingScalar:
        obj = object.__new__(cls)
        object.__setattr__(obj, "p", p)
        object.__setattr__(obj, "q", q)
        return obj

    @classmethod
    def coerce(cls, x: Scalar) -> RingScalar:
        if isinstance(x, RingScalar):
            return x
        return cls._raw(_trim([GaussianRational.coerce(x)]), ())

    @classmethod
    def constant(cls, value) -> RingScalar:
        return cls.coerce(value)

    @classmethod
    def c(cls) -> RingScalar:
        return cls._raw((ZERO_Q, ONE_Q), ())

    @classmethod
    def kappa(cls) -> RingScalar:
        return cls._raw((), (ONE_Q,))

    @classmethod
    def i(cls) -> RingScalar:
        return cls._raw((GaussianRational(0, 1),), ())

    @classmethod
    def lam(cls) -> RingScalar:
        """``1 - c``."""
        return cls._raw((ONE_Q, -ONE_Q), ())

    def is_zero(self) -> bool:
        return not self.p and not self.q

    def __bool__(self):
        return not self.is_zero()

    def is_real(self) -> bool:
        return all(not x.im for x in self.p) and all(not x.im for x in self.q)

    def is_constant(self) -> bool:
        return len(self.p) <= 1 and not self.q

    def degree(self) -> int:
        """Total degree in (c, kappa); -1 for zero."""
        if self.is_zero():
            return -1
        return max(len(self.p) - 1, len(self.q))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = RingScalar.coerce(other)
        if not isinstance(other, RingScalar):
            return NotImplemented
        return self.p == other.p and self.q == other.q

    def __hash__(self):
        return hash((self.p, self.q))

    def __add__(self, other):
        other = RingScalar.coerce(other)
        return RingScalar._raw(_padd(self.p, other.p), _padd(self.q, other.q))

    __radd__ = __add__

    def __neg__(self):
        return RingScalar._raw(_pneg(self.p), _pneg(self.q))

    def __sub__(self, other):
        other = RingScalar.coerce(other)
        return RingScalar._raw(_psub(self.p, other.p), _psub(self.q, other.q))

    def __rsub__(self, other):
        return RingScalar.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, RingScalar):
            s = GaussianRational.coerce(other)
            return RingScalar._raw(_pscale(self.p, s), _pscale(self.q, s))
        a, b = self.p, self.q
        c, d = other.p, other.q
        p = _padd(_pmul(a, c), _pmul(_pmul(b, d), _KAPPA_SQ))
        q = _padd(_pmul(a, d), _pmul(b, c))
        return RingScalar._raw(p, q)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not ring elements")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> RingScalar:
        """Complex conjugation; ``c`` and ``kappa`` are real symbols."""
        return RingScalar._raw(tuple(x.conjugate() for x in self.p),
                               tuple(x.conjugate() for x in self.q))

    def kappa_conj(self) -> RingScalar:
        """The Galois partner ``p - kappa*q``."""
        return RingScalar._raw(self.p, _pneg(self.q))

    def norm(self) -> Poly:
        """``p^2 - q^2 (c^2 - c)``, the product with :meth:`kappa_conj`."""
        return _psub(_pmul(self.p, self.p), _pmul(_pmul(self.q, self.q), _KAPPA_SQ))

    def divmod_exact(self, other: Scalar) -> RingScalar:
        """Return ``self / other`` when ``other`` divides ``self`` in the ring.

        Raises ArithmeticError if the quotient is not a ring element.
        """
        other = RingScalar.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero ring element")
        if other.is_constant():
            inv = ONE_Q / other.p[0]
            return self * inv
        num = self * other.kappa_conj()
        n = other.norm()
        qp, rp = _pdivmod(num.p, n)
        qq, rq = _pdivmod(num.q, n)
        if rp or rq:
            raise ArithmeticError(f"{other} does not divide {self}")
        return RingScalar._raw(qp, qq)

    def at_undeformed(self) -> GaussianRational:
        """Exact value at ``c = 1, kappa = 0`` (i.e. ``eps = 0``)."""
        acc = ZERO_Q
        for x in self.p:
            acc = acc + x
        return acc

    def evaluate(self, epsilon: float) -> complex:
        """Numeric value at ``c = cosh(eps)``, ``kappa = sqrt(c^2 - c) >= 0``."""
        if not math.isfinite(epsilon):
            raise ValueError("epsilon must be a finite real number")
        c = math.cosh(epsilon)
        return self.evaluate_at(c)

    def evaluate_at(self, c0: float) -> complex:
        if c0 < 1:
            raise ValueError("c0 must be >= 1 so that kappa is real")
        kappa = math.sqrt(max(c0 * c0 - c0, 0.0))
        return complex(_peval(self.p, c0) + kappa * _peval(self.q, c0))

    def to_json(self) -> dict:
        return {"p": [x.to_list() for x in self.p], "q": [x.to_list() for x in self.q]}

    @classmethod
    def from_json(cls, data: dict) -> RingScalar:
        return cls([GaussianRational.from_list(x) for x in data.get("p", [])],
                   [GaussianRational.from_list(x) for x in data.get("q", [])])

    def __repr__(self):
        return f"RingScalar({self})"

    def __str__(self):
        terms = []
        for poly, k in ((self.p, ""), (self.q, "κ")):
            for deg, coeff in enumerate(poly):
                if not coeff:
                    continue
                mono = ("c" if deg == 1 else f"c^{deg}" if deg > 1 else "") + k
                terms.append(_term(coeff, mono))
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out


def _term(coeff: GaussianRational, mono: str) -> str:
    if not mono:
        s = str(coeff)
        return s[1:-1] if s.startswith("(") else s
    if not coeff.im:
        if coeff.re == 1:
            return mono
        if coeff.re == -1:
            return "-" + mono
        return f"{coeff.re}{mono}"
    if not coeff.re:
        if coeff.im == 1:
            return "i" + mono
        if coeff.im == -1:
            return "-i" + mono
        return f"{coeff.im}i{mono}"
    return f"{coeff}{mono}"


ZERO = RingScalar()
ONE = RingScalar.coerce(1)
I = RingScalar.i()
C = RingScalar.c()
KAPPA = RingScalar.kappa()
LAMBDA = RingScalar.lam()


class RingFraction:
    """Quotient ``num / den`` in the fraction field of the ring.

    Used for matrix inversion; fractions are reduced whenever the
    denominator happens to divide the numerator.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Scalar, den: Scalar = 1):
        num, den = RingScalar.coerce(num), RingScalar.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if den != ONE:
            try:
                num, den = num.divmod_exact(den), ONE
            except ArithmeticError:
                pass
        self.num, self.den = num, den

    def __add__(self, other):
        other = _frac(other)
        return RingFraction(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other):
        other = _frac(other)
        return RingFraction(self.num * other.den - other.num * self.den, self.den * other.den)

    def __mul__(self, other):
        other = _frac(other)
        return RingFraction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        other = _frac(other)
        return RingFraction(self.num * other.den, self.den * other.num)

    def __eq__(self, other):
        if isinstance(other, (RingScalar, int, Fraction, GaussianRational)):
            other = RingFraction(other)
        if not isinstance(other, RingFraction):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def to_ring(self) -> RingScalar:
        return self.num.divmod_exact(self.den)

    def __repr__(self):
        return f"RingFraction({self.num} / {self.den})"


def _frac(x) -> RingFraction:
    return x if isinstance(x, RingFraction) else RingFraction(x)

