"""Root systems, simple Weyl reflections and element arithmetic.

Roots are integer tuples of coordinates in the simple-root basis.  A Weyl
element is stored as the integer matrix ``M`` whose row ``i`` holds the
image of the simple root ``alpha_i``; the image of an arbitrary root ``x``
is the row vector ``x @ M``.  With this convention the word
``[i1, i2, ..., ik]`` corresponds to the matrix product
``S_{i1} S_{i2} ... S_{ik}`` (so ``i1`` acts first on a root).
Vertices are numbered from 1 throughout the public API.
"""

from __future__ import annotations

import json
import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

Root = tuple[int, ...]
IntMatrix = tuple[tuple[int, ...], ...]

ORDER_CAP = 1000

MINUS = "minus"
PLUS = "plus"


class RootSystemError(ValueError):
    """Invalid Cartan data or coloring."""


class NotFiniteTypeError(RootSystemError):
    pass


def _identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def _vecmat(v: Sequence[int], m: IntMatrix) -> Root:
    out = [0] * len(m[0])
    for x, row in zip(v, m):
        if x:
            for j, y in enumerate(row):
                out[j] += x * y
    return tuple(out)


def _det(m: IntMatrix) -> int:
    # Bareiss elimination over the integers
    a = [list(r) for r in m]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


@dataclass(frozen=True)
class RootSystem:
    """A finite crystallographic root system given by its Cartan matrix.

    ``cartan[i][j] = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)`` (0-based
    storage).  ``minus`` lists the 1-based vertices of the minus color of
    the bicoloration; everything else is plus.
    """

    name: str
    cartan: IntMatrix
    minus: frozenset[int]
    _roots: frozenset = field(default=frozenset(), init=False, repr=False, compare=False)

    def __post_init__(self):
        cartan = tuple(tuple(int(x) for x in row) for row in self.cartan)
        object.__setattr__(self, "cartan", cartan)
        object.__setattr__(self, "minus", frozenset(int(v) for v in self.minus))
        _validate_cartan(cartan)
        object.__setattr__(self, "_roots", frozenset(_close_roots(cartan)))
        n = len(cartan)
        bad = [v for v in self.minus if not 1 <= v <= n]
        if bad:
            raise RootSystemError(f"coloring refers to unknown vertices {sorted(bad)}")
        for i, j in self.edges:
            if (i in self.minus) == (j in self.minus):
                raise RootSystemError(
                    f"coloring is not proper: adjacent vertices {i} and {j} share a color")

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def vertices(self) -> range:
        return range(1, self.rank + 1)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        n = self.rank
        return tuple((i + 1, j + 1) for i in range(n) for j in range(i + 1, n)
                     if self.cartan[i][j])

    @property
    def adjacency(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    @property
    def plus(self) -> frozenset[int]:
        return frozenset(self.vertices) - self.minus

    @property
    def coloring(self) -> dict[int, str]:
        return {v: MINUS if v in self.minus else PLUS for v in self.vertices}

    @property
    def signs(self) -> dict[int, int]:
        """The values ``c_i``: +1 on plus vertices, -1 on minus vertices."""
        return {v: -1 if v in self.minus else 1 for v in self.vertices}

    def color(self, v: int) -> str:
        self._check_vertex(v)
        return MINUS if v in self.minus else PLUS

    @cached_property
    def coxeter_element(self) -> WeylElement:
        return compose(sorted(self.minus) + sorted(self.plus), self)

    @cached_property
    def coxeter_number(self) -> int:
        return element_order(self.coxeter_element)

    def simple_root(self, i: int) -> Root:
        self._check_vertex(i)
        return tuple(int(j == i - 1) for j in range(self.rank))

    def reflect(self, i: int, x: Sequence[int]) -> Root:
        """``sigma_i(x) = x - <x, alpha_i^vee> alpha_i``."""
        k = i - 1
        pairing = sum(xj * self.cartan[j][k] for j, xj in enumerate(x))
        out = list(x)
        out[k] -= pairing
        return tuple(out)

    def _check_vertex(self, i: int):
        if not isinstance(i, int) or not 1 <= i <= self.rank:
            raise IndexError(f"vertex {i!r} out of range 1..{self.rank} for {self.name}")

    def to_json(self) -> dict:
        return {"name": self.name, "cartan": [list(r) for r in self.cartan],
                "minus": sorted(self.minus)}


def _validate_cartan(a: IntMatrix):
    n = len(a)
    if n == 0:
        raise RootSystemError("empty Cartan matrix")
    if any(len(row) != n for row in a):
        raise RootSystemError("Cartan matrix must be square")
    for i in range(n):
        if a[i][i] != 2:
            raise RootSystemError(f"Cartan matrix diagonal entry ({i + 1},{i + 1}) is not 2")
        for j in range(n):
            if i != j:
                if a[i][j] > 0:
                    raise RootSystemError("off-diagonal Cartan entries must be <= 0")
                if (a[i][j] == 0) != (a[j][i] == 0):
                    raise RootSystemError(
                        f"Cartan entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) "
                        "must vanish together")
    # symmetrizable: d_i a_ij = d_j a_ji for positive d
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        todo = deque([start])
        while todo:
            i = todo.popleft()
            for j in range(n):
                if i == j or not a[i][j]:
                    continue
                want = d[i] * a[i][j] / a[j][i]
                if d[j] is None:
                    d[j] = want
                    todo.append(j)
                elif d[j] != want:
                    raise RootSystemError("Cartan matrix is not symmetrizable")


def _root_limit(n: int) -> int:
    # |Delta| <= max(2 n^2, 240) for every finite type of rank n
    return max(2 * n * n, 240)


def _close_roots(a: IntMatrix) -> set[Root]:
    n = len(a)
    limit = _root_limit(n)
    seen: set[Root] = set()
    todo: deque[Root] = deque()
    for i in range(n):
        r = tuple(int(j == i) for j in range(n))
        seen.add(r)
        todo.append(r)
    while todo:
        x = todo.popleft()
        for k in range(n):
            pairing = sum(xj * a[j][k] for j, xj in enumerate(x))
            if not pairing:
                continue
            y = list(x)
            y[k] -= pairing
            y = tuple(y)
            if y not in seen:
                seen.add(y)
                if len(seen) > limit:
                    raise NotFiniteTypeError(
                        "not finite type: root closure exceeds "
                        f"{limit} roots for rank {n}")
                todo.append(y)
    return seen


def generate_all_roots(rs: RootSystem) -> frozenset[Root]:
    """Closure of the simple roots under all simple reflections."""
    return rs._roots


# ---------------------------------------------------------------------------
# catalog


def _chain(n: int) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        a[i][i + 1] = a[i + 1][i] = -1
    return a


def _bicolor(a: Sequence[Sequence[int]]) -> frozenset[int]:
    """Proper 2-coloring with the lowest vertex of each component minus."""
    n = len(a)
    color: dict[int, int] = {}
    for start in range(n):
        if start in color:
            continue
        color[start] = 0
        todo = deque([start])
        while todo:
            i = todo.popleft()
            for j in range(n):
                if i != j and a[i][j]:
                    if j not in color:
                        color[j] = 1 - color[i]
                        todo.append(j)
                    elif color[j] == color[i]:
                        raise RootSystemError("Dynkin diagram is not bipartite")
    return frozenset(i + 1 for i, c in color.items() if c == 0)


def _type_a(n):
    return _chain(n)


def _type_b(n):
    a = _chain(n)
    if n >= 2:
        a[n - 2][n - 1] = -2
    return a


def _type_c(n):
    a = _chain(n)
    if n >= 2:
        a[n - 1][n - 2] = -2
    return a


def _type_d(n):
    a = _chain(n - 1) if n > 1 else [[2]]
    a = [row + [0] for row in a] + [[0] * n]
    a[n - 1][n - 1] = 2
    a[n - 3][n - 1] = a[n - 1][n - 3] = -1
    return a


def _type_e(n):
    # chain alpha_2 - ... - alpha_n with alpha_1 attached to alpha_4
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(1, n - 1):
        a[i][i + 1] = a[i + 1][i] = -1
    a[0][3] = a[3][0] = -1
    return a


def _type_f4():
    a = _chain(4)
    a[1][2] = -2
    return a


def _type_g2():
    return [[2, -1], [-3, 2]]


_CATALOG_RE = re.compile(r"^([A-G])(\d+)$")


def catalog_cartan(name: str) -> list[list[int]]:
    m = _CATALOG_RE.match(name.strip().upper())
    if not m:
        raise RootSystemError(f"unknown root system {name!r}")
    kind, n = m.group(1), int(m.group(2))
    if kind == "A" and n >= 1:
        return _type_a(n)
    if kind == "B" and n >= 2:
        return _type_b(n)
    if kind == "C" and n >= 2:
        return _type_c(n)
    if kind == "D" and n >= 4:
        return _type_d(n)
    if kind == "E" and n in (6, 7, 8):
        return _type_e(n)
    if kind == "F" and n == 4:
        return _type_f4()
    if kind == "G" and n == 2:
        return _type_g2()
    raise RootSystemError(f"unknown root system {name!r}")


CATALOG = ("A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "B2", "B3", "B4", "C3",
           "D4", "D5", "D6", "E6", "E7", "E8", "F4", "G2")


def build_root_system(system: str | dict | None = None, *, cartan=None, minus=None,
                      name: str = "custom") -> RootSystem:
    """Build a validated root system.

    ``system`` is a catalog name such as ``"E8"``, ``"A5"`` or ``"D4"``, or a
    dict ``{"cartan": [[...]], "minus": [...]}``.  Alternatively pass
    ``cartan`` (and optionally ``minus``) as keywords.  Without an explicit
    ``minus`` set the diagram is bicolored with vertex 1 minus.
    """
    if isinstance(system, str):
        a = catalog_cartan(system)
        return RootSystem(system.strip().upper(), tuple(map(tuple, a)), _bicolor(a))
    if isinstance(system, dict):
        cartan = system["cartan"]
        minus = system.get("minus", minus)
        name = system.get("name", name)
    if cartan is None:
        raise RootSystemError("need a catalog name or a Cartan matrix")
    a = [list(map(int, row)) for row in cartan]
    _validate_cartan(tuple(map(tuple, a)))
    _close_roots(tuple(map(tuple, a)))
    if minus is None:
        minus = _bicolor(a)
    return RootSystem(name, tuple(map(tuple, a)), frozenset(minus))


def load_root_system(path: str | Path) -> RootSystem:
    with open(path) as fh:
        data = json.load(fh)
    return build_root_system(data)


# ---------------------------------------------------------------------------
# Weyl group elements


@dataclass(frozen=True)
class WeylElement:
    """Integer action matrix in the simple-root basis plus a generating word."""

    matrix: IntMatrix
    word: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "matrix", tuple(tuple(int(x) for x in r) for r in self.matrix))
        object.__setattr__(self, "word", tuple(self.word))

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    @property
    def rank(self) -> int:
        return len(self.matrix)

    @classmethod
    def identity(cls, n: int) -> WeylElement:
        return cls(_identity(n), ())

    def __mul__(self, other: WeylElement) -> WeylElement:
        """``self * other`` acts on roots with ``self`` first."""
        return WeylElement(_matmul(self.matrix, other.matrix), self.word + other.word)

    def __call__(self, root: Sequence[int]) -> Root:
        return _vecmat(root, self.matrix)

    def inverse(self) -> WeylElement:
        n = element_order(self)
        return self ** (n - 1) if n > 1 else self

    def __pow__(self, n: int) -> WeylElement:
        if n < 0:
            return self.inverse() ** (-n)
        result = WeylElement.identity(self.rank)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_identity(self) -> bool:
        return self.matrix == _identity(self.rank)

    def det(self) -> int:
        return _det(self.matrix)

    def to_json(self) -> dict:
        return {"word": list(self.word), "matrix": [list(r) for r in self.matrix]}


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    """``sigma_i``: row ``j`` is ``alpha_j - A_ji alpha_i``."""
    rs._check_vertex(i)
    rows = [rs.reflect(i, rs.simple_root(j)) for j in rs.vertices]
    return WeylElement(tuple(rows), (i,))


def compose(word: Iterable[int], rs: RootSystem) -> WeylElement:
    """Left-to-right product of simple reflections."""
    result = WeylElement.identity(rs.rank)
    for i in word:
        result = result * simple_reflection(rs, i)
    return result


def element_order(w: WeylElement, cap: int = ORDER_CAP) -> int:
    """Smallest ``n >= 1`` with ``w^n = 1``."""
    ident = _identity(w.rank)
    power = w.matrix
    for n in range(1, cap + 1):
        if power == ident:
            return n
        power = _matmul(power, w.matrix)
    raise NotFiniteTypeError(f"element order exceeds cap {cap}")


def is_positive(root: Sequence[int]) -> bool:
    return any(x > 0 for x in root) and all(x >= 0 for x in root)


def is_negative(root: Sequence[int]) -> bool:
    return is_positive([-x for x in root])


def highest_root(rs: RootSystem) -> Root:
    return max(generate_all_roots(rs), key=lambda r: (sum(r), r))
