"""Reduced orbits, the reduced root space and its invariance under the factors."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .deform import DeformMatrix, FactorizedElement, RingVector, deform_root
from .weyl import Root, RootSystem, WeylElement, element_order

MATCH_TOL = 1e-6


def _seed(rs: RootSystem, i: int, use_gamma: bool) -> Root:
    root = rs.simple_root(i)
    if use_gamma and rs.signs[i] < 0:
        root = tuple(-x for x in root)
    return root


def _orbit(sigma: WeylElement, seed: Root, length: int) -> tuple[Root, ...]:
    out = [seed]
    for _ in range(length - 1):
        out.append(sigma(out[-1]))
    return tuple(out)


def reduced_orbit(fe: FactorizedElement, i: int, use_gamma: bool = False) -> tuple[Root, ...]:
    """``(g, s g, s^2 g, ..., s^(h-1) g)`` for the seed ``g`` of vertex ``i``.

    The seed is ``alpha_i``, or ``c_i alpha_i`` when ``use_gamma`` is set.
    """
    return _orbit(fe.sigma, _seed(fe.rs, i, use_gamma), fe.order)


@dataclass(frozen=True)
class ReducedRootSpace:
    rs: RootSystem
    sigma: WeylElement
    order: int
    use_gamma: bool
    orbits: tuple[tuple[Root, ...], ...]
    root_set: frozenset[Root]
    element: FactorizedElement | None = None
    invariant_minus: bool | None = None
    invariant_plus: bool | None = None
    _index: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def multiset_size(self) -> int:
        return sum(len(o) for o in self.orbits)

    def sorted_roots(self) -> list[Root]:
        return sorted(self.root_set)

    def positions(self, root: Sequence[int]) -> list[tuple[int, int]]:
        """All ``(n, i)`` with ``s^n seed_i == root`` (vertex ``i`` 1-based)."""
        if not self._index:
            for i, orb in enumerate(self.orbits, start=1):
                for n, r in enumerate(orb):
                    self._index.setdefault(r, []).append((n, i))
        return sorted(self._index.get(tuple(root), []))

    def stabilizer_periods(self) -> dict[int, int]:
        """Vertices whose orbit closes before ``order`` steps, with the period."""
        out = {}
        for i, orb in enumerate(self.orbits, start=1):
            period = next((n for n in range(1, len(orb)) if orb[n] == orb[0]), len(orb))
            if period < len(orb):
                out[i] = period
        return out

    def to_json(self) -> dict:
        return {
            "system": self.rs.name,
            "order": self.order,
            "use_gamma": self.use_gamma,
            "multiset_size": self.multiset_size,
            "distinct": len(self.root_set),
            "orbits": [[list(r) for r in orb] for orb in self.orbits],
            "roots": [list(r) for r in self.sorted_roots()],
            "invariant_minus": self.invariant_minus,
            "invariant_plus": self.invariant_plus,
        }


def _space(rs, sigma, order, use_gamma, element=None) -> ReducedRootSpace:
    orbits = tuple(_orbit(sigma, _seed(rs, i, use_gamma), order) for i in rs.vertices)
    roots = frozenset(r for orb in orbits for r in orb)
    inv_m = inv_p = None
    if element is not None:
        inv_m = _factor_image(element.sigma_minus, roots) == roots
        inv_p = _factor_image(element.sigma_plus, roots) == roots
    return ReducedRootSpace(rs, sigma, order, use_gamma, orbits, roots, element, inv_m, inv_p)


def reduced_root_space(fe: FactorizedElement, use_gamma: bool = False) -> ReducedRootSpace:
    """Union of the reduced orbits of all simple roots."""
    return _space(fe.rs, fe.sigma, fe.order, use_gamma, fe)


def element_root_space(rs: RootSystem, w: WeylElement, use_gamma: bool = False) -> ReducedRootSpace:
    """Reduced root space for an element that is not given in factorized form."""
    return _space(rs, w, element_order(w), use_gamma)


def _factor_image(s: WeylElement, roots) -> frozenset[Root]:
    return frozenset(s(r) for r in roots)


@dataclass(frozen=True)
class SimpleImage:
    vertex: int
    image: Root
    witnesses: tuple[tuple[int, int], ...]  # (power n, seed vertex j)


@dataclass(frozen=True)
class FactorAction:
    factor: str
    invariant: bool
    mapping: dict[Root, Root]
    offending: tuple[Root, ...]
    simple: tuple[SimpleImage, ...]

    def to_json(self) -> dict:
        return {
            "factor": self.factor,
            "invariant": self.invariant,
            "offending": [list(r) for r in self.offending],
            "simple": [{"vertex": s.vertex, "image": list(s.image),
                        "witnesses": [list(w) for w in s.witnesses]} for s in self.simple],
            "mapping": [[list(k), list(v)] for k, v in sorted(self.mapping.items())],
        }


@dataclass(frozen=True)
class InvarianceReport:
    minus: FactorAction
    plus: FactorAction

    @property
    def invariant(self) -> bool:
        return self.minus.invariant and self.plus.invariant

    def to_json(self) -> dict:
        return {"invariant": self.invariant, "minus": self.minus.to_json(),
                "plus": self.plus.to_json()}


def _factor_action(name: str, s: WeylElement, space: ReducedRootSpace) -> FactorAction:
    mapping = {r: s(r) for r in space.sorted_roots()}
    offending = tuple(r for r, img in mapping.items() if img not in space.root_set)
    simple = []
    for i in space.rs.vertices:
        img = s(space.rs.simple_root(i))
        simple.append(SimpleImage(i, img, tuple(space.positions(img))))
    return FactorAction(name, not offending, mapping, offending, tuple(simple))


def check_invariance(fe: FactorizedElement, space: ReducedRootSpace) -> InvarianceReport:
    """Test ``s_pm(Delta~) == Delta~`` for both factors.

    For every simple root the image under each factor is listed together
    with all positions ``s^n seed_j`` in the orbit table that equal it.
    """
    return InvarianceReport(
        _factor_action("minus", fe.sigma_minus, space),
        _factor_action("plus", fe.sigma_plus, space),
    )


def match_permutation(a: np.ndarray, b: np.ndarray, tol: float = MATCH_TOL) -> list[int] | None:
    """Index ``p`` with ``a[k] ~ b[p[k]]`` if nearest-neighbor matching is a bijection."""
    if a.shape != b.shape:
        return None
    dist = np.linalg.norm(a[:, None, :] - b[None, :, :], axis=2)
    perm = dist.argmin(axis=1)
    if np.any(dist[np.arange(len(a)), perm] > tol):
        return None
    if len(set(perm.tolist())) != len(a):
        return None
    return perm.tolist()


@dataclass(frozen=True)
class DeformedRootSpace:
    theta: DeformMatrix
    space: ReducedRootSpace
    roots: tuple[Root, ...]
    deformed: tuple[RingVector, ...]

    def __len__(self):
        return len(self.deformed)

    def numeric(self, epsilon: float) -> np.ndarray:
        """Entry-wise evaluation of the symbolic deformed coordinates."""
        return np.array([[x.evaluate(epsilon) for x in vec] for vec in self.deformed],
                        dtype=complex).reshape(len(self.deformed), self.space.rs.rank)

    def numeric_via_matrix(self, epsilon: float) -> np.ndarray:
        return np.array(self.roots, dtype=float).reshape(len(self.roots), -1) @ \
            self.theta.evaluate(epsilon)

    def antilinear_image(self, epsilon: float, factor: WeylElement) -> np.ndarray:
        """Image of every deformed root under ``x -> conj(x) @ s``."""
        s = np.array(factor.matrix, dtype=float)
        return self.numeric(epsilon).conj() @ s

    def antilinear_permutation(self, epsilon: float, factor: WeylElement,
                               tol: float = MATCH_TOL) -> list[int] | None:
        return match_permutation(self.antilinear_image(epsilon, factor), self.numeric(epsilon), tol)


def deformed_space(theta: DeformMatrix, space: ReducedRootSpace,
                   epsilon: float | None = None) -> DeformedRootSpace:
    """Replace every root of ``space`` by its ``theta``-image.

    When ``epsilon`` is given and both factors leave the undeformed space
    invariant, the antilinear factors are checked to permute the numeric
    deformed roots.
    """
    roots = tuple(space.sorted_roots())
    out = DeformedRootSpace(theta, space, roots, tuple(deform_root(theta, r) for r in roots))
    fe = space.element
    if epsilon is not None and fe is not None and space.invariant_minus and space.invariant_plus:
        for s in (fe.sigma_minus, fe.sigma_plus):
            if out.antilinear_permutation(epsilon, s) is None:
                raise AssertionError(
                    f"antilinear factor does not permute the deformed roots at eps={epsilon}")
    return out
