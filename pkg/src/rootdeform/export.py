"""Numeric root data for downstream Calogero and affine Toda studies.

No dynamics are computed here.  The Calogero export can evaluate the
potential ``(w^2/4) sum (r.q)^2 + sum g/(r.q)^2`` at one sample point as a
consistency check.  A sample point ``q`` is given by its pairings
``q_i = alpha_i . q`` with the simple roots, so ``r . q = sum_i r_i q_i`` for
a root with simple-root coordinates ``r_i``; no metric is needed.
"""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Sequence

import numpy as np

from .deform import DeformMatrix, deform_simple_roots
from .reduced import ReducedRootSpace, deformed_space
from .weyl import highest_root

CALOGERO = "calogero"
TODA = "toda"
MODELS = (CALOGERO, TODA)

SINGULAR_TOL = 1e-12


class SingularSamplePoint(ValueError):
    pass


def _pairs(m: np.ndarray) -> list:
    return np.stack([m.real, m.imag], axis=-1).tolist()


def calogero_potential(roots: np.ndarray, q: Sequence[complex], omega: float = 1.0,
                       coupling: complex = 1.0) -> complex:
    q = np.asarray(q, dtype=complex)
    dots = roots @ q
    if np.any(np.abs(dots) < SINGULAR_TOL):
        raise SingularSamplePoint("singular sample point: a root is orthogonal to q")
    return complex(omega ** 2 / 4 * np.sum(dots ** 2) + np.sum(coupling / dots ** 2))


def export_model(space: ReducedRootSpace, theta: DeformMatrix, epsilon: float,
                 model: str = CALOGERO, omega: float = 1.0, coupling: complex = 1.0,
                 sample_q: Sequence[float] | None = None) -> dict:
    if model not in MODELS:
        raise ValueError(f"unknown model {model!r}; expected one of {MODELS}")
    rs = space.rs
    fe = space.element
    c0 = math.cosh(epsilon)
    meta = {
        "system": rs.name,
        "rank": rs.rank,
        "epsilon": epsilon,
        "c0": c0,
        "kappa0": math.sqrt(c0 * c0 - c0),
        "order": space.order,
        "minus": list(fe.v_minus) if fe else None,
        "plus": list(fe.v_plus) if fe else None,
        "model": model,
        "basis": "simple-root coordinates",
    }
    simple = np.array([[x.evaluate(epsilon) for x in vec]
                       for vec in deform_simple_roots(theta, rs)], dtype=complex)
    out = {"metadata": meta, "simple_roots": _pairs(simple)}

    if model == CALOGERO:
        deformed = deformed_space(theta, space)
        roots = deformed.numeric(epsilon)
        out["roots"] = _pairs(roots)
        out["undeformed_roots"] = [list(r) for r in deformed.roots]
        meta.update(count=len(roots), omega=omega,
                    coupling=[complex(coupling).real, complex(coupling).imag])
        if sample_q is not None:
            v = calogero_potential(roots, sample_q, omega, coupling)
            meta["sample_q"] = [float(x) for x in sample_q]
            out["potential"] = [v.real, v.imag]
    else:
        top = highest_root(rs)
        theta_num = theta.evaluate(epsilon)
        affine = -np.array(top, dtype=float) @ theta_num
        out["affine_root"] = _pairs(affine)
        meta.update(
            count=rs.rank,
            marks=[1] + list(top),
            note="marks n_0..n_l are the highest-root coefficients (n_0 = 1); "
                 "the affine root is minus theta applied to the highest root",
        )
    return out


def write_export(data: dict, path: str | Path):
    with open(path, "w") as fh:
        json.dump(data, fh, indent=1, sort_keys=True)
        fh.write("\n")
