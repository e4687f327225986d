"""Enumerate and classify every bicolored candidate of a root system."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import Iterable, Sequence

from .deform import CONSISTENT, ConstraintReport, build_theta, factorize, verify_constraints
from .reduced import reduced_root_space
from .ring import RingScalar
from .weyl import RootSystem

MAX_SCAN_RANK = 16

Candidate = tuple[tuple[int, ...], tuple[int, ...]]


class ScanTooLargeError(ValueError):
    pass


def _subsets(vertices: Sequence[int]) -> list[tuple[int, ...]]:
    vs = sorted(vertices)
    return [tuple(v for k, v in enumerate(vs) if mask >> k & 1) for mask in range(1 << len(vs))]


def enumerate_candidates(rs: RootSystem, allow_large: bool = False) -> list[Candidate]:
    """All ``(V-, V+)`` subset pairs, ordered by (minus bitmask, plus bitmask)."""
    if rs.rank > MAX_SCAN_RANK and not allow_large:
        raise ScanTooLargeError(
            f"rank {rs.rank} > {MAX_SCAN_RANK}: 2^{rs.rank} candidates; pass allow_large to force")
    return [(m, p) for m in _subsets(rs.minus) for p in _subsets(rs.plus)]


@dataclass(frozen=True)
class CandidateClassification:
    v_minus: tuple[int, ...]
    v_plus: tuple[int, ...]
    order: int
    ansatz_applicable: bool
    constraints: ConstraintReport | None = None
    invariant: bool | None = None
    trivial: bool | None = None
    det: RingScalar | None = None
    distinct_roots: int | None = None

    def to_json(self) -> dict:
        out = {
            "minus": list(self.v_minus),
            "plus": list(self.v_plus),
            "order": self.order,
            "ansatz_applicable": self.ansatz_applicable,
        }
        if self.constraints is not None:
            out["constraints"] = {k: v for k, v in self.constraints.items()}
            out["constraints_passed"] = self.constraints.passed
        for name in ("invariant", "trivial", "distinct_roots"):
            value = getattr(self, name)
            if value is not None:
                out[name] = value
        if self.det is not None:
            out["det"] = self.det.to_json()
        return out


def classify(rs: RootSystem, candidate: Candidate,
             variant: str = CONSISTENT) -> CandidateClassification:
    v_minus, v_plus = candidate
    fe = factorize(rs, v_minus, v_plus)
    if fe.order % 4:
        return CandidateClassification(fe.v_minus, fe.v_plus, fe.order, False)
    theta = build_theta(fe, variant)
    report = verify_constraints(theta, fe)
    space = reduced_root_space(fe)
    return CandidateClassification(
        fe.v_minus, fe.v_plus, fe.order, True,
        constraints=report,
        invariant=bool(space.invariant_minus and space.invariant_plus),
        trivial=theta.is_trivial(),
        det=report.det_value,
        distinct_roots=len(space.root_set),
    )


def scan(rs: RootSystem, workers: int = 1, variant: str = CONSISTENT,
         allow_large: bool = False) -> list[CandidateClassification]:
    """Classify all candidates; output order is the enumeration order."""
    candidates = enumerate_candidates(rs, allow_large)
    work = partial(classify, rs, variant=variant)
    if workers <= 1:
        return [work(c) for c in candidates]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(work, candidates, chunksize=8))


def to_jsonl(records: Iterable[CandidateClassification]) -> str:
    return "".join(json.dumps(r.to_json(), sort_keys=True, separators=(",", ":")) + "\n"
                   for r in records)


def _fmt(vs) -> str:
    return "{" + ",".join(map(str, vs)) + "}"


def summary_table(records: Sequence[CandidateClassification]) -> str:
    lines = [f"{'minus':<12} {'plus':<12} {'order':>5}  ansatz  constraints  invariant  trivial"]
    for r in records:
        if r.ansatz_applicable:
            extra = (f"{'yes':<6}  {'pass' if r.constraints.passed else 'FAIL':<11}  "
                     f"{'yes' if r.invariant else 'no':<9}  {'yes' if r.trivial else 'no'}")
        else:
            extra = "no"
        lines.append(f"{_fmt(r.v_minus):<12} {_fmt(r.v_plus):<12} {r.order:>5}  {extra}")
    applicable = [r for r in records if r.ansatz_applicable]
    good = [r for r in applicable if r.constraints.passed and r.invariant and not r.trivial]
    orders = sorted({r.order for r in records})
    lines.append("")
    lines.append(f"candidates: {len(records)}  ansatz applicable: {len(applicable)}  "
                 f"constraints+invariance+non-trivial: {len(good)}")
    lines.append("orders seen: " + ", ".join(map(str, orders)))
    return "\n".join(lines) + "\n"
