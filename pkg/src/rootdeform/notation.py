"""Compact orbit-table notation.

A positive root ``a_1 + a_2 + 2 a_3`` is written ``1;2;3^2`` (or ``1;2;3²``
in pretty mode); a negative root gets a single leading ``-``.
"""

from __future__ import annotations

from typing import Sequence

from .reduced import ReducedRootSpace
from .weyl import Root, is_negative, is_positive

_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")
_FROM_SUPERSCRIPTS = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹", "0123456789")
_SUPERSCRIPT_DIGITS = frozenset("⁰¹²³⁴⁵⁶⁷⁸⁹")


class NotationError(ValueError):
    pass


def format_root(root: Sequence[int], pretty: bool = False) -> str:
    if is_negative(root):
        sign, coeffs = "-", [-x for x in root]
    elif is_positive(root):
        sign, coeffs = "", list(root)
    else:
        raise NotationError(f"root {tuple(root)} has mixed signs")
    parts = []
    for i, k in enumerate(coeffs, start=1):
        if k == 1:
            parts.append(str(i))
        elif k > 1:
            parts.append(f"{i}{str(k).translate(_SUPERSCRIPTS)}" if pretty else f"{i}^{k}")
    return sign + ";".join(parts)


def parse_root(cell: str, rank: int) -> Root:
    """Inverse of :func:`format_root`; accepts both plain and pretty cells."""
    text = _normalize_pretty(cell.strip())
    sign = 1
    if text.startswith("-"):
        sign, text = -1, text[1:]
    if not text:
        raise NotationError("empty cell")
    coeffs = [0] * rank
    for part in text.split(";"):
        idx, _, k = part.strip().partition("^")
        try:
            i, k = int(idx), int(k or 1)
        except ValueError:
            raise NotationError(f"bad cell component {part!r}") from None
        if not 1 <= i <= rank or k < 1:
            raise NotationError(f"bad cell component {part!r}")
        coeffs[i - 1] += sign * k
    return tuple(coeffs)


def _normalize_pretty(cell: str) -> str:
    out = []
    in_sup = False
    for ch in cell:
        if ch in _SUPERSCRIPT_DIGITS:
            if not in_sup:
                out.append("^")
                in_sup = True
            out.append(ch.translate(_FROM_SUPERSCRIPTS))
        else:
            in_sup = False
            out.append(ch)
    return "".join(out)


def table_rows(space: ReducedRootSpace) -> list[list[Root]]:
    """Rows ``n = 1 .. h-1`` of ``s^n(seed_i)``, columns ``i = 1 .. rank``."""
    return [[orb[n] for orb in space.orbits] for n in range(1, space.order)]


def render_table(rows: Sequence[Sequence[Root]], pretty: bool = False) -> str:
    if not rows:
        return ""
    rank = len(rows[0])
    header = ["n"] + [f"α{i}" if pretty else f"a{i}" for i in range(1, rank + 1)]
    body = [[str(n)] + [format_root(r, pretty) for r in row] for n, row in enumerate(rows, 1)]
    widths = [max(len(line[k]) for line in [header] + body) for k in range(rank + 1)]
    lines = []
    for line in [header] + body:
        lines.append(" | ".join(cell.ljust(w) for cell, w in zip(line, widths)).rstrip())
    return "\n".join(lines) + "\n"


def render_orbit_table(space: ReducedRootSpace, pretty: bool = False) -> str:
    return render_table(table_rows(space), pretty)


def parse_table(text: str) -> list[list[Root]]:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        return []
    rank = len(lines[0].split("|")) - 1
    rows = []
    for n, line in enumerate(lines[1:], start=1):
        cells = [c.strip() for c in line.split("|")]
        if len(cells) != rank + 1 or cells[0] != str(n):
            raise NotationError(f"malformed table row {line!r}")
        rows.append([parse_cell(c, rank) for c in cells[1:]])
    return rows


def parse_cell(cell: str, rank: int) -> Root:
    return parse_root(cell, rank)
