"""Reducibility of scalar generalized Verma modules of minimal parabolic type.

M_I(z * eta_p) is irreducible exactly when GKdim L(z * eta_p) equals dim(u).
Reducible points in a fixed class z0 + Z are closed upward, so a scan over a
window only needs the first one; the scanner still checks the tail.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError
from .exactnum import as_rational
from .gkdim import gkdim_general
from .rootdata import KINDS, LieType, dim_u_min, scalar_weight_plus_rho

__all__ = [
    "DEFAULT_WINDOW",
    "NO_REDUCIBLE_POINT",
    "ReducibilityReport",
    "ScanResult",
    "TableRow",
    "is_reducible",
    "scan",
    "first_reducible_point",
    "paper_claim",
    "flip_partner",
    "flip_evidence",
    "proposition_table",
    "table_row",
]

DEFAULT_WINDOW = (Fraction(-8), Fraction(8))

# Claim value meaning "the class contains no reducible point at all".
NO_REDUCIBLE_POINT = "none"


@dataclass(frozen=True)
class ReducibilityReport:
    type: LieType
    p: int
    z: Fraction
    gkdim: int
    dim_u: int
    reducible: bool


@dataclass(frozen=True)
class ScanResult:
    type: LieType
    p: int
    congruence_class: Fraction
    window: tuple[Fraction, Fraction]
    first_point: Fraction | None
    monotone: bool
    points: tuple[ReducibilityReport, ...] = ()


@dataclass(frozen=True)
class TableRow:
    type: LieType
    p: int
    congruence_class: Fraction
    first_point: Fraction | None
    paper_claim: Fraction | str | None
    match: bool | None
    monotone: bool


def is_reducible(t: LieType, p: int, z) -> ReducibilityReport:
    z = as_rational(z)
    t.check_index(p)
    weight = scalar_weight_plus_rho(t, p, z)
    g = gkdim_general(t, weight)
    d = dim_u_min(t)
    if g > d:
        # a scalar generalized Verma module has GK dimension dim(u)
        raise DomainError(f"GKdim {g} exceeds dim(u) = {d} at {t}, p={p}, z={z}")
    return ReducibilityReport(type=t, p=p, z=z, gkdim=g, dim_u=d, reducible=g < d)


def _canonical_class(c) -> Fraction:
    c = as_rational(c)
    return c - math.floor(c)


def _window(window) -> tuple[Fraction, Fraction]:
    lo, hi = (as_rational(v) for v in window)
    if not lo < hi:
        raise DomainError(f"empty scan window [{lo}, {hi}]")
    return lo, hi


def _class_points(cls: Fraction, lo: Fraction, hi: Fraction) -> list[Fraction]:
    return [cls + k for k in range(math.ceil(lo - cls), math.floor(hi - cls) + 1)]


def scan(t: LieType, p: int, congruence_class, window=DEFAULT_WINDOW) -> ScanResult:
    """Evaluate every z in ``congruence_class + Z`` inside ``window`` (inclusive)."""
    t.check_index(p)
    cls = _canonical_class(congruence_class)
    lo, hi = _window(window)
    reports = tuple(is_reducible(t, p, z) for z in _class_points(cls, lo, hi))
    first = next((r.z for r in reports if r.reducible), None)
    monotone = first is None or all(r.reducible for r in reports if r.z >= first)
    return ScanResult(
        type=t,
        p=p,
        congruence_class=cls,
        window=(lo, hi),
        first_point=first,
        monotone=monotone,
        points=reports,
    )


def first_reducible_point(t: LieType, p: int, congruence_class, window=DEFAULT_WINDOW):
    """Smallest reducible z in the class within the window, or None."""
    return scan(t, p, congruence_class, window).first_point


def paper_claim(t: LieType, p: int, congruence_class) -> Fraction | str | None:
    """Published first diagonal-reducible point for (t, p) in a class.

    Returns a Fraction, ``NO_REDUCIBLE_POINT`` when the published statement
    says the class is entirely irreducible, or None when nothing is claimed
    (classes other than 0 and 1/2, or ranks the statements exclude).
    """
    t.check_index(p)
    cls = _canonical_class(congruence_class)
    n = t.rank
    half = Fraction(1, 2)
    if cls not in (0, half):
        return None
    if t.kind == "A":
        if cls == half:
            return NO_REDUCIBLE_POINT
        return Fraction(0) if p == 1 else Fraction(-1)
    if n <= 2:
        return None
    if t.kind in ("B", "C"):
        if cls == 0:
            return Fraction(0) if p == 1 else Fraction(-1)
        if t.kind == "B" and n == 3:
            return half
        return -half
    # type D
    if p >= n - 1 and n == 3:
        return Fraction(0) if cls == 0 else half
    return Fraction(-1) if cls == 0 else -half


def _claim_in_window(claim, cls: Fraction, lo: Fraction, hi: Fraction):
    if claim is None or claim == NO_REDUCIBLE_POINT:
        return claim
    points = [z for z in _class_points(cls, lo, hi) if z >= claim]
    return points[0] if points else None


def flip_partner(t: LieType, p: int) -> int | None:
    """Index exchanged with ``p`` by the diagram automorphism, if any."""
    t.check_index(p)
    if t.kind == "A":
        return t.rank - p
    if t.kind == "D" and p >= t.rank - 1:
        return 2 * t.rank - 1 - p
    return None


def flip_evidence(t: LieType, p: int, congruence_class, window=DEFAULT_WINDOW):
    """Side-by-side GK dimensions at p and its flip partner over the window.

    Yields ``(z, gkdim_p, gkdim_partner)`` triples.
    """
    q = flip_partner(t, p)
    if q is None:
        raise DomainError(f"{t} has no diagram flip moving p={p}")
    lo, hi = _window(window)
    cls = _canonical_class(congruence_class)
    return [
        (z, is_reducible(t, p, z).gkdim, is_reducible(t, q, z).gkdim)
        for z in _class_points(cls, lo, hi)
    ]


def table_row(result: ScanResult) -> TableRow:
    """Compare a scan with the published first point for the same cell."""
    claim = paper_claim(result.type, result.p, result.congruence_class)
    if claim is None:
        match = None
    else:
        expected = _claim_in_window(claim, result.congruence_class, *result.window)
        if expected == NO_REDUCIBLE_POINT:
            match = result.first_point is None
        else:
            match = result.first_point == expected
    return TableRow(
        type=result.type,
        p=result.p,
        congruence_class=result.congruence_class,
        first_point=result.first_point,
        paper_claim=claim,
        match=match,
        monotone=result.monotone,
    )


def _table_cell(args) -> TableRow:
    t, p, cls, window = args
    return table_row(scan(t, p, cls, window))


def proposition_table(
    kind: str,
    ranks: Iterable[int],
    classes: Sequence = (0, Fraction(1, 2)),
    window=DEFAULT_WINDOW,
    max_workers: int | None = None,
) -> list[TableRow]:
    """One row per (rank, p, class), comparing scanned first points with the published ones.

    Mismatches are reported in the ``match`` column, never raised. Rows come
    out in grid order whether or not the cells run in parallel.
    """
    if kind not in KINDS:
        raise DomainError(f"unknown classical type {kind!r}")
    try:
        types = [LieType(kind, n) for n in ranks]
    except ValueError as exc:
        raise DomainError(f"unsupported rank range: {exc}") from None
    window = _window(window)
    cells = [
        (t, p, _canonical_class(c), window)
        for t in types
        for p in range(1, t.num_simple_roots + 1)
        for c in classes
    ]
    if max_workers and max_workers > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=max_workers) as pool:
            return list(pool.map(_table_cell, cells))
    return [_table_cell(cell) for cell in cells]
