"""Classical root-system constants in standard epsilon coordinates."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import as_rational

__all__ = [
    "KINDS",
    "MIN_RANK",
    "LieType",
    "Weight",
    "rho",
    "fundamental_weight",
    "eta",
    "scalar_weight_plus_rho",
    "positive_root_count",
    "dim_u_min",
]

KINDS = ("A", "B", "C", "D")
MIN_RANK = {"A": 2, "B": 2, "C": 2, "D": 3}

# A weight is a tuple of Fractions whose length is the rank.
Weight = tuple


@dataclass(frozen=True)
class LieType:
    """Classical type with its coordinate rank.

    ``LieType("A", n)`` means sl(n) with weights of length n (so n-1 simple
    roots); B, C, D of rank n are so(2n+1), sp(2n), so(2n).
    """

    kind: str
    rank: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown classical type {self.kind!r}")
        if not isinstance(self.rank, int) or isinstance(self.rank, bool):
            raise TypeError("rank must be an integer")
        if self.rank < MIN_RANK[self.kind]:
            raise ValueError(
                f"type {self.kind} needs rank >= {MIN_RANK[self.kind]}, got {self.rank}"
            )

    @property
    def num_simple_roots(self) -> int:
        return self.rank - 1 if self.kind == "A" else self.rank

    def check_index(self, i: int) -> None:
        if not 1 <= i <= self.num_simple_roots:
            raise ValueError(
                f"simple-root index {i} out of range 1..{self.num_simple_roots} for {self}"
            )

    def __str__(self) -> str:
        return f"{self.kind}{self.rank}"


def rho(t: LieType) -> Weight:
    """Half the sum of the positive roots."""
    n = t.rank
    if t.kind == "A":
        return tuple(Fraction(n - 1 - 2 * i, 2) for i in range(n))
    if t.kind == "B":
        return tuple(Fraction(2 * (n - i) - 1, 2) for i in range(n))
    if t.kind == "C":
        return tuple(Fraction(n - i) for i in range(n))
    return tuple(Fraction(n - 1 - i) for i in range(n))


def fundamental_weight(t: LieType, i: int) -> Weight:
    """The i-th fundamental weight, with Bourbaki numbering of simple roots."""
    t.check_index(i)
    n = t.rank
    half = Fraction(1, 2)
    if t.kind == "A":
        shift = Fraction(i, n)
        return tuple((1 if j < i else 0) - shift for j in range(n))
    if t.kind == "B" and i == n:
        return (half,) * n
    if t.kind == "D" and i == n - 1:
        return (half,) * (n - 1) + (-half,)
    if t.kind == "D" and i == n:
        return (half,) * n
    return tuple(Fraction(1 if j < i else 0) for j in range(n))


def eta(t: LieType, p: int) -> Weight:
    """Sum of all fundamental weights except the p-th, i.e. rho - omega_p."""
    return tuple(r - w for r, w in zip(rho(t), fundamental_weight(t, p)))


def scalar_weight_plus_rho(t: LieType, p: int, z) -> Weight:
    """lambda + rho for the scalar weight lambda = z * eta(t, p)."""
    z = as_rational(z)
    return tuple(z * e + r for e, r in zip(eta(t, p), rho(t)))


def positive_root_count(t: LieType) -> int:
    n = t.rank
    if t.kind == "A":
        return n * (n - 1) // 2
    if t.kind in ("B", "C"):
        return n * n
    return n * n - n


def dim_u_min(t: LieType) -> int:
    """Dimension of the nilradical of a minimal parabolic (Levi has one positive root)."""
    return positive_root_count(t) - 1
