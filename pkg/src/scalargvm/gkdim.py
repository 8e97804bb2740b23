"""Gelfand-Kirillov dimension of L(lambda) from the entries of lambda + rho.

Everything here works on lambda + rho in epsilon coordinates. Entries are
grouped into classes (integral difference for type A, integral difference or
sum for B, C, D), each class is turned into a sequence, and the GK dimension
is the number of positive roots minus the F statistics of those sequences.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError, IntegralityError
from .exactnum import as_rational
from .rootdata import LieType, positive_root_count
from .tableau import f_value, rs_shape

__all__ = [
    "ClassDecomposition",
    "minus_extend",
    "decompose",
    "tilde",
    "gkdim_integral",
    "gkdim_general",
]

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class ClassDecomposition:
    """Entries of lambda + rho split into classes, each kept in original order.

    ``positions`` mirrors the three slots with the 0-based coordinate indices.
    For type A the integer-residue class goes to ``integral_class`` and every
    other residue class to ``other_classes``; ``half_class`` stays empty.
    """

    integral_class: tuple[Fraction, ...] | None = None
    half_class: tuple[Fraction, ...] | None = None
    other_classes: tuple[tuple[Fraction, ...], ...] = ()
    positions: dict = field(default_factory=dict, compare=False, repr=False)

    def all_classes(self) -> list[tuple[Fraction, ...]]:
        out = []
        if self.integral_class:
            out.append(self.integral_class)
        if self.half_class:
            out.append(self.half_class)
        out.extend(self.other_classes)
        return out


def _as_seq(x: Iterable) -> tuple[Fraction, ...]:
    return tuple(as_rational(v) for v in x)


def minus_extend(x: Iterable) -> tuple[Fraction, ...]:
    """``x`` followed by the negated reversal of ``x``.

    >>> [str(v) for v in minus_extend([1, 2])]
    ['1', '2', '-2', '-1']
    """
    x = _as_seq(x)
    return x + tuple(-v for v in reversed(x))


def _residue_key(kind: str, v: Fraction) -> Fraction:
    r = v % 1
    if kind == "A":
        return r
    # r and -r mod 1 share a class: entries with integral sum are linked too.
    return min(r, (1 - r) % 1)


def decompose(t: LieType, w: Sequence) -> ClassDecomposition:
    """Group the coordinates of ``w`` into maximal classes.

    >>> from scalargvm.rootdata import LieType
    >>> d = decompose(LieType("B", 3), ["13/10", "7/10", "2"])
    >>> [str(v) for v in d.integral_class], len(d.other_classes)
    (['2'], 1)
    """
    w = _as_seq(w)
    if len(w) != t.rank:
        raise DomainError(f"weight has length {len(w)}, expected {t.rank} for {t}")
    groups: dict[Fraction, list[int]] = {}
    for i, v in enumerate(w):
        groups.setdefault(_residue_key(t.kind, v), []).append(i)

    integral = groups.pop(Fraction(0), None)
    half = groups.pop(HALF, None) if t.kind != "A" else None
    # dicts keep insertion order, so classes come out by first position
    others = list(groups.values())

    def entries(idx):
        return tuple(w[i] for i in idx) if idx is not None else None

    return ClassDecomposition(
        integral_class=entries(integral),
        half_class=entries(half),
        other_classes=tuple(entries(idx) for idx in others),
        positions={
            "integral": tuple(integral) if integral else None,
            "half": tuple(half) if half else None,
            "other": tuple(tuple(idx) for idx in others),
        },
    )


def tilde(x: Iterable) -> tuple[Fraction, ...]:
    """Rearrange a non-integral, non-half-integral class into one residue.

    Entries differing from the first by an integer stay in place; the rest
    are removed and appended negated, in reverse order.
    """
    x = _as_seq(x)
    if not x:
        return x
    r = _residue_key("B", x[0])
    if any(_residue_key("B", v) != r for v in x):
        raise DomainError("tilde expects a single class (entries must share residue +-r)")
    head = tuple(v for v in x if (v - x[0]).denominator == 1)
    rest = tuple(v for v in x if (v - x[0]).denominator != 1)
    return head + tuple(-v for v in reversed(rest))


def gkdim_integral(t: LieType, w: Sequence) -> int:
    """GK dimension for integral lambda + rho, straight from one tableau.

    Type A needs integral differences; C needs integer entries; B and D also
    accept all entries in 1/2 + Z.
    """
    w = _as_seq(w)
    if len(w) != t.rank:
        raise DomainError(f"weight has length {len(w)}, expected {t.rank} for {t}")
    n = t.rank
    if t.kind == "A":
        if any((v - w[0]).denominator != 1 for v in w):
            raise IntegralityError("type A integral formula needs integral differences")
        return n * (n - 1) // 2 - sum(k * part for k, part in enumerate(rs_shape(w)))
    # integral weights: all entries in Z, or (B and D only) all in 1/2 + Z
    if not all(v.denominator == 1 for v in w):
        if t.kind == "C" or not all(v.denominator == 2 for v in w):
            raise IntegralityError(f"lambda + rho is not integral for type {t.kind}")
    if t.kind == "D":
        return n * n - n - f_value("D", minus_extend(w))
    return n * n - f_value("B", minus_extend(w))


def gkdim_general(t: LieType, w: Sequence) -> int:
    """GK dimension of L(lambda) for arbitrary rational lambda + rho.

    >>> from scalargvm.rootdata import LieType
    >>> gkdim_general(LieType("A", 3), [3, 2, 1])
    0
    """
    dec = decompose(t, w)
    if t.kind == "A":
        value = positive_root_count(t) - sum(f_value("A", x) for x in dec.all_classes())
    else:
        integral = dec.integral_class or ()
        half = dec.half_class or ()
        rest = sum(f_value("A", tilde(x)) for x in dec.other_classes)
        if t.kind == "C":
            value = (
                positive_root_count(t)
                - f_value("B", minus_extend(integral))
                - f_value("D", minus_extend(half))
                - rest
            )
        elif t.kind == "B":
            value = (
                positive_root_count(t)
                - f_value("B", minus_extend(integral))
                - f_value("B", minus_extend(half))
                - rest
            )
        else:
            value = (
                positive_root_count(t)
                - f_value("D", minus_extend(integral))
                - f_value("D", minus_extend(half))
                - rest
            )
    if not 0 <= value <= positive_root_count(t):
        raise DomainError(f"GK dimension {value} out of range for {t}; weight {tuple(w)}")
    return value
