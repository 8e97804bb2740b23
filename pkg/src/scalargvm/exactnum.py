"""Exact rational scalars and integer-partition primitives."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable

__all__ = [
    "Rational",
    "Partition",
    "parse_rational",
    "format_rational",
    "as_rational",
    "dual_partition",
    "even_odd_counts",
]

# Fraction already keeps denominator > 0 and gcd 1 after every operation.
Rational = Fraction

_RATIONAL_RE = re.compile(r"^[+-]?(\d+(/\d+)?|\d*\.\d+|\d+\.)$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"a"``, ``"a/b"`` or a signed decimal into an exact Fraction.

    Decimals are read as decimal fractions, so ``"3.5"`` is ``7/2`` and
    ``"2.3"`` is ``23/10``.

    >>> parse_rational("-3/6")
    Fraction(-1, 2)
    >>> parse_rational("2.3")
    Fraction(23, 10)
    """
    token = text.strip()
    if not _RATIONAL_RE.match(token):
        raise ValueError(f"malformed rational: {text!r}")
    try:
        return Fraction(token)
    except ZeroDivisionError:
        raise ValueError(f"malformed rational: {text!r} (zero denominator)") from None


def format_rational(value: Fraction | int) -> str:
    """Canonical text form: ``"a/b"`` in lowest terms, integers without ``/1``."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and strings to Fraction; floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class Partition(tuple):
    """Weakly decreasing tuple of positive integers (possibly empty)."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"


def dual_partition(p: Iterable[int]) -> Partition:
    """Conjugate partition: the i-th part counts the parts of ``p`` that are >= i.

    >>> dual_partition((3, 1, 1, 1))
    Partition((4, 1, 1))
    """
    p = Partition(p)
    if not p:
        return Partition()
    return Partition(sum(1 for part in p if part >= i) for i in range(1, p[0] + 1))


def even_odd_counts(p: Iterable[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Per-row counts of even and odd boxes of the Young diagram of ``p``.

    Box (k, l) (row k, column l, both 1-based) is even when k + l is even.
    Odd rows start with an even box, so they carry ceil(p_k/2) even boxes;
    even rows carry floor(p_k/2).
    """
    p = Partition(p)
    evens = []
    odds = []
    for k, part in enumerate(p, start=1):
        half_up, half_down = (part + 1) // 2, part // 2
        if k % 2:
            evens.append(half_up)
            odds.append(half_down)
        else:
            evens.append(half_down)
            odds.append(half_up)
    return tuple(evens), tuple(odds)
