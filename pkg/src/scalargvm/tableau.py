"""Robinson-Schensted shapes of rational sequences and the F statistics."""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exactnum import Partition, as_rational, even_odd_counts

__all__ = [
    "GREENE_MAX_LENGTH",
    "Tableau",
    "rs_insert",
    "rs_shape",
    "greene_shape",
    "f_value",
]

GREENE_MAX_LENGTH = 12


@dataclass(frozen=True)
class Tableau:
    """Insertion tableau: rows weakly increase, columns strictly increase."""

    rows: tuple[tuple[Fraction, ...], ...]

    @property
    def shape(self) -> Partition:
        return Partition(len(row) for row in self.rows)

    def is_valid(self) -> bool:
        rows = self.rows
        if any(len(a) < len(b) for a, b in zip(rows, rows[1:])):
            return False
        if any(row[i] > row[i + 1] for row in rows for i in range(len(row) - 1)):
            return False
        return all(
            upper[j] < lower[j]
            for upper, lower in zip(rows, rows[1:])
            for j in range(len(lower))
        )


def rs_insert(x: Iterable) -> Tableau:
    """Row-insert ``x`` left to right.

    A value bumps the leftmost entry strictly greater than itself, so equal
    entries sit side by side in a row and never stack in a column.
    """
    rows: list[list[Fraction]] = []
    for value in x:
        v = as_rational(value)
        for row in rows:
            i = bisect_right(row, v)
            if i == len(row):
                row.append(v)
                break
            row[i], v = v, row[i]
        else:
            rows.append([v])
    return Tableau(tuple(tuple(row) for row in rows))


def rs_shape(x: Iterable) -> Partition:
    """Shape p(x) of the insertion tableau of ``x``.

    >>> rs_shape([5, 4, 1, 3, 2, 6])
    Partition((3, 1, 1, 1))
    """
    return rs_insert(x).shape


def _longest_decreasing_by_subset(x: Sequence[Fraction]) -> list[int]:
    # lds[mask] = longest strictly decreasing subsequence inside the positions
    # of mask; by Dilworth this is the fewest weakly increasing subsequences
    # covering those positions.
    n = len(x)
    size = 1 << n
    lds = [0] * size
    # ending[mask][i]: longest strictly decreasing run in mask ending at i
    ending: list[tuple[int, ...]] = [()] * size
    ending[0] = (0,) * n
    for mask in range(1, size):
        top = mask.bit_length() - 1
        rest = mask ^ (1 << top)
        prev = ending[rest]
        best = 0
        xt = x[top]
        for i in range(top):
            if rest >> i & 1 and x[i] > xt and prev[i] > best:
                best = prev[i]
        cur = list(prev)
        cur[top] = best + 1
        ending[mask] = tuple(cur)
        lds[mask] = max(lds[rest], best + 1)
    return lds


def greene_shape(x: Iterable, max_length: int = GREENE_MAX_LENGTH) -> Partition:
    """Shape of ``x`` from Greene's invariants, without any insertion.

    p_1 + ... + p_k is the largest total length of k pairwise disjoint weakly
    increasing subsequences. Exhaustive over position subsets, so only meant
    for short sequences.
    """
    seq = [as_rational(v) for v in x]
    n = len(seq)
    if n > max_length:
        raise ValueError(f"greene_shape is limited to length {max_length}, got {n}")
    if n == 0:
        return Partition()
    lds = _longest_decreasing_by_subset(seq)
    # best[k] = largest subset coverable by k weakly increasing subsequences
    best = [0] * (n + 1)
    for mask, k in enumerate(lds):
        count = mask.bit_count()
        if count > best[k]:
            best[k] = count
    parts = []
    covered = 0
    for k in range(1, n + 1):
        best[k] = max(best[k], best[k - 1])
        if best[k] == covered:
            break
        parts.append(best[k] - covered)
        covered = best[k]
    return Partition(parts)


def f_value(flavor: str, x: Iterable) -> int:
    """F_A, F_B or F_D of a sequence: sum of (k-1) times the k-th row statistic.

    Flavor A weighs the row lengths of p(x), B the odd-box counts and D the
    even-box counts.
    """
    shape = rs_shape(x)
    if flavor == "A":
        rows = tuple(shape)
    elif flavor == "B":
        rows = even_odd_counts(shape)[1]
    elif flavor == "D":
        rows = even_odd_counts(shape)[0]
    else:
        raise ValueError(f"unknown F flavor {flavor!r}; expected 'A', 'B' or 'D'")
    return sum(k * r for k, r in enumerate(rows))
