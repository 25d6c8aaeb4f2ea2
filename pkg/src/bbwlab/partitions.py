"""Dominant weights of GL_n and Young diagrams.

Weights are plain tuples of ints with an explicit length; nothing here pads
or truncates silently.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

Weight = tuple[int, ...]


class WeightError(ValueError):
    pass


def is_dominant(entries: Sequence[int]) -> bool:
    return all(entries[i] >= entries[i + 1] for i in range(len(entries) - 1))


def dominant(entries: Iterable[int]) -> Weight:
    """Validate and return ``entries`` as a dominant weight tuple."""
    w = tuple(int(x) for x in entries)
    if not is_dominant(w):
        raise WeightError(f"{w} is not weakly decreasing")
    return w


def young(entries: Iterable[int]) -> Weight:
    w = dominant(entries)
    if w and w[-1] < 0:
        raise WeightError(f"{w} has a negative entry; not a Young diagram")
    return w


def pad(w: Sequence[int], n: int) -> Weight:
    """Extend a Young diagram with zeros to length ``n``."""
    if len(w) > n:
        if any(w[n:]):
            raise WeightError(f"{tuple(w)} has more than {n} nonzero rows")
        return tuple(w[:n])
    return tuple(w) + (0,) * (n - len(w))


def strip(w: Sequence[int]) -> Weight:
    """Drop trailing zeros of a Young diagram."""
    w = list(w)
    while w and w[-1] == 0:
        w.pop()
    return tuple(w)


def size(w: Sequence[int]) -> int:
    return sum(w)


def transpose(lam: Sequence[int]) -> Weight:
    lam = young(lam)
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x >= j) for j in range(1, lam[0] + 1))


def diagonal_length(lam: Sequence[int]) -> int:
    lam = young(lam)
    d = 0
    for i, x in enumerate(lam, start=1):
        if x >= i:
            d = i
    return d


def is_almost_symmetric(lam: Sequence[int]) -> bool:
    """True when removing one box from each of the first d(lam) columns leaves
    a self-conjugate diagram."""
    lam = young(lam)
    d = diagonal_length(lam)
    cols = list(transpose(lam))
    for i in range(d):
        cols[i] -= 1
    if not is_dominant(cols) or (cols and cols[-1] < 0):
        return False
    cols = strip(cols)
    return cols == strip(transpose(cols))


def dual_negate(lam: Sequence[int]) -> Weight:
    """Weight of the dual representation: (-lam_n, ..., -lam_1)."""
    lam = dominant(lam)
    return tuple(-x for x in reversed(lam))


def contains(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """mu is contained in lam (entrywise <=); equal lengths required."""
    if len(lam) != len(mu):
        raise WeightError("containment needs weights of equal length")
    return all(m <= l for l, m in zip(lam, mu))


def partitions_of(total: int, max_rows: int, max_part: int | None = None) -> Iterator[Weight]:
    """Partitions of ``total`` with at most ``max_rows`` rows, padded to
    ``max_rows``."""
    if max_part is None:
        max_part = total

    def rec(rem: int, rows: int, cap: int) -> Iterator[list[int]]:
        if rem == 0:
            yield [0] * rows
            return
        if rows == 0:
            return
        for first in range(min(rem, cap), 0, -1):
            for rest in rec(rem - first, rows - 1, first):
                yield [first] + rest

    for p in rec(total, max_rows, max_part):
        yield tuple(p)


def diagrams_in_box(rows: int, cols: int) -> Iterator[Weight]:
    """All Young diagrams with at most ``rows`` rows and ``cols`` columns,
    as tuples of length ``rows``."""

    def rec(r: int, cap: int) -> Iterator[list[int]]:
        if r == 0:
            yield []
            return
        for first in range(cap, -1, -1):
            for rest in rec(r - 1, first):
                yield [first] + rest

    for p in rec(rows, cols):
        yield tuple(p)


def weights_in_range(n: int, lo: int, hi: int) -> Iterator[Weight]:
    """Dominant weights of length n with every entry in [lo, hi]."""
    for d in diagrams_in_box(n, hi - lo):
        yield tuple(x + lo for x in d)
