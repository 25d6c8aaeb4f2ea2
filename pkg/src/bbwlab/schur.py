"""Decompositions of tensor products of Schur functors.

Everything is expressed through highest weights of GL_n: Pieri's rules, the
Littlewood-Richardson rule, the plethysm Lambda^k(Lambda^2) and the Weyl
dimension formula.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, Mapping

from .partitions import (
    Weight,
    WeightError,
    dominant,
    is_almost_symmetric,
    partitions_of,
    young,
)


class WeightMultiset:
    """Multiset of dominant weights of a fixed length ``rank``."""

    __slots__ = ("rank", "_counts")

    def __init__(self, rank: int, items: Mapping[Weight, int] | Iterable[tuple[Weight, int]] = ()):
        self.rank = rank
        self._counts: dict[Weight, int] = {}
        pairs = items.items() if isinstance(items, Mapping) else items
        for w, m in pairs:
            self.add(w, m)

    def add(self, w: Iterable[int], mult: int = 1) -> None:
        w = dominant(w)
        if len(w) != self.rank:
            raise WeightError(f"{w} does not have length {self.rank}")
        if mult < 0:
            raise ValueError("multiplicities are nonnegative")
        if mult:
            self._counts[w] = self._counts.get(w, 0) + mult

    def __getitem__(self, w: Weight) -> int:
        return self._counts.get(tuple(w), 0)

    def __contains__(self, w) -> bool:
        return tuple(w) in self._counts

    def __iter__(self) -> Iterator[Weight]:
        return iter(sorted(self._counts, reverse=True))

    def __len__(self) -> int:
        return len(self._counts)

    def items(self) -> list[tuple[Weight, int]]:
        return [(w, self._counts[w]) for w in self]

    def total(self) -> int:
        return sum(self._counts.values())

    def as_dict(self) -> dict[Weight, int]:
        return dict(self._counts)

    def shifted(self, t: int) -> "WeightMultiset":
        return WeightMultiset(self.rank, ((det_shift(w, t), m) for w, m in self._counts.items()))

    def __eq__(self, other) -> bool:
        if isinstance(other, WeightMultiset):
            return self.rank == other.rank and self._counts == other._counts
        if isinstance(other, Mapping):
            return self._counts == {tuple(k): v for k, v in other.items()}
        return NotImplemented

    def __repr__(self) -> str:
        body = ", ".join(f"{w}: {m}" for w, m in self.items())
        return f"WeightMultiset(rank={self.rank}, {{{body}}})"

    def to_records(self) -> list[dict]:
        return [{"weight": list(w), "multiplicity": m} for w, m in self.items()]

    @classmethod
    def from_records(cls, rank: int, records: Iterable[dict]) -> "WeightMultiset":
        return cls(rank, ((tuple(r["weight"]), int(r["multiplicity"])) for r in records))


def det_shift(lam: Iterable[int], t: int) -> Weight:
    """Tensoring with the t-th power of the determinant."""
    return tuple(x + t for x in lam)


def pieri_row(lam: Iterable[int], k: int) -> WeightMultiset:
    """Sigma^lam (x) S^k: horizontal strips of size k."""
    lam = dominant(lam)
    if k < 1:
        raise ValueError("k must be positive")
    n = len(lam)
    out = WeightMultiset(n)

    def rec(i: int, rem: int, acc: list[int]) -> None:
        if i == n:
            if rem == 0:
                out.add(acc)
            return
        cap = rem if i == 0 else min(rem, lam[i - 1] - lam[i])
        for add in range(cap, -1, -1):
            rec(i + 1, rem - add, acc + [lam[i] + add])

    rec(0, k, [])
    return out


def pieri_col(lam: Iterable[int], k: int) -> WeightMultiset:
    """Sigma^lam (x) Lambda^k: vertical strips of size k (at most one box per row)."""
    lam = dominant(lam)
    n = len(lam)
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = WeightMultiset(n)
    if k > n:
        return out

    def rec(i: int, rem: int, acc: list[int]) -> None:
        if i == n:
            if rem == 0:
                out.add(acc)
            return
        for add in (1, 0):
            if add > rem:
                continue
            new = lam[i] + add
            if i > 0 and new > acc[-1]:
                continue
            rec(i + 1, rem - add, acc + [new])

    rec(0, k, [])
    return out


@lru_cache(maxsize=None)
def _lr_diagrams(lam: Weight, mu: Weight) -> tuple[tuple[Weight, int], ...]:
    """Littlewood-Richardson expansion of s_lam * s_mu for Young diagrams of a
    common length n, keeping shapes with at most n rows.

    Boxes labelled i are added as a horizontal strip of size mu[i-1]; the
    reverse reading word is kept a lattice word by requiring that the number
    of i's in rows 1..r never exceed the number of (i-1)'s in rows 1..r-1.
    """
    n = len(lam)
    labels = [m for m in mu if m > 0]
    results: dict[Weight, int] = {}

    # counts[r] = number of boxes with the previous label in row r
    def place(idx: int, shape: tuple[int, ...], prev_counts: tuple[int, ...]) -> None:
        if idx == len(labels):
            results[shape] = results.get(shape, 0) + 1
            return
        need = labels[idx]
        first = idx == 0

        def rec(r: int, rem: int, new_shape: list[int], counts: list[int],
                cum_new: int, cum_prev: int) -> None:
            if r == n:
                if rem == 0:
                    place(idx + 1, tuple(new_shape), tuple(counts))
                return
            cap = rem if r == 0 else min(rem, shape[r - 1] - shape[r])
            if not first:
                # lattice condition: cum_new + add <= cum_prev (rows < r)
                cap = min(cap, cum_prev - cum_new)
            for add in range(cap, -1, -1):
                rec(r + 1, rem - add, new_shape + [shape[r] + add], counts + [add],
                    cum_new + add, cum_prev + (prev_counts[r] if not first else 0))

        rec(0, need, [], [], 0, 0)

    place(0, tuple(lam), (0,) * n)
    return tuple(sorted(results.items(), reverse=True))


def lr_tensor(lam: Iterable[int], mu: Iterable[int]) -> WeightMultiset:
    """Full decomposition of Sigma^lam (x) Sigma^mu on a rank-n bundle.

    ``mu`` must be a Young diagram; ``lam`` may be any dominant weight, in which
    case it is reduced to a diagram by a determinant shift first.
    """
    lam = dominant(lam)
    mu = young(mu)
    if len(lam) != len(mu):
        raise WeightError("lr_tensor needs weights of equal length")
    n = len(lam)
    t = -min(lam) if lam and min(lam) < 0 else 0
    base = det_shift(lam, t)
    out = WeightMultiset(n)
    for nu, m in _lr_diagrams(base, mu):
        out.add(det_shift(nu, -t), m)
    return out


def tensor(lam: Iterable[int], mu: Iterable[int]) -> WeightMultiset:
    """lr_tensor for two arbitrary dominant weights of equal length."""
    lam = dominant(lam)
    mu = dominant(mu)
    s = -min(mu) if mu and min(mu) < 0 else 0
    return lr_tensor(lam, det_shift(mu, s)).shifted(-s)


def wedge_of_wedge_square(k: int, n: int) -> WeightMultiset:
    """Lambda^k(Lambda^2 V) for V of rank n: almost symmetric diagrams with 2k boxes."""
    if not 0 <= k <= n * (n - 1) // 2:
        raise ValueError(f"k must lie in [0, {n * (n - 1) // 2}]")
    out = WeightMultiset(n)
    for lam in partitions_of(2 * k, n):
        if is_almost_symmetric(lam):
            out.add(lam)
    return out


@lru_cache(maxsize=None)
def _weyl(gamma: Weight) -> int:
    num = 1
    den = 1
    N = len(gamma)
    for i in range(N):
        for j in range(i + 1, N):
            num *= gamma[i] - gamma[j] + j - i
            den *= j - i
    q, r = divmod(num, den)
    assert r == 0
    return q


def weyl_dimension(gamma: Iterable[int], N: int | None = None) -> int:
    """Dimension of the irreducible GL_N-module with highest weight gamma."""
    gamma = dominant(gamma)
    if N is not None and len(gamma) != N:
        raise WeightError(f"{gamma} does not have length {N}")
    return _weyl(gamma)


def wedge_dimension_check(n: int, k: int) -> tuple[int, int]:
    """(sum of dims over Lambda^k Lambda^2 summands, binomial(n(n-1)/2, k))."""
    total = sum(weyl_dimension(w) for w in wedge_of_wedge_square(k, n))
    return total, comb(n * (n - 1) // 2, k)
