"""Euler pairings, the Gram matrix of a Lefschetz collection, and K_0 ranks.

Everything here is computed from alternating Koszul sums, independently of the
vanishing certificates, so the Gram matrix is a genuine cross-check of the
basis verification.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb

from .bbw import Family, GrassmannianSpec, SpecError, bbw_gr
from .bundles import BundleExpr, normalize, parse
from .lefschetz import CollectionSpec, Status, ext_text
from .oddvanish import koszul_terms_gr
from .partitions import dual_negate
from .schur import tensor


def euler_char(spec: GrassmannianSpec, expr: BundleExpr | str) -> int:
    """chi(X, expr) for X an odd isotropic or an ordinary Grassmannian."""
    if isinstance(expr, str):
        expr = parse(expr)
    terms = normalize(expr, spec.k, spec.quotient_rank)
    if spec.family is Family.GR:
        return sum(m * bbw_gr(spec, a, b).euler() for (a, b), m in terms.items())
    if spec.family is not Family.IGR_ODD:
        raise SpecError("Euler characteristics on even isotropic Grassmannians are not supported")
    gr = spec.ambient_gr()
    total = 0
    for s, term in enumerate(koszul_terms_gr(spec)):
        sign = -1 if s % 2 else 1
        for nu, mn in term.items():
            for (a, b), m in terms.items():
                for c, mc in tensor(a, dual_negate(nu)).items():
                    total += sign * m * mn * mc * bbw_gr(gr, c, b).euler()
    return total


def determinant(rows: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free (Bareiss) elimination."""
    a = [list(r) for r in rows]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1] if n else 1


@dataclass
class GramMatrix:
    labels: list[str]
    entries: list[list[int]] = field(default_factory=list)

    def __getitem__(self, ab: tuple[int, int]) -> int:
        a, b = ab
        return self.entries[a][b]

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def entry(self, a: str, b: str) -> int:
        return self.entries[self.index(a)][self.index(b)]

    @property
    def size(self) -> int:
        return len(self.labels)

    def is_unitriangular(self) -> bool:
        n = self.size
        return (all(self.entries[i][i] == 1 for i in range(n))
                and all(self.entries[i][j] == 0 for i in range(n) for j in range(i)))

    def determinant(self) -> int:
        return determinant(self.entries)

    def rank(self) -> int:
        a = [[Fraction(x) for x in row] for row in self.entries]
        rank, col, n = 0, 0, self.size
        while rank < n and col < n:
            piv = next((i for i in range(rank, n) if a[i][col] != 0), None)
            if piv is not None:
                a[rank], a[piv] = a[piv], a[rank]
                for i in range(rank + 1, n):
                    f = a[i][col] / a[rank][col]
                    a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
                rank += 1
            col += 1
        return rank

    def to_dict(self) -> dict:
        return {"labels": self.labels, "entries": self.entries,
                "unitriangular": self.is_unitriangular(), "determinant": self.determinant()}

    def table(self) -> str:
        width = max(len(str(x)) for row in self.entries for x in row)
        lw = max(len(s) for s in self.labels)
        head = " " * lw + " " + " ".join(f"{i:>{width}}" for i in range(self.size))
        lines = [head]
        for label, row in zip(self.labels, self.entries):
            lines.append(f"{label:<{lw}} " + " ".join(f"{x:>{width}}" for x in row))
        return "\n".join(lines)


def object_label(e: str, t: int) -> str:
    return e if t == 0 else f"{e}({t})"


def gram_matrix(c: CollectionSpec) -> GramMatrix:
    """Entry (a, b) is chi(E_a, E_b) with objects ordered by twist, then basis position."""
    objs = c.objects
    g = GramMatrix([object_label(e, t) for e, t in objs])
    for ea, ta in objs:
        row = []
        for eb, tb in objs:
            # chi(E_a(ta), E_b(tb)) = chi(X, E_b (x) E_a^* (x) O(tb - ta))
            text = ext_text(eb, ea, ta - tb)
            row.append(euler_char(c.space, text))
        g.entries.append(row)
    return g


def _isotropic_coordinate_subsets(k: int, n: int, odd: bool):
    # basis e_1..e_n, f_1..f_n (e_i paired with f_i), plus the kernel vector 0 if odd
    vectors = [(i, s) for i in range(1, n + 1) for s in (1, -1)]
    if odd:
        vectors.append((0, 0))
    for sub in combinations(vectors, k):
        idx = [i for i, _ in sub if i]
        if len(idx) == len(set(idx)):
            yield sub


def fixed_point_count(spec: GrassmannianSpec) -> int:
    """Number of torus-fixed points, enumerated as coordinate subspaces."""
    if spec.family is Family.GR:
        return sum(1 for _ in combinations(range(spec.ambient), spec.k))
    odd = spec.family is Family.IGR_ODD
    return sum(1 for _ in _isotropic_coordinate_subsets(spec.k, spec.ambient // 2, odd))


def fixed_point_formula(spec: GrassmannianSpec) -> int:
    k, n = spec.k, spec.ambient // 2
    if spec.family is Family.GR:
        return comb(spec.ambient, k)
    out = comb(n, k) * 2 ** k
    if spec.family is Family.IGR_ODD:
        out += comb(n, k - 1) * 2 ** (k - 1)
    return out


@dataclass
class RankReport:
    blocks: int
    codim: int
    lgr: int
    center: int
    total: int
    collection_length: int

    @property
    def blowup_side(self) -> int:
        # projective bundle over LGr(3,6) minus the (c-1) copies of the blown-up center
        return self.blocks * self.lgr - (self.codim - 1) * self.center

    @property
    def status(self) -> Status:
        ok = self.blowup_side == self.total == self.collection_length
        return Status.PASS if ok else Status.FAIL

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS

    def to_dict(self) -> dict:
        return {"status": self.status.value, "blocks": self.blocks, "codim": self.codim,
                "LGr(3,6)": self.lgr, "IGr(2,6)": self.center, "IGr(3,7)": self.total,
                "blowup_side": self.blowup_side, "collection_length": self.collection_length}

    def summary(self) -> str:
        return (f"{self.blocks}*{self.lgr} - ({self.codim}-1)*{self.center} = {self.blowup_side}; "
                f"fixed points of IGr(3,7) = {self.total}; collection length = {self.collection_length}")


def rank_consistency_igr37(codim: int = 2, blocks: int = 4, basis_size: int = 4) -> RankReport:
    """Compare rank K_0 of IGr(3,7) computed three ways.

    The blow-up of X along its closed orbit IGr(2,6) is a P^3-bundle over
    LGr(3,6); the codimension ``codim`` and block count can be perturbed to
    produce a negative control.
    """
    X = GrassmannianSpec.igr(3, 7)
    return RankReport(
        blocks=blocks,
        codim=codim,
        lgr=fixed_point_count(GrassmannianSpec.igr(3, 6)),
        center=fixed_point_count(GrassmannianSpec.igr(2, 6)),
        total=fixed_point_count(X),
        collection_length=basis_size * X.index,
    )
