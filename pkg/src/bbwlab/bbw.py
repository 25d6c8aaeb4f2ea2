"""Borel-Bott-Weil on Grassmannians and the acyclicity test on symplectic ones.

All weights handed to the engines are U*/Q*-side: ``bbw_gr(spec, lam, mu)``
computes H^*(Gr(k, N), Sigma^lam U* (x) Sigma^mu Q*).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Sequence

from .partitions import Weight, dominant, dual_negate, pad, strip, transpose, young
from .schur import weyl_dimension


class Family(str, Enum):
    GR = "gr"
    IGR_EVEN = "igr-even"
    IGR_ODD = "igr-odd"


class SpecError(ValueError):
    pass


@dataclass(frozen=True)
class GrassmannianSpec:
    family: Family
    k: int
    ambient: int

    def __post_init__(self) -> None:
        if not 1 <= self.k <= self.ambient:
            raise SpecError(f"need 1 <= k <= ambient, got k={self.k}, ambient={self.ambient}")
        if self.family is Family.IGR_EVEN:
            if self.ambient % 2 or self.k > self.ambient // 2:
                raise SpecError("IGr(k, 2n) needs an even ambient and k <= n")
        elif self.family is Family.IGR_ODD:
            if self.ambient % 2 == 0 or self.k > self.ambient // 2:
                raise SpecError("IGr(k, 2n+1) needs an odd ambient and k <= n")

    @classmethod
    def gr(cls, k: int, n: int) -> "GrassmannianSpec":
        return cls(Family.GR, k, n)

    @classmethod
    def igr(cls, k: int, ambient: int) -> "GrassmannianSpec":
        fam = Family.IGR_EVEN if ambient % 2 == 0 else Family.IGR_ODD
        return cls(fam, k, ambient)

    @classmethod
    def parse(cls, text: str) -> "GrassmannianSpec":
        """``gr:k:n``, ``igr:k:n`` (even or odd ambient) or ``lgr:n:2n``."""
        try:
            fam, k, n = text.strip().lower().split(":")
            k, n = int(k), int(n)
        except ValueError:
            raise SpecError(f"cannot parse space {text!r}; expected family:k:n") from None
        if fam == "gr":
            return cls.gr(k, n)
        if fam in ("igr", "lgr"):
            spec = cls.igr(k, n)
            if fam == "lgr" and 2 * k != n:
                raise SpecError("lgr:k:n needs n = 2k")
            return spec
        raise SpecError(f"unknown family {fam!r}")

    @property
    def n(self) -> int:
        """Half the ambient dimension (rounded down) for isotropic families."""
        return self.ambient // 2 if self.family is not Family.GR else self.ambient

    @property
    def quotient_rank(self) -> int:
        return self.ambient - self.k

    @property
    def dim(self) -> int:
        k, N = self.k, self.ambient
        if self.family is Family.GR:
            return k * (N - k)
        if self.family is Family.IGR_EVEN:
            n = N // 2
            return 2 * k * (n - k) + k * (k + 1) // 2
        return k * (N - k) - k * (k - 1) // 2

    @property
    def index(self) -> int:
        """r with omega = O(-r)."""
        k, N = self.k, self.ambient
        if self.family is Family.GR:
            return N
        n = N // 2
        if self.family is Family.IGR_EVEN:
            return 2 * n - k + 1
        return 2 * n - k + 2

    def ambient_gr(self) -> "GrassmannianSpec":
        return GrassmannianSpec.gr(self.k, self.ambient)

    def __str__(self) -> str:
        name = "Gr" if self.family is Family.GR else "IGr"
        return f"{name}({self.k},{self.ambient})"

    def to_text(self) -> str:
        return f"{'gr' if self.family is Family.GR else 'igr'}:{self.k}:{self.ambient}"


class Kind(str, Enum):
    ACYCLIC = "acyclic"
    DETERMINED = "determined"
    CERTIFIED_ACYCLIC = "certified-acyclic"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Outcome:
    """Result of one BBW evaluation.

    ``degrees`` maps a cohomological degree to (gamma, dim) for DETERMINED.
    ``alpha`` and ``inversions`` are kept so the verdict can be rechecked by hand.
    """

    kind: Kind
    degrees: dict = field(default_factory=dict)
    alpha: tuple = ()
    inversions: int | None = None
    criterion: str | None = None

    @property
    def is_zero(self) -> bool:
        return self.kind in (Kind.ACYCLIC, Kind.CERTIFIED_ACYCLIC)

    def euler(self) -> int:
        if self.kind is Kind.UNKNOWN:
            raise ValueError("Euler characteristic of an unknown outcome")
        return sum((-1) ** d * dim for d, (_, dim) in self.degrees.items())

    def to_dict(self) -> dict:
        d = {"kind": self.kind.value, "alpha": list(self.alpha)}
        if self.inversions is not None:
            d["inversions"] = self.inversions
        if self.criterion is not None:
            d["criterion"] = self.criterion
        if self.degrees:
            d["degrees"] = {str(deg): {"gamma": list(g), "dim": dim}
                            for deg, (g, dim) in sorted(self.degrees.items())}
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "Outcome":
        degrees = {int(k): (tuple(v["gamma"]), int(v["dim"])) for k, v in d.get("degrees", {}).items()}
        return cls(Kind(d["kind"]), degrees, tuple(d.get("alpha", ())),
                   d.get("inversions"), d.get("criterion"))


def _inversions(seq: Sequence[int]) -> int:
    return sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] < seq[j])


@lru_cache(maxsize=None)
def _bbw(lam: Weight, mu: Weight) -> Outcome:
    n = len(lam) + len(mu)
    alpha = tuple(n - i + x for i, x in enumerate(lam + mu))
    if len(set(alpha)) < n:
        return Outcome(Kind.ACYCLIC, alpha=alpha)
    ell = _inversions(alpha)
    srt = sorted(alpha, reverse=True)
    gamma = tuple(a - (n - i) for i, a in enumerate(srt))
    return Outcome(Kind.DETERMINED, {ell: (gamma, weyl_dimension(gamma))}, alpha, ell)


def bbw_gr(spec: GrassmannianSpec, lam: Sequence[int], mu: Sequence[int]) -> Outcome:
    """H^*(Gr(k, n), Sigma^lam U* (x) Sigma^mu Q*)."""
    lam, mu = dominant(lam), dominant(mu)
    if len(lam) != spec.k or len(mu) != spec.ambient - spec.k:
        raise SpecError(f"weights of lengths {len(lam)}, {len(mu)} do not fit {spec}")
    return _bbw(lam, mu)


def kapranov_pairing(spec: GrassmannianSpec, lam: Sequence[int], mu: Sequence[int]) -> Outcome:
    """H^*(Sigma^lam U (x) Sigma^mu Q*) for diagrams lam <= (n-k)^k, mu <= k^(n-k)."""
    k, q = spec.k, spec.ambient - spec.k
    lam, mu = young(lam), young(mu)
    if len(lam) != k or len(mu) != q:
        raise SpecError("diagram lengths do not match the Grassmannian")
    if (lam and lam[0] > q) or (mu and mu[0] > k):
        raise SpecError(f"{lam}, {mu} lie outside the boxes of the pairing")
    return bbw_gr(spec, dual_negate(lam), mu)


def kap_pairing_expected(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True when lam equals the transpose of mu, padded to len(lam)."""
    return tuple(lam) == pad(transpose(mu), len(lam))


class PreconditionError(ValueError):
    pass


def kap_gen_vanishes(spec: GrassmannianSpec, lam: Sequence[int], mu: Sequence[int], p: int, q: int) -> bool:
    """Sufficient vanishing test for Sigma^lam U (x) Sigma^mu Q*.

    Returns True when the leading p rows of lam differ from the transpose of the
    leading q rows of mu; False means no conclusion.
    """
    lam, mu = dominant(lam), dominant(mu)
    k, r = spec.k, spec.ambient - spec.k
    if len(lam) != k or len(mu) != r:
        raise SpecError("weight lengths do not match the Grassmannian")
    if not (1 <= p <= k and 1 <= q <= r):
        raise PreconditionError(f"need 1 <= p <= {k} and 1 <= q <= {r}")
    head_l, head_m = lam[:p], mu[:q]
    if not (q >= head_l[0] and head_l[-1] >= 0):
        raise PreconditionError(f"leading {p} entries of {lam} are not within [0, {q}]")
    if not (p >= head_m[0] and head_m[-1] >= 0):
        raise PreconditionError(f"leading {q} entries of {mu} are not within [0, {p}]")
    return head_l != pad(transpose(strip(head_m)), p)


def sp_alpha(spec: GrassmannianSpec, lam: Sequence[int]) -> tuple[int, ...]:
    n, k = spec.ambient // 2, spec.k
    return tuple(n - i + x for i, x in enumerate(lam)) + tuple(range(n - k, 0, -1))


def sp_acyclic(spec: GrassmannianSpec, lam: Sequence[int]) -> Outcome:
    """One-sided acyclicity test for Sigma^lam U* on IGr(k, 2n).

    A zero entry in the rho-shifted sequence, or two entries of equal absolute
    value, certify vanishing; anything else is reported as UNKNOWN.
    """
    if spec.family is not Family.IGR_EVEN:
        raise SpecError("sp_acyclic needs an even isotropic Grassmannian")
    lam = dominant(lam)
    if len(lam) != spec.k:
        raise SpecError("weight length must equal k")
    alpha = sp_alpha(spec, lam)
    absval = [abs(a) for a in alpha]
    if 0 in absval or len(set(absval)) < len(absval):
        return Outcome(Kind.CERTIFIED_ACYCLIC, alpha=alpha, criterion="zero-or-collision")
    return Outcome(Kind.UNKNOWN, alpha=alpha, criterion="zero-or-collision")
