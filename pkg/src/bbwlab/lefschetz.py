"""Lefschetz-basis checks on odd isotropic Grassmannians.

A basis E_0, ..., E_n with index r generates a rectangular Lefschetz
collection when, for 0 <= i <= j <= n and 0 <= t < r,

    Ext^*(E_j(t), E_i) = H^*(X, E_i (x) E_j^* (x) O(-t))

is k in degree 0 for i = j, t = 0 and vanishes otherwise.  Every cell is
computed through the Koszul engine; an inconclusive cell fails the check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .bbw import GrassmannianSpec, Kind, kap_pairing_expected, kapranov_pairing
from .bundles import parse
from .certificate import Certificate, Verdict
from .oddvanish import cohomology_on_X


class Status(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    INCONCLUSIVE = "INCONCLUSIVE"


def combine(statuses) -> Status:
    statuses = list(statuses)
    if Status.INCONCLUSIVE in statuses:
        return Status.INCONCLUSIVE
    if Status.FAIL in statuses:
        return Status.FAIL
    return Status.PASS


@dataclass(frozen=True)
class CollectionSpec:
    basis: tuple[str, ...]
    r: int
    space: GrassmannianSpec

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ValueError("r must be positive")
        if not self.basis:
            raise ValueError("empty basis")
        for e in self.basis:
            parse(e)

    @classmethod
    def make(cls, basis, r: int | None = None, space: str | GrassmannianSpec = "igr:3:7") -> "CollectionSpec":
        if isinstance(space, str):
            space = GrassmannianSpec.parse(space)
        return cls(tuple(basis), space.index if r is None else r, space)

    @property
    def objects(self) -> list[tuple[str, int]]:
        """Objects E_i(t) ordered by t, then by position in the basis."""
        return [(e, t) for t in range(self.r) for e in self.basis]

    def cells(self) -> list[tuple[int, int, int]]:
        m = len(self.basis)
        return [(i, j, t) for i in range(m) for j in range(i, m) for t in range(self.r)]

    def to_dict(self) -> dict:
        return {"basis": list(self.basis), "r": self.r, "space": self.space.to_text()}


def ext_text(target: str, source: str, t: int = 0) -> str:
    """Bundle whose cohomology is Ext^*(source(t), target)."""
    out = f"({target}) * dual({source})"
    return out if t == 0 else f"{out} * O({-t})"


def ext_certificate(c: CollectionSpec, j: int, i: int, t: int) -> Certificate:
    m = len(c.basis)
    if not (0 <= i <= j < m and 0 <= t < c.r):
        raise IndexError(f"cell (i={i}, j={j}, t={t}) is outside the grid")
    claim = f"Ext^*({c.basis[j]}({t}), {c.basis[i]})"
    return cohomology_on_X(c.space, ext_text(c.basis[i], c.basis[j], t), claim=claim)


def expected_cell(i: int, j: int, t: int) -> dict[int, int]:
    return {0: 1} if i == j and t == 0 else {}


def cell_status(cert: Certificate, expected: dict[int, int]) -> Status:
    if cert.verdict is Verdict.INCONCLUSIVE:
        return Status.INCONCLUSIVE
    got = cert.cohomology if cert.verdict is Verdict.DETERMINED else {}
    return Status.PASS if got == expected else Status.FAIL


@dataclass
class Cell:
    i: int
    j: int
    t: int
    expected: dict[int, int]
    certificate: Certificate
    status: Status

    def to_dict(self, full: bool = True) -> dict:
        d = {"i": self.i, "j": self.j, "t": self.t, "status": self.status.value,
             "expected": {str(k): v for k, v in self.expected.items()},
             "verdict": self.certificate.verdict.value,
             "cohomology": {str(k): v for k, v in sorted(self.certificate.cohomology.items())}}
        if full:
            d["certificate"] = self.certificate.to_dict()
        return d


@dataclass
class GridReport:
    collection: CollectionSpec
    cells: list[Cell] = field(default_factory=list)

    @property
    def status(self) -> Status:
        return combine(c.status for c in self.cells)

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS

    def count(self, verdict: Verdict) -> int:
        return sum(1 for c in self.cells if c.certificate.verdict is verdict)

    def problems(self) -> list[Cell]:
        return [c for c in self.cells if c.status is not Status.PASS]

    def certificate(self) -> Certificate:
        verdict = Verdict.INCONCLUSIVE if self.status is Status.INCONCLUSIVE else Verdict.DETERMINED
        return Certificate(claim=f"Lefschetz basis <{', '.join(self.collection.basis)}> "
                                 f"on {self.collection.space}, r={self.collection.r}",
                           verdict=verdict, children=[c.certificate for c in self.cells])

    def to_dict(self, full: bool = True) -> dict:
        return {
            "collection": self.collection.to_dict(),
            "status": self.status.value,
            "cells": len(self.cells),
            "determined": self.count(Verdict.DETERMINED),
            "acyclic": self.count(Verdict.ACYCLIC),
            "inconclusive": self.count(Verdict.INCONCLUSIVE),
            "grid": [c.to_dict(full) for c in self.cells],
        }

    def table(self) -> str:
        lines = []
        for c in self.cells:
            coh = ", ".join(f"H^{d}={m}" for d, m in sorted(c.certificate.cohomology.items())) or "0"
            lines.append(f"  i={c.i} j={c.j} t={c.t}  {c.certificate.verdict.value:<12} {coh:<10} {c.status.value}")
        return "\n".join(lines)


def check_lefschetz_basis(c: CollectionSpec) -> GridReport:
    report = GridReport(c)
    for i, j, t in c.cells():
        cert = ext_certificate(c, j, i, t)
        exp = expected_cell(i, j, t)
        report.cells.append(Cell(i, j, t, exp, cert, cell_status(cert, exp)))
    m = len(c.basis)
    assert len(report.cells) == m * (m + 1) // 2 * c.r
    return report


S2_SEQUENCE = "0 -> sym^2 U -> V (x) U -> wedge^2 V (x) O -> wedge^2 Q -> 0"


@dataclass
class MutationReport:
    checks: dict[str, Certificate]
    near_miss: dict

    @property
    def status(self) -> Status:
        out = []
        for cert in self.checks.values():
            out.append(cell_status(cert, {}))
        if self.near_miss["kind"] != Kind.ACYCLIC.value or self.near_miss["transpose_match"]:
            out.append(Status.FAIL)
        return combine(out)

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS

    def to_dict(self, full: bool = True) -> dict:
        return {
            "status": self.status.value,
            "sequence": S2_SEQUENCE,
            "checks": {k: (v.to_dict() if full else v.verdict.value) for k, v in self.checks.items()},
            "near_miss": self.near_miss,
        }


def s2_mutation_orthogonality(n: int = 3) -> MutationReport:
    """Check wedge^2 Q is right orthogonal to <U, O> on IGr(n, 2n+1).

    Together with the four-term sequence S2_SEQUENCE this identifies the right
    mutation of sym^2 U through <U, O> with wedge^2 Q.  The single summand
    where the Kapranov dichotomy needs the shapes compared by hand, lambda =
    (1,1,0,...) against mu^T = (2,0,...) with mu = (1,1,0,...), is evaluated
    explicitly and reported.
    """
    X = GrassmannianSpec.igr(n, 2 * n + 1)
    checks = {
        "Ext(wedge^2 Q, O)": cohomology_on_X(X, "dual(wedge^2 Q)", claim="Ext^*(wedge^2 Q, O)"),
        "Ext(wedge^2 Q, U)": cohomology_on_X(X, "U * dual(wedge^2 Q)", claim="Ext^*(wedge^2 Q, U)"),
    }
    gr = X.ambient_gr()
    lam = (1, 1) + (0,) * (n - 2)
    mu = (1, 1) + (0,) * (n - 1)
    out = kapranov_pairing(gr, lam, mu)
    near = {
        "space": str(gr),
        "lambda": list(lam),
        "mu": list(mu),
        "mu_transpose": [2] + [0] * (n - 1),
        "transpose_match": kap_pairing_expected(lam, mu),
        "kind": out.kind.value,
        "alpha": list(out.alpha),
    }
    return MutationReport(checks, near)
