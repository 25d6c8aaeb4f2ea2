"""Certificate trees recording every decomposition behind a cohomology claim."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .bbw import Outcome

SCHEMA = "bbwlab/1"


class Verdict(str, Enum):
    ACYCLIC = "acyclic"
    DETERMINED = "determined"
    INCONCLUSIVE = "inconclusive"


@dataclass
class Leaf:
    """One irreducible bundle evaluated on an ambient homogeneous space.

    ``s`` is the index of the Koszul term it came from; the leaf contributes
    to cohomological degree (ambient degree - s) of the zero locus.
    """

    s: int
    lam: tuple
    mu: tuple
    multiplicity: int
    outcome: Outcome
    ambient: str

    @property
    def nonzero(self) -> bool:
        return not self.outcome.is_zero

    def to_dict(self) -> dict:
        return {
            "s": self.s,
            "lambda": list(self.lam),
            "mu": list(self.mu),
            "multiplicity": self.multiplicity,
            "ambient": self.ambient,
            "outcome": self.outcome.to_dict(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Leaf":
        return cls(d["s"], tuple(d["lambda"]), tuple(d["mu"]), d["multiplicity"],
                   Outcome.from_dict(d["outcome"]), d["ambient"])


@dataclass
class Certificate:
    claim: str
    verdict: Verdict
    route: str | None = None
    cohomology: dict[int, int] = field(default_factory=dict)
    euler: int | None = None
    children: list["Certificate"] = field(default_factory=list)
    leaves: list[Leaf] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.verdict is not Verdict.INCONCLUSIVE

    def walk(self):
        yield self
        for c in self.children:
            yield from c.walk()

    def all_leaves(self) -> list[Leaf]:
        return [leaf for node in self.walk() for leaf in node.leaves]

    def to_dict(self) -> dict:
        d: dict = {"claim": self.claim, "verdict": self.verdict.value}
        if self.route is not None:
            d["route"] = self.route
        if self.cohomology:
            d["cohomology"] = {str(k): v for k, v in sorted(self.cohomology.items())}
        if self.euler is not None:
            d["euler"] = self.euler
        if self.notes:
            d["notes"] = list(self.notes)
        if self.leaves:
            d["leaves"] = [leaf.to_dict() for leaf in self.leaves]
        if self.children:
            d["children"] = [c.to_dict() for c in self.children]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "Certificate":
        return cls(
            claim=d["claim"],
            verdict=Verdict(d["verdict"]),
            route=d.get("route"),
            cohomology={int(k): v for k, v in d.get("cohomology", {}).items()},
            euler=d.get("euler"),
            children=[cls.from_dict(c) for c in d.get("children", [])],
            leaves=[Leaf.from_dict(x) for x in d.get("leaves", [])],
            notes=list(d.get("notes", [])),
        )

    def summary(self) -> str:
        if self.verdict is Verdict.DETERMINED:
            coh = ", ".join(f"H^{d} = k^{m}" for d, m in sorted(self.cohomology.items()))
            return f"{self.claim}: {coh}"
        return f"{self.claim}: {self.verdict.value}"
