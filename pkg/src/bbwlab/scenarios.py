"""Declarative verification scenarios and their runner."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from pathlib import Path

from .bundles import BundleError
from .certificate import SCHEMA
from .ktheory import gram_matrix, rank_consistency_igr37
from .lefschetz import CollectionSpec, Status, check_lefschetz_basis, combine, s2_mutation_orthogonality
from .ledger import DATA as SCRIPTS, replay

SCENARIOS = Path(__file__).parent / "data" / "scenarios"


class ScenarioError(ValueError):
    pass


@dataclass
class ScenarioResult:
    id: str
    verdict: Status
    payload: dict = field(default_factory=dict)
    duration: float = 0.0
    messages: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"schema": SCHEMA, "id": self.id, "verdict": self.verdict.value,
                "duration": round(self.duration, 6), "messages": list(self.messages),
                "payload": self.payload}

    @classmethod
    def from_dict(cls, d: dict) -> "ScenarioResult":
        if d.get("schema") != SCHEMA:
            raise ValueError(f"unsupported schema {d.get('schema')!r}")
        return cls(d["id"], Status(d["verdict"]), d.get("payload", {}), d.get("duration", 0.0),
                   list(d.get("messages", [])))


def available() -> list[str]:
    return sorted(p.stem for p in SCENARIOS.glob("*.json"))


def load_scenario(ref: str | Path) -> dict:
    path = Path(ref)
    if not path.suffix and not path.exists():
        path = SCENARIOS / f"{ref}.json"
    if not path.exists():
        raise ScenarioError(f"unknown scenario {str(ref)!r}; available: {', '.join(available())}")
    try:
        d = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"{path}: line {exc.lineno}: {exc.msg}") from None
    if "kind" not in d:
        raise ScenarioError(f"{path}: missing 'kind'")
    d.setdefault("name", path.stem)
    return d


def _expect(messages: list[str], label: str, got, want) -> Status:
    if got == want:
        return Status.PASS
    messages.append(f"{label}: expected {want}, got {got}")
    return Status.FAIL


def _lefschetz(sc: dict, msgs: list[str], full: bool) -> tuple[Status, dict]:
    c = CollectionSpec.make(sc["basis"], sc.get("r"), sc.get("space", "igr:3:7"))
    rep = check_lefschetz_basis(c)
    out = [rep.status]
    for cell in rep.problems():
        msgs.append(f"cell i={cell.i} j={cell.j} t={cell.t}: {cell.status.value} "
                    f"({cell.certificate.verdict.value}, {cell.certificate.cohomology})")
    d = rep.to_dict(full)
    for key, want in sc.get("expected", {}).items():
        out.append(_expect(msgs, key, d[key], want))
    msgs.append(f"{d['cells']} cells: {d['determined']} determined, {d['acyclic']} acyclic, "
                f"{d['inconclusive']} inconclusive")
    return combine(out), d


def _s2(sc: dict, msgs: list[str], full: bool) -> tuple[Status, dict]:
    rep = s2_mutation_orthogonality(sc.get("n", 3))
    nm = rep.near_miss
    msgs.append(f"near miss lambda={tuple(nm['lambda'])} vs mu^T={tuple(nm['mu_transpose'])}: {nm['kind']}")
    for k, cert in rep.checks.items():
        msgs.append(f"{k}: {cert.verdict.value}")
    return rep.status, rep.to_dict(full)


def _gram(sc: dict, msgs: list[str], full: bool) -> tuple[Status, dict]:
    c = CollectionSpec.make(sc["basis"], sc.get("r"), sc.get("space", "igr:3:7"))
    g = gram_matrix(c)
    exp = sc.get("expected", {})
    out = []
    if "size" in exp:
        out.append(_expect(msgs, "size", g.size, exp["size"]))
    if "determinant" in exp:
        out.append(_expect(msgs, "determinant", g.determinant(), exp["determinant"]))
    if "unitriangular" in exp:
        out.append(_expect(msgs, "unitriangular", g.is_unitriangular(), exp["unitriangular"]))
    for a, b, v in exp.get("entries", []):
        out.append(_expect(msgs, f"chi({a}, {b})", g.entry(a, b), v))
    msgs.append(f"{g.size}x{g.size}, determinant {g.determinant()}, "
                f"{'unitriangular' if g.is_unitriangular() else 'not unitriangular'}")
    d = g.to_dict()
    d["table"] = g.table()
    return combine(out), d


def _rank(sc: dict, msgs: list[str], full: bool) -> tuple[Status, dict]:
    rep = rank_consistency_igr37(codim=sc.get("codim", 2), blocks=sc.get("blocks", 4))
    d = rep.to_dict()
    out = [rep.status]
    for key, want in sc.get("expected", {}).items():
        out.append(_expect(msgs, key, d[key], want))
    msgs.append(rep.summary())
    return combine(out), d


def _ledger(sc: dict, msgs: list[str], full: bool) -> tuple[Status, dict]:
    path = Path(sc["script"])
    if not path.is_absolute() and not path.exists():
        path = SCRIPTS / path
    res = replay(path)
    out = [Status.PASS if res.passed else Status.FAIL]
    if not res.passed:
        msgs.append(res.failure_message())
    if "goals" in sc.get("expected", {}):
        out.append(_expect(msgs, "goals", res.derived_goals, sc["expected"]["goals"]))
    msgs.append(f"{len(res.records)} steps, {res.derived_goals} of {len(res.goals)} targets derived")
    d = res.to_dict()
    if not full:
        d.pop("steps")
    return combine(out), d


RUNNERS = {"lefschetz": _lefschetz, "s2-mutation": _s2, "gram": _gram, "rank": _rank, "ledger": _ledger}


def run_scenario(ref: str | Path | dict, full: bool = True) -> ScenarioResult:
    sc = ref if isinstance(ref, dict) else load_scenario(ref)
    runner = RUNNERS.get(sc["kind"])
    if runner is None:
        raise ScenarioError(f"unknown scenario kind {sc['kind']!r}")
    msgs: list[str] = []
    start = time.perf_counter()
    try:
        status, payload = runner(sc, msgs, full)
    except (KeyError, BundleError) as exc:
        raise ScenarioError(f"scenario {sc['name']}: {exc}") from None
    return ScenarioResult(sc["name"], status, payload, time.perf_counter() - start, msgs)
