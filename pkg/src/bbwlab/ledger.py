"""Membership replay for a generation argument on the blow-up X~ of IGr(3,7).

Objects are symbols on X~ (or pushforwards from the exceptional divisor E)
with a twist a*H + b*E.  A proof script adds objects to the span one step at a
time; each step must be justified by a seed, the pushforward block rule, the
blow-up twist, a block rule, or a registered relation all of whose other terms
are already members.  Relations follow the all-but-one contract: in an exact
sequence (or a split sum) with m terms, any m-1 members force the last.

Text syntax for objects::

    object := [factor ' x '] ['i*'] base ['(' twist ')']
    twist  := signed sum of INT? ('H' | 'Hb' | 'E'),  with Hb = H - E
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path


class LedgerError(ValueError):
    pass


class ScriptError(LedgerError):
    pass


BASES = {
    "O", "U", "U*", "Ub", "Ub*", "Ut", "Ut*", "Q", "L2Q", "W", "W*", "S2Ub",
    "L2U", "L2U*", "L2Ub", "L2Ub*", "L2Ut", "L2Ut*", "L3Ut",
    "Ub.Ut", "Ub.L2Ut", "Ub.L3Ut",
}
FACTORS = {"V", "Vb", "L2Vb"}

# Rank-3 identities Lambda^2 F = F^* (x) det F, with det U* = O(H), det Ub* = O(Hb),
# det Ut* = det Ub* since Ut ~ Ub + O.
CANONICAL = {
    "L2U*": ("U", 1, 0),
    "L2U": ("U*", -1, 0),
    "L2Ub*": ("Ub", 1, -1),
    "L2Ub": ("Ub*", -1, 1),
    "L3Ut": ("Ut*", -1, 1),
}

# bases that make sense as pushforwards from E (symbols pulled back from Z)
Z_BASES = {"O", "U", "U*", "Ub*", "W", "W*"}
B_BASES = {"O", "U", "U*", "W", "W*"}
SEED_BASES = ("O", "U", "U*", "L2Q")
SEED_RANGE = range(5)

_OBJ = re.compile(r"^(?:(?P<factor>[A-Za-z0-9]+)\s+x\s+)?(?P<push>i\*)?(?P<base>[A-Za-z0-9.]+\*?)"
                  r"(?:\((?P<twist>[^)]*)\))?$")
_TWIST_TERM = re.compile(r"([+-]?)\s*(\d*)\s*(Hb|H|E)")


def parse_twist(text: str) -> tuple[int, int]:
    text = text.replace(" ", "")
    if text in ("", "0"):
        return 0, 0
    h = e = 0
    pos = 0
    for m in _TWIST_TERM.finditer(text):
        if m.start() != pos or (pos and not m.group(1)):
            raise LedgerError(f"bad twist {text!r} at position {pos}")
        c = int(m.group(2) or 1) * (-1 if m.group(1) == "-" else 1)
        if m.group(3) == "H":
            h += c
        elif m.group(3) == "E":
            e += c
        else:
            h, e = h + c, e - c
        pos = m.end()
    if pos != len(text):
        raise LedgerError(f"bad twist {text!r} at position {pos}")
    return h, e


def twist_text(h: int, e: int) -> str:
    parts = []
    for c, sym in ((h, "H"), (e, "E")):
        if c:
            s = sym if abs(c) == 1 else f"{abs(c)}{sym}"
            parts.append(("-" if c < 0 else ("+" if parts else "")) + s)
    return "".join(parts)


@dataclass(frozen=True, order=True)
class LedgerObject:
    base: str
    h: int = 0
    e: int = 0
    pushforward: bool = False
    factor: str | None = None

    def __post_init__(self) -> None:
        if self.base not in BASES:
            raise LedgerError(f"unknown base symbol {self.base!r}")
        if self.factor is not None and self.factor not in FACTORS:
            raise LedgerError(f"unknown vector-space factor {self.factor!r}")
        if self.pushforward and self.base not in Z_BASES:
            raise LedgerError(f"{self.base} is not a symbol on the exceptional divisor")

    @classmethod
    def parse(cls, text: str) -> "LedgerObject":
        m = _OBJ.match(text.strip())
        if not m:
            raise LedgerError(f"cannot parse ledger object {text!r}")
        h, e = parse_twist(m.group("twist") or "")
        return cls(m.group("base"), h, e, bool(m.group("push")), m.group("factor")).canonical()

    def canonical(self) -> "LedgerObject":
        if self.base in CANONICAL and not self.pushforward:
            base, dh, de = CANONICAL[self.base]
            return LedgerObject(base, self.h + dh, self.e + de, False, self.factor)
        return self

    def twisted(self, h: int, e: int) -> "LedgerObject":
        return LedgerObject(self.base, self.h + h, self.e + e, self.pushforward, self.factor)

    @property
    def key(self) -> tuple[str, int, int, bool]:
        """Membership ignores tensoring with a fixed vector space."""
        return self.base, self.h, self.e, self.pushforward

    def bare(self) -> "LedgerObject":
        return LedgerObject(self.base, self.h, self.e, self.pushforward)

    def __str__(self) -> str:
        tw = twist_text(self.h, self.e)
        s = ("i*" if self.pushforward else "") + self.base + (f"({tw})" if tw else "")
        return f"{self.factor} x {s}" if self.factor else s


def obj(text: str | LedgerObject) -> LedgerObject:
    return text if isinstance(text, LedgerObject) else LedgerObject.parse(text)


@dataclass(frozen=True)
class ExactRelation:
    id: str
    terms: tuple[LedgerObject, ...]
    kind: str = "exact"
    provenance: str = ""
    assumption: str | None = None

    def __post_init__(self) -> None:
        if len(self.terms) < 3:
            raise LedgerError(f"relation {self.id!r} has fewer than 3 terms")
        if self.kind not in ("exact", "split"):
            raise LedgerError(f"relation {self.id!r} has unknown kind {self.kind!r}")

    def twisted(self, h: int, e: int) -> tuple[LedgerObject, ...]:
        return tuple(t.twisted(h, e) for t in self.terms)

    @classmethod
    def from_dict(cls, d: dict) -> "ExactRelation":
        return cls(d["id"], tuple(obj(t) for t in d["terms"]), d.get("kind", "exact"),
                   d.get("provenance", ""), d.get("assumption"))

    def to_dict(self) -> dict:
        d = {"id": self.id, "terms": [str(t) for t in self.terms], "kind": self.kind}
        if self.provenance:
            d["provenance"] = self.provenance
        if self.assumption:
            d["assumption"] = self.assumption
        return d


def seed_memberships() -> frozenset[LedgerObject]:
    """Pullbacks of the collection on X: O, U, U*, L2Q twisted by tH, t = 0..4."""
    return frozenset(LedgerObject(b, t, 0).canonical() for b in SEED_BASES for t in SEED_RANGE)


def in_B(o: LedgerObject) -> bool:
    """Syntactic test for the pushforward block i*(Z-side symbol)(E)."""
    return o.pushforward and o.base in B_BASES and o.e == 1


def apply_blowup_twist(o: LedgerObject, direction: int = 1) -> LedgerObject:
    """i*F(D) <-> i*F(D + 2E): twisting by det N^* (2E) on the divisor."""
    if not o.pushforward:
        raise LedgerError(f"blow-up twist needs a pushforward object, got {o}")
    if direction not in (1, -1):
        raise LedgerError("direction must be +1 or -1")
    return o.twisted(0, 2 * direction)


# Block rules: D^b(LGr(3,6))(2E) and D^b(LGr(3,6))(3E) with their chosen generators,
# written with Hb = H - E.
BLOCKS = {
    "B2": {"pattern": ("Ub.L3Ut", 2), "twists": [(j, 2) for j in range(0, 4)]},
    "B3": {"pattern": ("Ub.L2Ut", 3), "twists": [(j, 3) for j in range(1, 5)]},
}


def block_generators(name: str) -> list[LedgerObject]:
    out = []
    for j, c in BLOCKS[name]["twists"]:
        for base in ("O", "Ub"):
            out.append(LedgerObject(base, j, c - j))
    return out


def block_of(o: LedgerObject) -> str | None:
    for name, b in BLOCKS.items():
        base, c = b["pattern"]
        # (a Hb + c E) = a H + (c - a) E, so h + e recovers the E-coefficient c
        if o.base == base and not o.pushforward and o.h + o.e == c:
            return name
    return None


@dataclass
class StepRecord:
    index: int
    step: str
    target: LedgerObject
    rule: str
    ok: bool
    instance: str = ""
    premises: list[LedgerObject] = field(default_factory=list)
    missing: list[LedgerObject] = field(default_factory=list)
    error: str = ""

    def to_dict(self) -> dict:
        d = {"index": self.index, "step": self.step, "target": str(self.target), "rule": self.rule,
             "ok": self.ok, "instance": self.instance, "premises": [str(p) for p in self.premises]}
        if self.missing:
            d["missing"] = [str(p) for p in self.missing]
        if self.error:
            d["error"] = self.error
        return d


@dataclass
class DeductionResult:
    name: str
    records: list[StepRecord]
    goals: list[tuple[LedgerObject, str]]
    missing_goals: list[tuple[LedgerObject, str]]
    members: dict

    @property
    def failure(self) -> StepRecord | None:
        return next((r for r in self.records if not r.ok), None)

    @property
    def passed(self) -> bool:
        return self.failure is None and not self.missing_goals

    @property
    def derived_goals(self) -> int:
        return len(self.goals) - len(self.missing_goals)

    def failure_message(self) -> str:
        f = self.failure
        if f is not None:
            msg = f"{f.step}: cannot justify {f.target} ({f.rule}{' ' + f.instance if f.instance else ''})"
            if f.missing:
                msg += "; missing premise " + ", ".join(map(str, f.missing))
            if f.error:
                msg += f"; {f.error}"
            return msg
        if self.missing_goals:
            o, step = self.missing_goals[0]
            return f"{step}: target {o} was never derived"
        return ""

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "status": "PASS" if self.passed else "FAIL",
            "steps": [r.to_dict() for r in self.records],
            "goals": len(self.goals),
            "derived_goals": self.derived_goals,
            "missing_goals": [{"object": str(o), "step": s} for o, s in self.missing_goals],
            "failure": self.failure_message() or None,
        }


class Ledger:
    def __init__(self) -> None:
        self.relations: dict[str, ExactRelation] = {}
        self.members: dict[tuple, StepRecord | str] = {}
        self.seeds = seed_memberships()
        self.seed_keys = {s.key for s in self.seeds}
        assert not any(in_B(s) for s in self.seeds)

    def register_relation(self, rel: ExactRelation) -> str:
        old = self.relations.get(rel.id)
        if old is not None and old.terms != rel.terms:
            raise LedgerError(f"relation id {rel.id!r} already registered with different terms")
        self.relations[rel.id] = rel
        return rel.id

    def is_member(self, o: LedgerObject) -> bool:
        return o.key in self.members or in_B(o)

    def _admit(self, rec: StepRecord) -> StepRecord:
        if rec.target in rec.premises or any(p.key == rec.target.key for p in rec.premises):
            rec.ok, rec.error = False, "cyclic justification"
        if rec.ok:
            rec.missing = [p for p in rec.premises if not self.is_member(p)]
            rec.ok = not rec.missing
        if rec.ok:
            self.members.setdefault(rec.target.key, rec)
        return rec

    def step(self, index: int, d: dict) -> StepRecord:
        label = d.get("step", f"#{index}")
        try:
            target = obj(d["target"])
            rule = d["rule"]
        except (KeyError, LedgerError) as exc:
            raise ScriptError(f"step {index} ({label}): {exc}") from None
        rec = StepRecord(index, label, target, rule, True)
        if rule == "seed":
            if target.key not in self.seed_keys:
                rec.ok, rec.error = False, "not a seed"
            else:
                self.members.setdefault(target.key, rec)
            return rec
        if rule == "B":
            if not in_B(target):
                rec.ok, rec.error = False, "not in the pushforward block"
            else:
                self.members.setdefault(target.key, rec)
            return rec
        if rule == "blowup":
            try:
                source = obj(d["source"])
                image = apply_blowup_twist(source, d.get("direction", 1))
            except (KeyError, LedgerError) as exc:
                rec.ok, rec.error = False, str(exc)
                return rec
            rec.premises = [source]
            rec.instance = f"{source} -> {image}"
            if image.key != target.key:
                rec.ok, rec.error = False, f"blow-up twist of {source} is {image}"
                return rec
            return self._admit(rec)
        if rule == "block":
            name = block_of(target)
            if name is None:
                rec.ok, rec.error = False, "target matches no block pattern"
                return rec
            rec.instance = name
            rec.premises = block_generators(name)
            return self._admit(rec)
        if rule == "relation":
            rid = d.get("relation")
            rel = self.relations.get(rid)
            if rel is None:
                rec.ok, rec.error = False, f"unknown relation {rid!r}"
                return rec
            h, e = parse_twist(d.get("twist", ""))
            terms = rel.twisted(h, e)
            rec.instance = f"{rid}" + (f" twisted by {twist_text(h, e)}" if (h or e) else "")
            pos = [i for i, t in enumerate(terms) if t.key == target.key]
            if not pos:
                rec.ok, rec.error = False, f"target is not a term of {rec.instance}"
                return rec
            rec.premises = [t.bare() for i, t in enumerate(terms) if i != pos[0]]
            return self._admit(rec)
        rec.ok, rec.error = False, f"unknown rule {rule!r}"
        return rec


def load_script(path: str | Path) -> dict:
    text = Path(path).read_text()
    try:
        data = json.loads(text) if text.strip() else {}
    except json.JSONDecodeError as exc:
        raise ScriptError(f"{path}: line {exc.lineno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise ScriptError(f"{path}: top level must be an object")
    return data


def replay(script: dict | str | Path) -> DeductionResult:
    """Run a proof script and stop at the first unjustified step."""
    if not isinstance(script, dict):
        script = load_script(script)
    led = Ledger()
    try:
        for r in script.get("relations", []):
            led.register_relation(ExactRelation.from_dict(r))
        goals = [(obj(g["object"]), g.get("step", "")) for g in script.get("goals", [])]
    except (KeyError, TypeError, LedgerError) as exc:
        raise ScriptError(str(exc)) from None
    records = []
    for i, d in enumerate(script.get("steps", [])):
        if not isinstance(d, dict):
            raise ScriptError(f"step {i} is not an object")
        rec = led.step(i, d)
        records.append(rec)
        if not rec.ok:
            break
    missing = [(o, s) for o, s in goals if not led.is_member(o)]
    return DeductionResult(script.get("name", ""), records, goals, missing, led.members)


DATA = Path(__file__).parent / "data" / "scripts"
BUNDLED = DATA / "igr37-fullness.json"


def bundled_script() -> dict:
    return load_script(BUNDLED)
