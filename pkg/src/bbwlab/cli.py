"""Command-line front end.

Exit codes: 0 pass (or determined/acyclic), 1 input error, 2 fail or inconclusive.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .bbw import Family, GrassmannianSpec, Kind, SpecError, bbw_gr, sp_acyclic
from .bundles import BundleError, ParseError, normalize, parse
from .certificate import Certificate, Leaf, Verdict
from .ktheory import euler_char
from .lefschetz import Status
from .ledger import LedgerError, replay
from .oddvanish import cohomology_on_X
from .scenarios import ScenarioError, ScenarioResult, available, run_scenario

EXIT = {Status.PASS: 0, Status.FAIL: 2, Status.INCONCLUSIVE: 2}


class InputError(ValueError):
    pass


def cohomology_certificate(spec: GrassmannianSpec, text: str) -> Certificate:
    expr = parse(text)
    claim = f"H*({spec}, {expr.to_text()})"
    if spec.family is Family.IGR_ODD:
        return cohomology_on_X(spec, expr, claim=claim)
    terms = normalize(expr, spec.k, spec.quotient_rank)
    root = Certificate(claim=claim, verdict=Verdict.ACYCLIC, route="bbw")
    if spec.family is Family.GR:
        for (a, b), m in sorted(terms.items(), reverse=True):
            out = bbw_gr(spec, a, b)
            root.leaves.append(Leaf(0, a, b, m, out, str(spec)))
            for deg, (_, dim) in out.degrees.items():
                root.cohomology[deg] = root.cohomology.get(deg, 0) + m * dim
        root.euler = sum(leaf.multiplicity * leaf.outcome.euler() for leaf in root.leaves)
        if root.cohomology:
            root.verdict = Verdict.DETERMINED
        return root
    # even isotropic Grassmannian: one-sided test on U-side summands only
    root.route = "sp-acyclic"
    for (a, b), m in sorted(terms.items(), reverse=True):
        if any(b):
            raise InputError("only expressions in U, Ud and O are supported on IGr(k,2n)")
        root.leaves.append(Leaf(0, a, b, m, sp_acyclic(spec, a), str(spec)))
    if any(leaf.outcome.kind is Kind.UNKNOWN for leaf in root.leaves):
        root.verdict = Verdict.INCONCLUSIVE
        root.notes.append("the acyclicity criterion is sufficient only; no cohomology is claimed")
    return root


def cmd_cohomology(args) -> ScenarioResult:
    start = time.perf_counter()
    spec = GrassmannianSpec.parse(args.space)
    cert = cohomology_certificate(spec, args.expr)
    if spec.family is Family.IGR_ODD:
        assert cert.euler == euler_char(spec, args.expr)
    status = Status.INCONCLUSIVE if cert.verdict is Verdict.INCONCLUSIVE else Status.PASS
    msgs = [cert.summary()]
    if cert.euler is not None:
        msgs.append(f"Euler characteristic: {cert.euler}")
    msgs.extend(cert.notes)
    return ScenarioResult(f"cohomology {spec.to_text()} {args.expr}", status, cert.to_dict(),
                          time.perf_counter() - start, msgs)


def cmd_verify(args) -> ScenarioResult:
    return run_scenario(args.scenario, full=args.json)


def cmd_replay(args) -> ScenarioResult:
    start = time.perf_counter()
    res = replay(args.script)
    msgs = [f"{len(res.records)} steps, {res.derived_goals} of {len(res.goals)} targets derived"]
    if not res.passed:
        msgs.insert(0, "FAIL at " + res.failure_message())
    status = Status.PASS if res.passed else Status.FAIL
    return ScenarioResult(f"replay {args.script}", status, res.to_dict(), time.perf_counter() - start, msgs)


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        # usage errors are input errors: exit 1, keeping 2 for fail/inconclusive
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="bbwlab", description="Bundle cohomology and exceptional-collection checks.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--quiet", action="store_true", help="print only the verdict line")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("cohomology", parents=[common], help="cohomology of a bundle expression")
    c.add_argument("--space", required=True, help="family:k:n, e.g. igr:3:7 or gr:2:5")
    c.add_argument("expr", help="bundle expression, e.g. 'wedge^2 Q * O(-1)'")
    c.set_defaults(func=cmd_cohomology)

    v = sub.add_parser("verify", parents=[common], help="run a named scenario or scenario file")
    v.add_argument("scenario")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("replay", parents=[common], help="replay a fullness proof script")
    r.add_argument("script")
    r.set_defaults(func=cmd_replay)

    ls = sub.add_parser("list", help="list the bundled scenarios")
    ls.set_defaults(func=None)
    return p


def emit(result: ScenarioResult, args) -> None:
    if args.json:
        print(json.dumps(result.to_dict(), indent=1, sort_keys=True))
        return
    print(f"{result.id}: {result.verdict.value}")
    if not args.quiet:
        for m in result.messages:
            print(f"  {m}")
        table = result.payload.get("table")
        if table:
            print(table)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    if args.command == "list":
        print("\n".join(available()))
        return 0
    try:
        result = args.func(args)
    except (ParseError, SpecError, BundleError, ScenarioError, LedgerError, InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    emit(result, args)
    return EXIT[result.verdict]


if __name__ == "__main__":
    sys.exit(main())
