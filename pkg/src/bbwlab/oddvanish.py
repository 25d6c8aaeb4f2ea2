"""Cohomology on odd isotropic Grassmannians through Koszul resolutions.

X = IGr(k, 2n+1) is cut out of Gr(k, 2n+1) by a regular section of
Lambda^2 U*, and (for k = n) out of IGr(n, 2n+2) by a regular section of U*.
Tensoring a bundle with either Koszul resolution and running BBW on every
irreducible summand gives, per Koszul index s, an E1 page.  Only two things are
ever concluded from it: vanishing (every leaf zero) and exact cohomology when
all nonzero leaves sit at one index s, so no differential can act.  A term at
index s computing H^q on the ambient space lands in degree q - s on X.
"""

from __future__ import annotations

from .bbw import Family, GrassmannianSpec, Kind, SpecError, bbw_gr, sp_acyclic
from .bundles import BundleExpr, Pair, normalize, parse
from .certificate import Certificate, Leaf, Verdict
from .partitions import Weight, dominant, dual_negate
from .schur import WeightMultiset, pieri_col, tensor, wedge_of_wedge_square

GR_ROUTE = "gr-koszul"
EVEN_ROUTE = "even-koszul"

# The zero-locus embedding used for the submaximal vanishing lemma goes into
# IGr(n, 2n+2); this is what the section of U* construction supports.
EVEN_AMBIENT_NOTE = "even route embeds IGr(n,2n+1) into IGr(n,2n+2) (not IGr(2,2n+2))"


def _require_odd(spec: GrassmannianSpec) -> None:
    if spec.family is not Family.IGR_ODD:
        raise SpecError(f"{spec} is not an odd isotropic Grassmannian")


def koszul_terms_gr(spec: GrassmannianSpec) -> list[WeightMultiset]:
    """Lambda^s(Lambda^2 U) for s = 0..k(k-1)/2, as U-side diagrams."""
    _require_odd(spec)
    k = spec.k
    return [wedge_of_wedge_square(s, k) for s in range(k * (k - 1) // 2 + 1)]


def koszul_terms_even(spec: GrassmannianSpec) -> list[WeightMultiset]:
    """Lambda^p U for p = 0..n on IGr(n, 2n+2), as U-side diagrams (1^p)."""
    _require_odd(spec)
    n = spec.ambient // 2
    if spec.k != n:
        raise SpecError("the even embedding is only used for k = n")
    return [WeightMultiset(n, {(1,) * p + (0,) * (n - p): 1}) for p in range(n + 1)]


def _gr_summand(spec: GrassmannianSpec, a: Weight, b: Weight, mult: int) -> Certificate:
    gr = spec.ambient_gr()
    leaves: list[Leaf] = []
    for s, term in enumerate(koszul_terms_gr(spec)):
        for nu in term:
            for c, mc in tensor(a, dual_negate(nu)).items():
                leaves.append(Leaf(s, c, b, mult * mc, bbw_gr(gr, c, b), str(gr)))
    node = Certificate(claim=f"H*({spec}, Sigma^{a} U* x Sigma^{b} Q*)", verdict=Verdict.ACYCLIC,
                       route=GR_ROUTE, leaves=leaves)
    node.euler = sum((-1) ** leaf.s * leaf.multiplicity * leaf.outcome.euler() for leaf in leaves)
    live = [leaf for leaf in leaves if leaf.nonzero]
    if live:
        indices = {leaf.s for leaf in live}
        node.verdict = Verdict.DETERMINED if len(indices) == 1 else Verdict.INCONCLUSIVE
        if len(indices) == 1:
            node.cohomology = _graded(live)
    return node


def _graded(live: list[Leaf]) -> dict[int, int]:
    out: dict[int, int] = {}
    for leaf in live:
        for q, (_, dim) in leaf.outcome.degrees.items():
            deg = q - leaf.s
            out[deg] = out.get(deg, 0) + leaf.multiplicity * dim
    return out


def certify_acyclic_submaximal(n: int, lam) -> Certificate:
    """Certify acyclicity of Sigma^lam U* on IGr(n, 2n+1) via IGr(n, 2n+2).

    Every summand of Sigma^lam U* (x) Lambda^p U, p = 0..n, is tested with the
    symplectic zero-or-collision criterion; a single UNKNOWN leaf makes the
    certificate INCONCLUSIVE.
    """
    lam = dominant(lam)
    if len(lam) != n:
        raise SpecError(f"weight {lam} does not have length {n}")
    Y = GrassmannianSpec.igr(n, 2 * n + 2)
    leaves = []
    for p in range(n + 1):
        for w, m in pieri_col(dual_negate(lam), p).items():
            alpha = dual_negate(w)
            leaves.append(Leaf(p, alpha, (), m, sp_acyclic(Y, alpha), str(Y)))
    ok = all(leaf.outcome.kind is Kind.CERTIFIED_ACYCLIC for leaf in leaves)
    return Certificate(
        claim=f"H*(IGr({n},{2 * n + 1}), Sigma^{lam} U*) = 0",
        verdict=Verdict.ACYCLIC if ok else Verdict.INCONCLUSIVE,
        route=EVEN_ROUTE,
        leaves=leaves,
        notes=[EVEN_AMBIENT_NOTE],
    )


def check_main_conditions(n: int, lam, variant: str) -> bool:
    """Hypotheses of the submaximal vanishing lemmas.

    even: lam_n < 0, lam_1 >= -(n+2), consecutive gaps <= 3 (on IGr(n, 2n+2));
    odd:  lam_n < 0, lam_1 >= -(n+1), consecutive gaps <= 2 (on IGr(n, 2n+1)).
    """
    lam = dominant(lam)
    if len(lam) != n:
        raise SpecError(f"weight {lam} does not have length {n}")
    if variant == "even":
        bound, gap = n + 2, 3
    elif variant == "odd":
        bound, gap = n + 1, 2
    else:
        raise ValueError("variant must be 'even' or 'odd'")
    return (lam[-1] < 0 and lam[0] >= -bound
            and all(lam[i] - lam[i + 1] <= gap for i in range(n - 1)))


def cohomology_on_X(spec: GrassmannianSpec, expr: BundleExpr | str, claim: str | None = None) -> Certificate:
    """Cohomology of ``expr`` on the odd isotropic Grassmannian ``spec``.

    One child node per irreducible summand on Gr(k, 2n+1), each holding its
    BBW leaves for every Koszul index.  The Euler characteristic is always
    exact; graded cohomology is reported only when all nonzero leaves of the
    whole computation share one Koszul index.
    """
    _require_odd(spec)
    if isinstance(expr, str):
        expr = parse(expr)
    terms = normalize(expr, spec.k, spec.quotient_rank)
    root = Certificate(claim=claim or f"H*({spec}, {expr.to_text()})", verdict=Verdict.ACYCLIC,
                       route=GR_ROUTE)
    for (a, b), m in sorted(terms.items(), reverse=True):
        root.children.append(_gr_summand(spec, a, b, m))
    root.euler = sum(c.euler for c in root.children)
    live = [leaf for leaf in root.all_leaves() if leaf.nonzero]
    indices = sorted({leaf.s for leaf in live})
    if len(indices) == 1:
        root.verdict = Verdict.DETERMINED
        root.cohomology = _graded(live)
    elif len(indices) > 1:
        root.verdict = Verdict.INCONCLUSIVE
        root.notes.append("nonzero terms at Koszul indices " + ", ".join(map(str, indices)))
    _assert_gate(root)
    return root


def _assert_gate(root: Certificate) -> None:
    if root.verdict is Verdict.DETERMINED:
        live = {leaf.s for leaf in root.all_leaves() if leaf.nonzero}
        assert len(live) == 1, "determined verdict with nonzero terms at several Koszul indices"


def pair_text(p: Pair) -> str:
    a, b = p
    return f"Sigma^{a} U* x Sigma^{b} Q*"
