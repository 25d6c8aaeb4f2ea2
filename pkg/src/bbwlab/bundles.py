"""Symbolic equivariant bundles on a Grassmannian and their decomposition.

An expression normalizes to a multiset of pairs ``(a, b)`` standing for
Sigma^a U* (x) Sigma^b Q*.  Text syntax (used by the CLI and scenario files)::

    expr   := term ('+' term)*
    term   := factor ('*' factor)*
    factor := 'wedge^' INT factor | 'sym^' INT factor
            | 'schur[' INT (',' INT)* ']' factor | 'dual' factor | atom
    atom   := 'U' | 'Ud' | 'Q' | 'Qd' | 'O' [ '(' INT ')' ] | '(' expr ')'
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .partitions import Weight, WeightError, dominant, dual_negate, partitions_of, is_dominant
from .schur import det_shift, lr_tensor, tensor, wedge_of_wedge_square, weyl_dimension

Pair = tuple[Weight, Weight]
Terms = dict[Pair, int]


class BundleError(ValueError):
    pass


class UnsupportedPlethysm(BundleError):
    pass


class BundleExpr:
    def __add__(self, other: "BundleExpr") -> "BundleExpr":
        return Sum(self, other)

    def __mul__(self, other: "BundleExpr") -> "BundleExpr":
        return Tensor(self, other)

    def dual(self) -> "BundleExpr":
        return Dual(self)

    def twist(self, t: int) -> "BundleExpr":
        return self if t == 0 else Tensor(self, Line(t))

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True, eq=True)
class Gen(BundleExpr):
    name: str  # U, Ud, Q, Qd

    def to_text(self) -> str:
        return self.name


@dataclass(frozen=True)
class Line(BundleExpr):
    t: int

    def to_text(self) -> str:
        return "O" if self.t == 0 else f"O({self.t})"


@dataclass(frozen=True)
class Schur(BundleExpr):
    weight: Weight
    arg: BundleExpr

    def to_text(self) -> str:
        w = self.weight
        if w and all(x == 1 for x in w):
            head = f"wedge^{len(w)}"
        elif len(w) == 1 and w[0] > 0:
            head = f"sym^{w[0]}"
        else:
            head = "schur[" + ",".join(str(x) for x in w) + "]"
        return f"{head} {_wrap(self.arg)}"


@dataclass(frozen=True)
class Tensor(BundleExpr):
    left: BundleExpr
    right: BundleExpr

    def to_text(self) -> str:
        parts = []
        for side in (self.left, self.right):
            parts.append(f"({side.to_text()})" if isinstance(side, Sum) else side.to_text())
        return " * ".join(parts)


@dataclass(frozen=True)
class Sum(BundleExpr):
    left: BundleExpr
    right: BundleExpr

    def to_text(self) -> str:
        return f"{self.left.to_text()} + {self.right.to_text()}"


@dataclass(frozen=True)
class Dual(BundleExpr):
    arg: BundleExpr

    def to_text(self) -> str:
        return f"dual {_wrap(self.arg)}"


def _wrap(e: BundleExpr) -> str:
    if isinstance(e, (Gen, Line)):
        return e.to_text()
    return f"({e.to_text()})"


U, Ud, Q, Qd = Gen("U"), Gen("Ud"), Gen("Q"), Gen("Qd")
O = Line(0)


def wedge(k: int, e: BundleExpr) -> BundleExpr:
    return Line(0) if k == 0 else Schur((1,) * k, e)


def sym(k: int, e: BundleExpr) -> BundleExpr:
    return Line(0) if k == 0 else Schur((k,), e)


# --- parsing ---------------------------------------------------------------

class ParseError(BundleError):
    def __init__(self, text: str, pos: int, expected: list[str]):
        self.text, self.pos, self.expected = text, pos, expected
        super().__init__(f"parse error at position {pos} in {text!r}: expected {' or '.join(expected)}")


_TOKEN = re.compile(r"\s*(wedge\^|sym\^|schur\[|dual|Ud|Qd|U|Q|O|-?\d+|[()+*,\]])")


def _tokenize(text: str) -> list[tuple[str, int]]:
    toks = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(text, start, ["a token"])
        toks.append((m.group(1), m.start(1)))
        pos = m.end()
    return toks


def parse(text: str) -> BundleExpr:
    toks = _tokenize(text)
    i = 0

    def peek() -> str | None:
        return toks[i][0] if i < len(toks) else None

    def here() -> int:
        return toks[i][1] if i < len(toks) else len(text)

    def take(expected: list[str]) -> str:
        nonlocal i
        tok = peek()
        if tok is None or (expected and tok not in expected):
            raise ParseError(text, here(), expected)
        i += 1
        return tok

    def integer() -> int:
        tok = peek()
        if tok is None or not re.fullmatch(r"-?\d+", tok):
            raise ParseError(text, here(), ["an integer"])
        take([])
        return int(tok)

    def expr() -> BundleExpr:
        e = term()
        while peek() == "+":
            take(["+"])
            e = Sum(e, term())
        return e

    def term() -> BundleExpr:
        e = factor()
        while peek() == "*":
            take(["*"])
            e = Tensor(e, factor())
        return e

    def factor() -> BundleExpr:
        tok = peek()
        if tok == "wedge^":
            take([tok])
            k = integer()
            if k < 0:
                raise ParseError(text, here(), ["a nonnegative exponent"])
            return wedge(k, factor())
        if tok == "sym^":
            take([tok])
            k = integer()
            if k < 0:
                raise ParseError(text, here(), ["a nonnegative exponent"])
            return sym(k, factor())
        if tok == "schur[":
            take([tok])
            w = [integer()]
            while peek() == ",":
                take([","])
                w.append(integer())
            take(["]"])
            if not is_dominant(w):
                raise ParseError(text, here(), ["a weakly decreasing weight"])
            return Schur(tuple(w), factor())
        if tok == "dual":
            take([tok])
            return Dual(factor())
        return atom()

    def atom() -> BundleExpr:
        tok = peek()
        if tok in ("U", "Ud", "Q", "Qd"):
            take([tok])
            return Gen(tok)
        if tok == "O":
            take(["O"])
            if peek() == "(":
                take(["("])
                t = integer()
                take([")"])
                return Line(t)
            return Line(0)
        if tok == "(":
            take(["("])
            e = expr()
            take([")"])
            return e
        raise ParseError(text, here(), ["U", "Ud", "Q", "Qd", "O", "(", "wedge^", "sym^", "schur[", "dual"])

    if not toks:
        raise ParseError(text, 0, ["an expression"])
    e = expr()
    if i != len(toks):
        raise ParseError(text, here(), ["'+'", "'*'", "end of input"])
    return e


# --- normalization ---------------------------------------------------------

def _add(out: Terms, key: Pair, m: int) -> None:
    if m:
        out[key] = out.get(key, 0) + m


def normalize(expr: BundleExpr, k: int, r: int) -> Terms:
    """Decompose ``expr`` on a Grassmannian with rank-k sub and rank-r quotient
    bundle into irreducible pairs (U*-weight, Q*-weight)."""
    zk, zr = (0,) * k, (0,) * r
    if isinstance(expr, Gen):
        table = {
            "U": (zk[:-1] + (-1,), zr),
            "Ud": ((1,) + zk[1:], zr),
            "Q": (zk, zr[:-1] + (-1,)),
            "Qd": (zk, (1,) + zr[1:]),
        }
        if r == 0 and expr.name in ("Q", "Qd"):
            return {}
        return {table[expr.name]: 1}
    if isinstance(expr, Line):
        return {((expr.t,) * k, zr): 1}
    if isinstance(expr, Sum):
        out = dict(normalize(expr.left, k, r))
        for key, m in normalize(expr.right, k, r).items():
            _add(out, key, m)
        return out
    if isinstance(expr, Dual):
        return {(dual_negate(a), dual_negate(b)): m for (a, b), m in normalize(expr.arg, k, r).items()}
    if isinstance(expr, Tensor):
        return tensor_terms(normalize(expr.left, k, r), normalize(expr.right, k, r))
    if isinstance(expr, Schur):
        return plethysm(expr.weight, normalize(expr.arg, k, r), k, r)
    raise TypeError(f"not a bundle expression: {expr!r}")


def tensor_terms(x: Terms, y: Terms) -> Terms:
    out: Terms = {}
    for ((a1, b1), m1), ((a2, b2), m2) in product(x.items(), y.items()):
        ta = tensor(a1, a2) if a1 else None
        tb = tensor(b1, b2) if b1 else None
        for a, ma in (ta.items() if ta is not None else [((), 1)]):
            for b, mb in (tb.items() if tb is not None else [((), 1)]):
                _add(out, (a, b), m1 * m2 * ma * mb)
    return out


def rank(terms: Terms) -> int:
    return sum(m * weyl_dimension(a) * weyl_dimension(b) for (a, b), m in terms.items())


def _is_det(w: Weight) -> bool:
    return len(set(w)) <= 1


def _fit(lam: Weight, m: int) -> Weight | None:
    """Bring a Schur-functor weight to length m; None means the functor vanishes."""
    if len(lam) == m:
        return lam
    if lam and lam[-1] < 0:
        raise BundleError(f"weight {lam} with negative entries must have length {m}")
    if len(lam) < m:
        return lam + (0,) * (m - len(lam))
    if any(lam[m:]):
        return None
    return lam[:m]


def _scale(lam: Weight) -> int:
    return sum(lam)


def plethysm(lam: Weight, terms: Terms, k: int, r: int) -> Terms:
    """Sigma^lam applied to the bundle ``terms``.

    Supported: sums (via Littlewood-Richardson coefficients), line bundles, the
    (co)standard representations of U or Q up to a line-bundle twist, and
    exterior powers of Lambda^2 of those.
    """
    lam = dominant(lam)
    zk, zr = (0,) * k, (0,) * r
    if not any(lam):
        return {(zk, zr): 1}
    if not terms:
        return {}
    items = [key for key, m in terms.items() for _ in range(m)]
    if len(items) > 1:
        if lam[-1] < 0:
            raise UnsupportedPlethysm("Schur functor with negative weight on a reducible bundle")
        first = {items[0]: 1}
        rest: Terms = {}
        for key in items[1:]:
            _add(rest, key, 1)
        return _plethysm_sum(lam, first, rest, k, r)
    (a, b), = items
    if _is_det(a) and _is_det(b):
        fitted = _fit(lam, 1)
        if fitted is None:
            return {}
        s = fitted[0]
        return {(tuple(x * s for x in a), tuple(x * s for x in b)): 1}
    s = _scale(lam)
    for side in ("U", "Q"):
        main, other, m = (a, b, k) if side == "U" else (b, a, r)
        if not _is_det(other):
            continue
        lo, hi = det_shift(main, -main[-1]), det_shift(main, -main[0])
        kinds = []
        if lo == (1,) + (0,) * (m - 1):
            kinds.append(("std", main[-1]))
        if hi == (0,) * (m - 1) + (-1,):
            kinds.append(("costd", main[0]))
        if m >= 2 and lo == (1, 1) + (0,) * (m - 2):
            kinds.append(("wedge2", main[-1]))
        if m >= 2 and hi == (0,) * (m - 2) + (-1, -1):
            kinds.append(("cowedge2", main[0]))
        o = tuple(x * s for x in other)
        for kind, twist in kinds:
            if kind in ("std", "costd"):
                fitted = _fit(lam, m)
                if fitted is None:
                    return {}
                w = fitted if kind == "std" else dual_negate(fitted)
                w = det_shift(w, twist * s)
                return {((w, o) if side == "U" else (o, w)): 1}
            if not all(x in (0, 1) for x in lam):
                continue
            j = s
            out: Terms = {}
            if j > m * (m - 1) // 2:
                return out
            for nu in wedge_of_wedge_square(j, m):
                w = nu if kind == "wedge2" else dual_negate(nu)
                _add(out, ((det_shift(w, twist * j), o) if side == "U" else (o, det_shift(w, twist * j))), 1)
            return out
    raise UnsupportedPlethysm(f"Sigma^{lam} of the irreducible bundle {(a, b)} is not supported")


def _sub_diagrams(lam: Weight) -> Iterator[Weight]:
    """Diagrams contained in lam, same length."""
    def rec(i: int, cap: int) -> Iterator[list[int]]:
        if i == len(lam):
            yield []
            return
        for x in range(min(cap, lam[i]), -1, -1):
            for rest in rec(i + 1, x):
                yield [x] + rest
    for d in rec(0, lam[0] if lam else 0):
        yield tuple(d)


def _plethysm_sum(lam: Weight, x: Terms, y: Terms, k: int, r: int) -> Terms:
    # Sigma^lam(X + Y) = sum_{mu, nu} c^lam_{mu nu} Sigma^mu X (x) Sigma^nu Y
    out: Terms = {}
    total = sum(lam)
    L = len(lam)
    for mu in _sub_diagrams(lam):
        rem = total - sum(mu)
        for nu in partitions_of(rem, L):
            if any(n > l for n, l in zip(nu, lam)):
                continue
            c = lr_tensor(mu, nu)[lam]
            if not c:
                continue
            px = plethysm(mu, x, k, r)
            py = plethysm(nu, y, k, r)
            for key, m in tensor_terms(px, py).items():
                _add(out, key, c * m)
    return out
