"""Named generators of HH*(R), products of them, the relation ideal and the
table of Delta on generators and pairwise products.

Expressions over the generators (``"q1^2 + w1 + d*(p1+1)*w2"``) are parsed
into :class:`GenPoly`, a commutative polynomial in the generator names with
GF(2)[d] coefficients.  Cohomology is graded-commutative and signs vanish,
so commutative bookkeeping is enough; products are evaluated by cup
products in catalog order.
"""

from __future__ import annotations

import json
import re
from functools import lru_cache
from importlib import resources
from itertools import combinations, combinations_with_replacement

from .algebra import AlgElem
from .bv import (
    Cochain,
    _vector,
    coboundary_matrix,
    cup,
    delta,
    is_coboundary,
)
from .coeff import PolyF2, poly_compose, poly_mul, poly_str
from .linsolve import solve_poly
from .notation import parse_alg

# name -> (degree, values on the generators of P_degree)
GENERATORS: dict[str, tuple[int, tuple[str, ...]]] = {
    "p1": (0, ("xy+yx",)),
    "p2": (0, ("xyx",)),
    "p3": (0, ("yxy",)),
    "p4": (0, ("xyxy",)),
    "q1": (1, ("y", "1+d*y+xy")),
    "q2": (1, ("1+yx", "d*xy+x")),
    "w1": (2, ("x", "0")),
    "w2": (2, ("0", "y")),
    "w3": (2, ("y", "x+d*xy")),
    "e": (4, ("1",)),
}
NAMES = tuple(GENERATORS)
_ORDER = {n: i for i, n in enumerate(NAMES)}


@lru_cache(maxsize=None)
def generator(name: str) -> Cochain:
    """The cocycle representing a named generator."""
    try:
        deg, vals = GENERATORS[name]
    except KeyError:
        raise ValueError(f"unknown generator {name!r}; expected one of {', '.join(NAMES)}") from None
    return Cochain.from_values(deg, *(parse_alg(v) for v in vals))


def unit() -> Cochain:
    return Cochain.from_values(0, AlgElem.scalar(1))


# -- polynomials in the generators ------------------------------------------------------

Monomial = tuple  # sorted tuple of generator names, with repetition


def _mono_degree(m: Monomial) -> int:
    return sum(GENERATORS[g][0] for g in m)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(sorted(a + b, key=_ORDER.__getitem__))


class GenPoly:
    """Sum of monomials in the generators with GF(2)[d] coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def const(cls, c: PolyF2) -> "GenPoly":
        return cls({(): c})

    @classmethod
    def gen(cls, name: str) -> "GenPoly":
        if name not in GENERATORS:
            raise ValueError(f"unknown generator {name!r}")
        return cls({(name,): 1})

    def __add__(self, other: "GenPoly") -> "GenPoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) ^ c
        return GenPoly(out)

    def __mul__(self, other: "GenPoly") -> "GenPoly":
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) ^ poly_mul(c1, c2)
        return GenPoly(out)

    def __eq__(self, other):
        return isinstance(other, GenPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int | None:
        """Common cohomological degree of the monomials (``None`` for 0)."""
        degs = {_mono_degree(m) for m in self.terms}
        if len(degs) > 1:
            raise ValueError(f"inhomogeneous expression {self}: degrees {sorted(degs)}")
        return degs.pop() if degs else None

    def substitute(self, q: PolyF2) -> "GenPoly":
        return GenPoly({m: poly_compose(c, q) for m, c in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (len(m), [_ORDER[g] for g in m])):
            c = self.terms[m]
            mono = _mono_str(m)
            cs = poly_str(c).replace(" ", "")
            if not mono:
                parts.append(cs)
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"({cs})*{mono}" if "+" in cs else f"{cs}*{mono}")
        return " + ".join(parts)

    __repr__ = __str__


def _mono_str(m: Monomial) -> str:
    out = []
    i = 0
    while i < len(m):
        j = i
        while j < len(m) and m[j] == m[i]:
            j += 1
        out.append(m[i] if j - i == 1 else f"{m[i]}^{j - i}")
        i = j
    return "*".join(out)


_TOKEN = re.compile(r"\s*(?:([pqw]\d+|e|d)|(\d+)|([-+*^()]))")


def parse_expr(text: str) -> GenPoly:
    """Parse a product/sum expression over the generator names.

    Grammar: sums with ``+``, products with ``*`` (or juxtaposition), powers
    ``^n``, parentheses, the scalar ``d`` and the constants ``0``/``1``.
    Every monomial is degree-checked; sums of different degrees are rejected.
    """
    toks = []
    pos = 0
    stripped = text.rstrip()
    while pos < len(stripped):
        m = _TOKEN.match(stripped, pos)
        if not m:
            raise ValueError(f"cannot parse {text!r} at position {pos}")
        name, num, op = m.groups()
        toks.append(("name", name) if name else ("num", int(num)) if num else (op, op))
        pos = m.end()
    if not toks:
        raise ValueError("empty expression")
    i = 0

    def peek():
        return toks[i][0] if i < len(toks) else None

    def take(kind):
        nonlocal i
        if peek() != kind:
            raise ValueError(f"expected {kind!r} in {text!r}")
        i += 1
        return toks[i - 1][1]

    def expr():
        val = term()
        while peek() in ("+", "-"):
            take(peek())
            val = val + term()
        return val

    def term():
        val = power()
        while peek() in ("*", "name", "num", "("):
            if peek() == "*":
                take("*")
            val = val * power()
        return val

    def power():
        val = atom()
        if peek() == "^":
            take("^")
            n = take("num")
            out = GenPoly.const(1)
            for _ in range(n):
                out = out * val
            val = out
        return val

    def atom():
        k = peek()
        if k == "(":
            take("(")
            v = expr()
            take(")")
            return v
        if k == "num":
            n = take("num")
            if n not in (0, 1):
                raise ValueError(f"only the constants 0 and 1 are allowed, got {n}")
            return GenPoly.const(n)
        name = take("name")
        if name == "d":
            return GenPoly.const(2)
        if name not in GENERATORS:
            raise ValueError(f"unknown generator {name!r} in {text!r}")
        return GenPoly.gen(name)

    val = expr()
    if i != len(toks):
        raise ValueError(f"trailing input in {text!r}")
    val.degree()  # raises on inhomogeneous sums
    return val


@lru_cache(maxsize=None)
def monomial_cochain(m: Monomial) -> Cochain:
    """Cup product of the generators in ``m`` (left to right)."""
    if not m:
        return unit()
    if len(m) == 1:
        return generator(m[0])
    return cup(monomial_cochain(m[:-1]), generator(m[-1]))


def evaluate(expr, degree: int | None = None, subst: PolyF2 | None = None) -> Cochain:
    """Representative cocycle of an expression (string or :class:`GenPoly`).

    ``degree`` is needed only for the zero expression.  With ``subst`` every
    coefficient, including those of the representatives, has ``d`` replaced
    by the polynomial ``subst``.
    """
    p = parse_expr(expr) if isinstance(expr, str) else expr
    deg = p.degree()
    if deg is None:
        if degree is None:
            raise ValueError("the zero expression needs an explicit degree")
        deg = degree
    elif degree is not None and degree != deg:
        raise ValueError(f"expression {p} has degree {deg}, expected {degree}")
    out = Cochain.zero(deg)
    for m, c in p.terms.items():
        rep = monomial_cochain(m)
        if subst is None:
            out = out + rep.scale(c)
        else:
            out = out + rep.substitute(subst).scale(poly_compose(c, subst))
    return out


# -- the relation ideal ------------------------------------------------------------------

def _pairs(names):
    return [f"{a}*{b}" for a, b in combinations_with_replacement(names, 2)]


RELATIONS: dict[int, list[str]] = {
    0: _pairs(("p1", "p2", "p3", "p4")),
    1: ["p3*q1 + p2*q2", "p1*q1 + d*p3*q1 + p3*q2", "p1*q2 + p2*q1"],
    2: ["p2*w1", "p4*w1", "p3*w2", "p4*w2", "p4*w3",
        "p1*w1 + p2*w2", "p1*w1 + p3*w3", "p1*w1 + p4*q1^2",
        "p3*w1 + p1*w2", "p3*w1 + p2*w3", "p3*w1 + p4*q2^2",
        "q1*q2", "p1*w3 + d*p2*w2"],
    3: ["q1*w1 + q2*w2", "q1^3 + q2^3",
        "q1*w1 + q2*w1 + q1*w3 + p1*q1*w1",
        "q1*w1 + q1*w2 + q2*w3 + p1*q1*w1"],
    4: _pairs(("w1", "w2", "w3")),
}


def check_ideal_relations(degrees=None) -> list[dict]:
    """Evaluate every relation on representatives.

    Returns one record per relation with ``zero`` (the representative is the
    zero cochain), ``coboundary`` (its class vanishes) and the mode reported
    by :func:`~hhbv.bv.is_coboundary`.
    """
    out = []
    for deg, rels in RELATIONS.items():
        if degrees is not None and deg not in degrees:
            continue
        for rel in rels:
            f = evaluate(rel)
            res = is_coboundary(f) if f.degree else None
            ok = f.is_zero() or bool(res)
            out.append({"relation": rel, "degree": f.degree, "zero": f.is_zero(),
                        "coboundary": ok, "mode": res.mode if res is not None else "symbolic"})
    return out


# -- the Delta table -----------------------------------------------------------------------

@lru_cache(maxsize=None)
def reference_table() -> dict[Monomial, GenPoly]:
    """The reference Delta values shipped in ``data/reference_delta.json``,
    keyed by input monomial; inputs not listed are 0."""
    text = resources.files("hhbv").joinpath("data/reference_delta.json").read_text()
    data = json.loads(text)
    table = {}
    for item in data["entries"]:
        key = parse_expr(item["input"])
        (m,) = key.terms
        table[m] = parse_expr(item["delta"])
    return table


def table_inputs() -> list[Monomial]:
    """Each generator, then each product ``ab`` with ``a, b`` generators
    (products with 1 are the generators themselves)."""
    return [(n,) for n in NAMES] + [tuple(p) for p in combinations_with_replacement(NAMES, 2)]


def monomials_of_degree(n: int, max_len: int = 3) -> list[Monomial]:
    out = [()] if n == 0 else []
    for k in range(1, max_len + 1):
        for m in combinations_with_replacement(NAMES, k):
            if _mono_degree(m) == n:
                out.append(m)
    return out


def same_class(f: Cochain, g: Cochain, subst: PolyF2 | None = None) -> bool:
    diff = f + g
    if diff.is_zero():
        return True
    if f.degree == 0:
        return False
    return bool(is_coboundary(diff, subst=subst))


def find_normal_form(f: Cochain, subst: PolyF2 | None = None) -> GenPoly | None:
    """Some expression in monomials of at most three generators whose
    representative is cohomologous to ``f`` (``None`` if there is none)."""
    n = f.degree
    monos = monomials_of_degree(n)
    cols = [_vector(evaluate(GenPoly({m: 1}), subst=subst)) for m in monos]
    rows = len(cols[0]) if cols else len(_vector(f))
    if n > 0:
        cb = coboundary_matrix(n, subst)
        ncb = len(cb[0])
    else:
        cb, ncb = [[] for _ in range(rows)], 0
    matrix = [[col[r] for col in cols] + cb[r] for r in range(rows)]
    x = solve_poly(matrix, _vector(f))
    if x is None:
        return None
    return _prune(GenPoly({m: x[i] for i, m in enumerate(monos)}), f, subst)


def _prune(p: GenPoly, f: Cochain, subst: PolyF2 | None) -> GenPoly:
    """Drop monomials, singly and then in pairs (longest first), as long as
    the class is unchanged."""
    def key(m):
        return (-len(m), [_ORDER[g] for g in m])

    def try_drop(p, ms):
        trial = GenPoly({k: c for k, c in p.terms.items() if k not in ms})
        return trial if same_class(evaluate(trial, f.degree, subst=subst), f, subst) else None

    for m in sorted(p.terms, key=key):
        p = try_drop(p, {m}) or p
    changed = True
    while changed:
        changed = False
        for a, b in combinations(sorted(p.terms, key=key), 2):
            trial = try_drop(p, {a, b})
            if trial is not None:
                p, changed = trial, True
                break
    return p


def reduce_class(f: Cochain, candidates=(), subst: PolyF2 | None = None) -> tuple[GenPoly | None, bool]:
    """Name the class of ``f``.

    Tries each candidate expression in turn, then 0, then a search over
    short monomials.  Returns ``(expression, reduced)`` where ``reduced``
    says whether the representative differs from ``f`` by a nonzero
    coboundary.
    """
    for cand in list(candidates) + [GenPoly()]:
        g = evaluate(cand, f.degree, subst=subst)
        if f == g:
            return cand, False
        if same_class(f, g, subst):
            return cand, True
    nf = find_normal_form(f, subst)
    if nf is None:
        return None, False
    return nf, evaluate(nf, f.degree, subst=subst) != f


def input_str(m: Monomial) -> str:
    return "*".join(m)


def delta_row(m: Monomial, subst: PolyF2 | None = None, dual_of=None) -> dict:
    """One row of the Delta table for the input monomial ``m``.

    Keys: ``input``, ``degree``, ``delta`` (normal form of the class),
    ``raw`` (Cochain JSON of the computed representative, ``None`` in
    degree 0), ``reduced_by_coboundary``, plus the reference value
    ``reference`` and ``match`` (class equality with it).  ``dual_of`` is
    passed through to :func:`~hhbv.bv.delta`.
    """
    f = monomial_cochain(m)
    ref = reference_table().get(m, GenPoly())
    if subst is not None:
        ref = ref.substitute(subst)
    row = {"input": input_str(m), "degree": f.degree}
    if f.degree == 0:
        row.update(delta="0", raw=None, reduced_by_coboundary=False,
                   reference=str(ref), match=not ref)
        return row
    raw = delta(f, dual_of=dual_of)
    if subst is not None:
        raw = raw.substitute(subst)
    nf, reduced = reduce_class(raw, [ref], subst)
    row.update(delta=str(nf) if nf is not None else None, raw=raw.to_json(),
               reduced_by_coboundary=reduced, reference=str(ref), match=nf == ref)
    return row


def delta_table(subst: PolyF2 | None = None, dual_of=None) -> list[dict]:
    """Delta on every generator and every pairwise product of generators."""
    return [delta_row(m, subst, dual_of) for m in table_inputs()]


def table_mismatches(rows: list[dict]) -> list[dict]:
    return [{"input": r["input"], "reference": r["reference"], "computed": r["delta"]}
            for r in rows if not r["match"]]
