"""Hochschild cochains on the minimal resolution and the BV operations.

A degree-``n`` cochain is a bimodule map ``P_n -> R``, stored by its values
on the generators of ``P_n``.  Operations defined on the bar complex (cup
product, the slot insertions ``o_i``, the Gerstenhaber bracket and ``Delta``)
are transported through the comparison maps: a cochain ``f`` becomes the
bar cochain ``f . Psi_n`` and a bar cochain ``F`` comes back as
``F . Phi_n``.  All signs vanish in characteristic 2.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import MUL_TABLE, NONUNIT, ONE_IDX, SOCLE_IDX, WORDS, AlgElem, dual, mul_terms
from .bimodule import acc, apply_terms
from .coeff import GF2k, PolyF2, poly_compose, poly_degree, poly_mul, specialize
from .comparison import _phi_images, psi_generator
from .linsolve import solve_field, solve_poly
from .resolution import generators, minimal_diff


class NotACocycle(ValueError):
    pass


def _sandwich(out: dict, l: int, val: dict, r: int, c: PolyF2) -> None:
    """``out += c * (l . val . r)`` with basis indices ``l``, ``r``."""
    lrow = MUL_TABLE[l]
    for k, ck in val.items():
        for k2, c2 in lrow[k]:
            cc = poly_mul(poly_mul(c, ck), c2)
            for k3, c3 in MUL_TABLE[k2][r]:
                acc(out, k3, poly_mul(cc, c3))


class Cochain:
    """A cochain ``P_n -> R`` given by its values on the generators of ``P_n``.

    Values on degree 1 and 2 (mod 4) generators are written as a pair
    ``(f, g)``: the images of ``x``/``r_x`` and ``y``/``r_y``.
    """

    def __init__(self, degree: int, values: dict | None = None):
        if degree < 0:
            raise ValueError("cochain degree must be non-negative")
        self.degree = degree
        values = values or {}
        gens = generators(degree)
        unknown = set(values) - set(gens)
        if unknown:
            raise ValueError(f"{sorted(unknown)} are not generators of P_{degree}")
        self.values = {g: (values[g] if isinstance(values.get(g), AlgElem) else AlgElem(values.get(g) or {}))
                       for g in gens}
        self._bar_memo: dict = {}

    @classmethod
    def from_values(cls, degree: int, *vals) -> "Cochain":
        """``Cochain.from_values(1, f, g)`` for the pair notation ``(f, g)``."""
        gens = generators(degree)
        if len(vals) != len(gens):
            raise ValueError(f"P_{degree} has {len(gens)} generator(s), got {len(vals)} value(s)")
        return cls(degree, dict(zip(gens, vals)))

    @classmethod
    def zero(cls, degree: int) -> "Cochain":
        return cls(degree)

    def __add__(self, other: "Cochain") -> "Cochain":
        if self.degree != other.degree:
            raise ValueError(f"cannot add cochains of degrees {self.degree} and {other.degree}")
        return Cochain(self.degree, {g: self.values[g] + other.values[g] for g in self.values})

    __sub__ = __add__

    def scale(self, c: PolyF2) -> "Cochain":
        return Cochain(self.degree, {g: v.scale(c) for g, v in self.values.items()})

    __rmul__ = scale

    def __eq__(self, other):
        return isinstance(other, Cochain) and self.degree == other.degree and self.values == other.values

    def __hash__(self):
        return hash((self.degree, tuple(sorted((g, v) for g, v in self.values.items()))))

    def is_zero(self) -> bool:
        return not any(self.values.values())

    def __repr__(self):
        return f"Cochain({self.degree}, {self})"

    def __str__(self):
        vals = [str(self.values[g]) for g in generators(self.degree)]
        return vals[0] if len(vals) == 1 else "(" + ", ".join(vals) + ")"

    def to_json(self):
        return {"degree": self.degree,
                "values": {g: self.values[g].to_json() for g in generators(self.degree)}}

    @classmethod
    def from_json(cls, data) -> "Cochain":
        return cls(data["degree"], {g: AlgElem.from_json(v) for g, v in data["values"].items()})

    # -- evaluation ---------------------------------------------------------

    def eval_terms(self, terms: dict) -> dict:
        """Value on an element of ``P_n`` given as raw terms."""
        out: dict = {}
        for (l, g, r), c in terms.items():
            _sandwich(out, l, self.values[g].terms, r, c)
        return out

    def __call__(self, e) -> AlgElem:
        return AlgElem(self.eval_terms(e.terms))

    def coboundary(self) -> "Cochain":
        """``f . d_n``, a cochain of degree ``n + 1``."""
        d = minimal_diff(self.degree).images
        return Cochain(self.degree + 1, {h: AlgElem(self.eval_terms(d[h])) for h in generators(self.degree + 1)})

    def is_cocycle(self) -> bool:
        return self.coboundary().is_zero()

    def specialize(self, value: int, field: GF2k) -> "Cochain":
        """Substitute ``d = value``; coefficients become elements of ``field``
        stored as bit masks (only meaningful for ``value`` in GF(2), where
        field elements and constant polynomials coincide)."""
        if field.k != 1:
            raise ValueError("specialized cochains are stored over GF(2) only; use coboundary_at for GF(2^k)")
        return Cochain(self.degree, {g: AlgElem({k: specialize(c, value, field) for k, c in v.terms.items()})
                                     for g, v in self.values.items()})

    def substitute(self, q: PolyF2) -> "Cochain":
        """Replace ``d`` by the polynomial ``q`` in every coefficient."""
        return Cochain(self.degree, {g: AlgElem({k: poly_compose(c, q) for k, c in v.terms.items()})
                                     for g, v in self.values.items()})

    # -- transport to the bar complex ------------------------------------------

    def bar_value(self, mid: tuple) -> dict:
        """``(f . Psi_n)(1 | mid | 1)`` as raw AlgElem terms (memoised)."""
        hit = self._bar_memo.get(mid)
        if hit is None:
            hit = self.eval_terms(psi_generator(mid))
            self._bar_memo[mid] = hit
        return hit

    def as_bar(self) -> "BarCochain":
        return BarCochain(self.degree, self.bar_value)


class BarCochain:
    """A normalized Hochschild cochain ``Rbar^n -> R`` given as a function on
    tuples of non-unit basis indices (multilinear extension implied)."""

    def __init__(self, degree: int, func):
        self.degree = degree
        self._func = func
        self._memo: dict = {}

    def __call__(self, mid: tuple) -> dict:
        hit = self._memo.get(mid)
        if hit is None:
            hit = self._func(mid)
            self._memo[mid] = hit
        return hit

    def evaluate(self, *slots: AlgElem) -> AlgElem:
        """Multilinear evaluation on algebra elements (unit components vanish)."""
        if len(slots) != self.degree:
            raise ValueError(f"expected {self.degree} arguments")
        partial = [((), 1)]
        for s in slots:
            partial = [(mid + (k,), poly_mul(c, ck)) for mid, c in partial for k, ck in s.terms.items() if k != ONE_IDX]
        out: dict = {}
        for mid, c in partial:
            for k, v in self(mid).items():
                acc(out, k, poly_mul(c, v))
        return AlgElem(out)

    def __add__(self, other):
        if self.degree != other.degree:
            raise ValueError("degree mismatch")

        def f(mid):
            out = dict(self(mid))
            for k, v in other(mid).items():
                acc(out, k, v)
            return out
        return BarCochain(self.degree, f)

    def pullback(self) -> Cochain:
        """``F . Phi_n`` as a cochain on the minimal resolution."""
        vals = {}
        for g, img in _phi_images(self.degree).items():
            out: dict = {}
            for (l, mid, r), c in img.items():
                v = self(mid)
                if v:
                    _sandwich(out, l, v, r, c)
            vals[g] = AlgElem(out)
        return Cochain(self.degree, vals)


def identity_bar_cochain() -> BarCochain:
    """The degree-1 cochain ``a -> a``."""
    return BarCochain(1, lambda mid: {mid[0]: 1})


# -- cup product and brackets ---------------------------------------------------

def bar_cup(F: BarCochain, G: BarCochain) -> BarCochain:
    n = F.degree

    def f(mid):
        a, b = F(mid[:n]), G(mid[n:])
        return mul_terms(a, b) if a and b else {}
    return BarCochain(F.degree + G.degree, f)


def cup(f: Cochain, g: Cochain) -> Cochain:
    """Cup product, computed as ``((f Psi) u (g Psi)) . Phi``."""
    return bar_cup(f.as_bar(), g.as_bar()).pullback()


def circle_i(F: BarCochain, G: BarCochain, i: int) -> BarCochain:
    """Slot insertion ``F o_i G`` (``1 <= i <= deg F``); zero when ``deg F == 0``."""
    n, m = F.degree, G.degree
    if n == 0:
        return BarCochain(max(m - 1, 0), lambda mid: {})
    if not 1 <= i <= n:
        raise ValueError(f"slot {i} out of range for a degree-{n} cochain")

    def f(mid):
        inner = G(mid[i - 1:i - 1 + m])
        out: dict = {}
        for k, c in inner.items():
            if k == ONE_IDX:
                continue  # normalized cochains vanish on the unit
            outer = F(mid[:i - 1] + (k,) + mid[i - 1 + m:])
            for k2, c2 in outer.items():
                acc(out, k2, poly_mul(c, c2))
        return out
    return BarCochain(n + m - 1, f)


def circle(F: BarCochain, G: BarCochain) -> BarCochain:
    """``F o G = sum_i F o_i G``."""
    n, m = F.degree, G.degree
    parts = [circle_i(F, G, i) for i in range(1, n + 1)]

    def f(mid):
        out: dict = {}
        for p in parts:
            for k, v in p(mid).items():
                acc(out, k, v)
        return out
    return BarCochain(max(n + m - 1, 0), f)


def bar_bracket(F: BarCochain, G: BarCochain) -> BarCochain:
    return circle(F, G) + circle(G, F)


def gerstenhaber_bracket(f: Cochain, g: Cochain) -> Cochain | None:
    """``[f, g]`` of degree ``|f| + |g| - 1``; ``None`` when that is negative."""
    if f.degree + g.degree == 0:
        return None
    return bar_bracket(f.as_bar(), g.as_bar()).pullback()


# -- Delta -------------------------------------------------------------------------

def trace(terms: dict) -> PolyF2:
    """``<a, 1>``: the socle coefficient."""
    return terms.get(SOCLE_IDX, 0)


def bar_delta(F: BarCochain, dual_of=None) -> BarCochain:
    """Dual of Connes' operator under the socle form:
    ``Delta F(a1..a_{n-1}) = sum_{b != 1} sum_i <F(ai..a_{n-1}, b, a1..a_{i-1}), 1> b*``.

    ``dual_of`` maps a basis index to ``b*``; it defaults to the dual basis
    of the socle-coefficient form (:func:`hhbv.algebra.dual`).
    """
    n = F.degree
    dual_of = dual_of or dual
    duals = {b: dual_of(b).terms for b in NONUNIT}

    def f(mid):
        out: dict = {}
        for b in NONUNIT:
            s = 0
            for i in range(n):
                s ^= trace(F(mid[i:] + (b,) + mid[:i]))
            if s:
                for k, v in duals[b].items():
                    acc(out, k, poly_mul(s, v))
        return out
    return BarCochain(n - 1, f)


def delta(f: Cochain, check: bool = True, dual_of=None) -> Cochain | None:
    """``Delta(f) = Delta(f Psi_n) Phi_{n-1}``; ``None`` in degree 0.

    ``dual_of`` overrides the dual basis (see :func:`bar_delta`).
    """
    if f.degree == 0:
        return None
    if check and not f.is_cocycle():
        raise NotACocycle(f"Delta is only defined on cocycles; got {f}")
    return bar_delta(f.as_bar(), dual_of).pullback()


# -- Connes' operator on Hochschild chains ---------------------------------------------

class HomologyChain:
    """Element of ``R^{(x)(n+1)}`` as a map from index tuples to coefficients."""

    def __init__(self, terms=None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def word(cls, *slots: str, coeff: PolyF2 = 1) -> "HomologyChain":
        from .algebra import INDEX
        return cls({tuple(INDEX[s] for s in slots): coeff})

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            acc(out, k, v)
        return HomologyChain(out)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, HomologyChain) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "HomologyChain(0)"
        return "HomologyChain(" + " + ".join("|".join(WORDS[i] for i in k) for k in sorted(self.terms)) + ")"


def connes_B(c: HomologyChain) -> HomologyChain:
    """``B(a0..an) = sum_i 1|ai..an|a0..a(i-1) + sum_i ai|1|a(i+1)..an|a0..a(i-1)``."""
    out: dict = {}
    for tup, coef in c.terms.items():
        n = len(tup)
        for i in range(n):
            rot = tup[i:] + tup[:i]
            acc(out, (ONE_IDX,) + rot, coef)
            acc(out, (rot[0], ONE_IDX) + rot[1:], coef)
    return HomologyChain(out)


# -- coboundaries ----------------------------------------------------------------------

@dataclass
class CoboundaryResult:
    """Outcome of :func:`is_coboundary`.

    ``mode`` is ``"symbolic"`` when a witness with polynomial entries was
    found (valid for every value of d), ``"specialized"`` when the check fell
    back to evaluating at points of a finite field, ``"none"`` when the
    cochain is not a coboundary.
    """

    value: bool
    witness: Cochain | None = None
    mode: str = "symbolic"
    points: list = field(default_factory=list)

    def __bool__(self):
        return self.value


def coboundary_matrix(n: int, subst: PolyF2 | None = None) -> list[list[PolyF2]]:
    """Matrix of ``h -> h . d_{n-1}`` from Hom(P_{n-1}, R) to Hom(P_n, R) in
    the coordinates (generator, basis word).  With ``subst`` the entries
    are taken after substituting ``d = subst``."""
    src = generators(n - 1)
    tgt = generators(n)
    d = minimal_diff(n - 1).images
    rows = len(tgt) * 8
    cols = len(src) * 8
    m = [[0] * cols for _ in range(rows)]
    for ci, (g, k) in enumerate((g, k) for g in src for k in range(8)):
        h = Cochain(n - 1, {g: AlgElem.basis(k)})
        for ti, g2 in enumerate(tgt):
            for k2, c in h.eval_terms(d[g2]).items():
                m[ti * 8 + k2][ci] = c if subst is None else poly_compose(c, subst)
    return m


def _vector(f: Cochain) -> list[PolyF2]:
    return [f.values[g].terms.get(k, 0) for g in generators(f.degree) for k in range(8)]


def is_coboundary(f: Cochain, fallback_k: int = 4, subst: PolyF2 | None = None) -> CoboundaryResult:
    """Decide whether the cocycle ``f`` is ``h . d_{n-1}`` for some ``h``.

    First looks for a witness ``h`` with entries in GF(2)[d].  When none
    exists, falls back to checking every point of GF(2^fallback_k) (16 points
    by default) and reports ``mode="specialized"``.

    ``subst`` answers the same question for the member of the family with
    ``d`` replaced by the polynomial ``subst`` (``f`` must already be
    substituted).  The cocycle check and the finite-field fallback are
    skipped in that case; only polynomial witnesses are accepted.
    """
    if subst is None and not f.is_cocycle():
        raise NotACocycle("is_coboundary requires a cocycle")
    if f.is_zero():
        return CoboundaryResult(True, Cochain.zero(f.degree - 1) if f.degree else None)
    if f.degree == 0:
        return CoboundaryResult(False, mode="none")
    m = coboundary_matrix(f.degree, subst)
    x = solve_poly(m, _vector(f))
    if subst is not None and x is None:
        return CoboundaryResult(False, mode="none")
    if x is not None:
        src = generators(f.degree - 1)
        h = Cochain(f.degree - 1, {g: AlgElem({k: x[i * 8 + k] for k in range(8)}) for i, g in enumerate(src)})
        return CoboundaryResult(True, h)
    fld = GF2k(fallback_k)
    points = []
    ok = True
    for v in fld.elements():
        good = coboundary_at(f, v, fld, matrix=m)
        points.append((v, good))
        ok &= good
    return CoboundaryResult(ok, None, "specialized" if ok else "none", points)


def coboundary_at(f: Cochain, value: int, fld: GF2k, matrix=None) -> bool:
    """Whether ``f`` becomes a coboundary after substituting ``d = value``."""
    if f.degree == 0:
        return all(specialize(c, value, fld) == 0 for c in _vector(f))
    m = matrix or coboundary_matrix(f.degree)
    ms = [[specialize(c, value, fld) for c in row] for row in m]
    rhs = [specialize(c, value, fld) for c in _vector(f)]
    return solve_field(ms, rhs, fld) is not None


def max_coefficient_degree(f: Cochain) -> int:
    return max((poly_degree(c) for v in f.values.values() for c in v.terms.values()), default=-1)
