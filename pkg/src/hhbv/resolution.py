"""The minimal 4-periodic bimodule resolution P of R, its weak self-homotopy
``t``, and the normalized bar resolution with its contracting homotopy ``s``.

Terms of P are free bimodules on the generators::

    n mod 4 == 0, 3 :  "1"           (P_n = R (x) R)
    n mod 4 == 1    :  "x", "y"       (R (x) KQ_1 (x) R)
    n mod 4 == 2    :  "r_x", "r_y"   (R (x) KQ_1^* (x) R)

``minimal_diff(n)`` is the differential ``P_{n+1} -> P_n``.
"""

from __future__ import annotations

from functools import lru_cache

from .algebra import AlgElem, INDEX, MUL_TABLE, NONUNIT, WORDS, derivation_C, dual, mul_terms
from .bimodule import BimodMap, FreeBimodElem, acc, apply_terms, lmul_basis, rmul_basis
from .coeff import poly_mul
from .notation import parse_elem


def generators(n: int) -> tuple[str, ...]:
    if n < 0:
        raise ValueError("resolution degrees start at 0")
    return {0: ("1",), 1: ("x", "y"), 2: ("r_x", "r_y"), 3: ("1",)}[n % 4]


def kbasis(n: int):
    """The K-basis ``b (x) g (x) b'`` of P_n, as term keys."""
    return [(l, g, r) for g in generators(n) for l in range(8) for r in range(8)]


# -- differentials ------------------------------------------------------------

_D_TEXT = {
    0: {"x": "x|1 + 1|x",
        "y": "y|1 + 1|y"},
    1: {"r_x": "1|x|x + x|x|1 + y|x|y + 1|y|xy + yx|y|1",
        "r_y": "1|y|y + y|y|1 + x|y|x + d*x|y|xy + d*xyx|y|1"
               " + 1|x|yx + xy|x|1 + d*xy|x|y + d|x|yxy"},
    2: {"1": "x|r_x|1 + 1|r_x|x + y|r_y|1 + 1|r_y|y + d*y|r_y|y"
             " + d|r_y|xyx + d^2*y|r_y|xyx"},
}


def casimir() -> FreeBimodElem:
    """``sum_b b* (x) b`` for the socle-coefficient form."""
    terms: dict = {}
    for b in range(8):
        for k, c in dual(b):
            acc(terms, (k, "1", b), c)
    return FreeBimodElem(terms)


def rho_one() -> FreeBimodElem:
    """Image of the generator under the degree-3 differential ``P_4 -> P_3``.

    This is the Casimir element of the symmetrizing form; see the
    module notes in README for why no extra ``d xyx (x) xyx`` is added.
    """
    return casimir()


@lru_cache(maxsize=None)
def _diff_images(k: int) -> dict:
    if k == 3:
        return {"1": rho_one().terms}
    return {g: parse_elem(text).terms for g, text in _D_TEXT[k].items()}


def minimal_diff(n: int) -> BimodMap:
    """The differential ``P_{n+1} -> P_n``."""
    if n < 0:
        raise ValueError("differentials are indexed from 0")
    return BimodMap(_diff_images(n % 4), name=f"d{n}")


def mu(e: FreeBimodElem) -> AlgElem:
    """Multiplication ``P_0 = R (x) R -> R``."""
    out: dict = {}
    for (l, g, r), c in e.terms.items():
        for k, ck in MUL_TABLE[l][r]:
            acc(out, k, poly_mul(c, ck))
    return AlgElem(out)


# -- weak self-homotopy on P ----------------------------------------------------

def _tx(text):
    return parse_elem(text).terms


@lru_cache(maxsize=None)
def _t_tables():
    t1_yx = _tx("y|r_x|1 + xy|r_x|y + 1|r_y|xy + d*x|r_x|xy + d*yxy|r_x|y")
    t1_xy = _tx("x|r_y|1 + yx|r_y|x + 1|r_x|yx + d|r_x|yxy + d*yx|r_y|xy + d*y|r_x|xyxy")
    t1 = {
        ("x", INDEX["x"]): _tx("1|r_x|1"),
        ("x", INDEX["xyxy"]): _tx("1|r_x|x^2 + x|r_x|x + x^2|r_x|1 + yx|r_y|xy"),
        ("x", INDEX["yx"]): t1_yx,
        ("x", INDEX["xyx"]): lmul_basis(INDEX["x"], t1_yx),
        ("x", INDEX["yxy"]): _tx("y|r_y|1 + 1|r_y|y + d*y|r_y|y + d|r_y|xyx + d^2*y|r_y|xyx"),
        ("y", INDEX["y"]): _tx("1|r_y|1"),
        ("y", INDEX["xy"]): t1_xy,
        ("y", INDEX["yxy"]): lmul_basis(INDEX["y"], t1_xy),
        ("y", INDEX["xyxy"]): lmul_basis(INDEX["xy"], t1_xy),
    }
    t2 = {
        ("r_x", INDEX["x"]): _tx("1|1"),
        ("r_x", INDEX["y"]): _tx("d*yxy|y^2 + d*yx|(xy)^2"),
        ("r_x", INDEX["xy"]): _tx("d*yxy|y + d*yx|y^2"),
        ("r_x", INDEX["yx"]): _tx("y|1 + d*xyx|1 + d*xy|x + d*x|yx"),
        ("r_x", INDEX["yxy"]): _tx("1|x"),
        ("r_x", INDEX["xyx"]): _tx("xy|1 + x|y + d*yxy|yx"),
        ("r_x", INDEX["xyxy"]): _tx("1|yxy + yx|y + y|xy + yxy|1 + d*xyx|xy"),
        ("r_y", INDEX["xy"]): _tx("x|1 + d*x|y"),
        ("r_y", INDEX["yx"]): _tx("d*y^2|yxy + d*(xy)^2|xy"),
        ("r_y", INDEX["yxy"]): _tx("yx|1 + y|x + d*yx|y + d*y|xy + d^2*xyx|xy + d*xyx|x + d*xy|yxy"),
        ("r_y", INDEX["xyxy"]): _tx("xy|x + x|yx + xyx|1 + d*x|yxy + d*xyx|y + d*xy|xy"),
    }
    t3 = {("1", INDEX["xyxy"]): _tx("1|1")}
    t0 = {}
    for b in range(8):
        terms: dict = {}
        for c, l, arrow, r in derivation_C(b):
            acc(terms, (l, arrow, r), c)
        if terms:
            t0[("1", b)] = terms
    return {0: t0, 1: t1, 2: t2, 3: t3}


def homotopy_t_terms(n: int, terms: dict) -> dict:
    """Raw form of :func:`homotopy_t` on a term dict of P_n (n >= 0)."""
    table = _t_tables()[n % 4]
    out: dict = {}
    for (l, g, r), c in terms.items():
        img = table.get((g, l))
        if not img:
            continue
        for (l2, g2, r2), c2 in img.items():
            cc = poly_mul(c, c2)
            for r3, c3 in MUL_TABLE[r2][r]:
                acc(out, (l2, g2, r3), poly_mul(cc, c3))
    return out


def homotopy_t(n: int, e):
    """The weak self-homotopy ``t_n: P_n -> P_{n+1}`` (``P_{-1} = R``).

    Defined on ``b (x) g (x) 1`` by the fixed tables and extended
    right-R-linearly, ``t(b (x) g (x) b') = t(b (x) g (x) 1) . b'``.  For
    ``n == -1`` the input is an :class:`AlgElem` and ``t(a) = 1 (x) a``.
    """
    if n == -1:
        return FreeBimodElem({(0, "1", k): c for k, c in e.terms.items()})
    if n < -1:
        raise ValueError("homotopy degrees start at -1")
    return FreeBimodElem(homotopy_t_terms(n, e.terms))


# -- normalized bar resolution --------------------------------------------------

class BarChain(FreeBimodElem):
    """Element of ``R (x) Rbar^n (x) R``; the generator is the middle tuple
    of basis indices, none of which may be the unit."""

    __slots__ = ()

    def __init__(self, terms=None):
        super().__init__(terms)
        for (_, mid, _) in self.terms:
            if not isinstance(mid, tuple) or 0 in mid:
                raise ValueError(f"normalized bar chains cannot have a unit middle slot: {mid!r}")

    @classmethod
    def word(cls, *slots: str, coeff=1) -> "BarChain":
        """``slots[0] | ... | slots[-1]`` with basis words."""
        idx = [INDEX[s] for s in slots]
        return cls({(idx[0], tuple(idx[1:-1]), idx[-1]): coeff})

    def degree(self) -> int | None:
        degs = {len(mid) for (_, mid, _) in self.terms}
        if len(degs) > 1:
            raise ValueError("inhomogeneous bar chain")
        return degs.pop() if degs else None


def bar_diff_terms(terms: dict) -> dict:
    out: dict = {}
    for (l, mid, r), c in terms.items():
        n = len(mid)
        if n == 0:
            raise ValueError("bar_diff is defined from degree 1")
        for k, ck in MUL_TABLE[l][mid[0]]:
            acc(out, (k, mid[1:], r), poly_mul(c, ck))
        for i in range(n - 1):
            for k, ck in MUL_TABLE[mid[i]][mid[i + 1]]:
                # products of radical words never have a unit component
                acc(out, (l, mid[:i] + (k,) + mid[i + 2:], r), poly_mul(c, ck))
        for k, ck in MUL_TABLE[mid[-1]][r]:
            acc(out, (l, mid[:-1], k), poly_mul(c, ck))
    return out


def bar_diff(n: int, c: BarChain) -> BarChain:
    """Differential ``Bar_n -> Bar_{n-1}`` (signs vanish in characteristic 2)."""
    if n < 1:
        raise ValueError("bar_diff is defined from degree 1")
    for (_, mid, _) in c.terms:
        if len(mid) != n:
            raise ValueError(f"chain term of degree {len(mid)} passed to bar_diff({n})")
    return BarChain(bar_diff_terms(c.terms))


def bar_mu(c: BarChain) -> AlgElem:
    return mu(FreeBimodElem(c.terms))


def homotopy_s_terms(terms: dict) -> dict:
    out: dict = {}
    for (l, mid, r), c in terms.items():
        if l != 0:
            acc(out, (0, (l,) + mid, r), c)
    return out


def homotopy_s(n: int, c) -> BarChain:
    """``s_n(a0 (x) ... (x) an (x) b) = 1 (x) a0 (x) ... (x) an (x) b``.

    Terms with ``a0 = 1`` vanish in the normalized complex.  For ``n == -1``
    the input is an :class:`AlgElem` and ``s(a) = 1 (x) a``.
    """
    if n == -1:
        return BarChain({(0, (), k): v for k, v in c.terms.items()})
    return BarChain(homotopy_s_terms(c.terms))


def bar_basis(n: int):
    """Every K-basis tuple ``(l, mid, r)`` of ``Bar_n``."""
    from itertools import product

    for mid in product(NONUNIT, repeat=n):
        for l in range(8):
            for r in range(8):
                yield (l, mid, r)
