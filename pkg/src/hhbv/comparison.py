"""Comparison morphisms between the minimal resolution P and the normalized
bar resolution.

``phi(n)``: P_n -> Bar_n, built recursively as ``s . phi(n-1) . d`` on
generators.  ``psi(n, c)``: Bar_n -> P_n, with
``Psi_n(1|a1|...|an|1) = t_{n-1}(a1 . Psi_{n-1}(1|a2|...|an|1))``.
Both are memoised per generator (resp. per middle tuple).
"""

from __future__ import annotations

from functools import lru_cache

from .bimodule import BimodMap, FreeBimodElem, acc, add_terms, apply_terms, lmul_basis
from .resolution import (
    BarChain,
    bar_diff_terms,
    generators,
    homotopy_s_terms,
    homotopy_t_terms,
    minimal_diff,
)


@lru_cache(maxsize=None)
def _phi_images(n: int) -> dict:
    if n == 0:
        return {"1": {(0, (), 0): 1}}
    prev = _phi_images(n - 1)
    d = minimal_diff(n - 1).images
    return {g: homotopy_s_terms(apply_terms(prev, d[g])) for g in generators(n)}


def phi(n: int) -> BimodMap:
    """The chain map ``Phi_n: P_n -> Bar_n`` as a bimodule map."""
    if n < 0:
        raise ValueError("phi is defined from degree 0")
    return BimodMap(_phi_images(n), target_cls=BarChain, name=f"Phi{n}")


_PSI_MEMO: dict[tuple, dict] = {(): {(0, "1", 0): 1}}


def psi_generator(mid: tuple) -> dict:
    """Raw ``Psi_n(1 | mid | 1)`` for a middle tuple of non-unit basis indices."""
    hit = _PSI_MEMO.get(mid)
    if hit is not None:
        return hit
    # iterate from the shortest uncached suffix to avoid deep recursion
    start = next(i for i in range(1, len(mid) + 1) if mid[i:] in _PSI_MEMO)
    val = _PSI_MEMO[mid[start:]]
    for i in range(start - 1, -1, -1):
        suffix = mid[i:]
        val = homotopy_t_terms(len(suffix) - 1, lmul_basis(mid[i], val))
        _PSI_MEMO[suffix] = val
    return _PSI_MEMO[mid]


class _PsiImages(dict):
    def __missing__(self, key):
        if not isinstance(key, tuple):
            raise KeyError(key)
        return psi_generator(key)


_PSI_IMAGES = _PsiImages()


def psi_terms(terms: dict) -> dict:
    return apply_terms(_PSI_IMAGES, terms)


def psi(n: int, c: BarChain) -> FreeBimodElem:
    """``Psi_n`` applied to a bar chain of degree ``n``."""
    for (_, mid, _) in c.terms:
        if len(mid) != n:
            raise ValueError(f"bar term of degree {len(mid)} passed to psi({n})")
    return FreeBimodElem(psi_terms(c.terms))


def clear_cache() -> None:
    _PSI_MEMO.clear()
    _PSI_MEMO[()] = {(0, "1", 0): 1}
    _phi_images.cache_clear()


def verify_chain_maps(maxdeg: int, psi_tuples=None) -> list[dict]:
    """Check the chain-map squares in degrees ``1..maxdeg``.

    ``bar_diff . phi(n) == phi(n-1) . d_{n-1}`` on the generators of P_n, and
    ``d_{n-1} . psi(n) == psi(n-1) . bar_diff`` on bar generators.  By default
    the bar side uses every middle tuple (all bimodule generators of
    ``Bar_n``); pass ``psi_tuples`` to restrict it.
    Returns a list of violations (empty when all squares commute).
    """
    from itertools import product

    from .algebra import NONUNIT

    violations = []
    for n in range(1, maxdeg + 1):
        d = minimal_diff(n - 1).images
        prev = _phi_images(n - 1)
        for g, img in _phi_images(n).items():
            lhs = bar_diff_terms(img)
            rhs = apply_terms(prev, d[g])
            if lhs != rhs:
                violations.append({"square": "phi", "degree": n, "where": g,
                                   "excess": str(BarChain(add_terms(lhs, rhs)))})
        if psi_tuples is not None:
            tuples = [t for t in psi_tuples if len(t) == n]
        else:
            tuples = product(NONUNIT, repeat=n)
        for mid in tuples:
            unit = {(0, mid, 0): 1}
            lhs = apply_terms(d, psi_terms(unit))
            rhs = psi_terms(bar_diff_terms(unit))
            if lhs != rhs:
                violations.append({"square": "psi", "degree": n, "where": mid,
                                   "excess": str(FreeBimodElem(add_terms(lhs, rhs)))})
    return violations
