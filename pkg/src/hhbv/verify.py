"""Verification suites: exact checks of the complexes, homotopies, chain
maps and the cohomology identities, each returning a small report.

A report is a dict ``{"suite", "passed", "checked", "violations"}``;
violations are capped at :data:`MAX_VIOLATIONS` entries per suite.
"""

from __future__ import annotations

import random
from itertools import combinations_with_replacement, product

from .algebra import MUL_TABLE, NONUNIT, WORDS
from .bimodule import acc, add_terms, apply_terms
from .coeff import poly_mul
from .bv import (
    Cochain,
    HomologyChain,
    connes_B,
    cup,
    delta,
    gerstenhaber_bracket,
    is_coboundary,
)
from .catalog import NAMES, check_ideal_relations, generator, monomial_cochain
from .comparison import _phi_images, psi_terms, verify_chain_maps
from .resolution import (
    bar_diff_terms,
    homotopy_s_terms,
    homotopy_t_terms,
    kbasis,
    minimal_diff,
)

MAX_VIOLATIONS = 20


def _report(suite: str, checked: int, violations: list) -> dict:
    return {"suite": suite, "passed": not violations, "checked": checked,
            "violations": violations[:MAX_VIOLATIONS]}


# -- complexes and homotopies -----------------------------------------------------------

def resolution_complex(max_n: int = 7) -> dict:
    """``d_n . d_{n+1} == 0`` on the generators of ``P_{n+2}``, n = 0..max_n."""
    bad, checked = [], 0
    for n in range(max_n + 1):
        lower, upper = minimal_diff(n).images, minimal_diff(n + 1).images
        for g, img in upper.items():
            checked += 1
            if apply_terms(lower, img):
                bad.append({"n": n, "generator": g})
    return _report("resolution_complex", checked, bad)


def bar_complex(max_n: int = 6) -> dict:
    """``bar_diff . bar_diff == 0`` on every bimodule generator
    ``1|a1|...|an|1`` of the normalized bar resolution, n = 2..max_n
    (both differentials are bimodule maps, so generators suffice)."""
    bad, checked = [], 0
    for n in range(2, max_n + 1):
        for mid in product(NONUNIT, repeat=n):
            checked += 1
            if bar_diff_terms(bar_diff_terms({(0, mid, 0): 1})):
                bad.append({"n": n, "tuple": [WORDS[i] for i in mid]})
    return _report("bar_complex", checked, bad)


def _mu_terms(terms: dict) -> dict:
    out: dict = {}
    for (l, _, r), c in terms.items():
        for k, ck in MUL_TABLE[l][r]:
            acc(out, k, poly_mul(c, ck))
    return out


def homotopy_identity(max_n: int = 8) -> dict:
    """``t_{n-1} d_{n-1} + d_n t_n == id`` on the K-basis of ``P_n`` for
    n = 0..max_n (with ``t_{-1} mu`` in degree 0), and ``mu t_{-1} == id``."""
    bad, checked = [], 0
    for k in range(8):  # mu(t_{-1}(b)) = mu(1 (x) b) = b
        checked += 1
        if _mu_terms({(0, "1", k): 1}) != {k: 1}:
            bad.append({"n": -1, "element": WORDS[k]})
    for n in range(max_n + 1):
        dn = minimal_diff(n).images
        for key in kbasis(n):
            checked += 1
            e = {key: 1}
            out = apply_terms(dn, homotopy_t_terms(n, e))
            if n == 0:
                for k, c in _mu_terms(e).items():
                    acc(out, (0, "1", k), c)
            else:
                out = add_terms(out, homotopy_t_terms(n - 1, apply_terms(minimal_diff(n - 1).images, e)))
            if out != e:
                l, g, r = key
                bad.append({"n": n, "element": f"{WORDS[l]}|{g}|{WORDS[r]}"})
    return _report("homotopy_identity", checked, bad)


def bar_homotopy_identity(max_n: int = 5) -> dict:
    """``s d + d s == id`` on ``a0|a1|...|an|1`` for n = 0..max_n (``s`` is
    right-linear, so a unit right slot suffices)."""
    bad, checked = [], 0
    for n in range(max_n + 1):
        for mid in product(NONUNIT, repeat=n):
            for l in range(8):
                checked += 1
                e = {(l, mid, 0): 1}
                out = bar_diff_terms(homotopy_s_terms(e))
                if n == 0:
                    for k, c in _mu_terms({(l, "1", 0): 1}).items():
                        acc(out, (0, (), k), c)
                else:
                    out = add_terms(out, homotopy_s_terms(bar_diff_terms(e)))
                if out != e:
                    bad.append({"n": n, "element": "|".join(WORDS[i] for i in (l,) + mid + (0,))})
    return _report("bar_homotopy_identity", checked, bad)


def periodicity(max_n: int = 4) -> dict:
    bad = []
    for n in range(max_n + 1):
        if minimal_diff(n) != minimal_diff(n + 4):
            bad.append({"n": n, "map": "d"})
        for key in kbasis(n):
            if homotopy_t_terms(n, {key: 1}) != homotopy_t_terms(n + 4, {key: 1}):
                bad.append({"n": n, "map": "t", "element": str(key)})
                break
    return _report("periodicity", 2 * (max_n + 1), bad)


def chain_maps(max_n: int = 6) -> dict:
    """Chain-map squares for Phi and Psi in degrees 1..max_n, and
    ``Psi_3 Phi_3 (1|1) == 1|1``."""
    bad = verify_chain_maps(max_n)
    if psi_terms(_phi_images(3)["1"]) != {(0, "1", 0): 1}:
        bad.append({"square": "psi3 phi3", "degree": 3, "where": "1|1"})
    return _report("chain_maps", max_n, bad)


# -- cohomology --------------------------------------------------------------------------

def cocycles() -> dict:
    bad = [n for n in NAMES if not generator(n).is_cocycle()]
    return _report("cocycles", len(NAMES), [{"generator": n} for n in bad])


def _pairs():
    return list(combinations_with_replacement(NAMES, 2))


def _sum(parts, degree):
    out = Cochain.zero(degree)
    for p in parts:
        if p is not None:
            out = out + p
    return out


def _class_zero(f: Cochain) -> bool:
    return f.is_zero() or (f.degree > 0 and bool(is_coboundary(f)))


def delta_squared() -> dict:
    """``Delta(Delta(f))`` is a coboundary for each generator and pairwise
    product of degree >= 2."""
    bad, checked = [], 0
    items = [(n,) for n in NAMES] + _pairs()
    for m in items:
        f = monomial_cochain(tuple(m))
        if f.degree < 2:
            continue
        checked += 1
        dd = delta(delta(f))
        if not _class_zero(dd):
            bad.append({"input": "*".join(m), "value": str(dd)})
    return _report("delta_squared", checked, bad)


def bv_identity() -> dict:
    """``[a,b] + Delta(ab) + Delta(a) b + a Delta(b)`` is a coboundary for
    every pair of generators."""
    bad, checked = [], 0
    for a, b in _pairs():
        fa, fb = generator(a), generator(b)
        deg = fa.degree + fb.degree - 1
        if deg < 0:
            continue
        checked += 1
        da, db = delta(fa), delta(fb)
        parts = [gerstenhaber_bracket(fa, fb), delta(cup(fa, fb)),
                 cup(da, fb) if da is not None else None,
                 cup(fa, db) if db is not None else None]
        total = _sum(parts, deg)
        if not _class_zero(total):
            bad.append({"pair": f"{a},{b}", "value": str(total)})
    return _report("bv_identity", checked, bad)


def graded_commutativity() -> dict:
    bad, checked = [], 0
    for a, b in _pairs():
        if a == b:
            continue
        checked += 1
        fa, fb = generator(a), generator(b)
        diff = cup(fa, fb) + cup(fb, fa)
        if not _class_zero(diff):
            bad.append({"pair": f"{a},{b}", "value": str(diff)})
    return _report("graded_commutativity", checked, bad)


def poisson_rule(samples: int = 64, seed: int = 0, max_degree: int = 5) -> dict:
    """``[ab, c] + [a,c] b + a [b,c]`` is a coboundary for sampled triples of
    generators with ``|a| + |b| + |c| <= max_degree``."""
    triples = [t for t in product(NAMES, repeat=3)
               if sum(generator(n).degree for n in t) <= max_degree
               and sum(generator(n).degree for n in t) >= 1]
    rng = random.Random(seed)
    chosen = triples if samples >= len(triples) else rng.sample(triples, samples)
    bad = []
    for a, b, c in chosen:
        fa, fb, fc = generator(a), generator(b), generator(c)
        deg = fa.degree + fb.degree + fc.degree - 1
        ab = cup(fa, fb)
        ac, bc = gerstenhaber_bracket(fa, fc), gerstenhaber_bracket(fb, fc)
        parts = [gerstenhaber_bracket(ab, fc),
                 cup(ac, fb) if ac is not None else None,
                 cup(fa, bc) if bc is not None else None]
        total = _sum(parts, deg)
        if not _class_zero(total):
            bad.append({"triple": f"{a},{b},{c}", "value": str(total)})
    return _report("poisson_rule", len(chosen), bad)


def connes_square(max_n: int = 3) -> dict:
    """``B(B(c)) == 0`` on every basis chain ``a0|...|an`` with n <= max_n."""
    bad, checked = [], 0
    for n in range(max_n + 1):
        for tup in product(range(8), repeat=n + 1):
            checked += 1
            if connes_B(connes_B(HomologyChain({tup: 1}))):
                bad.append({"chain": "|".join(WORDS[i] for i in tup)})
    return _report("connes_square", checked, bad)


def ideal_relations() -> dict:
    rows = check_ideal_relations()
    bad = [r for r in rows if not r["coboundary"]]
    return _report("ideal_relations", len(rows), bad)


ENGINE_SUITES = ("resolution_complex", "bar_complex", "homotopy_identity", "bar_homotopy_identity",
                 "periodicity", "chain_maps", "cocycles")
COHOMOLOGY_SUITES = ("delta_squared", "bv_identity", "graded_commutativity", "poisson_rule",
                     "connes_square", "ideal_relations")


def run_all(max_degree: int = 6, samples: int = 64, seed: int = 0, suites=None) -> list[dict]:
    """Run the named suites (all by default) with the given truncation."""
    runners = {
        "resolution_complex": lambda: resolution_complex(max(7, max_degree)),
        "bar_complex": lambda: bar_complex(max_degree),
        "homotopy_identity": lambda: homotopy_identity(max(8, max_degree)),
        "bar_homotopy_identity": lambda: bar_homotopy_identity(min(5, max_degree)),
        "periodicity": periodicity,
        "chain_maps": lambda: chain_maps(max_degree),
        "cocycles": cocycles,
        "delta_squared": delta_squared,
        "bv_identity": bv_identity,
        "graded_commutativity": graded_commutativity,
        "poisson_rule": lambda: poisson_rule(samples, seed),
        "connes_square": connes_square,
        "ideal_relations": ideal_relations,
    }
    names = suites or (ENGINE_SUITES + COHOMOLOGY_SUITES)
    return [runners[n]() for n in names]


__all__ = ["run_all", "ENGINE_SUITES", "COHOMOLOGY_SUITES"]
