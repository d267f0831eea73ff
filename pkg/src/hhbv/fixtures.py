"""Recompute transcribed intermediate values and diff them.

``data/fixtures.json`` holds hand-transcribed values of the homotopy ``t``,
the comparison maps, cochains on the bar complex, cup products and bracket
pieces.  :func:`run_fixtures` recomputes each one with the engine and
returns a diff report; a mismatch is data (an erratum in the transcribed
table or in the engine) and never raises.
"""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

from .algebra import INDEX, NONUNIT, WORDS, AlgElem, dual, indicator_dual
from .bimodule import FreeBimodElem
from .bv import circle_i, gerstenhaber_bracket, trace
from .catalog import evaluate, generator
from .coeff import parse_poly, poly_str
from .comparison import _phi_images, psi, psi_terms
from .notation import parse_alg, parse_bar, parse_elem, split_top
from .resolution import BarChain, generators, homotopy_t


@lru_cache(maxsize=None)
def load_fixtures() -> tuple[dict, ...]:
    text = resources.files("hhbv").joinpath("data/fixtures.json").read_text()
    return tuple(json.loads(text)["fixtures"])


def _row(fid: str, expected, computed, match: bool) -> dict:
    return {"fixture-id": fid, "paper-value": str(expected), "computed-value": str(computed), "match": bool(match)}


def _cochain_strs(c) -> list[str]:
    return [str(c.values[g]) for g in generators(c.degree)]


def _values_match(c, expected: list[str]) -> tuple[list[str], bool]:
    exp = [parse_alg(v) for v in expected]
    got = [c.values[g] for g in generators(c.degree)]
    return [str(v) for v in exp], exp == got


def _circ(text: str) -> str:
    """Replace each term ``c|a1|...|an|r`` by the sum of its cyclic rotations
    of the middle slots."""
    out = []
    for chunk in split_top(text, "+"):
        slots = [s.strip() for s in chunk.split("|")]
        mid = slots[1:-1]
        for i in range(len(mid)):
            rot = mid[i:] + mid[:i]
            out.append("|".join([slots[0]] + rot + [slots[-1]]))
    return " + ".join(out)


def _run_t(fx):
    for case in fx["cases"]:
        got = homotopy_t(case["degree"], parse_elem(case["input"]))
        exp = parse_elem(case["expected"])
        yield _row(f"{fx['id']}[{case['key']}]", exp, got, got == exp)


def _run_cochain_bar(fx):
    f = generator(fx["cochain"])
    for w in (WORDS[i] for i in NONUNIT):
        exp = parse_alg(fx["cases"].get(w, fx["default"]))
        got = AlgElem(f.bar_value((INDEX[w],)))
        yield _row(f"{fx['id']}[{w}]", exp, got, got == exp)


def _run_pairing(fx):
    names = ["q1", "q2"] + [f"p{i}*q{j}" for i in range(1, 5) for j in (1, 2)]
    for a in names:
        f = evaluate(a)
        for w in (WORDS[i] for i in NONUNIT):
            key = f"{a}|{w}"
            exp = parse_poly(fx["cases"].get(key, fx["default"]))
            got = trace(f.bar_value((INDEX[w],)))
            yield _row(f"{fx['id']}[{key}]", poly_str(exp), poly_str(got), got == exp)


def _run_psi(fx):
    template = _circ(fx["input"]) if fx.get("circ") else fx["input"]
    for w in (WORDS[i] for i in NONUNIT):
        env = {"b": AlgElem.basis(INDEX[w])}
        chain = parse_bar(template, env)
        n = chain.degree()
        got = psi(n, chain) if n is not None else FreeBimodElem()
        exp = parse_elem(fx["cases"].get(w, fx["default"]))
        yield _row(f"{fx['id']}[{w}]", exp, got, got == exp)


def _phi4_summands(fx) -> list[BarChain]:
    dual_of = indicator_dual if fx.get("dual") == "indicator" else dual
    out = []
    for s in fx["summands"]:
        if s.get("sum_b"):
            total = BarChain()
            for i in NONUNIT:  # a unit middle slot vanishes in the normalized complex
                total = total + parse_bar(s["chain"], {"b": AlgElem.basis(i), "B": dual_of(i)})
            out.append(total)
        else:
            out.append(parse_bar(s["chain"]))
    return out


def _run_phi4(fx):
    summands = _phi4_summands(fx)
    computed = BarChain(_phi_images(4)["1"])
    # group summands by the slots after the leading b (b varies, the tail is fixed)
    groups: dict = {}
    for i, s in enumerate(summands, 1):
        tails = {mid[1:] for (_, mid, _) in s.terms}
        key = tails.pop() if len(tails) == 1 else None
        groups.setdefault(key, []).append((i, s))
    for tail, members in groups.items():
        exp = BarChain()
        for _, s in members:
            exp = exp + s
        got = BarChain({k: v for k, v in computed.terms.items() if k[1][1:] == tail})
        label = ",".join(str(i) for i, _ in members)
        tail_s = "|".join(WORDS[k] for k in tail) if tail is not None else "?"
        yield _row(f"{fx['id']}[summands {label}: b|{tail_s}]", exp, got, got == exp)
    total = BarChain()
    for s in summands:
        total = total + s
    yield _row(f"{fx['id']}[total of {len(summands)} summands]", total, computed, total == computed)


def _run_psi_phi(fx):
    for case in fx["cases"]:
        n = case["degree"]
        got = FreeBimodElem(psi_terms(_phi_images(n)["1"]))
        exp = parse_elem(case["expected"])
        yield _row(f"{fx['id']}[{case['key']}]", exp, got, got == exp)


def _run_pullback(fx):
    for case in fx["cases"]:
        c = generator(case["cochain"]).as_bar().pullback()
        exp, ok = _values_match(c, case["expected"])
        yield _row(f"{fx['id']}[{case['key']}]", _fmt(exp), _fmt(_cochain_strs(c)), ok)


def _run_expr(fx):
    for case in fx["cases"]:
        c = evaluate(case["key"])
        exp, ok = _values_match(c, case["expected"])
        yield _row(f"{fx['id']}[{case['key']}]", _fmt(exp), _fmt(_cochain_strs(c)), ok)


def _run_circle(fx):
    for case in fx["cases"]:
        outer, inner = generator(case["outer"]), generator(case["inner"])
        c = circle_i(outer.as_bar(), inner.as_bar(), case["slot"]).pullback()
        exp, ok = _values_match(c, case["expected"])
        yield _row(f"{fx['id']}[{case['key']}]", _fmt(exp), _fmt(_cochain_strs(c)), ok)


def _run_bracket(fx):
    for case in fx["cases"]:
        c = gerstenhaber_bracket(generator(case["a"]), generator(case["b"]))
        exp, ok = _values_match(c, case["expected"])
        yield _row(f"{fx['id']}[{case['key']}]", _fmt(exp), _fmt(_cochain_strs(c)), ok)


def _fmt(vals: list[str]) -> str:
    return vals[0] if len(vals) == 1 else "(" + ", ".join(vals) + ")"


_RUNNERS = {
    "t": _run_t,
    "cochain_bar": _run_cochain_bar,
    "pairing": _run_pairing,
    "psi": _run_psi,
    "phi4": _run_phi4,
    "psi_phi": _run_psi_phi,
    "pullback": _run_pullback,
    "expr": _run_expr,
    "circle": _run_circle,
    "bracket": _run_bracket,
}


def fixture_ids() -> list[str]:
    return [fx["id"] for fx in load_fixtures()]


def run_fixtures(select=None) -> list[dict]:
    """Diff report for the fixtures whose id starts with one of ``select``
    (all fixtures when ``select`` is ``None``; none for an empty list)."""
    rows = []
    for fx in load_fixtures():
        if select is not None and not any(fx["id"].startswith(s) for s in select):
            continue
        rows.extend(_RUNNERS[fx["kind"]](fx))
    return rows
