"""Parsing of the plain-text notation used for fixtures and tables.

Algebra expressions use ``x``, ``y``, the scalar ``d``, ``0``/``1``,
juxtaposition or ``*`` for products, ``^n`` for powers, parentheses and
``+``.  Placeholders ``b`` and ``B`` stand for a basis word and its dual
when an environment is supplied.  Tensor slots are separated by ``|``::

    "d*y|r_x|xyxy + 1|r_y|xy"   # element of R (x) KQ (x) R
    "xyx|1 + 1|yx"              # element of R (x) R (generator "1")
    "1|b|x|x|x|B"               # bar chain with placeholders
"""

from __future__ import annotations

import re

from .algebra import AlgElem, ONE_IDX, WORDS
from .bimodule import FreeBimodElem, acc, act_terms
from .coeff import poly_mul

_TOKEN = re.compile(r"\s*(?:(\d+)|([xydbB])|(\^)|(\()|(\))|(\+)|(\*))")

GENERATOR_NAMES = ("x", "y", "r_x", "r_y")


def _tokenize(text: str):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"unexpected character in {text!r} at {pos}")
        num, atom, caret, lp, rp, plus, star = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif atom:
            out.append(("atom", atom))
        elif caret:
            out.append(("^", None))
        elif lp:
            out.append(("(", None))
        elif rp:
            out.append((")", None))
        elif plus:
            out.append(("+", None))
        else:
            out.append(("*", None))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text, env):
        self.toks = _tokenize(text)
        self.i = 0
        self.env = env or {}
        self.text = text

    def peek(self):
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def take(self, kind):
        if self.peek() != kind:
            raise ValueError(f"expected {kind!r} in {self.text!r}")
        tok = self.toks[self.i]
        self.i += 1
        return tok[1]

    def expr(self) -> AlgElem:
        val = self.term()
        while self.peek() == "+":
            self.take("+")
            val = val + self.term()
        return val

    def term(self) -> AlgElem:
        val = self.factor()
        while self.peek() in ("*", "num", "atom", "("):
            if self.peek() == "*":
                self.take("*")
            val = val * self.factor()
        return val

    def factor(self) -> AlgElem:
        val = self.atom()
        if self.peek() == "^":
            self.take("^")
            n = self.take("num")
            out = AlgElem.scalar(1)
            for _ in range(n):
                out = out * val
            val = out
        return val

    def atom(self) -> AlgElem:
        kind = self.peek()
        if kind == "num":
            n = self.take("num")
            if n not in (0, 1):
                raise ValueError(f"only the constants 0 and 1 exist in characteristic 2 notation: {self.text!r}")
            return AlgElem.scalar(n)
        if kind == "(":
            self.take("(")
            val = self.expr()
            self.take(")")
            return val
        name = self.take("atom")
        if name == "d":
            return AlgElem.scalar(2)
        if name in "xy":
            return AlgElem.word(name)
        if name not in self.env:
            raise ValueError(f"placeholder {name!r} used without a value in {self.text!r}")
        return self.env[name]

    def parse(self) -> AlgElem:
        val = self.expr()
        if self.i != len(self.toks):
            raise ValueError(f"trailing input in {self.text!r}")
        return val


def parse_alg(text: str, env: dict | None = None) -> AlgElem:
    """Parse an algebra expression into an :class:`AlgElem`."""
    return _Parser(text, env).parse()


def split_top(text: str, sep: str) -> list[str]:
    """Split on ``sep`` outside parentheses."""
    out, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return out


def parse_elem(text: str, env: dict | None = None) -> FreeBimodElem:
    """Parse an element of a term of the minimal resolution.

    Two slots ``a|b`` give ``a (x) b`` in R (x) R (generator ``"1"``); three
    slots ``a|g|b`` use the middle slot as a generator name.
    """
    terms: dict = {}
    text = text.strip()
    if text == "0":
        return FreeBimodElem()
    for chunk in split_top(text, "+"):
        slots = [s.strip() for s in chunk.split("|")]
        if len(slots) == 2:
            gen = "1"
        elif len(slots) == 3 and slots[1] in GENERATOR_NAMES:
            gen = slots[1]
        else:
            raise ValueError(f"cannot read {chunk!r} as a resolution element")
        left = parse_alg(slots[0], env)
        right = parse_alg(slots[-1], env)
        for k, v in act_terms(left.terms, {(0, gen, 0): 1}, right.terms).items():
            acc(terms, k, v)
    return FreeBimodElem(terms)


def parse_bar(text: str, env: dict | None = None):
    """Parse an element of the normalized bar resolution ``R (x) Rbar^n (x) R``.

    Middle slots are expanded multilinearly; a nonzero identity component in a
    middle slot is rejected (the normalized complex has no such slot).
    """
    from .resolution import BarChain

    terms: dict = {}
    text = text.strip()
    if text == "0":
        return BarChain()
    for chunk in split_top(text, "+"):
        slots = [s.strip() for s in chunk.split("|")]
        if len(slots) < 2:
            raise ValueError(f"bar chain term {chunk!r} needs at least two slots")
        vals = [parse_alg(s, env) for s in slots]
        partial = [((), 1)]
        for v in vals[1:-1]:
            if v.coeff(ONE_IDX):
                raise ValueError(f"middle slot of {chunk!r} has an identity component")
            partial = [(mid + (k,), poly_mul(c, ck)) for mid, c in partial for k, ck in v]
        for mid, c in partial:
            for k, v in act_terms(vals[0].terms, {(0, mid, 0): c}, vals[-1].terms).items():
                acc(terms, k, v)
    return BarChain(terms)


def basis_env(idx: int) -> dict:
    """Placeholder environment ``b -> basis word``, ``B -> its dual``."""
    from .algebra import dual

    return {"b": AlgElem.basis(idx), "B": dual(idx)}


def word_name(idx: int) -> str:
    return WORDS[idx]
