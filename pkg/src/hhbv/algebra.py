"""The local symmetric algebra R = K<x, y> / I of quaternion type R(2, 0, d).

The ideal is generated by ``x^2 + yxy``, ``y^2 + xyx + d(xy)^2``,
``x(yx)^2`` and ``y(xy)^2``.  R is 8-dimensional with basis words::

    1, x, y, xy, yx, xyx, yxy, xyxy

and ``xyxy = (xy)^2`` spans the socle.  Elements are :class:`AlgElem`
values with coefficients in GF(2)[d] (bit-mask ints, see :mod:`hhbv.coeff`).
"""

from __future__ import annotations

from functools import lru_cache

from .coeff import PolyF2, poly_mul, poly_str, poly_to_bits, poly_from_bits
from .linsolve import invert_poly

WORDS = ("1", "x", "y", "xy", "yx", "xyx", "yxy", "xyxy")
INDEX = {w: i for i, w in enumerate(WORDS)}
ONE_IDX = 0
SOCLE_IDX = 7
NONUNIT = tuple(range(1, 8))  # basis of R/K.1 used in normalized bar slots

# Oriented rewriting rules, applied leftmost-first.  Every rule either
# lengthens a word or keeps its length and lowers it lexicographically,
# and words of length >= 5 vanish (R has Loewy length 5), so the measure
# (5 - length, word) strictly decreases and rewriting terminates.
RULES = (
    ("xx", (("yxy", 1),)),
    ("yy", (("xyx", 1), ("xyxy", 2))),
    ("yxyx", (("xyxy", 1),)),
    ("xyxyx", ()),
    ("yxyxy", ()),
)
MAX_LEN = 4


def _rewrite_once(word: str):
    if len(word) > MAX_LEN:
        return ()
    for pos in range(len(word)):
        for lhs, rhs in RULES:
            if word.startswith(lhs, pos):
                head, tail = word[:pos], word[pos + len(lhs):]
                return tuple((head + w + tail, c) for w, c in rhs)
    return None


@lru_cache(maxsize=None)
def _normal_terms(word: str) -> tuple[tuple[int, PolyF2], ...]:
    if any(ch not in "xy" for ch in word):
        raise ValueError(f"word {word!r} is not over the alphabet {{x, y}}")
    todo = {word: 1}
    done: dict[int, PolyF2] = {}
    while todo:
        w, c = todo.popitem()
        step = _rewrite_once(w)
        if step is None:
            k = INDEX[w or "1"]
            done[k] = done.get(k, 0) ^ c
            continue
        for w2, c2 in step:
            todo[w2] = todo.get(w2, 0) ^ poly_mul(c, c2)
            if not todo[w2]:
                del todo[w2]
    return tuple(sorted((k, v) for k, v in done.items() if v))


def _build_table():
    return tuple(
        tuple(_normal_terms((WORDS[i] + WORDS[j]).replace("1", "")) for j in range(8))
        for i in range(8)
    )


MUL_TABLE = _build_table()


def mul_terms(a: dict[int, PolyF2], b: dict[int, PolyF2]) -> dict[int, PolyF2]:
    """Product of two coordinate dicts (the raw form behind :class:`AlgElem`)."""
    out: dict[int, PolyF2] = {}
    for i, ca in a.items():
        row = MUL_TABLE[i]
        for j, cb in b.items():
            c = poly_mul(ca, cb)
            for k, ck in row[j]:
                v = out.get(k, 0) ^ poly_mul(c, ck)
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
    return out


class AlgElem:
    """An element of R as a map basis-index -> nonzero GF(2)[d] coefficient."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        self.terms = {k: v for k, v in terms.items() if v}
        self._hash = None

    @classmethod
    def word(cls, w: str, coeff: PolyF2 = 1) -> "AlgElem":
        """The image of a word over {x, y} (``""`` or ``"1"`` is the unit)."""
        w = "" if w == "1" else w
        return cls({k: poly_mul(coeff, c) for k, c in _normal_terms(w)})

    @classmethod
    def basis(cls, idx: int, coeff: PolyF2 = 1) -> "AlgElem":
        return cls({idx: coeff})

    @classmethod
    def scalar(cls, c: PolyF2) -> "AlgElem":
        return cls({ONE_IDX: c})

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) ^ v
        return AlgElem(out)

    __sub__ = __add__

    def __mul__(self, other):
        if isinstance(other, AlgElem):
            return AlgElem(mul_terms(self.terms, other.terms))
        return self.scale(other)

    def __rmul__(self, c):
        return self.scale(c)

    def scale(self, c: PolyF2) -> "AlgElem":
        return AlgElem({k: poly_mul(c, v) for k, v in self.terms.items()})

    def coeff(self, w) -> PolyF2:
        k = INDEX[w] if isinstance(w, str) else w
        return self.terms.get(k, 0)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, AlgElem) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def __repr__(self):
        return f"AlgElem({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, c in sorted(self.terms.items()):
            w = WORDS[k]
            if c == 1:
                parts.append(w)
            elif k == ONE_IDX:
                parts.append(poly_str(c) if "+" not in poly_str(c) else f"({poly_str(c)})")
            else:
                cs = poly_str(c)
                parts.append(f"({cs})*{w}" if "+" in cs else f"{cs}*{w}")
        return " + ".join(parts)

    def to_json(self):
        return [{"word": WORDS[k], "coeff": poly_to_bits(c)} for k, c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, data) -> "AlgElem":
        out = AlgElem()
        for item in data:
            out = out + cls.basis(INDEX[item["word"]], poly_from_bits(item["coeff"]))
        return out


def normal_form(word: str) -> AlgElem:
    """Image of a free word in R, expressed in the basis ``WORDS``."""
    return AlgElem.word(word)


def mul(a: AlgElem, b: AlgElem) -> AlgElem:
    return a * b


def bilinear_form(a: AlgElem, b: AlgElem) -> PolyF2:
    """Coefficient of the socle word ``xyxy`` in ``a*b``."""
    return mul_terms(a.terms, b.terms).get(SOCLE_IDX, 0)


def gram_matrix() -> list[list[PolyF2]]:
    return [[bilinear_form(AlgElem.basis(i), AlgElem.basis(j)) for j in range(8)] for i in range(8)]


@lru_cache(maxsize=None)
def _dual_terms() -> tuple[tuple[tuple[int, PolyF2], ...], ...]:
    inv = invert_poly(gram_matrix())
    # row i of G^{-1} holds the coordinates of the dual of basis word i
    return tuple(tuple((k, c) for k, c in enumerate(inv[i]) if c) for i in range(8))


def dual_basis() -> dict[str, AlgElem]:
    """``b -> b*`` with ``bilinear_form(b*, c) == [b == c]`` on the basis."""
    return {WORDS[i]: AlgElem(dict(t)) for i, t in enumerate(_dual_terms())}


def dual(idx: int) -> AlgElem:
    return AlgElem(dict(_dual_terms()[idx]))


def indicator_gram_matrix() -> list[list[PolyF2]]:
    """The 0/1 pairing ``[b1*b2 is a nonzero multiple of xyxy]`` on basis words.

    Unlike :func:`bilinear_form` this ignores the ``d``-dependent socle
    component of products such as ``y*y = xyx + d*xyxy``; it is not
    associative for ``d != 0`` and is provided for comparison only.
    """
    out = []
    for i in range(8):
        row = []
        for j in range(8):
            terms = MUL_TABLE[i][j]
            row.append(int(len(terms) == 1 and terms[0][0] == SOCLE_IDX))
        out.append(row)
    return out


@lru_cache(maxsize=None)
def _indicator_dual_terms():
    inv = invert_poly(indicator_gram_matrix())
    return tuple(tuple((k, c) for k, c in enumerate(inv[i]) if c) for i in range(8))


def indicator_dual(idx: int) -> AlgElem:
    """Dual of a basis word for :func:`indicator_gram_matrix`."""
    return AlgElem(dict(_indicator_dual_terms()[idx]))


def derivation_C(b) -> list[tuple[PolyF2, int, str, int]]:
    """The path derivation on a basis word, ``a1..an -> sum a1..a(i-1) (x) ai (x) a(i+1)..an``.

    Accepts a basis index, a canonical word or an :class:`AlgElem` (extended
    linearly over the basis).  Returns terms ``(coeff, left_idx, arrow, right_idx)``.
    """
    if isinstance(b, AlgElem):
        out: dict[tuple[int, str, int], PolyF2] = {}
        for k, c in b:
            for c2, l, arrow, r in derivation_C(k):
                key = (l, arrow, r)
                out[key] = out.get(key, 0) ^ poly_mul(c, c2)
        return [(c, l, a, r) for (l, a, r), c in sorted(out.items()) if c]
    word = WORDS[b] if isinstance(b, int) else b
    if word == "1":
        return []
    terms = []
    for i, arrow in enumerate(word):
        left = INDEX[word[:i] or "1"]
        right = INDEX[word[i + 1:] or "1"]
        terms.append((1, left, arrow, right))
    return terms
