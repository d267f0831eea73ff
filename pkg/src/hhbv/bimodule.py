"""Free bimodules over R (left R-module structure of Lambda = R (x) R^op).

An element of a free bimodule is a finite sum of ``left (x) g (x) right`` with
``left``/``right`` basis words of R (stored as indices into
:data:`hhbv.algebra.WORDS`) and ``g`` a generator.  Generators are any
hashable label: the minimal resolution uses names ``"1"``, ``"x"``, ``"y"``,
``"r_x"``, ``"r_y"``, the bar resolution uses tuples of basis indices (the
middle slots of ``1 (x) a1 (x) ... (x) an (x) 1``).
"""

from __future__ import annotations

from .algebra import MUL_TABLE, WORDS, INDEX, AlgElem
from .coeff import PolyF2, poly_mul, poly_str, poly_to_bits, poly_from_bits

Key = tuple  # (left_idx, generator, right_idx)


def acc(out: dict, key, c: PolyF2) -> None:
    """``out[key] += c`` in characteristic 2, dropping zeros."""
    v = out.get(key, 0) ^ c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


def act_terms(left: dict[int, PolyF2], terms: dict, right: dict[int, PolyF2]) -> dict:
    out: dict = {}
    for (l, g, r), c in terms.items():
        for a, ca in left.items():
            lprod = MUL_TABLE[a][l]
            if not lprod:
                continue
            cac = poly_mul(ca, c)
            for b, cb in right.items():
                rprod = MUL_TABLE[r][b]
                if not rprod:
                    continue
                cc = poly_mul(cac, cb)
                for l2, c1 in lprod:
                    cl = poly_mul(cc, c1)
                    for r2, c2 in rprod:
                        acc(out, (l2, g, r2), poly_mul(cl, c2))
    return out


def lmul_basis(a: int, terms: dict) -> dict:
    """``a . terms`` for a single basis word ``a``."""
    if a == 0:
        return dict(terms)
    out: dict = {}
    row = MUL_TABLE[a]
    for (l, g, r), c in terms.items():
        for l2, c1 in row[l]:
            acc(out, (l2, g, r), poly_mul(c, c1))
    return out


def rmul_basis(terms: dict, b: int) -> dict:
    if b == 0:
        return dict(terms)
    out: dict = {}
    for (l, g, r), c in terms.items():
        for r2, c1 in MUL_TABLE[r][b]:
            acc(out, (l, g, r2), poly_mul(c, c1))
    return out


def add_terms(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        acc(out, k, v)
    return out


def scale_terms(terms: dict, c: PolyF2) -> dict:
    if c == 1:
        return dict(terms)
    return {k: poly_mul(c, v) for k, v in terms.items()} if c else {}


def _gen_str(g) -> str:
    if isinstance(g, tuple):
        return "|".join(WORDS[i] for i in g)
    return str(g)


class FreeBimodElem:
    """Element of a free R-bimodule; ``terms`` maps (left, gen, right) -> coeff."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def gen(cls, g, left="1", right="1", coeff: PolyF2 = 1):
        """``left (x) g (x) right`` where left/right may be words or AlgElems."""
        la = left if isinstance(left, AlgElem) else AlgElem.word(left)
        ra = right if isinstance(right, AlgElem) else AlgElem.word(right)
        return cls(act_terms(la.terms, {(0, g, 0): coeff}, ra.terms))

    def __add__(self, other):
        return type(self)(add_terms(self.terms, other.terms))

    __sub__ = __add__

    def __rmul__(self, c: PolyF2):
        return type(self)(scale_terms(self.terms, c))

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, FreeBimodElem) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items(), key=_sort_key))

    def generators(self) -> set:
        return {g for (_, g, _) in self.terms}

    def __repr__(self):
        return f"{type(self).__name__}({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (l, g, r), c in self:
            body = f"{WORDS[l]}|{_gen_str(g)}|{WORDS[r]}" if _gen_str(g) else f"{WORDS[l]}|{WORDS[r]}"
            if isinstance(g, str) and g == "1":
                body = f"{WORDS[l]}|{WORDS[r]}"
            cs = poly_str(c)
            parts.append(body if c == 1 else f"({cs})*{body}" if "+" in cs else f"{cs}*{body}")
        return " + ".join(parts)

    def to_json(self):
        return [
            {"gen": g if isinstance(g, str) else [WORDS[i] for i in g],
             "left": WORDS[l], "right": WORDS[r], "coeff": poly_to_bits(c)}
            for (l, g, r), c in self
        ]

    @classmethod
    def from_json(cls, data):
        terms: dict = {}
        for item in data:
            g = item["gen"]
            if isinstance(g, list):
                g = tuple(INDEX[w] for w in g)
            acc(terms, (INDEX[item["left"]], g, INDEX[item["right"]]), poly_from_bits(item["coeff"]))
        return cls(terms)


def _sort_key(item):
    (l, g, r), _ = item
    return (isinstance(g, tuple), len(g) if isinstance(g, tuple) else 0, str(g) if isinstance(g, str) else g, l, r)


def act(left: AlgElem, e: FreeBimodElem, right: AlgElem) -> FreeBimodElem:
    """``left . e . right``."""
    return type(e)(act_terms(left.terms, e.terms, right.terms))


class BimodMap:
    """A bimodule map out of a free bimodule, stored by generator images.

    ``images`` maps each source generator to a :class:`FreeBimodElem` in the
    target.  Evaluation is the bilinear extension ``a (x) g (x) b -> a . m(g) . b``.
    """

    def __init__(self, images: dict, target_cls=FreeBimodElem, name: str = ""):
        self.images = {g: (v.terms if isinstance(v, FreeBimodElem) else dict(v)) for g, v in images.items()}
        self.target_cls = target_cls
        self.name = name

    @property
    def source(self) -> tuple:
        return tuple(self.images)

    def image(self, g) -> FreeBimodElem:
        return self.target_cls(self.images[g])

    def __call__(self, e: FreeBimodElem) -> FreeBimodElem:
        return apply(self, e)

    def __eq__(self, other):
        return isinstance(other, BimodMap) and self.images == other.images

    def is_zero(self) -> bool:
        return not any(self.images.values())

    def __repr__(self):
        body = ", ".join(f"{_gen_str(g)} -> {self.target_cls(v)}" for g, v in self.images.items())
        return f"BimodMap({self.name}: {body})"


def apply_terms(images: dict, terms: dict) -> dict:
    out: dict = {}
    for (l, g, r), c in terms.items():
        try:
            img = images[g]
        except KeyError:
            raise KeyError(f"generator {_gen_str(g)!r} is not in the source of the map") from None
        lrow = MUL_TABLE[l]
        for (l2, g2, r2), c2 in img.items():
            lprod = lrow[l2]
            if not lprod:
                continue
            rprod = MUL_TABLE[r2][r]
            if not rprod:
                continue
            cc = poly_mul(c, c2)
            for l3, c3 in lprod:
                cl = poly_mul(cc, c3)
                for r3, c4 in rprod:
                    acc(out, (l3, g2, r3), poly_mul(cl, c4))
    return out


def apply(m: BimodMap, e: FreeBimodElem) -> FreeBimodElem:
    return m.target_cls(apply_terms(m.images, e.terms))


def compose(m2: BimodMap, m1: BimodMap) -> BimodMap:
    """``m2 o m1`` (apply ``m1`` first)."""
    for img in m1.images.values():
        for (_, g, _) in img:
            if g not in m2.images:
                raise ValueError(f"shape mismatch: {_gen_str(g)!r} is not a source generator of {m2.name or 'the outer map'}")
    return BimodMap({g: apply_terms(m2.images, img) for g, img in m1.images.items()},
                    target_cls=m2.target_cls, name=f"{m2.name}o{m1.name}")


def identity_map(gens) -> BimodMap:
    return BimodMap({g: {(0, g, 0): 1} for g in gens}, name="id")
