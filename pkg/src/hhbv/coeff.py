"""Arithmetic in GF(2)[d] and in the finite fields GF(2^k).

A polynomial in the formal parameter ``d`` is stored as a plain Python
``int`` read as a bit mask: bit ``k`` is the coefficient of ``d**k``.  Zero
is ``0``, one is ``1``, ``d`` is ``2``.  Addition is exclusive-or, so every
value is canonical by construction and ``p + p == 0`` is ``p ^ p == 0``.

Elements of GF(2^k) are residues modulo an irreducible polynomial of degree
``k`` over GF(2), stored the same way (as ints of bit length <= k).
"""

from __future__ import annotations

import re
from functools import lru_cache

PolyF2 = int

ZERO = 0
ONE = 1
D = 2


def poly_add(a: PolyF2, b: PolyF2) -> PolyF2:
    return a ^ b


@lru_cache(maxsize=4096)
def _clmul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def poly_mul(a: PolyF2, b: PolyF2) -> PolyF2:
    """Carry-less product, i.e. multiplication in GF(2)[d]."""
    if a == 0 or b == 0:
        return 0
    if a == 1:
        return b
    if b == 1:
        return a
    if a > b:
        a, b = b, a
    return _clmul(a, b)


def poly_degree(a: PolyF2) -> int:
    """Degree in d; the zero polynomial has degree -1."""
    return a.bit_length() - 1


def poly_divmod(a: PolyF2, b: PolyF2) -> tuple[PolyF2, PolyF2]:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    q = 0
    db = b.bit_length()
    while a and a.bit_length() >= db:
        shift = a.bit_length() - db
        q ^= 1 << shift
        a ^= b << shift
    return q, a


def poly_gcd(a: PolyF2, b: PolyF2) -> PolyF2:
    while b:
        a, b = b, poly_divmod(a, b)[1]
    return a


def poly_pow(a: PolyF2, n: int) -> PolyF2:
    out = 1
    for _ in range(n):
        out = poly_mul(out, a)
    return out


def poly_compose(p: PolyF2, q: PolyF2) -> PolyF2:
    """``p(q)``: substitute the polynomial ``q`` for ``d`` in ``p``.

    This is the ring endomorphism of GF(2)[d] sending ``d`` to ``q``; with a
    constant ``q`` in {0, 1} it is evaluation at that constant.
    """
    out = 0
    for k in range(p.bit_length() - 1, -1, -1):
        out = poly_mul(out, q) ^ ((p >> k) & 1)
    return out


# -- serialization -----------------------------------------------------------

def poly_to_bits(a: PolyF2) -> str:
    """Little-endian bit string: ``"1101"`` is ``1 + d + d^3``; zero is ``"0"``."""
    if a == 0:
        return "0"
    return format(a, "b")[::-1]


def poly_from_bits(s: str) -> PolyF2:
    if not s or any(ch not in "01" for ch in s):
        raise ValueError(f"not a little-endian bit string: {s!r}")
    return int(s[::-1], 2)


def poly_str(a: PolyF2) -> str:
    """Human-readable form, highest degree first, e.g. ``"d^2 + 1"``."""
    if a == 0:
        return "0"
    parts = []
    for k in range(a.bit_length() - 1, -1, -1):
        if (a >> k) & 1:
            parts.append("1" if k == 0 else "d" if k == 1 else f"d^{k}")
    return " + ".join(parts)


_MONO = re.compile(r"^(?:(1)|d(?:\^(\d+))?)$")


def parse_poly(text: str) -> PolyF2:
    """Parse ``"d^3 + d + 1"``-style text (also accepts a bare bit string
    prefixed with ``0b`` for big-endian masks)."""
    text = text.strip()
    if text.startswith("0b"):
        return int(text, 2)
    if text == "0":
        return 0
    out = 0
    for piece in text.replace(" ", "").split("+"):
        m = _MONO.match(piece)
        if not m:
            raise ValueError(f"cannot parse polynomial term {piece!r} in {text!r}")
        if m.group(1):
            out ^= 1
        else:
            out ^= 1 << (int(m.group(2)) if m.group(2) else 1)
    return out


# -- finite fields -------------------------------------------------------------

def is_irreducible(modulus: int) -> bool:
    """Irreducibility over GF(2) by trial division (moduli here are tiny)."""
    deg = poly_degree(modulus)
    if deg < 1:
        return False
    for cand in range(2, 1 << (deg // 2 + 1)):
        if poly_degree(cand) > deg // 2:
            break
        if poly_divmod(modulus, cand)[1] == 0:
            return False
    return True


def default_modulus(k: int) -> int:
    """Smallest irreducible polynomial of degree ``k``."""
    if k < 1:
        raise ValueError("field degree must be positive")
    for m in range(1 << k, 1 << (k + 1)):
        if is_irreducible(m):
            return m
    raise AssertionError("unreachable: irreducibles exist in every degree")


class GF2k:
    """The field GF(2^k) realised as GF(2)[z]/(modulus)."""

    def __init__(self, k: int, modulus: int | None = None):
        if modulus is None:
            modulus = default_modulus(k)
        if poly_degree(modulus) != k:
            raise ValueError(f"modulus {modulus:#b} does not have degree {k}")
        if not is_irreducible(modulus):
            raise ValueError(f"modulus {modulus:#b} is reducible; GF(2^{k}) needs an irreducible one")
        self.k = k
        self.modulus = modulus
        self.order = 1 << k

    def __repr__(self):
        return f"GF2k(k={self.k}, modulus={self.modulus:#b})"

    def __eq__(self, other):
        return isinstance(other, GF2k) and (self.k, self.modulus) == (other.k, other.modulus)

    def __hash__(self):
        return hash((self.k, self.modulus))

    def elements(self) -> range:
        return range(self.order)

    def reduce(self, a: int) -> int:
        return poly_divmod(a, self.modulus)[1]

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        return self.reduce(poly_mul(a, b))

    def pow(self, a: int, n: int) -> int:
        out = 1
        while n:
            if n & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            n >>= 1
        return out

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        # a^(2^k - 2) = a^{-1} in the multiplicative group
        return self.pow(a, self.order - 2)


def specialize(p: PolyF2, value: int, field: GF2k) -> int:
    """Evaluate ``p`` at ``d = value`` inside ``field`` (Horner)."""
    out = 0
    for k in range(p.bit_length() - 1, -1, -1):
        out = field.mul(out, value)
        if (p >> k) & 1:
            out ^= 1
    return out
