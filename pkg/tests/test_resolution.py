from itertools import product

import pytest
from hypothesis import given, strategies as st

from hhbv.algebra import INDEX, NONUNIT, WORDS, AlgElem, derivation_C, indicator_dual
from hhbv.bimodule import FreeBimodElem, act, apply, compose
from hhbv.notation import parse_elem
from hhbv.resolution import (
    BarChain,
    bar_diff,
    casimir,
    homotopy_s,
    homotopy_t,
    kbasis,
    minimal_diff,
    mu,
    rho_one,
)

D = 2


def test_differential_examples():
    assert apply(minimal_diff(0), parse_elem("1|y|1")) == parse_elem("y|1 + 1|y")
    assert apply(minimal_diff(2), parse_elem("1|1")) == parse_elem(
        "x|r_x|1 + 1|r_x|x + y|r_y|1 + 1|r_y|y + d*y|r_y|y + d|r_y|xyx + d^2*y|r_y|xyx")


@pytest.mark.parametrize("n", range(8))
def test_complex(n):
    assert compose(minimal_diff(n), minimal_diff(n + 1)).is_zero()


def test_augmentation():
    for g in ("x", "y"):
        assert mu(apply(minimal_diff(0), parse_elem(f"1|{g}|1"))) == 0


def test_casimir_equals_rho():
    # sum over the indicator duals plus the socle correction d xyx (x) xyx
    terms = FreeBimodElem()
    for b in range(8):
        terms = terms + act(indicator_dual(b), parse_elem("1|1"), AlgElem.basis(b))
    terms = terms + D * parse_elem("xyx|xyx")
    assert casimir() == terms == rho_one()


def test_casimir_is_central():
    c = casimir()
    for w in ("x", "y"):
        a = AlgElem.word(w)
        assert act(a, c, AlgElem.scalar(1)) == act(AlgElem.scalar(1), c, a)


def test_periodicity():
    for n in range(4):
        assert minimal_diff(n) == minimal_diff(n + 4)


def test_homotopy_examples():
    assert homotopy_t(1, parse_elem("x|x|1")) == parse_elem("1|r_x|1")
    assert homotopy_t(2, parse_elem("x|r_x|1")) == parse_elem("1|1")
    assert homotopy_t(3, parse_elem("y|1")) == 0
    for b in range(8):
        expected = FreeBimodElem()
        for c, l, arrow, r in derivation_C(b):
            expected = expected + c * FreeBimodElem({(l, arrow, r): 1})
        assert homotopy_t(0, FreeBimodElem({(b, "1", 0): 1})) == expected


@pytest.mark.parametrize("n", range(9))
def test_homotopy_identity(n):
    for key in kbasis(n):
        e = FreeBimodElem({key: 1})
        out = apply(minimal_diff(n), homotopy_t(n, e))
        if n == 0:
            out = out + homotopy_t(-1, mu(e))
        else:
            out = out + homotopy_t(n - 1, apply(minimal_diff(n - 1), e))
        assert out == e, key


def test_mu_t_minus_one():
    for k in range(8):
        assert mu(homotopy_t(-1, AlgElem.basis(k))) == AlgElem.basis(k)


def test_bar_diff_examples():
    assert bar_diff(1, BarChain.word("1", "x", "1")) == BarChain.word("x", "1") + BarChain.word("1", "x")
    assert bar_diff(2, BarChain.word("1", "x", "x", "1")) == (
        BarChain.word("x", "x", "1") + BarChain.word("1", "yxy", "1") + BarChain.word("1", "x", "x"))


def test_bar_rejects_unit_slot():
    with pytest.raises(ValueError):
        BarChain({(0, (0,), 0): 1})


bar_terms = st.tuples(
    st.integers(0, 7),
    st.lists(st.sampled_from(NONUNIT), min_size=2, max_size=6).map(tuple),
    st.integers(0, 7),
)


@given(st.lists(bar_terms, min_size=1, max_size=4))
def test_bar_complex(keys):
    by_degree = {}
    for k in keys:
        by_degree.setdefault(len(k[1]), {})[k] = 1
    for n, terms in by_degree.items():
        c = BarChain(terms)
        assert bar_diff(n - 1, bar_diff(n, c)) == 0


def test_bar_homotopy_examples():
    assert homotopy_s(0, BarChain.word("x", "1")) == BarChain.word("1", "x", "1")
    assert homotopy_s(0, BarChain.word("1", "x")) == 0
    assert homotopy_s(1, BarChain.word("x", "y", "1")) == BarChain.word("1", "x", "y", "1")


def test_bar_homotopy_identity_low_degrees():
    for n in range(3):
        for mid in product(NONUNIT, repeat=n):
            for l in range(8):
                e = BarChain({(l, mid, 0): 1})
                out = bar_diff(n + 1, homotopy_s(n, e))
                out = out + (homotopy_s(n - 1, bar_diff(n, e)) if n else homotopy_s(-1, mu(e)))
                assert out == e, (WORDS[l], mid)
