import pytest
from hypothesis import given, strategies as st

from hhbv.algebra import AlgElem
from hhbv.bv import Cochain, is_coboundary
from hhbv.catalog import (
    GENERATORS,
    NAMES,
    RELATIONS,
    GenPoly,
    check_ideal_relations,
    delta_row,
    evaluate,
    find_normal_form,
    generator,
    parse_expr,
    reference_table,
    same_class,
    table_inputs,
)

D = 2


def test_catalog_degrees():
    degs = {n: generator(n).degree for n in NAMES}
    assert degs == {"p1": 0, "p2": 0, "p3": 0, "p4": 0, "q1": 1, "q2": 1,
                    "w1": 2, "w2": 2, "w3": 2, "e": 4}


@pytest.mark.parametrize("name", NAMES)
def test_generators_are_cocycles(name):
    assert generator(name).is_cocycle()


@pytest.mark.parametrize("name", ["q1", "q2", "w1", "w2", "w3", "e"])
def test_generators_are_not_coboundaries(name):
    assert not is_coboundary(generator(name))


def test_parser():
    assert parse_expr("q1 q1") == parse_expr("q1^2") == parse_expr("q1*q1")
    assert parse_expr("d*(p1+1)*w2") == parse_expr("d*p1*w2 + d*w2")
    assert parse_expr("q1 + q1") == GenPoly()
    assert str(parse_expr("q1^2+w1+d*(p1+1)*w2")) == "w1 + d*w2 + d*p1*w2 + q1^2"
    assert str(parse_expr("(d+1)*w2")) == "(d+1)*w2"


@pytest.mark.parametrize("bad", ["x", "p5", "(q1", "q1 +", "2*q1", "q1 + w1", ""])
def test_parser_errors(bad):
    with pytest.raises(ValueError):
        parse_expr(bad)


exprs = st.lists(st.sampled_from(NAMES), min_size=1, max_size=3).map("*".join)


@given(exprs, exprs)
def test_parser_product_is_commutative(a, b):
    assert parse_expr(f"({a})*({b})") == parse_expr(f"{b} {a}")


@given(exprs)
def test_str_roundtrip(a):
    p = parse_expr(a)
    assert parse_expr(str(p)) == p


def test_evaluate_substitution():
    f = evaluate("d*p1")
    assert f.values["1"] == AlgElem({3: D, 4: D})
    assert evaluate("d*p1", subst=0).is_zero()
    assert evaluate("d*p1", subst=1) == evaluate("p1")
    with pytest.raises(ValueError):
        evaluate("0")
    assert evaluate("0", degree=3) == Cochain.zero(3)


def test_relation_records():
    rows = {r["relation"]: r for r in check_ideal_relations()}
    assert sum(len(v) for v in RELATIONS.values()) == len(rows)
    assert rows["p3*q1 + p2*q2"]["coboundary"]
    assert rows["w1*w2"]["coboundary"]
    # q1*q2 is a coboundary but its representative is not the zero cochain
    assert rows["q1*q2"]["coboundary"] and not rows["q1*q2"]["zero"]


def test_failing_degree_three_relations():
    # neither representative is a coboundary over GF(2)[d]
    f = evaluate("q1*w1 + q2*w1 + q1*w3 + p1*q1*w1")
    assert f == Cochain.from_values(3, AlgElem({4: 3, 7: 3}))  # (d+1)(yx + xyxy)
    assert not is_coboundary(f)
    g = evaluate("q1*w1 + q1*w2 + q2*w3 + p1*q1*w1")
    assert g == Cochain.from_values(3, AlgElem({4: 1, 5: D, 7: 1}))
    assert not is_coboundary(g)


def test_degree_three_coboundaries_at_d0():
    # at d = 0 the coboundaries in degree 3 are spanned by xy+yx, xyx, yxy
    from hhbv.bv import coboundary_matrix
    from hhbv.linsolve import solve_poly

    m = coboundary_matrix(3, 0)
    for terms, ok in (({3: 1, 4: 1}, True), ({5: 1}, True), ({6: 1}, True),
                      ({4: 1}, False), ({7: 1}, False), ({0: 1}, False)):
        rhs = [terms.get(k, 0) for k in range(8)]
        assert (solve_poly(m, rhs) is not None) == ok, terms


def test_reference_table():
    ref = reference_table()
    assert len(ref) == 19
    assert str(ref[("q1",)]) == "d*p1"
    assert ref[("q2", "e")] == parse_expr("d*p2*e")


def test_table_inputs():
    inputs = table_inputs()
    assert len(inputs) == 10 + 55
    assert ("e", "e") in inputs and ("p1",) in inputs


def test_delta_rows():
    row = delta_row(("p1", "q1"))
    assert row["delta"] == str(parse_expr("p2 + d*p1")) and row["match"]
    row = delta_row(("q1",), subst=1)
    assert row["delta"] == "p1" and row["match"]
    row = delta_row(("q1",), subst=0)
    assert row["delta"] == "0" and row["match"]
    row = delta_row(("p1", "p2"))
    assert row["raw"] is None and row["delta"] == "0"
    assert set(delta_row(("w1",))) >= {"input", "degree", "delta", "raw", "reduced_by_coboundary"}


def test_find_normal_form():
    f = evaluate("q1^2 + w1")
    nf = find_normal_form(f)
    assert nf is not None and same_class(evaluate(nf, 2), f)


def test_generator_values_match_catalog_strings():
    assert GENERATORS["q1"] == (1, ("y", "1+d*y+xy"))
    assert generator("w3").values["r_y"] == AlgElem({1: 1, 3: D})
