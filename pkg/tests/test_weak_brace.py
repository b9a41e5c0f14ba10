import pytest

from starbrace import get_entry
from starbrace.search import labeled_star_semigroups, star_semigroups
from starbrace.star_semigroup import classify
from starbrace.table_core import InputError, Witness
from starbrace.weak_brace import (
    ClassPreconditionError,
    WeakStarBrace,
    additive_inverse,
    bridge_check,
    construct_from_semigroup,
    inverse_equivalents,
    structure_report,
    validate_wsb,
    wsb_identity_suite,
)

GROUPS = (
    "basic",
    "projection_shift",
    "projection_sums",
    "projection_action",
    "absorption",
    "insertion",
    "projection_insertion",
    "lambda_support",
    "lambda_rho",
    "factorization",
)


def test_klein_rs_fails_negation_axiom():
    e = get_entry("klein_rs")
    w = validate_wsb(e.algebra.add, e.neg, e.algebra.mul, e.algebra.star)
    assert isinstance(w, Witness)
    assert w.axiom == "wsb_negation"
    assert w.tuple == (e.idx("f"),)
    assert (w.lhs, w.rhs) == (e.idx("f"), e.idx("e"))


def test_klein_rs_bridge_failure_at_f_f():
    e = get_entry("klein_rs")
    A, neg, i = e.algebra, e.neg, e.idx
    f = i("f")
    lhs = A.add[neg[f]][A.mul[f][f]]
    rhs = A.lam(f, f)
    assert (lhs, rhs) == (i("h"), i("e"))
    assert A.add[f][i("e")] == i("h") and A.add[f][f] == f
    rep = bridge_check(A, neg)
    assert rep.is_left
    assert not rep.bridge_axiom.holds
    assert not rep.wsb_valid


def test_klein_rs_reduct_classes():
    e = get_entry("klein_rs")
    from starbrace.star_semigroup import StarSemigroup
    add_cls = classify(StarSemigroup(e.algebra.add, e.neg))
    assert add_cls.cro_li
    mul_cls = classify(e.semigroup)
    assert mul_cls.o_li


def test_catalog_weak_braces_pass_everything():
    for name in ("s3_skewbrace", "d8_brace", "z8_brace"):
        W = get_entry(name).structure
        assert isinstance(W, WeakStarBrace)
        suite = wsb_identity_suite(W)
        assert {item.ident.split(":")[0] for item in suite} == set(GROUPS)
        assert all(item.holds for item in suite)
        assert inverse_equivalents(W).verdict
        st = structure_report(W)
        assert st.additive_cro_li and st.multiplicative_o_li
        assert st.additive_monoid and st.multiplicative_monoid


def test_constructions():
    c3 = get_entry("c3").semigroup
    W = construct_from_semigroup(c3, "left")
    assert W.add == c3.mul and W.neg == c3.star
    rect = get_entry("rect22").semigroup
    with pytest.raises(ClassPreconditionError) as info:
        construct_from_semigroup(rect, "left")
    assert info.value.missing == "clifford"
    assert info.value.witness.axiom == "xx*=x*x"
    W = construct_from_semigroup(rect, "reversed")
    assert W.add[0][1] == rect.mul[1][0]
    assert not inverse_equivalents(W).verdict
    assert not structure_report(W).multiplicative_monoid
    with pytest.raises(InputError):
        construct_from_semigroup(c3, "sideways")


def test_reversed_needs_cro_li(monkeypatch):
    # every model of order at most 4 is cro_li; the first exceptions have order 5
    monkeypatch.setenv("STARBRACE_MAX_ORDER", "5")
    S = next(S for S in star_semigroups(5) if not classify(S).cro_li)
    with pytest.raises(ClassPreconditionError) as info:
        construct_from_semigroup(S, "reversed")
    assert info.value.missing == "cro_li"


def test_constructions_match_class_exhaustively():
    for n in (1, 2, 3):
        for S in labeled_star_semigroups(n):
            c = classify(S)
            left = validate_wsb(S.mul, S.star, S.mul, S.star)
            assert isinstance(left, WeakStarBrace) == bool(c.clifford)
            rev_add = tuple(tuple(S.mul[b][a] for b in range(n)) for a in range(n))
            rev = validate_wsb(rev_add, S.star, S.mul, S.star)
            assert isinstance(rev, WeakStarBrace) == bool(c.cro_li)


def test_additive_inverse():
    assert additive_inverse(get_entry("c3").semigroup.mul) == (0, 2, 1)
    assert additive_inverse(get_entry("rect22").semigroup.mul) is None


def test_skew_brace_is_weak_brace_via_bridge():
    rep = bridge_check(get_entry("s3_skewbrace").structure)
    assert rep.is_left and rep.bridge_axiom.holds and rep.wsb_valid
    assert rep.inverse_addition and rep.weak_brace is not None


def test_bridge_without_negation():
    rep = bridge_check(get_entry("ls2").algebra)
    assert rep.is_left
    assert rep.bridge_axiom is None and rep.wsb is None
    assert not rep.inverse_addition
