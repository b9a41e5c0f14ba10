import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from starbrace.table_core import (
    CapacityError,
    InputError,
    MalformedTableError,
    Witness,
    associativity_check,
    binop,
    bijection_check,
    canonical_encoding,
    canonical_form,
    configured_max_order,
    identity_element,
    relabel,
    transpose,
    unop,
)

LEFT_ZERO = ((0, 0), (1, 1))


def test_binop_rejects_ragged_and_out_of_range():
    with pytest.raises(MalformedTableError):
        binop([[0, 1], [0]])
    with pytest.raises(MalformedTableError):
        binop([[0, 2], [0, 0]])
    with pytest.raises(MalformedTableError):
        unop([0, 3], 2)


def test_associativity_witness_is_lexicographically_first():
    # x*y = y+1 mod 2 is not associative
    op = binop([[1, 0], [1, 0]])
    w = associativity_check(op)
    assert w == Witness("assoc", (0, 0, 0), 1, 0)
    assert associativity_check(LEFT_ZERO) is None


def test_witness_line_grammar():
    assert Witness("eq1", (0, 1, 0), 1, 0).line() == "WITNESS axiom=eq1 tuple=(0,1,0) lhs=1 rhs=0"
    assert Witness("braid", (1, 2, 3), (0, 1, 2), (2, 1, 0)).line().endswith("lhs=(0,1,2) rhs=(2,1,0)")


def test_identity_transpose_bijection():
    assert identity_element(binop([[0, 0], [0, 1]])) == 1
    assert identity_element(LEFT_ZERO) is None
    assert transpose(LEFT_ZERO) == ((0, 1), (0, 1))
    assert bijection_check((1, 0, 2))
    assert not bijection_check((1, 1, 0))


def test_canonical_encoding_is_relabeling_invariant():
    op = binop([[0, 0, 0], [0, 1, 0], [0, 0, 2]])
    star = (0, 1, 2)
    sigma = (2, 0, 1)
    moved = (relabel(op, sigma), relabel(star, sigma))
    assert canonical_encoding((op, star), 3) == canonical_encoding(moved, 3)
    enc, perm = canonical_form((op, star), 3)
    assert canonical_encoding((relabel(op, perm), relabel(star, perm)), 3) == enc


def test_canonical_encoding_bounds():
    with pytest.raises(CapacityError):
        canonical_encoding((LEFT_ZERO,), 2, bound=1)
    with pytest.raises(MalformedTableError):
        canonical_encoding((LEFT_ZERO,), 3)


def test_configured_max_order(monkeypatch):
    monkeypatch.delenv("STARBRACE_MAX_ORDER", raising=False)
    assert configured_max_order() == 4
    monkeypatch.setenv("STARBRACE_MAX_ORDER", "5")
    assert configured_max_order() == 5
    monkeypatch.setenv("STARBRACE_MAX_ORDER", "9")
    assert configured_max_order() == 6
    monkeypatch.setenv("STARBRACE_MAX_ORDER", "x")
    with pytest.raises(InputError):
        configured_max_order()


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.lists(st.lists(st.integers(0, n - 1), min_size=n, max_size=n), min_size=n, max_size=n),
    st.permutations(range(n)),
)))
def test_relabel_preserves_associativity(data):
    rows, sigma = data
    op = binop(rows)
    assert (associativity_check(op) is None) == (associativity_check(relabel(op, sigma)) is None)
