import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from starbrace import get_entry
from starbrace.search import labeled_star_semigroups
from starbrace.semibrace import TwoTwoOneAlgebra, induce_addition
from starbrace.table_core import InputError
from starbrace.ybe import apply_r, check_braid, check_equations, check_solution, derive_maps


def test_proj_left_on_rect22_is_idempotent_solution():
    rep = check_solution(induce_addition(get_entry("rect22").semigroup, "proj-left"))
    assert rep.is_solution and rep.braid_agrees
    assert rep.properties.idempotent.holds
    assert not rep.properties.involutive.holds


def test_c3_star_star_eq1_witness():
    e = get_entry("c3")
    A = induce_addition(e.semigroup, "star-star")
    rep = check_solution(A)
    assert not rep.is_solution
    w = rep.failing
    assert w.axiom == "eq1"
    assert w.tuple == (e.idx("e"), e.idx("x"), e.idx("e"))
    assert (w.lhs, w.rhs) == (e.idx("x"), e.idx("e"))
    assert rep.braid_failing is not None


def test_s3_conj_quoted_failure():
    e = get_entry("s3")
    A = induce_addition(e.semigroup, "conj")
    M = derive_maps(A)
    x, y, z = e.idx("(12)"), e.idx("(13)"), e.idx("(12)")
    lhs = M.lam[x][M.lam[y][z]]
    rhs = M.lam[M.lam[x][y]][M.lam[M.rho[y][x]][z]]
    assert lhs == e.idx("(23)")
    assert rhs == e.idx("(13)")
    assert not check_solution(A).is_solution


def test_rect22_conj_maps():
    e = get_entry("rect22")
    S = e.semigroup
    M = derive_maps(induce_addition(S, "conj"))
    for x in S.elements:
        for y in S.elements:
            assert M.lam[x][y] == x
            assert M.rho[y][x] == S.m(S.s(x), y)


def test_maps_and_r():
    A = get_entry("z8_brace").algebra
    M = derive_maps(A)
    assert M.lam[1][1] == 7 and M.rho[1][1] == 3
    assert M.r(1, 1) == (7, 3) == apply_r(A, 1, 1)
    with pytest.raises(InputError):
        apply_r(A, 8, 0)


def test_braces_give_nondegenerate_involutive_solutions():
    for name in ("z8_brace", "d8_brace"):
        rep = check_solution(get_entry(name).algebra)
        p = rep.properties
        assert rep.is_solution
        assert p.left_nondegenerate.holds and p.right_nondegenerate.holds and p.involutive.holds
    rep = check_solution(get_entry("s3_skewbrace").algebra)
    assert rep.is_solution and rep.properties.left_nondegenerate.holds


def test_c4_semibrace_is_not_a_solution():
    e = get_entry("c4_semibrace")
    rep = check_solution(e.algebra)
    assert not rep.is_solution
    assert rep.failing.axiom == "eq2"
    assert rep.failing.tuple == (e.idx("e"), e.idx("a"), e.idx("a"))


def test_degenerate_witness_shape():
    rep = check_solution(induce_addition(get_entry("rect22").semigroup, "proj-left"))
    w = rep.properties.left_nondegenerate.witness
    a, = w.tuple
    assert rep.maps.lam[a][w.lhs] == rep.maps.lam[a][w.rhs] and w.lhs != w.rhs


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_equations_agree_with_braid_for_arbitrary_additions(data):
    n = data.draw(st.integers(1, 3))
    models = labeled_star_semigroups(n)
    S = models[data.draw(st.integers(0, len(models) - 1))]
    add = data.draw(st.lists(st.lists(st.integers(0, n - 1), min_size=n, max_size=n), min_size=n, max_size=n))
    M = derive_maps(TwoTwoOneAlgebra(tuple(map(tuple, add)), S.mul, S.star))
    assert (check_equations(M) is None) == (check_braid(M) is None)
