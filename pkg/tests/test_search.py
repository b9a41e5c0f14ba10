from collections import Counter

import pytest

from starbrace import get_entry
from starbrace.search import (
    SearchQuery,
    all_involutions,
    enumerate_models,
    enumerate_naive,
    find_model,
    labeled_star_semigroups,
    parse_orders,
    parse_predicates,
    star_semigroups,
)
from starbrace.semibrace import AdditionKind
from starbrace.star_semigroup import classify
from starbrace.table_core import CapacityError, InputError, canonical_encoding
from starbrace.weak_brace import WeakStarBrace


def _key(S):
    return canonical_encoding((S.mul, S.star), S.n)


def test_involution_counts():
    assert [len(all_involutions(n)) for n in range(1, 6)] == [1, 2, 4, 10, 26]


def test_class_counts_pinned():
    assert [len(star_semigroups(n)) for n in range(1, 5)] == [1, 2, 5, 17]
    assert [len(labeled_star_semigroups(n)) for n in range(1, 5)] == [1, 4, 24, 284]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_backtracking_matches_naive_oracle(n):
    assert [_key(S) for S in enumerate_naive(n)] == [_key(S) for S in star_semigroups(n)]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_labeled_enumeration_matches_brute_force(n):
    from itertools import product

    from starbrace.star_semigroup import StarSemigroup, validate_star

    brute = set()
    for flat in product(range(n), repeat=n * n):
        mul = tuple(flat[i * n:(i + 1) * n] for i in range(n))
        for s in all_involutions(n):
            if isinstance(validate_star(mul, s), StarSemigroup):
                brute.add((mul, s))
    fast = [(S.mul, S.star) for S in labeled_star_semigroups(n)]
    assert len(fast) == len(set(fast)) == len(brute)
    assert set(fast) == brute
    assert Counter(_key(StarSemigroup(*t)) for t in brute) == Counter(_key(S) for S in labeled_star_semigroups(n))


def test_parallel_matches_serial():
    assert labeled_star_semigroups(4, workers=2) == labeled_star_semigroups(4)


def test_cro_li_not_inverse():
    q3 = SearchQuery((1, 3), require={"cro-li"}, forbid={"inverse"})
    assert find_model(q3) is None
    q4 = SearchQuery((1, 4), require={"cro-li"}, forbid={"inverse"})
    found = find_model(q4)
    rect = get_entry("rect22").semigroup
    assert found is not None and _key(found) == _key(rect)


def test_star_identity_forces_commutative():
    assert find_model(SearchQuery((1, 2), require="star-identity", forbid="commutative")) is None
    assert find_model(SearchQuery((1, 4), require="star-identity", forbid="commutative")) is None


def test_two_two_one_search():
    q = SearchQuery((1, 3), signature="two_two_one", kind="proj-left", forbid="solution")
    assert list(enumerate_models(q)) == []
    q = SearchQuery((1, 3), signature="two_two_one", kind=AdditionKind.STAR_STAR, require="solution", forbid="star-identity")
    assert list(enumerate_models(q)) == []
    q = SearchQuery((4, 4), signature="two_two_one", kind="star-star", require="solution", forbid="star-identity", limit=1)
    assert len(list(enumerate_models(q))) == 1


def test_weak_star_brace_search():
    found = list(enumerate_models(SearchQuery((1, 2), signature="weak_star_brace")))
    assert found and all(isinstance(W, WeakStarBrace) for W in found)


def test_limit_and_order():
    models = list(enumerate_models(SearchQuery((1, 3), limit=4)))
    assert len(models) == 4
    assert [S.n for S in models] == sorted(S.n for S in models)
    assert list(enumerate_models(SearchQuery((1, 3), limit=0))) == []


def test_query_validation(monkeypatch):
    monkeypatch.delenv("STARBRACE_MAX_ORDER", raising=False)
    with pytest.raises(CapacityError):
        SearchQuery((1, 5))
    with pytest.raises(InputError):
        SearchQuery((1, 2), require="inverse", forbid="inverse")
    with pytest.raises(InputError):
        SearchQuery((1, 2), signature="two_two_one")
    with pytest.raises(InputError):
        SearchQuery((1, 2), signature="magma")
    with pytest.raises(InputError):
        SearchQuery((3, 2))
    with pytest.raises(InputError):
        parse_predicates("shiny")
    with pytest.raises(InputError):
        parse_predicates("solution", "star_semigroup")


def test_parse_helpers():
    assert parse_orders("1..4") == (1, 4)
    assert parse_orders("3") == (3, 3)
    with pytest.raises(InputError):
        parse_orders("a..b")
    assert parse_predicates("solution(proj_left), cro_li") == {"solution:proj-left", "cro-li"}


def test_order5_non_cro_li_classes(monkeypatch):
    monkeypatch.setenv("STARBRACE_MAX_ORDER", "5")
    models = star_semigroups(5)
    assert len(models) == 55
    odd = [classify(S) for S in models if not classify(S).cro_li]
    assert len(odd) == 2
    assert any(c.inverse and not c.completely_regular for c in odd)
    assert any(c.completely_regular and not c.locally_inverse for c in odd)
