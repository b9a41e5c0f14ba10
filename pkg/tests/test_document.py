import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from starbrace import get_entry, list_entries
from starbrace.document import (
    AlgebraDocument,
    DocumentError,
    document_from_entry,
    emit_algebra_document,
    parse_algebra_document,
)
from starbrace.search import labeled_star_semigroups


def _sl2(**over):
    d = {"name": "sl2", "order": 2, "mul": [[0, 0], [0, 1]], "star": [0, 1]}
    d.update(over)
    return json.dumps(d)


@pytest.mark.parametrize("name", [n for n, _ in list_entries()])
def test_round_trip_catalog(name):
    doc = document_from_entry(get_entry(name))
    text = emit_algebra_document(doc)
    assert parse_algebra_document(text) == doc
    assert emit_algebra_document(parse_algebra_document(text)) == text


def test_key_order_and_stability():
    doc = document_from_entry(get_entry("klein_rs"))
    text = emit_algebra_document(doc)
    keys = list(json.loads(text))
    assert keys == ["name", "order", "elements", "mul", "star", "add", "neg"]
    assert text == emit_algebra_document(document_from_entry(get_entry("klein_rs")))
    rect = emit_algebra_document(document_from_entry(get_entry("rect22")))
    assert rect.startswith('{\n  "name": "rect22",\n  "order": 4,\n')
    assert '"add"' not in rect


def test_d8_round_trip_preserves_tables():
    e = get_entry("d8_brace")
    doc = parse_algebra_document(emit_algebra_document(document_from_entry(e)))
    W = e.structure
    assert (doc.add, doc.neg, doc.mul, doc.star) == (W.add, W.neg, W.mul, W.star)


def test_text_rendering_sl2():
    text = emit_algebra_document(document_from_entry(get_entry("sl2")), "text")
    lines = text.splitlines()
    assert lines[0] == "sl2 (order 2)"
    assert ". | 0 1" in lines
    assert "0 | 0 0" in lines and "1 | 0 1" in lines


def test_text_rendering_uses_labels():
    text = emit_algebra_document(document_from_entry(get_entry("d8_brace")), "text")
    assert "ba^3" in text and "+" in text and "-" in text


def test_syntax_error_reports_position():
    with pytest.raises(DocumentError, match=r"line 2, column \d+"):
        parse_algebra_document('{"name": "x",\n "order": }')


def test_range_error_names_cell():
    with pytest.raises(DocumentError, match=r"mul\[1\]\[0\] = 2"):
        parse_algebra_document(_sl2(mul=[[0, 0], [2, 1]]))
    with pytest.raises(DocumentError, match=r"star\[0\]"):
        parse_algebra_document(_sl2(star=[-1, 1]))
    with pytest.raises(DocumentError, match="range error"):
        parse_algebra_document(_sl2(mul=[[0, True], [0, 1]]))


def test_dimension_errors():
    with pytest.raises(DocumentError, match="dimension mismatch: star"):
        parse_algebra_document(_sl2(star=[0]))
    with pytest.raises(DocumentError, match=r"dimension mismatch: mul\[1\]"):
        parse_algebra_document(_sl2(mul=[[0, 0], [0]]))
    with pytest.raises(DocumentError, match="elements"):
        parse_algebra_document(_sl2(elements=["a"]))


def test_field_errors():
    with pytest.raises(DocumentError, match="unknown field"):
        parse_algebra_document(_sl2(colour="red"))
    with pytest.raises(DocumentError, match="missing"):
        parse_algebra_document('{"name": "x", "order": 1, "mul": [[0]]}')
    with pytest.raises(DocumentError, match="neg given without add"):
        parse_algebra_document(_sl2(neg=[0, 1]))
    with pytest.raises(DocumentError):
        parse_algebra_document("[1, 2]")
    with pytest.raises(DocumentError):
        parse_algebra_document(b"\xff\xfe")
    with pytest.raises(DocumentError):
        parse_algebra_document(_sl2(order=0))


def test_parse_is_structural_only():
    # not a regular star-semigroup, but a well-formed document
    doc = parse_algebra_document(_sl2(star=[1, 0]))
    from starbrace.star_semigroup import InvalidStructure
    with pytest.raises(InvalidStructure):
        doc.semigroup()


@settings(max_examples=50, deadline=None)
@given(st.data())
def test_round_trip_generated(data):
    n = data.draw(st.integers(1, 3))
    models = labeled_star_semigroups(n)
    S = models[data.draw(st.integers(0, len(models) - 1))]
    add = data.draw(st.none() | st.lists(st.lists(st.integers(0, n - 1), min_size=n, max_size=n), min_size=n, max_size=n))
    labels = data.draw(st.none() | st.lists(st.text(min_size=1, max_size=3), min_size=n, max_size=n, unique=True))
    doc = AlgebraDocument(
        data.draw(st.text(max_size=8)),
        n,
        tuple(labels) if labels is not None else None,
        S.mul,
        S.star,
        tuple(map(tuple, add)) if add is not None else None,
    )
    assert parse_algebra_document(emit_algebra_document(doc)) == doc
