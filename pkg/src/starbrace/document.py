"""JSON document format for finite algebras, with a text rendering.

A document has the keys ``name``, ``order``, ``elements`` (optional labels),
``mul``, ``star`` and optionally ``add`` and ``neg``.  Emission always uses
that key order and a fixed layout, so output is byte-stable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, List, Optional, Sequence, Tuple, Union

from .catalog import CatalogEntry
from .semibrace import TwoTwoOneAlgebra
from .star_semigroup import StarSemigroup, star_semigroup
from .table_core import BinOp, InputError, UnOp
from .weak_brace import WeakStarBrace

__all__ = [
    "AlgebraDocument",
    "DocumentError",
    "parse_algebra_document",
    "emit_algebra_document",
    "document_from_entry",
    "document_from_structure",
]

KEYS = ("name", "order", "elements", "mul", "star", "add", "neg")
REQUIRED = ("name", "order", "mul", "star")


class DocumentError(InputError):
    pass


@dataclass(frozen=True)
class AlgebraDocument:
    name: str
    order: int
    elements: Optional[Tuple[str, ...]]
    mul: BinOp
    star: UnOp
    add: Optional[BinOp] = None
    neg: Optional[UnOp] = None

    @property
    def labels(self) -> Tuple[str, ...]:
        return self.elements if self.elements is not None else tuple(str(i) for i in range(self.order))

    def semigroup(self) -> StarSemigroup:
        """Validated multiplicative reduct; raises ``InvalidStructure``."""
        return star_semigroup(self.mul, self.star)

    def algebra(self) -> Optional[TwoTwoOneAlgebra]:
        if self.add is None:
            return None
        return TwoTwoOneAlgebra.build(self.add, self.mul, self.star)


def _matrix(value: Any, key: str, n: int) -> BinOp:
    if not isinstance(value, list) or len(value) != n:
        got = len(value) if isinstance(value, list) else type(value).__name__
        raise DocumentError(f"dimension mismatch: {key} must have {n} rows, got {got}")
    rows = []
    for i, row in enumerate(value):
        if not isinstance(row, list) or len(row) != n:
            got = len(row) if isinstance(row, list) else type(row).__name__
            raise DocumentError(f"dimension mismatch: {key}[{i}] must have {n} entries, got {got}")
        for j, v in enumerate(row):
            _check_index(v, f"{key}[{i}][{j}]", n)
        rows.append(tuple(row))
    return tuple(rows)


def _vector(value: Any, key: str, n: int) -> UnOp:
    if not isinstance(value, list) or len(value) != n:
        got = len(value) if isinstance(value, list) else type(value).__name__
        raise DocumentError(f"dimension mismatch: {key} must have length {n}, got {got}")
    for i, v in enumerate(value):
        _check_index(v, f"{key}[{i}]", n)
    return tuple(value)


def _check_index(v: Any, cell: str, n: int) -> None:
    if isinstance(v, bool) or not isinstance(v, int):
        raise DocumentError(f"range error: {cell} = {v!r} is not an integer")
    if not 0 <= v < n:
        raise DocumentError(f"range error: {cell} = {v} is outside [0, {n})")


def parse_algebra_document(text: Union[str, bytes]) -> AlgebraDocument:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DocumentError(f"document is not UTF-8: {exc}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise DocumentError("document must be a JSON object")
    unknown = sorted(set(data) - set(KEYS))
    if unknown:
        raise DocumentError(f"unknown field(s): {', '.join(unknown)}")
    missing = [k for k in REQUIRED if k not in data]
    if missing:
        raise DocumentError(f"missing field(s): {', '.join(missing)}")
    name = data["name"]
    if not isinstance(name, str):
        raise DocumentError("name must be a string")
    n = data["order"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DocumentError(f"order must be a positive integer, got {n!r}")
    elements = data.get("elements")
    if elements is not None:
        if not isinstance(elements, list) or len(elements) != n:
            raise DocumentError(f"dimension mismatch: elements must have length {n}")
        if not all(isinstance(e, str) for e in elements):
            raise DocumentError("elements must be strings")
        if len(set(elements)) != n:
            raise DocumentError("element labels must be distinct")
        elements = tuple(elements)
    mul = _matrix(data["mul"], "mul", n)
    star = _vector(data["star"], "star", n)
    add = _matrix(data["add"], "add", n) if data.get("add") is not None else None
    neg = _vector(data["neg"], "neg", n) if data.get("neg") is not None else None
    if neg is not None and add is None:
        raise DocumentError("neg given without add")
    return AlgebraDocument(name, n, elements, mul, star, add, neg)


def _dump_matrix(m: BinOp) -> str:
    rows = ",\n    ".join(json.dumps(list(r), separators=(",", ":")) for r in m)
    return "[\n    " + rows + "\n  ]"


def _emit_json(d: AlgebraDocument) -> str:
    parts = [f'  "name": {json.dumps(d.name, ensure_ascii=False)}', f'  "order": {d.order}']
    if d.elements is not None:
        parts.append(f'  "elements": {json.dumps(list(d.elements), ensure_ascii=False, separators=(",", ":"))}')
    parts.append(f'  "mul": {_dump_matrix(d.mul)}')
    parts.append(f'  "star": {json.dumps(list(d.star), separators=(",", ":"))}')
    if d.add is not None:
        parts.append(f'  "add": {_dump_matrix(d.add)}')
    if d.neg is not None:
        parts.append(f'  "neg": {json.dumps(list(d.neg), separators=(",", ":"))}')
    return "{\n" + ",\n".join(parts) + "\n}\n"


def _table(symbol: str, op: BinOp, labels: Sequence[str]) -> List[str]:
    w = max(len(symbol), *(len(x) for x in labels))
    head = symbol.rjust(w) + " |" + "".join(" " + x.rjust(w) for x in labels)
    lines = [head, "-" * len(head)]
    for a, row in enumerate(op):
        lines.append(labels[a].rjust(w) + " |" + "".join(" " + labels[v].rjust(w) for v in row))
    return lines


def _map(symbol: str, f: UnOp, labels: Sequence[str]) -> List[str]:
    w = max(len(x) for x in labels)
    top = " " * len(symbol) + " |" + "".join(" " + x.rjust(w) for x in labels)
    return [top, symbol + " |" + "".join(" " + labels[v].rjust(w) for v in f)]


def _emit_text(d: AlgebraDocument) -> str:
    labels = d.labels
    lines = [f"{d.name} (order {d.order})", ""]
    lines += _table(".", d.mul, labels) + [""]
    lines += _map("*", d.star, labels)
    if d.add is not None:
        lines += [""] + _table("+", d.add, labels)
    if d.neg is not None:
        lines += [""] + _map("-", d.neg, labels)
    return "\n".join(lines) + "\n"


def emit_algebra_document(d: AlgebraDocument, format: str = "json") -> str:
    if format == "json":
        return _emit_json(d)
    if format == "text":
        return _emit_text(d)
    raise InputError(f"unknown format {format!r}; expected json or text")


def document_from_structure(
    name: str,
    structure: Union[StarSemigroup, TwoTwoOneAlgebra, WeakStarBrace],
    elements: Optional[Sequence[str]] = None,
    neg: Optional[UnOp] = None,
) -> AlgebraDocument:
    add = None
    if isinstance(structure, WeakStarBrace):
        add, neg = structure.add, structure.neg
    elif isinstance(structure, TwoTwoOneAlgebra):
        add = structure.add
    n = len(structure.star)
    return AlgebraDocument(
        name, n, tuple(elements) if elements is not None else None, structure.mul, structure.star, add, neg
    )


def document_from_entry(entry: CatalogEntry) -> AlgebraDocument:
    return document_from_structure(entry.name, entry.structure, entry.labels, entry.neg)
