"""Command-line driver.

Exit codes: 0 success or property holds, 1 property fails (a ``WITNESS``
line is printed), 2 invalid input, 3 internal consistency error.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import List, Optional, Sequence, TextIO

from . import catalog
from .document import (
    AlgebraDocument,
    document_from_entry,
    document_from_structure,
    emit_algebra_document,
    parse_algebra_document,
)
from .registry import registered_ids, verify_proposition
from .search import SearchQuery, enumerate_models, parse_orders
from .semibrace import TwoTwoOneAlgebra, classify_semibrace, induce_addition, parse_kind
from .star_semigroup import InvalidStructure, classify, validate_star
from .table_core import CapacityError, ConsistencyError, InputError, MalformedTableError, StarbraceError, Witness
from .weak_brace import (
    WeakStarBrace,
    inverse_equivalents,
    structure_report,
    validate_wsb,
    wsb_identity_suite,
)
from .ybe import check_solution

OK, FAILS, BAD_INPUT, INCONSISTENT = 0, 1, 2, 3


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(f"{self.prog}: {message}")


def _load(source: str) -> AlgebraDocument:
    if os.path.exists(source):
        try:
            with open(source, "rb") as fh:
                return parse_algebra_document(fh.read())
        except OSError as exc:
            raise InputError(f"cannot read {source}: {exc.strerror}") from None
    try:
        return document_from_entry(catalog.get_entry(source))
    except catalog.NotFoundError:
        raise InputError(f"{source}: no such file or catalog entry") from None


def _labelled(w: Witness, labels: Sequence[str]) -> str:
    def fmt(v):
        if isinstance(v, tuple):
            return "(" + ",".join(labels[i] for i in v) + ")"
        return labels[v] if isinstance(v, int) and 0 <= v < len(labels) else str(v)

    return f"  {fmt(w.tuple)}: {w.axiom} lhs={fmt(w.lhs)} rhs={fmt(w.rhs)}"


def _witness(out: TextIO, w: Witness, labels: Sequence[str]) -> None:
    out.write(w.line() + "\n")
    out.write(_labelled(w, labels) + "\n")


def _semigroup_or_fail(doc: AlgebraDocument, out: TextIO):
    S = validate_star(doc.mul, doc.star)
    if isinstance(S, Witness):
        out.write(f"{doc.name}: not a regular star-semigroup\n")
        _witness(out, S, doc.labels)
    return S


def _cmd_validate(args, out: TextIO) -> int:
    doc = _load(args.file)
    S = _semigroup_or_fail(doc, out)
    if isinstance(S, Witness):
        return FAILS
    if doc.neg is not None:
        W = validate_wsb(doc.add, doc.neg, doc.mul, doc.star)
        if isinstance(W, Witness):
            out.write(f"{doc.name}: not a weak star-brace\n")
            _witness(out, W, doc.labels)
            return FAILS
        out.write(f"{doc.name}: valid weak star-brace of order {doc.order}\n")
    elif doc.add is not None:
        out.write(f"{doc.name}: valid (2,2,1)-algebra of order {doc.order}\n")
    else:
        out.write(f"{doc.name}: valid regular star-semigroup of order {doc.order}\n")
    return OK


def _cmd_classify(args, out: TextIO) -> int:
    doc = _load(args.file)
    S = _semigroup_or_fail(doc, out)
    if isinstance(S, Witness):
        return FAILS
    report = classify(S)
    out.write(f"{doc.name} (order {doc.order})\n")
    flags = dict(report.flags())
    width = max(map(len, flags))
    for name, flag in flags.items():
        line = f"  {name.ljust(width)}  {'yes' if flag.holds else 'no'}"
        if not flag.holds and flag.witness is not None:
            line += f"  [{flag.witness.line()}]"
        out.write(line + "\n")
    if doc.add is not None:
        sb = classify_semibrace(TwoTwoOneAlgebra(doc.add, S.mul, S.star))
        out.write("addition:\n")
        for name in ("add_associative", "left_axiom", "right_axiom"):
            flag = getattr(sb, name)
            line = f"  {name.ljust(width)}  {'yes' if flag.holds else 'no'}"
            if not flag.holds:
                line += f"  [{flag.witness.line()}]"
            out.write(line + "\n")
        out.write(f"  {'semibrace'.ljust(width)}  left={sb.is_left} right={sb.is_right} two-sided={sb.is_two_sided}\n")
    return OK


def _cmd_derive_add(args, out: TextIO) -> int:
    doc = _load(args.file)
    S = _semigroup_or_fail(doc, out)
    if isinstance(S, Witness):
        return FAILS
    kind = parse_kind(args.kind)
    A = induce_addition(S, kind)
    derived = document_from_structure(f"{doc.name}+{kind.value}", A, doc.elements)
    text = emit_algebra_document(derived, "json")
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise InputError(f"cannot write {args.out}: {exc.strerror}") from None
        out.write(f"wrote {args.out}\n")
    else:
        out.write(text)
    return OK


def _cmd_check_ybe(args, out: TextIO) -> int:
    doc = _load(args.file)
    S = _semigroup_or_fail(doc, out)
    if isinstance(S, Witness):
        return FAILS
    if args.kind:
        A = induce_addition(S, parse_kind(args.kind))
    elif doc.add is not None:
        A = TwoTwoOneAlgebra(doc.add, S.mul, S.star)
    else:
        raise InputError(f"{doc.name} has no addition; pass --kind")
    rep = check_solution(A)
    if not rep.is_solution:
        out.write("not a solution\n")
        _witness(out, rep.failing, doc.labels)
        return FAILS
    out.write("solution\n")
    for name in ("left_nondegenerate", "right_nondegenerate", "involutive", "idempotent"):
        out.write(f"  {name}: {'yes' if getattr(rep.properties, name).holds else 'no'}\n")
    return OK


def _cmd_check_wsb(args, out: TextIO) -> int:
    doc = _load(args.file)
    if doc.add is None or doc.neg is None:
        raise InputError(f"{doc.name} needs both add and neg to be checked as a weak star-brace")
    W = validate_wsb(doc.add, doc.neg, doc.mul, doc.star)
    if isinstance(W, Witness):
        out.write("not a weak star-brace\n")
        _witness(out, W, doc.labels)
        return FAILS
    suite = wsb_identity_suite(W)
    broken = [item for item in suite if not item.holds]
    if broken:
        raise ConsistencyError(f"identity {broken[0].ident} fails on a weak star-brace: {broken[0].witness.line()}")
    inv = inverse_equivalents(W)
    st = structure_report(W)
    sol = check_solution(W.algebra)
    if not sol.is_solution:
        raise ConsistencyError("weak star-brace does not give a solution: " + sol.failing.line())
    out.write("weak star-brace\n")
    out.write(f"  identities checked: {len(suite)}\n")
    out.write(f"  inverse conditions: {'all hold' if inv.verdict else 'all fail'}\n")
    out.write(f"  additive monoid: {st.additive_monoid}, multiplicative monoid: {st.multiplicative_monoid}\n")
    out.write("  solution: yes\n")
    return OK


def _cmd_search(args, out: TextIO) -> int:
    query = SearchQuery(
        orders=parse_orders(args.orders),
        signature=args.signature.replace("-", "_"),
        kind=args.kind,
        require=args.require or "",
        forbid=args.forbid or "",
        limit=args.limit,
        workers=args.workers,
    )
    count = 0
    for i, model in enumerate(enumerate_models(query)):
        count += 1
        neg = getattr(model, "neg", None)
        doc = AlgebraDocument(
            f"model{i}", len(model.star), None, model.mul, model.star, getattr(model, "add", None), neg
        )
        out.write(emit_algebra_document(doc, args.format))
    out.write(f"found {count} model(s)\n")
    return OK


def _cmd_verify_prop(args, out: TextIO) -> int:
    rep = verify_proposition(args.ident, args.max_order)
    out.write("\n".join(rep.lines()) + "\n")
    return OK if rep.passed else INCONSISTENT


def _cmd_catalog(args, out: TextIO) -> int:
    if args.action == "list":
        for name, desc in catalog.list_entries():
            out.write(f"{name}\t{desc}\n")
        return OK
    if not args.name:
        raise InputError("catalog show needs a NAME")
    try:
        entry = catalog.get_entry(args.name)
    except catalog.NotFoundError as exc:
        raise InputError(str(exc)) from None
    out.write(emit_algebra_document(document_from_entry(entry), args.format))
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="starbrace", description="Finite regular star-semigroups, semibraces and weak star-braces.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("validate", help="check a document's structure")
    s.add_argument("file", help="JSON document path or catalog name")
    s.set_defaults(run=_cmd_validate)

    s = sub.add_parser("classify", help="class flags of the multiplicative reduct")
    s.add_argument("file")
    s.set_defaults(run=_cmd_classify)

    s = sub.add_parser("derive-add", help="attach an induced addition")
    s.add_argument("file")
    s.add_argument("--kind", required=True)
    s.add_argument("--out")
    s.set_defaults(run=_cmd_derive_add)

    s = sub.add_parser("check-ybe", help="check the Yang-Baxter equation")
    s.add_argument("file")
    s.add_argument("--kind")
    s.set_defaults(run=_cmd_check_ybe)

    s = sub.add_parser("check-wsb", help="check the weak star-brace axioms and identities")
    s.add_argument("file")
    s.set_defaults(run=_cmd_check_wsb)

    s = sub.add_parser("search", help="enumerate small models")
    s.add_argument("--orders", required=True, help="A..B")
    s.add_argument("--signature", default="star_semigroup")
    s.add_argument("--kind")
    s.add_argument("--require")
    s.add_argument("--forbid")
    s.add_argument("--limit", type=int)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--format", choices=("json", "text"), default="json")
    s.set_defaults(run=_cmd_search)

    s = sub.add_parser("verify-prop", help="check a registered claim exhaustively")
    s.add_argument("ident", help="one of: " + ", ".join(registered_ids()))
    s.add_argument("--max-order", type=int, default=3)
    s.set_defaults(run=_cmd_verify_prop)

    s = sub.add_parser("catalog", help="list or export catalog entries")
    s.add_argument("action", choices=("list", "show"))
    s.add_argument("name", nargs="?")
    s.add_argument("--format", choices=("json", "text"), default="json")
    s.set_defaults(run=_cmd_catalog)
    return p


def run_command(argv: Optional[List[str]] = None, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except _Usage as exc:
        err.write(f"{exc}\n")
        return BAD_INPUT
    except SystemExit as exc:  # --help
        return OK if exc.code in (0, None) else BAD_INPUT
    try:
        return args.run(args, out)
    except ConsistencyError as exc:
        err.write(f"consistency error: {exc}\n")
        return INCONSISTENT
    except InvalidStructure as exc:
        out.write(exc.witness.line() + "\n")
        return FAILS
    except (InputError, CapacityError, MalformedTableError) as exc:
        err.write(f"error: {exc}\n")
        return BAD_INPUT
    except StarbraceError as exc:
        err.write(f"error: {exc}\n")
        return BAD_INPUT


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
