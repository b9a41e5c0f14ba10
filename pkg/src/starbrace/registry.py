"""Registered claims, each checked over every enumerated model of bounded
order together with the catalog structures.

Identifiers are opaque keys (``P4.6``, ``T5.23`` ...) used by the command
line.  Every claim is either an equivalence checked in both directions per
model, an implication, or an existence statement about a catalog entry.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from . import catalog
from .search import labeled_star_semigroups, star_semigroups
from .semibrace import AdditionKind, TwoTwoOneAlgebra, classify_semibrace, induce_addition, morphism_diagnostics
from .star_semigroup import ClassReport, StarSemigroup, classify, equational_crosscheck, identity_suite_cro_li
from .table_core import CapacityError, ConsistencyError, InputError, Witness, configured_max_order
from .weak_brace import (
    WeakStarBrace,
    bridge_check,
    inverse_equivalents,
    structure_report,
    validate_wsb,
    wsb_identity_suite,
)
from .ybe import check_solution

__all__ = ["VerificationReport", "REGISTRY", "verify_proposition", "registered_ids", "semigroup_models"]

K = AdditionKind


@dataclass
class VerificationReport:
    ident: str
    summary: str
    passed: bool
    checked: int
    failure: Optional[str] = None
    informational: bool = False
    notes: List[str] = field(default_factory=list)

    def lines(self) -> List[str]:
        status = "PASS" if self.passed else "FAIL"
        if self.informational:
            status += " (informational)"
        out = [f"{self.ident}: {status} over {self.checked} instances - {self.summary}"]
        if self.failure:
            out.append(f"  first failure: {self.failure}")
        out.extend(f"  note: {n}" for n in self.notes)
        return out


class _Fail(Exception):
    pass


# ---------------------------------------------------------------------------
# model sets


@dataclass(frozen=True)
class _Named:
    name: str
    S: StarSemigroup


def semigroup_models(max_order: int, include_catalog: bool = True) -> List[_Named]:
    models = []
    for n in range(1, max_order + 1):
        for i, S in enumerate(star_semigroups(n)):
            models.append(_Named(f"order{n}#{i}", S))
    if include_catalog:
        for name, _ in catalog.list_entries():
            models.append(_Named(f"catalog:{name}", catalog.get_entry(name).semigroup))
    return models


def _catalog_algebras() -> List[Tuple[str, TwoTwoOneAlgebra]]:
    out = []
    for name, _ in catalog.list_entries():
        A = catalog.get_entry(name).algebra
        if A is not None:
            out.append((f"catalog:{name}", A))
    return out


def _weak_braces(models: List[_Named], pair_order: int) -> List[Tuple[str, WeakStarBrace]]:
    out = []
    for m in models:
        S = m.S
        n = S.n
        cls = classify(S)
        variants = [("left", S.mul)]
        variants.append(("reversed", tuple(tuple(S.mul[b][a] for b in range(n)) for a in range(n))))
        for variant, add in variants:
            W = validate_wsb(add, S.star, S.mul, S.star)
            if isinstance(W, WeakStarBrace):
                out.append((f"{m.name}/{variant}", W))
    for name, _ in catalog.list_entries():
        st = catalog.get_entry(name).structure
        if isinstance(st, WeakStarBrace):
            out.append((f"catalog:{name}", st))
    for n in range(1, pair_order + 1):
        for j, M in enumerate(star_semigroups(n)):
            for i, A in enumerate(labeled_star_semigroups(n)):
                W = validate_wsb(A.mul, A.star, M.mul, M.star)
                if isinstance(W, WeakStarBrace):
                    out.append((f"pair{n}#{j}.{i}", W))
    return out


def _pairs(pair_order: int) -> Iterator[Tuple[str, TwoTwoOneAlgebra, Tuple[int, ...]]]:
    for n in range(1, pair_order + 1):
        for j, M in enumerate(star_semigroups(n)):
            for i, A in enumerate(labeled_star_semigroups(n)):
                yield f"pair{n}#{j}.{i}", TwoTwoOneAlgebra(A.mul, M.mul, M.star), A.star
    kr = catalog.get_entry("klein_rs")
    yield "catalog:klein_rs", kr.structure, kr.neg


# ---------------------------------------------------------------------------
# helpers


def _w(flag) -> str:
    return f" [{flag.witness.line()}]" if getattr(flag, "witness", None) is not None else ""


def _equal(model: str, pairs: Sequence[Tuple[str, bool]]) -> None:
    values = {v for _, v in pairs}
    if len(values) > 1:
        detail = ", ".join(f"{k}={'T' if v else 'F'}" for k, v in pairs)
        raise _Fail(f"{model}: expected equal verdicts, got {detail}")


def _implies(model: str, a: Tuple[str, bool], b: Tuple[str, bool]) -> None:
    if a[1] and not b[1]:
        raise _Fail(f"{model}: {a[0]} holds but {b[0]} fails")


class _Ctx:
    def __init__(self, max_order: int, catalog_models: bool):
        self.max_order = max_order
        self.models = semigroup_models(max_order, catalog_models)
        self.pair_order = min(max_order, 3)
        self._cls: Dict[str, ClassReport] = {}

    def cls(self, m: _Named) -> ClassReport:
        if m.name not in self._cls:
            self._cls[m.name] = classify(m.S)
        return self._cls[m.name]


Check = Callable[[_Ctx], int]


# ---------------------------------------------------------------------------
# claims over star-semigroups


def _crosscheck(klass: str) -> Check:
    def run(ctx: _Ctx) -> int:
        for m in ctx.models:
            rep = equational_crosscheck(m.S, ctx.cls(m))[klass]
            if not rep.consistent:
                raise _Fail(f"{m.name}: {rep.detail}")
        return len(ctx.models)

    return run


def _suite(prefix: str) -> Check:
    def run(ctx: _Ctx) -> int:
        count = 0
        for m in ctx.models:
            for item in identity_suite_cro_li(m.S, ctx.cls(m)):
                if item.ident.startswith(prefix) and item.applicable:
                    count += 1
                    if not item.holds:
                        raise _Fail(f"{m.name}: {item.ident}" + (f" [{item.witness.line()}]" if item.witness else ""))
        return count

    return run


def _semibrace_claim(body: Callable[[str, ClassReport, Dict[AdditionKind, object]], None], kinds) -> Check:
    def run(ctx: _Ctx) -> int:
        for m in ctx.models:
            reps = {k: classify_semibrace(induce_addition(m.S, k)) for k in kinds}
            body(m.name, ctx.cls(m), reps)
        return len(ctx.models)

    return run


def _p33(name, c, r):
    for k in (K.MUL, K.MUL_REV):
        s = r[k]
        _equal(f"{name} {k}", [("left", s.is_left), ("right", s.is_right), ("two-sided", s.is_two_sided), ("cro_li", c.cro_li.holds)])


def _p34(name, c, r):
    for k in (K.STAR_STAR, K.STAR_STAR_REV):
        s = r[k]
        _equal(
            f"{name} {k}",
            [
                ("assoc", s.add_associative.holds),
                ("left axiom", s.left_axiom.holds),
                ("right axiom", s.right_axiom.holds),
                ("x=x*", c.star_identity.holds),
                ("left", s.is_left),
                ("right", s.is_right),
                ("two-sided", s.is_two_sided),
            ],
        )


def _p35(name, c, r):
    p, q = r[K.STAR_LEFT], r[K.STAR_RIGHT]
    sid, com = c.star_identity.holds, c.commutative.holds
    _equal(f"{name} star-left (A)", [("left axiom", p.left_axiom.holds), ("commutative", com)])
    _equal(f"{name} star-right (A)", [("right axiom", q.right_axiom.holds), ("commutative", com)])
    _equal(f"{name} star-left (B)", [("assoc", p.add_associative.holds), ("right axiom", p.right_axiom.holds), ("x=x*", sid)])
    _equal(f"{name} star-right (B)", [("assoc", q.add_associative.holds), ("left axiom", q.left_axiom.holds), ("x=x*", sid)])
    _implies(f"{name} (C)", ("x=x*", sid), ("commutative", com))
    for label, s in (("star-left", p), ("star-right", q)):
        _equal(f"{name} {label} (C)", [("left", s.is_left), ("right", s.is_right), ("two-sided", s.is_two_sided), ("x=x*", sid)])


def _p36(name, c, r):
    p, q = r[K.REV_STAR_LEFT], r[K.REV_STAR_RIGHT]
    sid, com, cro = c.star_identity.holds, c.commutative.holds, c.cro_li.holds
    for label, s in (("rev-star-left", p), ("rev-star-right", q)):
        _equal(f"{name} {label} (1)", [("assoc", s.add_associative.holds), ("x=x*", sid)])
    _equal(f"{name} rev-star-left (2)", [("right axiom", p.right_axiom.holds), ("commutative", com)])
    _equal(f"{name} rev-star-right (2)", [("left axiom", q.left_axiom.holds), ("commutative", com)])
    _implies(f"{name} rev-star-left (3)", ("left axiom", p.left_axiom.holds), ("cro_li", cro))
    _implies(f"{name} rev-star-right (3)", ("right axiom", q.right_axiom.holds), ("cro_li", cro))
    _implies(f"{name} (4)", ("x=x*", sid), ("commutative", com))
    _implies(f"{name} rev-star-left (4)", ("x=x*", sid), ("left axiom", p.left_axiom.holds))
    _implies(f"{name} rev-star-right (4)", ("x=x*", sid), ("right axiom", q.right_axiom.holds))
    for label, s in (("rev-star-left", p), ("rev-star-right", q)):
        _equal(f"{name} {label} (4)", [("left", s.is_left), ("right", s.is_right), ("two-sided", s.is_two_sided), ("x=x*", sid)])


def _p38(name, c, r):
    p, q = r[K.PROJ_LEFT], r[K.PROJ_RIGHT]
    oli, crli, cro = c.o_li.holds, c.cr_li.holds, c.cro_li.holds
    _equal(f"{name} proj-left (A)", [("assoc", p.add_associative.holds), ("o_li", oli), ("left axiom", p.left_axiom.holds)])
    _equal(f"{name} proj-right (A)", [("assoc", q.add_associative.holds), ("o_li", oli), ("right axiom", q.right_axiom.holds)])
    _equal(f"{name} proj-left (B)", [("right axiom", p.right_axiom.holds), ("cr_li", crli)])
    _equal(f"{name} proj-right (B)", [("left axiom", q.left_axiom.holds), ("cr_li", crli)])
    _equal(f"{name} proj-left (C)", [("left", p.is_left), ("o_li", oli)])
    _equal(f"{name} proj-left (C')", [("right", p.is_right), ("two-sided", p.is_two_sided), ("cro_li", cro)])
    _equal(f"{name} proj-right (C)", [("right", q.is_right), ("o_li", oli)])
    _equal(f"{name} proj-right (C')", [("left", q.is_left), ("two-sided", q.is_two_sided), ("cro_li", cro)])


def _conj_family(kinds):
    def body(name, c, r):
        com = c.commutative.holds
        for k in kinds:
            s = r[k]
            _equal(f"{name} {k}", [("left axiom", s.left_axiom.holds), ("right axiom", s.right_axiom.holds), ("commutative", com)])
            _implies(f"{name} {k}", ("commutative", com), ("assoc", s.add_associative.holds))
            _equal(f"{name} {k} semibrace", [("left", s.is_left), ("right", s.is_right), ("two-sided", s.is_two_sided), ("commutative", com)])

    return body


def _solution_claim(kinds, mode: str) -> Check:
    """``mode``: ``iff`` (solution iff cro_li), ``always``, ``cro_li_then`` (solution implies cro_li)."""

    def run(ctx: _Ctx) -> int:
        count = 0
        for m in ctx.models:
            c = ctx.cls(m)
            for k in kinds:
                count += 1
                rep = check_solution(induce_addition(m.S, k))
                sol = rep.is_solution
                if mode == "iff":
                    _equal(f"{m.name} {k}", [("solution", sol), ("cro_li", c.cro_li.holds)])
                elif mode == "always":
                    if not sol:
                        raise _Fail(f"{m.name} {k}: not a solution [{rep.failing.line()}]")
                elif mode == "star_star":
                    _implies(f"{m.name} {k}", ("solution", sol), ("cro_li", c.cro_li.holds))
                    _implies(f"{m.name} {k}", ("x=x*", c.star_identity.holds), ("solution", sol))
                elif mode == "conj":
                    _implies(f"{m.name} {k}", ("solution", sol), ("cro_li", c.cro_li.holds))
                    _implies(f"{m.name} {k}", ("commutative", c.commutative.holds), ("solution", sol))
                elif mode == "commutative":
                    _implies(f"{m.name} {k}", ("commutative", c.commutative.holds), ("solution", sol))
        return count

    return run


def _r410_probe(ctx: _Ctx) -> Tuple[int, List[str]]:
    flags = ("commutative", "clifford", "cro_li", "inverse", "star_identity")
    notes = []
    count = 0
    for k in (K.CONJ_STAR, K.CONJ_REV):
        disagree = {f: [] for f in flags}
        sols = 0
        for m in ctx.models:
            count += 1
            sol = check_solution(induce_addition(m.S, k)).is_solution
            sols += sol
            fl = ctx.cls(m).flags()
            for f in flags:
                if fl[f].holds != sol:
                    disagree[f].append(m.name)
        notes.append(f"{k}: {sols}/{len(ctx.models)} models give a solution")
        for f in flags:
            notes.append(f"{k}: solution differs from {f} on {len(disagree[f])} models" + (f" (e.g. {', '.join(disagree[f][:3])})" if disagree[f] else ""))
    return count, notes


def _p412(ctx: _Ctx) -> int:
    algs = [(f"{m.name}/{k}", induce_addition(m.S, k)) for m in ctx.models for k in AdditionKind]
    algs += _catalog_algebras()
    count = 0
    for name, A in algs:
        rep = classify_semibrace(A)
        if rep.is_left:
            count += 1
            try:
                morphism_diagnostics(A, rep)
            except ConsistencyError as exc:
                raise _Fail(f"{name}: {exc}")
    return count


def _existence(entry: str, kinds, want: Callable[[StarSemigroup, AdditionKind], Optional[str]]) -> Check:
    def run(ctx: _Ctx) -> int:
        S = catalog.get_entry(entry).semigroup
        for k in kinds:
            problem = want(S, k)
            if problem:
                raise _Fail(f"catalog:{entry} {k}: {problem}")
        return len(kinds)

    return run


def _r311(S, k):
    s = classify_semibrace(induce_addition(S, k))
    if not s.add_associative.holds:
        return "addition not associative" + _w(s.add_associative)
    if classify(S).commutative.holds:
        return "semigroup is commutative"
    return None


def _r43_c3(S, k):
    c = classify(S)
    rep = check_solution(induce_addition(S, k))
    if not (c.cro_li.holds and c.commutative.holds):
        return "expected commutative cro_li semigroup"
    if rep.is_solution:
        return "unexpectedly a solution"
    return None


def _r43_rect(S, k):
    rep = check_solution(induce_addition(S, k))
    if not rep.is_solution:
        return "not a solution" + (f" [{rep.failing.line()}]" if rep.failing else "")
    if classify(S).star_identity.holds:
        return "x = x* unexpectedly holds"
    return None


def _r49_rect(S, k):
    rep = check_solution(induce_addition(S, k))
    if not rep.is_solution:
        return "not a solution"
    if classify(S).commutative.holds:
        return "unexpectedly commutative"
    return None


def _r49_s3(S, k):
    rep = check_solution(induce_addition(S, k))
    if not classify(S).cro_li.holds:
        return "expected cro_li"
    if rep.is_solution:
        return "unexpectedly a solution"
    return None


# ---------------------------------------------------------------------------
# claims over weak star-braces


def _p54(ctx: _Ctx) -> int:
    for m in ctx.models:
        S, c = m.S, ctx.cls(m)
        n = S.n
        left = validate_wsb(S.mul, S.star, S.mul, S.star)
        rev = validate_wsb(tuple(tuple(S.mul[b][a] for b in range(n)) for a in range(n)), S.star, S.mul, S.star)
        _equal(f"{m.name} left", [("weak star-brace", isinstance(left, WeakStarBrace)), ("clifford", c.clifford.holds)])
        _equal(f"{m.name} reversed", [("weak star-brace", isinstance(rev, WeakStarBrace)), ("cro_li", c.cro_li.holds)])
    return len(ctx.models)


def _wsb_claim(body: Callable[[str, WeakStarBrace], int]) -> Check:
    def run(ctx: _Ctx) -> int:
        count = 0
        for name, W in _weak_braces(ctx.models, ctx.pair_order):
            try:
                count += body(name, W)
            except ConsistencyError as exc:
                raise _Fail(f"{name}: {exc}")
        return count

    return run


def _wsb_suite(groups: Tuple[str, ...]) -> Callable[[str, WeakStarBrace], int]:
    def body(name: str, W: WeakStarBrace) -> int:
        n = 0
        for item in wsb_identity_suite(W):
            if item.ident.split(":", 1)[0] in groups:
                n += 1
                if not item.holds:
                    raise _Fail(f"{name}: {item.witness.line()}")
        return n

    return body


def _t513(name, W):
    inverse_equivalents(W)
    return 1


def _t515(name, W):
    structure_report(W)
    return 1


def _t523(name, W):
    rep = check_solution(W.algebra)
    if not rep.is_solution:
        raise _Fail(f"{name}: not a solution [{rep.failing.line()}]")
    return 1


def _eq53(name, W):
    if W.additive.projections != W.multiplicative.projections:
        raise _Fail(f"{name}: projection sets differ")
    return 1


def _bridge(ctx: _Ctx) -> int:
    count = 0
    for name, A, neg in _pairs(ctx.pair_order):
        count += 1
        try:
            bridge_check(A, neg)
        except ConsistencyError as exc:
            raise _Fail(f"{name}: {exc}")
    for name, A in _catalog_algebras():
        count += 1
        try:
            bridge_check(A)
        except ConsistencyError as exc:
            raise _Fail(f"{name}: {exc}")
    return count


# ---------------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class _Entry:
    summary: str
    check: Check
    informational: bool = False


_SOL_IFF_KINDS = (K.MUL, K.MUL_REV, K.STAR_LEFT, K.REV_STAR_LEFT, K.STAR_RIGHT, K.REV_STAR_RIGHT, K.PROJ_RIGHT)

REGISTRY: Dict[str, _Entry] = {
    "L2.3": _Entry("in a monoid the identity is a projection", _suite("monoid:")),
    "L2.4": _Entry("projection sets, idempotents and Green's relations agree", _crosscheck("projections")),
    "L2.5": _Entry("inverse iff projections commute", _crosscheck("inverse")),
    "L2.6": _Entry("orthodox iff efg is idempotent on projections", _crosscheck("orthodox")),
    "L2.7": _Entry("completely regular iff xx* = xx*x*xx*", _crosscheck("completely_regular")),
    "L2.8": _Entry("locally inverse iff efege = egefe on projections", _crosscheck("locally_inverse")),
    "L2.9": _Entry("cr and li iff xx*y*yxy = xy", _crosscheck("cr_li")),
    "L2.10": _Entry("orthodox and li iff afgb = agfb", _crosscheck("o_li")),
    "L2.11": _Entry("cr, orthodox and li iff each of six identities", _crosscheck("cro_li")),
    "L2.13": _Entry("Clifford iff xx* = x*x iff cr and inverse", _crosscheck("clifford")),
    "C2.12": _Entry("identities of cr, orthodox, li structures", _suite("cro_li:")),
    "C2.14": _Entry("commutative or x = x* structures are cro_li; x = x* gives a^3 = a, ab = ba", lambda ctx: _suite("commutative:")(ctx) + _suite("star_identity:")(ctx)),
    "P3.3": _Entry("additions ab, ba: semibrace iff cro_li", _semibrace_claim(_p33, (K.MUL, K.MUL_REV))),
    "P3.4": _Entry("additions a*b*, b*a*: assoc iff left axiom iff right axiom iff x = x*", _semibrace_claim(_p34, (K.STAR_STAR, K.STAR_STAR_REV))),
    "P3.5": _Entry("additions a*b, ab*", _semibrace_claim(_p35, (K.STAR_LEFT, K.STAR_RIGHT))),
    "P3.6": _Entry("additions b*a, ba*", _semibrace_claim(_p36, (K.REV_STAR_LEFT, K.REV_STAR_RIGHT))),
    "P3.8": _Entry("additions aa*b, ab*b", _semibrace_claim(_p38, (K.PROJ_LEFT, K.PROJ_RIGHT))),
    "P3.9": _Entry("additions a*ba, bab*: axioms iff commutative", _semibrace_claim(_conj_family((K.CONJ_STAR, K.CONJ_STAR_REV)), (K.CONJ_STAR, K.CONJ_STAR_REV))),
    "P3.10": _Entry("additions aba*, b*ab: axioms iff commutative", _semibrace_claim(_conj_family((K.CONJ, K.CONJ_REV)), (K.CONJ, K.CONJ_REV))),
    "R3.11": _Entry("rect22: conjugation additions associative without commutativity", _existence("rect22", (K.CONJ_STAR, K.CONJ_STAR_REV, K.CONJ, K.CONJ_REV), _r311)),
    "P4.1": _Entry("additions ab, ba: solution iff cro_li", _solution_claim((K.MUL, K.MUL_REV), "iff")),
    "P4.2": _Entry("additions a*b*, b*a*: solution implies cro_li; x = x* implies solution", _solution_claim((K.STAR_STAR, K.STAR_STAR_REV), "star_star")),
    "R4.3": _Entry(
        "c3 with a*b* is commutative cro_li but no solution; rect22 with a*b* is a solution without x = x*",
        lambda ctx: _existence("c3", (K.STAR_STAR, K.STAR_STAR_REV), _r43_c3)(ctx)
        + _existence("rect22", (K.STAR_STAR, K.STAR_STAR_REV), _r43_rect)(ctx),
    ),
    "P4.4": _Entry("additions a*b, b*a: solution iff cro_li", _solution_claim((K.STAR_LEFT, K.REV_STAR_LEFT), "iff")),
    "P4.5": _Entry("additions ab*, ba*: solution iff cro_li", _solution_claim((K.STAR_RIGHT, K.REV_STAR_RIGHT), "iff")),
    "P4.6": _Entry("addition aa*b always gives a solution", _solution_claim((K.PROJ_LEFT,), "always")),
    "P4.7": _Entry("addition ab*b: solution iff cro_li", _solution_claim((K.PROJ_RIGHT,), "iff")),
    "P4.8": _Entry("additions aba*, bab*: solution implies cro_li; commutative implies solution", _solution_claim((K.CONJ, K.CONJ_STAR_REV), "conj")),
    "R4.9": _Entry(
        "s3 with aba* is cro_li but no solution; rect22 with aba* is a non-commutative solution",
        lambda ctx: _existence("s3", (K.CONJ, K.CONJ_STAR_REV), _r49_s3)(ctx)
        + _existence("rect22", (K.CONJ, K.CONJ_STAR_REV), _r49_rect)(ctx),
    ),
    "R4.10": _Entry("additions a*ba, b*ab: commutative implies solution, plus class probe", _solution_claim((K.CONJ_STAR, K.CONJ_REV), "commutative")),
    "P4.12": _Entry("left semibraces: lambda_a is an additive endomorphism", _p412),
    "P5.4": _Entry("ab with a* is a weak star-brace iff Clifford; ba with a* iff cro_li", _p54),
    "P5.7": _Entry("weak star-brace iff left semibrace with -x + xy = x(x* + y)", _bridge),
    "P5.8": _Entry("left semibrace with inverse addition is a weak brace", _bridge),
    "E53": _Entry("projection sets of both reducts coincide", _wsb_claim(_eq53)),
    "L5.6": _Entry("basic weak star-brace identities", _wsb_claim(_wsb_suite(("basic",)))),
    "L5.10": _Entry("xe(x* + e) = x(x* + e)", _wsb_claim(_wsb_suite(("projection_shift",)))),
    "L5.11": _Entry("projection sum identities", _wsb_claim(_wsb_suite(("projection_sums",)))),
    "L5.12": _Entry("ex = x + e", _wsb_claim(_wsb_suite(("projection_action",)))),
    "T5.13": _Entry("eight inverse-equivalent conditions agree", _wsb_claim(_t513)),
    "L5.14": _Entry("x - y + y + y = x + y and mirror", _wsb_claim(_wsb_suite(("absorption",)))),
    "T5.15": _Entry("additive reduct cro_li, multiplicative reduct o_li", _wsb_claim(_t515)),
    "C5.17": _Entry("additive reduct monoid iff multiplicative reduct monoid", _wsb_claim(_t515)),
    "L5.18": _Entry("x(y - y)y = xy", _wsb_claim(_wsb_suite(("insertion",)))),
    "L5.19": _Entry("projection insertion identities", _wsb_claim(_wsb_suite(("projection_insertion",)))),
    "L5.20": _Entry("xyy*(x* + y) = x(x* + y) and (x + y)*z = (x + y)*xx*z", _wsb_claim(_wsb_suite(("lambda_support",)))),
    "T5.21": _Entry("lambda additive and multiplicative, rho anti-multiplicative", _wsb_claim(_wsb_suite(("lambda_rho",)))),
    "L5.22": _Entry("xy = lambda_x(y) rho_y(x)", _wsb_claim(_wsb_suite(("factorization",)))),
    "T5.23": _Entry("every weak star-brace gives a solution", _wsb_claim(_t523)),
}


def registered_ids() -> List[str]:
    return list(REGISTRY)


def verify_proposition(ident: str, max_order: int = 3, include_catalog: bool = True) -> VerificationReport:
    """Check the registered claim ``ident`` on all models of order at most
    ``max_order`` (plus the catalog unless disabled)."""
    if ident not in REGISTRY:
        raise InputError(f"unknown proposition id {ident!r}; known: {', '.join(REGISTRY)}")
    if max_order < 1:
        raise InputError("max order must be positive")
    bound = configured_max_order()
    if max_order > bound:
        raise CapacityError(f"max order {max_order} exceeds the configured bound {bound}")
    entry = REGISTRY[ident]
    ctx = _Ctx(max_order, include_catalog)
    notes: List[str] = []
    try:
        checked = entry.check(ctx)
        if ident == "R4.10":
            extra, notes = _r410_probe(ctx)
        return VerificationReport(ident, entry.summary, True, checked, notes=notes)
    except _Fail as exc:
        return VerificationReport(ident, entry.summary, False, 0, failure=str(exc))
    except ConsistencyError as exc:
        return VerificationReport(ident, entry.summary, False, 0, failure=f"consistency: {exc}")
