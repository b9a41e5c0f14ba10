"""Weak left star-braces ``(S, +, -, ., *)``.

Both ``(S, +, -)`` and ``(S, ., *)`` are regular star-semigroups and

    x(y + z) = xy - x + xz,      -x + x = xx*.

Throughout, ``x - y`` means ``x + (-y)`` and products bind tighter than sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Sequence, Union

from .semibrace import TwoTwoOneAlgebra, classify_semibrace
from .star_semigroup import (
    ClassReport,
    Flag,
    StarSemigroup,
    SuiteItem,
    classify,
    validate_star,
)
from .table_core import BinOp, ConsistencyError, InputError, StarbraceError, UnOp, Witness, binop

__all__ = [
    "WeakStarBrace",
    "ClassPreconditionError",
    "InverseReport",
    "StructureReport",
    "BridgeReport",
    "validate_wsb",
    "construct_from_semigroup",
    "wsb_identity_suite",
    "inverse_equivalents",
    "structure_report",
    "bridge_check",
    "additive_inverse",
]


class ClassPreconditionError(StarbraceError):
    """A construction needs a class property the semigroup lacks."""

    def __init__(self, missing: str, witness: Optional[Witness]):
        msg = f"not {missing}"
        if witness is not None:
            msg += ": " + witness.line()
        super().__init__(msg)
        self.missing = missing
        self.witness = witness


@dataclass(frozen=True)
class WeakStarBrace:
    add: BinOp
    neg: UnOp
    mul: BinOp
    star: UnOp

    @property
    def n(self) -> int:
        return len(self.star)

    @property
    def additive(self) -> StarSemigroup:
        return StarSemigroup(self.add, self.neg)

    @property
    def multiplicative(self) -> StarSemigroup:
        return StarSemigroup(self.mul, self.star)

    @property
    def algebra(self) -> TwoTwoOneAlgebra:
        return TwoTwoOneAlgebra(self.add, self.mul, self.star)


def _prefixed(prefix: str, w: Witness) -> Witness:
    return Witness(f"{prefix}:{w.axiom}", w.tuple, w.lhs, w.rhs)


def validate_wsb(
    add: Sequence[Sequence[int]],
    neg: Sequence[int],
    mul: Sequence[Sequence[int]],
    star: Sequence[int],
) -> Union[WeakStarBrace, Witness]:
    """Validate in the fixed order: additive reduct, multiplicative reduct,
    ``x(y+z) = xy - x + xz`` (id ``wsb_distributive``), ``-x + x = xx*`` (id ``wsb_negation``)."""
    A = validate_star(add, neg)
    if isinstance(A, Witness):
        return _prefixed("add", A)
    if len(A.mul) != len(mul):
        binop(mul, A.n, name="mul")
    M = validate_star(mul, star)
    if isinstance(M, Witness):
        return _prefixed("mul", M)
    a, g, m, s = A.mul, A.star, M.mul, M.star
    n = A.n
    for x, y, z in product(range(n), repeat=3):
        lhs = m[x][a[y][z]]
        rhs = a[a[m[x][y]][g[x]]][m[x][z]]
        if lhs != rhs:
            return Witness("wsb_distributive", (x, y, z), lhs, rhs)
    for x in range(n):
        lhs = a[g[x]][x]
        rhs = m[x][s[x]]
        if lhs != rhs:
            return Witness("wsb_negation", (x,), lhs, rhs)
    if A.projections != M.projections:
        raise ConsistencyError(
            f"projection sets differ: additive {sorted(A.projections)} vs multiplicative {sorted(M.projections)}"
        )
    return WeakStarBrace(a, g, m, s)


def construct_from_semigroup(S: StarSemigroup, variant: str, report: Optional[ClassReport] = None) -> WeakStarBrace:
    """Build a weak star-brace on ``S``.

    ``left``: ``a + b = ab``, ``-a = a*``; needs a Clifford semigroup.
    ``reversed``: ``a + b = ba``, ``-a = a*``; needs completely regular,
    orthodox and locally inverse.
    """
    cls = report or classify(S)
    n = S.n
    if variant == "left":
        if not cls.clifford.holds:
            x = next(x for x in S.elements if S.m(x, S.s(x)) != S.m(S.s(x), x))
            raise ClassPreconditionError(
                "clifford", Witness("xx*=x*x", (x,), S.m(x, S.s(x)), S.m(S.s(x), x))
            )
        add = S.mul
    elif variant == "reversed":
        if not cls.cro_li.holds:
            raise ClassPreconditionError("cro_li", cls.cro_li.witness)
        add = tuple(tuple(S.mul[b][a] for b in range(n)) for a in range(n))
    else:
        raise InputError(f"unknown variant {variant!r}; expected 'left' or 'reversed'")
    W = validate_wsb(add, S.star, S.mul, S.star)
    if isinstance(W, Witness):
        raise ConsistencyError(f"{variant} construction is not a weak star-brace: {W.line()}")
    return W


class _Ops:
    """Short names for writing identities."""

    def __init__(self, W: WeakStarBrace):
        self.W = W
        self.X = list(range(W.n))
        self.P = sorted(W.multiplicative.projections)

    def A(self, *xs: int) -> int:
        it = iter(xs)
        acc = next(it)
        for x in it:
            acc = self.W.add[acc][x]
        return acc

    def M(self, *xs: int) -> int:
        it = iter(xs)
        acc = next(it)
        for x in it:
            acc = self.W.mul[acc][x]
        return acc

    def N(self, x: int) -> int:
        return self.W.neg[x]

    def s(self, x: int) -> int:
        return self.W.star[x]

    def lam(self, a: int, b: int) -> int:
        return self.M(a, self.A(self.s(a), b))

    def rho(self, b: int, a: int) -> int:
        return self.M(self.s(self.A(self.s(a), b)), b)


def _check(ident: str, lhs, rhs, domains) -> SuiteItem:
    for tup in product(*domains):
        a, b = lhs(*tup), rhs(*tup)
        if a != b:
            return SuiteItem(ident, True, Witness(ident, tuple(tup), a, b))
    return SuiteItem(ident, True)


def _identities(o: _Ops):
    A, M, N, s, lam, rho = o.A, o.M, o.N, o.s, o.lam, o.rho
    X, P = o.X, o.P
    X1, X2, X3 = [X], [X, X], [X, X, X]
    # (id, lhs, rhs, domains)
    return [
        ("basic: a**=a", lambda a: s(s(a)), lambda a: a, X1),
        ("basic: aa*a=a", lambda a: M(a, s(a), a), lambda a: a, X1),
        ("basic: (ab)*=b*a*", lambda a, b: s(M(a, b)), lambda a, b: M(s(b), s(a)), X2),
        ("basic: a*aa*=a*", lambda a: M(s(a), a, s(a)), lambda a: s(a), X1),
        ("basic: -(-a)=a", lambda a: N(N(a)), lambda a: a, X1),
        ("basic: a-a+a=a", lambda a: A(a, N(a), a), lambda a: a, X1),
        ("basic: -(a+b)=-b-a", lambda a, b: N(A(a, b)), lambda a, b: A(N(b), N(a)), X2),
        ("basic: -a+a-a=-a", lambda a: A(N(a), a, N(a)), lambda a: N(a), X1),
        ("basic: -(aa*)=aa*", lambda a: N(M(a, s(a))), lambda a: M(a, s(a)), X1),
        ("basic: aa*=aa*+aa*", lambda a: M(a, s(a)), lambda a: A(M(a, s(a)), M(a, s(a))), X1),
        ("basic: -(a*a)=a*a", lambda a: N(M(s(a), a)), lambda a: M(s(a), a), X1),
        ("basic: a*a=a*a+a*a", lambda a: M(s(a), a), lambda a: A(M(s(a), a), M(s(a), a)), X1),
        ("basic: (a-a)*=a-a", lambda a: s(A(a, N(a))), lambda a: A(a, N(a)), X1),
        ("basic: a-a=(a-a)(a-a)", lambda a: A(a, N(a)), lambda a: M(A(a, N(a)), A(a, N(a))), X1),
        ("basic: (-a+a)*=-a+a", lambda a: s(A(N(a), a)), lambda a: A(N(a), a), X1),
        ("basic: -a+a=(-a+a)(-a+a)", lambda a: A(N(a), a), lambda a: M(A(N(a), a), A(N(a), a)), X1),
        ("basic: a+aa*=a", lambda a: A(a, M(a, s(a))), lambda a: a, X1),
        ("basic: a-aa*=a", lambda a: A(a, N(M(a, s(a)))), lambda a: a, X1),
        ("basic: aa*-a=-a", lambda a: A(M(a, s(a)), N(a)), lambda a: N(a), X1),
        ("basic: (-a)(-a)*=a-a", lambda a: M(N(a), s(N(a))), lambda a: A(a, N(a)), X1),
        ("basic: (a-a)(-a)=-a", lambda a: M(A(a, N(a)), N(a)), lambda a: N(a), X1),
        ("basic: (-a+a)a=a", lambda a: M(A(N(a), a), a), lambda a: a, X1),
        (
            "basic: (-a+a)(a-a)=a+(-a+a)(-a)",
            lambda a: M(A(N(a), a), A(a, N(a))),
            lambda a: A(a, M(A(N(a), a), N(a))),
            X1,
        ),
        (
            "basic: (a-a)(-a+a)=-a+(a-a)a",
            lambda a: M(A(a, N(a)), A(N(a), a)),
            lambda a: A(N(a), M(A(a, N(a)), a)),
            X1,
        ),
        (
            "basic: ab-ab+a(b+c)=a(b+c)",
            lambda a, b, c: A(M(a, b), N(M(a, b)), M(a, A(b, c))),
            lambda a, b, c: M(a, A(b, c)),
            X3,
        ),
        (
            "basic: a(b+c)=a(b+a*ac)",
            lambda a, b, c: M(a, A(b, c)),
            lambda a, b, c: M(a, A(b, M(s(a), a, c))),
            X3,
        ),
        ("basic: e*=e", lambda e: s(e), lambda e: e, [P]),
        ("basic: -e=e", lambda e: N(e), lambda e: e, [P]),
        ("basic: ee=e", lambda e: M(e, e), lambda e: e, [P]),
        ("basic: e+e=e", lambda e: A(e, e), lambda e: e, [P]),
        ("basic: e-e=e", lambda e: A(e, N(e)), lambda e: e, [P]),
        ("basic: ee*=e", lambda e: M(e, s(e)), lambda e: e, [P]),
        ("basic: e*e=e", lambda e: M(s(e), e), lambda e: e, [P]),
        ("basic: -e+e=e", lambda e: A(N(e), e), lambda e: e, [P]),
        ("basic: -a+ab=a(a*+b)", lambda a, b: A(N(a), M(a, b)), lambda a, b: lam(a, b), X2),
        ("projection_shift: xe(x*+e)=x(x*+e)", lambda x, e: M(x, e, A(s(x), e)), lambda x, e: lam(x, e), [X, P]),
        (
            "projection_sums: -x+xyy*=(xy)(xy)*",
            lambda x, y: A(N(x), M(x, y, s(y))),
            lambda x, y: M(M(x, y), s(M(x, y))),
            X2,
        ),
        ("projection_sums: e+ef=e+e(f+e)", lambda e, f: A(e, M(e, f)), lambda e, f: A(e, M(e, A(f, e))), [P, P]),
        ("projection_sums: -x+xe=-xe+x", lambda x, e: A(N(x), M(x, e)), lambda x, e: A(N(M(x, e)), x), [X, P]),
        ("projection_action: ex=x+e", lambda x, e: M(e, x), lambda x, e: A(x, e), [X, P]),
        (
            "projection_action: (-x+x)(x-x)=x-x-x+x",
            lambda x: M(A(N(x), x), A(x, N(x))),
            lambda x: A(x, N(x), N(x), x),
            X1,
        ),
        ("absorption: x-y+y+y=x+y", lambda x, y: A(x, N(y), y, y), lambda x, y: A(x, y), X2),
        ("absorption: y+y-y+x=y+x", lambda x, y: A(y, y, N(y), x), lambda x, y: A(y, x), X2),
        ("insertion: x(y-y)y=xy", lambda x, y: M(x, A(y, N(y)), y), lambda x, y: M(x, y), X2),
        (
            "projection_insertion: x(-y+y)z=x(y-y)z",
            lambda x, y, z: M(x, A(N(y), y), z),
            lambda x, y, z: M(x, A(y, N(y)), z),
            X3,
        ),
        ("projection_insertion: x+e+z+e=x+z+e", lambda x, z, e: A(x, e, z, e), lambda x, z, e: A(x, z, e), [X, X, P]),
        (
            "projection_insertion: (-x+x)e(-x+x)=-x+e+x",
            lambda x, e: M(A(N(x), x), e, A(N(x), x)),
            lambda x, e: A(N(x), e, x),
            [X, P],
        ),
        ("lambda_support: xyy*(x*+y)=x(x*+y)", lambda x, y: M(x, y, s(y), A(s(x), y)), lambda x, y: lam(x, y), X2),
        (
            "lambda_support: (x+y)*z=(x+y)*xx*z",
            lambda x, y, z: M(s(A(x, y)), z),
            lambda x, y, z: M(s(A(x, y)), x, s(x), z),
            X3,
        ),
        (
            "lambda_rho: lx(y+z)=lx(y)+lx(z)",
            lambda x, y, z: lam(x, A(y, z)),
            lambda x, y, z: A(lam(x, y), lam(x, z)),
            X3,
        ),
        ("lambda_rho: lxly(z)=lxy(z)", lambda x, y, z: lam(x, lam(y, z)), lambda x, y, z: lam(M(x, y), z), X3),
        ("lambda_rho: rzrx(y)=rxz(y)", lambda x, y, z: rho(z, rho(x, y)), lambda x, y, z: rho(M(x, z), y), X3),
        ("factorization: xy=lx(y)ry(x)", lambda x, y: M(x, y), lambda x, y: M(lam(x, y), rho(y, x)), X2),
    ]


def wsb_identity_suite(W: WeakStarBrace) -> List[SuiteItem]:
    """Every identity known to hold in a weak left star-brace, checked exhaustively."""
    o = _Ops(W)
    return [_check(ident, lhs, rhs, doms) for ident, lhs, rhs, doms in _identities(o)]


@dataclass(frozen=True)
class InverseReport:
    conditions: Dict[int, Flag]

    @property
    def verdict(self) -> bool:
        return self.conditions[1].holds


def inverse_equivalents(W: WeakStarBrace) -> InverseReport:
    """Eight conditions that are equivalent on a weak star-brace.

    (1) multiplicative reduct inverse, (2) additive reduct inverse,
    (3) both, (4) ``a(-b) = a - ab + a``, (5) ``ab = a + a(a* + b)``,
    (6) ``a + b = aa*(a + b)``, (7) ``a(a* + a*) = -a``,
    (8) ``b*(a* + b) = b*a* - b*``.
    """
    o = _Ops(W)
    A, M, N, s = o.A, o.M, o.N, o.s
    X = o.X
    c1 = classify(W.multiplicative).inverse
    c2 = classify(W.additive).inverse
    c3 = c1 if not c1.holds else c2

    def flag(item: SuiteItem) -> Flag:
        return Flag(item.holds, item.witness)

    conds = {
        1: c1,
        2: c2,
        3: c3,
        4: flag(_check("a(-b)=a-ab+a", lambda a, b: M(a, N(b)), lambda a, b: A(a, N(M(a, b)), a), [X, X])),
        5: flag(_check("ab=a+a(a*+b)", lambda a, b: M(a, b), lambda a, b: A(a, M(a, A(s(a), b))), [X, X])),
        6: flag(_check("a+b=aa*(a+b)", lambda a, b: A(a, b), lambda a, b: M(a, s(a), A(a, b)), [X, X])),
        7: flag(_check("a(a*+a*)=-a", lambda a: M(a, A(s(a), s(a))), lambda a: N(a), [X])),
        8: flag(
            _check(
                "b*(a*+b)=b*a*-b*",
                lambda a, b: M(s(b), A(s(a), b)),
                lambda a, b: A(M(s(b), s(a)), N(s(b))),
                [X, X],
            )
        ),
    }
    verdicts = {f.holds for f in conds.values()}
    if len(verdicts) != 1:
        detail = ", ".join(f"({k})={'T' if f.holds else 'F'}" for k, f in conds.items())
        raise ConsistencyError(f"inverse-equivalent conditions disagree: {detail}")
    return InverseReport(conds)


@dataclass(frozen=True)
class StructureReport:
    additive_cro_li: Flag
    multiplicative_o_li: Flag
    additive_monoid: bool
    multiplicative_monoid: bool


def structure_report(W: WeakStarBrace) -> StructureReport:
    add_cls = classify(W.additive)
    mul_cls = classify(W.multiplicative)
    rep = StructureReport(
        additive_cro_li=add_cls.cro_li,
        multiplicative_o_li=mul_cls.o_li,
        additive_monoid=W.additive.identity is not None,
        multiplicative_monoid=W.multiplicative.identity is not None,
    )
    if not rep.additive_cro_li.holds:
        raise ConsistencyError("additive reduct not cro_li: " + rep.additive_cro_li.witness.line())
    if not rep.multiplicative_o_li.holds:
        raise ConsistencyError("multiplicative reduct not o_li: " + rep.multiplicative_o_li.witness.line())
    if rep.additive_monoid != rep.multiplicative_monoid:
        raise ConsistencyError("exactly one reduct is a monoid")
    return rep


def additive_inverse(add: BinOp) -> Optional[UnOp]:
    """The inverse map of ``(S, +)`` if it is an inverse semigroup, else None."""
    n = len(add)
    out = []
    for a in range(n):
        inv = [b for b in range(n) if add[add[a][b]][a] == a and add[add[b][a]][b] == b]
        if len(inv) != 1:
            return None
        out.append(inv[0])
    return tuple(out)


@dataclass(frozen=True)
class BridgeReport:
    is_left: bool
    bridge_axiom: Optional[Flag]
    wsb: Union[WeakStarBrace, Witness, None]
    inverse_addition: bool
    weak_brace: Optional[WeakStarBrace] = None

    @property
    def wsb_valid(self) -> bool:
        return isinstance(self.wsb, WeakStarBrace)


def bridge_check(A: Union[TwoTwoOneAlgebra, WeakStarBrace], neg: Optional[Sequence[int]] = None) -> BridgeReport:
    """Relate left semibraces, weak star-braces and weak braces.

    With ``neg`` given (and ``(S, +, neg)`` a regular star-semigroup) the
    algebra is a weak star-brace exactly when it is a left semibrace
    satisfying ``-x + xy = x(x* + y)``.  Independently, a left semibrace
    whose additive reduct is an inverse semigroup must have a Clifford
    additive reduct and form a weak brace with the additive inverse.
    """
    if isinstance(A, WeakStarBrace):
        neg = A.neg if neg is None else neg
        A = A.algebra
    sb = classify_semibrace(A)
    n = A.n
    bridge = None
    wsb: Union[WeakStarBrace, Witness, None] = None
    if neg is not None:
        g = tuple(neg)
        additive = validate_star(A.add, g)
        if not isinstance(additive, Witness):
            bridge = Flag(True)
            for x, y in product(range(n), repeat=2):
                lhs = A.add[g[x]][A.mul[x][y]]
                rhs = A.lam(x, y)
                if lhs != rhs:
                    bridge = Flag(False, Witness("bridge", (x, y), lhs, rhs))
                    break
            wsb = validate_wsb(A.add, g, A.mul, A.star)
            if isinstance(wsb, WeakStarBrace) != (sb.is_left and bridge.holds):
                raise ConsistencyError(
                    f"weak star-brace validity ({isinstance(wsb, WeakStarBrace)}) differs from "
                    f"left semibrace ({sb.is_left}) with bridge axiom ({bridge.holds})"
                )
        else:
            wsb = _prefixed("add", additive)

    inv_case = False
    weak_brace = None
    inv = additive_inverse(A.add)
    if sb.is_left and inv is not None:
        inv_case = True
        add_cls = classify(StarSemigroup(A.add, inv))
        if not add_cls.clifford.holds:
            raise ConsistencyError("inverse additive reduct is not Clifford: " + add_cls.clifford.witness.line())
        if not classify(A.semigroup).inverse.holds:
            raise ConsistencyError("multiplicative reduct is not inverse")
        wb = validate_wsb(A.add, inv, A.mul, A.star)
        if isinstance(wb, Witness):
            raise ConsistencyError("left semibrace with inverse addition is not a weak brace: " + wb.line())
        weak_brace = wb
    return BridgeReport(sb.is_left, bridge, wsb, inv_case, weak_brace)
