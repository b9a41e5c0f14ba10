"""Regular star-semigroups: validation, Green's relations and classification.

A regular star-semigroup is a semigroup ``(S, .)`` with an involution ``*``
such that ``x x* x = x``, ``x** = x`` and ``(xy)* = y* x*``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple, Union

from .table_core import (
    BinOp,
    ConsistencyError,
    UnOp,
    Witness,
    associativity_check,
    binop,
    identity_element,
    unop,
)

__all__ = [
    "StarSemigroup",
    "Flag",
    "ClassReport",
    "GreenPartition",
    "ClassCheck",
    "CrosscheckReport",
    "SuiteItem",
    "InvalidStructure",
    "validate_star",
    "star_semigroup",
    "projections_and_idempotents",
    "green_relation",
    "classify",
    "equational_crosscheck",
    "identity_suite_cro_li",
    "check_identity",
]


class InvalidStructure(ValueError):
    """Tables do not form the requested structure; carries the witness."""

    def __init__(self, witness: Witness):
        super().__init__(witness.line())
        self.witness = witness


@dataclass(frozen=True)
class StarSemigroup:
    mul: BinOp
    star: UnOp

    @property
    def n(self) -> int:
        return len(self.star)

    @property
    def elements(self) -> range:
        return range(len(self.star))

    def m(self, *xs: int) -> int:
        """Product of ``xs`` (left to right)."""
        it = iter(xs)
        acc = next(it)
        for x in it:
            acc = self.mul[acc][x]
        return acc

    def s(self, x: int) -> int:
        return self.star[x]

    @cached_property
    def idempotents(self) -> FrozenSet[int]:
        return frozenset(e for e in self.elements if self.mul[e][e] == e)

    @cached_property
    def projections(self) -> FrozenSet[int]:
        return frozenset(e for e in self.idempotents if self.star[e] == e)

    @cached_property
    def identity(self) -> Optional[int]:
        return identity_element(self.mul)


def validate_star(mul: Sequence[Sequence[int]], star: Sequence[int]) -> Union[StarSemigroup, Witness]:
    """Check the regular star-semigroup axioms.

    Returns the structure, or the first witness in the fixed order
    associativity, ``xx*x = x``, ``x** = x``, ``(xy)* = y*x*``.
    """
    t = binop(mul, name="mul")
    s = unop(star, len(t), name="star")
    n = len(t)
    w = associativity_check(t)
    if w is not None:
        return w
    for x in range(n):
        v = t[t[x][s[x]]][x]
        if v != x:
            return Witness("regular", (x,), v, x)
    for x in range(n):
        if s[s[x]] != x:
            return Witness("involution", (x,), s[s[x]], x)
    for x, y in product(range(n), repeat=2):
        lhs = s[t[x][y]]
        rhs = t[s[y]][s[x]]
        if lhs != rhs:
            return Witness("anti", (x, y), lhs, rhs)
    return StarSemigroup(t, s)


def star_semigroup(mul: Sequence[Sequence[int]], star: Sequence[int]) -> StarSemigroup:
    """Like :func:`validate_star` but raises :class:`InvalidStructure`."""
    result = validate_star(mul, star)
    if isinstance(result, Witness):
        raise InvalidStructure(result)
    return result


def projections_and_idempotents(S: StarSemigroup) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    """Return ``(P, E)`` and confirm ``P = {xx*}`` and ``E = P.P``."""
    P, E = S.projections, S.idempotents
    if P != {S.m(x, S.s(x)) for x in S.elements} or P != {S.m(S.s(x), x) for x in S.elements}:
        raise ConsistencyError("projection set differs from {xx*}")
    if E != {S.m(e, f) for e in P for f in P}:
        raise ConsistencyError("idempotents differ from products of two projections")
    return P, E


# ---------------------------------------------------------------------------
# Green's relations


@dataclass(frozen=True)
class GreenPartition:
    relation: str
    classes: Tuple[Tuple[int, ...], ...]

    def block_of(self, x: int) -> Tuple[int, ...]:
        for block in self.classes:
            if x in block:
                return block
        raise KeyError(x)

    def related(self, a: int, b: int) -> bool:
        return b in self.block_of(a)


def _partition_by(keys: Sequence) -> Tuple[Tuple[int, ...], ...]:
    blocks: Dict[object, List[int]] = {}
    for x, k in enumerate(keys):
        blocks.setdefault(k, []).append(x)
    return tuple(sorted(tuple(b) for b in blocks.values()))


def _principal_left(S: StarSemigroup, a: int) -> FrozenSet[int]:
    return frozenset({a} | {S.mul[u][a] for u in S.elements})


def _principal_right(S: StarSemigroup, a: int) -> FrozenSet[int]:
    return frozenset({a} | {S.mul[a][u] for u in S.elements})


def _divisibility_keys(S: StarSemigroup, which: str) -> List:
    if which == "L":
        return [_principal_left(S, a) for a in S.elements]
    if which == "R":
        return [_principal_right(S, a) for a in S.elements]
    return [(_principal_left(S, a), _principal_right(S, a)) for a in S.elements]


def _equational_keys(S: StarSemigroup, which: str) -> List:
    if which == "L":
        return [S.m(S.s(a), a) for a in S.elements]
    if which == "R":
        return [S.m(a, S.s(a)) for a in S.elements]
    return [(S.m(S.s(a), a), S.m(a, S.s(a))) for a in S.elements]


def green_relation(S: StarSemigroup, which: str) -> GreenPartition:
    """Partition of ``S`` into L-, R- or H-classes.

    Classes come from the projection criterion (``a R b`` iff ``aa* = bb*``,
    ``a L b`` iff ``a*a = b*b``) and are checked against mutual divisibility.
    """
    if which not in ("L", "R", "H"):
        raise ValueError(f"unknown Green relation {which!r}")
    eq = _partition_by(_equational_keys(S, which))
    div = _partition_by(_divisibility_keys(S, which))
    if eq != div:
        raise ConsistencyError(f"Green {which}: projection criterion {eq} != divisibility {div}")
    return GreenPartition(which, eq)


# ---------------------------------------------------------------------------
# Classification


@dataclass(frozen=True)
class Flag:
    holds: bool
    witness: Optional[Witness] = None

    def __bool__(self) -> bool:
        return self.holds


TRUE = Flag(True)


def _first(witnesses) -> Flag:
    for w in witnesses:
        if w is not None:
            return Flag(False, w)
    return TRUE


def _conj(*flags: Flag) -> Flag:
    for f in flags:
        if not f.holds:
            return f
    return TRUE


@dataclass(frozen=True)
class ClassReport:
    commutative: Flag
    star_identity: Flag
    inverse: Flag
    orthodox: Flag
    completely_regular: Flag
    locally_inverse: Flag
    clifford: Flag
    idempotents: FrozenSet[int]
    projections: FrozenSet[int]

    @property
    def cr_li(self) -> Flag:
        return _conj(self.completely_regular, self.locally_inverse)

    @property
    def o_li(self) -> Flag:
        return _conj(self.orthodox, self.locally_inverse)

    @property
    def cro_li(self) -> Flag:
        return _conj(self.completely_regular, self.orthodox, self.locally_inverse)

    def flags(self) -> Dict[str, Flag]:
        return {
            "commutative": self.commutative,
            "star_identity": self.star_identity,
            "inverse": self.inverse,
            "orthodox": self.orthodox,
            "completely_regular": self.completely_regular,
            "locally_inverse": self.locally_inverse,
            "clifford": self.clifford,
            "cr_li": self.cr_li,
            "o_li": self.o_li,
            "cro_li": self.cro_li,
        }


def _inverse_witness(mul: BinOp, carrier: Sequence[int], axiom: str, context=()) -> Optional[Witness]:
    # a has at least one inverse in a regular semigroup; a witness records two
    for a in carrier:
        inverses = [b for b in carrier if mul[mul[a][b]][a] == a and mul[mul[b][a]][b] == b]
        if len(inverses) != 1:
            lhs = inverses[0] if inverses else -1
            rhs = inverses[1] if len(inverses) > 1 else -1
            return Witness(axiom, tuple(context) + (a,), lhs, rhs)
    return None


def classify(S: StarSemigroup) -> ClassReport:
    """Class membership from the definitions (no equational shortcuts)."""
    n, mul = S.n, S.mul
    E = S.idempotents
    elems = list(S.elements)

    commutative = _first(
        Witness("commutative", (a, b), mul[a][b], mul[b][a])
        for a, b in product(elems, repeat=2)
        if mul[a][b] != mul[b][a]
    )
    star_identity = _first(
        Witness("star_identity", (x,), S.s(x), x) for x in elems if S.s(x) != x
    )
    inverse = Flag(True) if (w := _inverse_witness(mul, elems, "inverse")) is None else Flag(False, w)

    orthodox = _first(
        Witness("orthodox", (e, f), S.m(e, f, e, f), S.m(e, f))
        for e, f in product(sorted(E), repeat=2)
        if mul[e][f] not in E
    )

    H = _divisibility_keys(S, "H")
    completely_regular = _first(
        Witness("completely_regular", (a,), a, mul[a][a]) for a in elems if H[a] != H[mul[a][a]]
    )

    locally_inverse = TRUE
    for e in sorted(E):
        local = sorted({S.m(e, x, e) for x in elems})
        w = _inverse_witness(mul, local, "locally_inverse", (e,))
        if w is not None:
            locally_inverse = Flag(False, w)
            break

    clifford = _first(
        Witness("clifford", (e, x), mul[e][x], mul[x][e])
        for e in sorted(E)
        for x in elems
        if mul[e][x] != mul[x][e]
    )
    return ClassReport(
        commutative=commutative,
        star_identity=star_identity,
        inverse=inverse,
        orthodox=orthodox,
        completely_regular=completely_regular,
        locally_inverse=locally_inverse,
        clifford=clifford,
        idempotents=E,
        projections=S.projections,
    )


# ---------------------------------------------------------------------------
# Equational characterizations


def check_identity(
    name: str,
    lhs: Callable[..., int],
    rhs: Callable[..., int],
    domains: Sequence[Sequence[int]],
) -> Optional[Witness]:
    """First tuple from ``product(*domains)`` where ``lhs != rhs``."""
    for tup in product(*domains):
        a, b = lhs(*tup), rhs(*tup)
        if a != b:
            return Witness(name, tuple(tup), a, b)
    return None


def _equational_forms(S: StarSemigroup) -> Dict[str, Dict[str, Optional[Witness]]]:
    m, s = S.m, S.s
    X = list(S.elements)
    P = sorted(S.projections)
    forms: Dict[str, Dict[str, Optional[Witness]]] = {}
    forms["inverse"] = {
        "ef=fe on P": check_identity("ef=fe", lambda e, f: m(e, f), lambda e, f: m(f, e), [P, P]),
    }
    forms["orthodox"] = {
        "efg=(efg)^2 on P": check_identity(
            "efg=(efg)^2", lambda e, f, g: m(e, f, g), lambda e, f, g: m(e, f, g, e, f, g), [P, P, P]
        ),
    }
    forms["completely_regular"] = {
        "xx*=xx*x*xx*": check_identity(
            "xx*=xx*x*xx*", lambda x: m(x, s(x)), lambda x: m(x, s(x), s(x), x, x, s(x)), [X]
        ),
        "x*x=x*xxx*x*": check_identity(
            "x*x=x*xxx*x*", lambda x: m(s(x), x), lambda x: m(s(x), x, x, s(x), s(x), x), [X]
        ),
    }
    forms["locally_inverse"] = {
        "efege=egefe on P": check_identity(
            "efege=egefe", lambda e, f, g: m(e, f, e, g, e), lambda e, f, g: m(e, g, e, f, e), [P, P, P]
        ),
    }
    forms["cr_li"] = {
        "xx*y*yxy=xy": check_identity(
            "xx*y*yxy=xy", lambda x, y: m(x, s(x), s(y), y, x, y), lambda x, y: m(x, y), [X, X]
        ),
    }
    forms["o_li"] = {
        "afgb=agfb, f,g in P": check_identity(
            "afgb=agfb", lambda a, f, g, b: m(a, f, g, b), lambda a, f, g, b: m(a, g, f, b), [X, P, P, X]
        ),
    }
    forms["cro_li"] = {
        "xy=xxx*y": check_identity(
            "xy=xxx*y", lambda x, y: m(x, y), lambda x, y: m(x, x, s(x), y), [X, X]
        ),
        "yx=yx*xx": check_identity(
            "yx=yx*xx", lambda x, y: m(y, x), lambda x, y: m(y, s(x), x, x), [X, X]
        ),
        "xyz=xyxx*z": check_identity(
            "xyz=xyxx*z", lambda x, y, z: m(x, y, z), lambda x, y, z: m(x, y, x, s(x), z), [X, X, X]
        ),
        "zyx=zx*xyx": check_identity(
            "zyx=zx*xyx", lambda x, y, z: m(z, y, x), lambda x, y, z: m(z, s(x), x, y, x), [X, X, X]
        ),
        "xyz=xyx*xz": check_identity(
            "xyz=xyx*xz", lambda x, y, z: m(x, y, z), lambda x, y, z: m(x, y, s(x), x, z), [X, X, X]
        ),
        "zyx=zxx*yx": check_identity(
            "zyx=zxx*yx", lambda x, y, z: m(z, y, x), lambda x, y, z: m(z, x, s(x), y, x), [X, X, X]
        ),
    }
    forms["clifford"] = {
        "xx*=x*x": check_identity(
            "xx*=x*x", lambda x: m(x, s(x)), lambda x: m(s(x), x), [X]
        ),
    }
    return forms


@dataclass(frozen=True)
class ClassCheck:
    klass: str
    definitional: bool
    forms: Dict[str, Optional[Witness]]
    consistent: bool
    detail: str = ""


@dataclass(frozen=True)
class CrosscheckReport:
    checks: Tuple[ClassCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.consistent for c in self.checks)

    def failures(self) -> List[ClassCheck]:
        return [c for c in self.checks if not c.consistent]

    def __getitem__(self, klass: str) -> ClassCheck:
        for c in self.checks:
            if c.klass == klass:
                return c
        raise KeyError(klass)


def equational_crosscheck(S: StarSemigroup, report: Optional[ClassReport] = None) -> CrosscheckReport:
    """Compare each definitional class flag with its equational characterization."""
    cls = report or classify(S)
    forms = _equational_forms(S)
    definitional = {
        "inverse": cls.inverse.holds,
        "orthodox": cls.orthodox.holds,
        "completely_regular": cls.completely_regular.holds,
        "locally_inverse": cls.locally_inverse.holds,
        "cr_li": cls.cr_li.holds,
        "o_li": cls.o_li.holds,
        "cro_li": cls.cro_li.holds,
        "clifford": cls.clifford.holds,
    }
    checks = []
    for klass, fs in forms.items():
        verdicts = {w is None for w in fs.values()}
        d = definitional[klass]
        ok = verdicts == {d}
        detail = ""
        if klass == "clifford":
            cr_inv = cls.completely_regular.holds and cls.inverse.holds
            if cr_inv != d:
                ok = False
                detail = "clifford differs from completely regular and inverse"
        if not ok and not detail:
            detail = f"definitional={d}, equational={sorted(verdicts)}"
        checks.append(ClassCheck(klass, d, fs, ok, detail))

    # projection facts and Green's relations, reported as one more entry
    try:
        projections_and_idempotents(S)
        for which in "LRH":
            green_relation(S, which)
        P, E = S.projections, S.idempotents
        ok24 = all((S.s(a) in E) == (a in E) for a in S.elements) and all(
            (S.m(e, f) in P) == (S.m(e, f) == S.m(f, e)) for e in P for f in P
        )
        checks.append(ClassCheck("projections", True, {}, ok24, "" if ok24 else "projection product or idempotent star rule violated"))
    except ConsistencyError as exc:
        checks.append(ClassCheck("projections", True, {}, False, str(exc)))
    return CrosscheckReport(tuple(checks))


@dataclass(frozen=True)
class SuiteItem:
    ident: str
    applicable: bool
    witness: Optional[Witness] = None

    @property
    def holds(self) -> bool:
        return self.witness is None


def identity_suite_cro_li(S: StarSemigroup, report: Optional[ClassReport] = None) -> List[SuiteItem]:
    """Conditional identities for completely regular, orthodox, locally inverse
    structures, for ``x = x*`` structures, and for monoids."""
    cls = report or classify(S)
    m, s = S.m, S.s
    X = list(S.elements)
    items: List[SuiteItem] = []

    cro = cls.cro_li.holds
    cor212 = [
        ("xyx*xz=xyz", lambda x, y, z: m(x, y, s(x), x, z), lambda x, y, z: m(x, y, z)),
        ("xyz=xyxx*z", lambda x, y, z: m(x, y, z), lambda x, y, z: m(x, y, x, s(x), z)),
        ("zxx*yx=zyx", lambda x, y, z: m(z, x, s(x), y, x), lambda x, y, z: m(z, y, x)),
        ("zyx=zx*xyx", lambda x, y, z: m(z, y, x), lambda x, y, z: m(z, s(x), x, y, x)),
        ("x*yx*xz=x*yz", lambda x, y, z: m(s(x), y, s(x), x, z), lambda x, y, z: m(s(x), y, z)),
        ("x*yz=x*yxx*z", lambda x, y, z: m(s(x), y, z), lambda x, y, z: m(s(x), y, x, s(x), z)),
        ("zxx*yx*=zyx*", lambda x, y, z: m(z, x, s(x), y, s(x)), lambda x, y, z: m(z, y, s(x))),
        ("zyx*=zx*xyx*", lambda x, y, z: m(z, y, s(x)), lambda x, y, z: m(z, s(x), x, y, s(x))),
        ("xyy*z=xy*yz", lambda x, y, z: m(x, y, s(y), z), lambda x, y, z: m(x, s(y), y, z)),
    ]
    for name, lhs, rhs in cor212:
        w = check_identity(name, lhs, rhs, [X, X, X]) if cro else None
        items.append(SuiteItem(f"cro_li: {name}", cro, w))

    comm = cls.commutative.holds
    items.append(
        SuiteItem(
            "commutative: cro_li",
            comm,
            cls.cro_li.witness if comm and not cro else None,
        )
    )
    sid = cls.star_identity.holds
    for name, lhs, rhs, dom in [
        ("a^3=a", lambda a: m(a, a, a), lambda a: a, [X]),
        ("ab=ba", lambda a, b: m(a, b), lambda a, b: m(b, a), [X, X]),
    ]:
        w = check_identity(name, lhs, rhs, dom) if sid else None
        items.append(SuiteItem(f"star_identity: {name}", sid, w))
    items.append(
        SuiteItem("star_identity: cro_li", sid, cls.cro_li.witness if sid and not cro else None)
    )

    one = S.identity
    if one is None:
        items.append(SuiteItem("monoid: 1*=1 in P", False))
    else:
        w = None
        if S.s(one) != one:
            w = Witness("1*=1", (one,), S.s(one), one)
        elif one not in S.projections:
            w = Witness("1 in P", (one,), S.m(one, one), one)
        items.append(SuiteItem("monoid: 1*=1 in P", True, w))
    return items
