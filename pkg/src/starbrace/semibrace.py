"""Additions induced on a regular star-semigroup and the semibrace axioms.

The left axiom is ``x(y + z) = xy + x(x* + z)`` and the right axiom is
``(z + y)x = (z + x*)x + yx``.  Witness tuples are always ``(x, y, z)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product
from typing import Callable, Dict, Optional, Sequence

from .star_semigroup import Flag, StarSemigroup, star_semigroup
from .table_core import (
    BinOp,
    ConsistencyError,
    InputError,
    UnOp,
    Witness,
    associativity_check,
    binop,
    binop_from,
)

__all__ = [
    "AdditionKind",
    "TwoTwoOneAlgebra",
    "SemibraceReport",
    "induce_addition",
    "check_left_axiom",
    "check_right_axiom",
    "classify_semibrace",
    "morphism_diagnostics",
    "parse_kind",
]


class AdditionKind(enum.Enum):
    MUL = "mul"
    MUL_REV = "mul-rev"
    STAR_STAR = "star-star"
    STAR_STAR_REV = "star-star-rev"
    STAR_LEFT = "star-left"
    STAR_RIGHT = "star-right"
    REV_STAR_LEFT = "rev-star-left"
    REV_STAR_RIGHT = "rev-star-right"
    PROJ_LEFT = "proj-left"
    PROJ_RIGHT = "proj-right"
    CONJ_STAR = "conj-star"
    CONJ_STAR_REV = "conj-star-rev"
    CONJ = "conj"
    CONJ_REV = "conj-rev"

    @property
    def formula(self) -> str:
        return _FORMULA_TEXT[self]

    def __str__(self) -> str:
        return self.value


def parse_kind(token) -> AdditionKind:
    """Accept ``AdditionKind``, CLI tokens (``proj-left``) or names (``proj_left``)."""
    if isinstance(token, AdditionKind):
        return token
    key = str(token).strip().lower().replace("_", "-")
    try:
        return AdditionKind(key)
    except ValueError:
        tokens = ", ".join(k.value for k in AdditionKind)
        raise InputError(f"unknown addition kind {token!r}; expected one of {tokens}") from None


_K = AdditionKind
_FORMULAS: Dict[AdditionKind, Callable[[StarSemigroup, int, int], int]] = {
    _K.MUL: lambda S, a, b: S.m(a, b),
    _K.MUL_REV: lambda S, a, b: S.m(b, a),
    _K.STAR_STAR: lambda S, a, b: S.m(S.s(a), S.s(b)),
    _K.STAR_STAR_REV: lambda S, a, b: S.m(S.s(b), S.s(a)),
    _K.STAR_LEFT: lambda S, a, b: S.m(S.s(a), b),
    _K.STAR_RIGHT: lambda S, a, b: S.m(a, S.s(b)),
    _K.REV_STAR_LEFT: lambda S, a, b: S.m(S.s(b), a),
    _K.REV_STAR_RIGHT: lambda S, a, b: S.m(b, S.s(a)),
    _K.PROJ_LEFT: lambda S, a, b: S.m(a, S.s(a), b),
    _K.PROJ_RIGHT: lambda S, a, b: S.m(a, S.s(b), b),
    _K.CONJ_STAR: lambda S, a, b: S.m(S.s(a), b, a),
    _K.CONJ_STAR_REV: lambda S, a, b: S.m(b, a, S.s(b)),
    _K.CONJ: lambda S, a, b: S.m(a, b, S.s(a)),
    _K.CONJ_REV: lambda S, a, b: S.m(S.s(b), a, b),
}
_FORMULA_TEXT = {
    _K.MUL: "ab",
    _K.MUL_REV: "ba",
    _K.STAR_STAR: "a*b*",
    _K.STAR_STAR_REV: "b*a*",
    _K.STAR_LEFT: "a*b",
    _K.STAR_RIGHT: "ab*",
    _K.REV_STAR_LEFT: "b*a",
    _K.REV_STAR_RIGHT: "ba*",
    _K.PROJ_LEFT: "aa*b",
    _K.PROJ_RIGHT: "ab*b",
    _K.CONJ_STAR: "a*ba",
    _K.CONJ_STAR_REV: "bab*",
    _K.CONJ: "aba*",
    _K.CONJ_REV: "b*ab",
}


@dataclass(frozen=True)
class TwoTwoOneAlgebra:
    """``(S, +, ., *)`` with ``(S, ., *)`` a regular star-semigroup.

    Associativity of ``add`` is not assumed.
    """

    add: BinOp
    mul: BinOp
    star: UnOp

    @classmethod
    def build(cls, add: Sequence[Sequence[int]], mul: Sequence[Sequence[int]], star: Sequence[int]) -> "TwoTwoOneAlgebra":
        S = star_semigroup(mul, star)
        return cls(binop(add, S.n, name="add"), S.mul, S.star)

    @property
    def n(self) -> int:
        return len(self.star)

    @property
    def semigroup(self) -> StarSemigroup:
        return StarSemigroup(self.mul, self.star)

    def lam(self, a: int, b: int) -> int:
        """``a(a* + b)``"""
        return self.mul[a][self.add[self.star[a]][b]]

    def rho(self, b: int, a: int) -> int:
        """``(a* + b)* b``"""
        return self.mul[self.star[self.add[self.star[a]][b]]][b]


def induce_addition(S: StarSemigroup, kind) -> TwoTwoOneAlgebra:
    k = parse_kind(kind)
    f = _FORMULAS[k]
    return TwoTwoOneAlgebra(binop_from(S.n, lambda a, b: f(S, a, b)), S.mul, S.star)


def check_left_axiom(A: TwoTwoOneAlgebra) -> Optional[Witness]:
    add, mul, s = A.add, A.mul, A.star
    for x, y, z in product(range(A.n), repeat=3):
        lhs = mul[x][add[y][z]]
        rhs = add[mul[x][y]][mul[x][add[s[x]][z]]]
        if lhs != rhs:
            return Witness("left_axiom", (x, y, z), lhs, rhs)
    return None


def check_right_axiom(A: TwoTwoOneAlgebra) -> Optional[Witness]:
    add, mul, s = A.add, A.mul, A.star
    for x, y, z in product(range(A.n), repeat=3):
        lhs = mul[add[z][y]][x]
        rhs = add[mul[add[z][s[x]]][x]][mul[y][x]]
        if lhs != rhs:
            return Witness("right_axiom", (x, y, z), lhs, rhs)
    return None


def _flag(w: Optional[Witness]) -> Flag:
    return Flag(w is None, w)


@dataclass(frozen=True)
class SemibraceReport:
    add_associative: Flag
    left_axiom: Flag
    right_axiom: Flag

    @property
    def is_left(self) -> bool:
        return self.add_associative.holds and self.left_axiom.holds

    @property
    def is_right(self) -> bool:
        return self.add_associative.holds and self.right_axiom.holds

    @property
    def is_two_sided(self) -> bool:
        return self.is_left and self.is_right


def classify_semibrace(A: TwoTwoOneAlgebra) -> SemibraceReport:
    return SemibraceReport(
        add_associative=_flag(associativity_check(A.add, axiom="add_assoc")),
        left_axiom=_flag(check_left_axiom(A)),
        right_axiom=_flag(check_right_axiom(A)),
    )


def _scan(name: str, n: int, lhs, rhs) -> Flag:
    for t in product(range(n), repeat=3):
        a, b = lhs(*t), rhs(*t)
        if a != b:
            return Flag(False, Witness(name, t, a, b))
    return Flag(True)


def morphism_diagnostics(A: TwoTwoOneAlgebra, report: Optional[SemibraceReport] = None) -> Dict[str, Flag]:
    """Morphism properties of the maps ``a -> lambda_a`` and ``a -> rho_a``.

    Map-level entries use tuples ``(x, y, z)`` comparing ``lambda_{xy}(z)``
    (resp. ``rho_{xy}(z)``) with the composite.  Per-element entries use
    ``(a, b, c)`` and compare e.g. ``lambda_a(b + c)`` with
    ``lambda_a(b) + lambda_a(c)``.
    """
    n, add, mul = A.n, A.add, A.mul
    lam, rho = A.lam, A.rho
    out = {
        "lambda_morphism": _scan(
            "lambda_morphism", n, lambda x, y, z: lam(mul[x][y], z), lambda x, y, z: lam(x, lam(y, z))
        ),
        "lambda_antimorphism": _scan(
            "lambda_antimorphism", n, lambda x, y, z: lam(mul[x][y], z), lambda x, y, z: lam(y, lam(x, z))
        ),
        "rho_morphism": _scan(
            "rho_morphism", n, lambda x, y, z: rho(mul[x][y], z), lambda x, y, z: rho(x, rho(y, z))
        ),
        "rho_antimorphism": _scan(
            "rho_antimorphism", n, lambda x, y, z: rho(mul[x][y], z), lambda x, y, z: rho(y, rho(x, z))
        ),
        "lambda_add_endo": _scan(
            "lambda_add_endo", n, lambda a, b, c: lam(a, add[b][c]), lambda a, b, c: add[lam(a, b)][lam(a, c)]
        ),
        "lambda_add_antiendo": _scan(
            "lambda_add_antiendo", n, lambda a, b, c: lam(a, add[b][c]), lambda a, b, c: add[lam(a, c)][lam(a, b)]
        ),
        "lambda_mul_endo": _scan(
            "lambda_mul_endo", n, lambda a, b, c: lam(a, mul[b][c]), lambda a, b, c: mul[lam(a, b)][lam(a, c)]
        ),
        "rho_add_endo": _scan(
            "rho_add_endo", n, lambda a, b, c: rho(a, add[b][c]), lambda a, b, c: add[rho(a, b)][rho(a, c)]
        ),
        "rho_mul_endo": _scan(
            "rho_mul_endo", n, lambda a, b, c: rho(a, mul[b][c]), lambda a, b, c: mul[rho(a, b)][rho(a, c)]
        ),
    }
    rep = report or classify_semibrace(A)
    if rep.is_left and not out["lambda_add_endo"].holds:
        raise ConsistencyError(
            "left semibrace whose lambda maps are not additive endomorphisms: "
            + out["lambda_add_endo"].witness.line()
        )
    return out
