"""The map ``r(a, b) = (lambda_a(b), rho_b(a))`` and Yang-Baxter checks.

``lambda_a(b) = a(a* + b)`` and ``rho_b(a) = (a* + b)* b``.  Solutionhood
is decided twice: through the three component equations and through the
braid relation on ``S^3``.  The two verdicts must agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional, Tuple

from .semibrace import TwoTwoOneAlgebra
from .star_semigroup import Flag
from .table_core import BinOp, ConsistencyError, InputError, Witness

__all__ = [
    "YbeMaps",
    "YbeReport",
    "SolutionProperties",
    "derive_maps",
    "apply_r",
    "check_equations",
    "check_braid",
    "check_solution",
    "solution_properties",
]


@dataclass(frozen=True)
class YbeMaps:
    """``lam[a][b] = lambda_a(b)`` and ``rho[b][a] = rho_b(a)``."""

    lam: BinOp
    rho: BinOp

    @property
    def n(self) -> int:
        return len(self.lam)

    def r(self, a: int, b: int) -> Tuple[int, int]:
        return self.lam[a][b], self.rho[b][a]


def derive_maps(A: TwoTwoOneAlgebra) -> YbeMaps:
    n = A.n
    lam = tuple(tuple(A.lam(a, b) for b in range(n)) for a in range(n))
    rho = tuple(tuple(A.rho(b, a) for a in range(n)) for b in range(n))
    return YbeMaps(lam, rho)


def apply_r(A: TwoTwoOneAlgebra, a: int, b: int) -> Tuple[int, int]:
    for v in (a, b):
        if not (isinstance(v, int) and 0 <= v < A.n):
            raise InputError(f"element {v!r} is outside 0..{A.n - 1}")
    return A.lam(a, b), A.rho(b, a)


def check_equations(M: YbeMaps) -> Optional[Witness]:
    """First failure of the component equations, equation index first."""
    L, R, n = M.lam, M.rho, M.n
    triples = list(product(range(n), repeat=3))
    for x, y, z in triples:
        lhs = L[x][L[y][z]]
        rhs = L[L[x][y]][L[R[y][x]][z]]
        if lhs != rhs:
            return Witness("eq1", (x, y, z), lhs, rhs)
    for x, y, z in triples:
        lhs = R[z][R[y][x]]
        rhs = R[R[z][y]][R[L[y][z]][x]]
        if lhs != rhs:
            return Witness("eq2", (x, y, z), lhs, rhs)
    for x, y, z in triples:
        lhs = L[R[L[y][z]][x]][R[z][y]]
        rhs = R[L[R[y][x]][z]][L[x][y]]
        if lhs != rhs:
            return Witness("eq3", (x, y, z), lhs, rhs)
    return None


def check_braid(M: YbeMaps) -> Optional[Witness]:
    """First ``(x, y, z)`` where ``r12 r23 r12`` and ``r23 r12 r23`` differ."""
    r = M.r

    def r12(t):
        a, b = r(t[0], t[1])
        return a, b, t[2]

    def r23(t):
        b, c = r(t[1], t[2])
        return t[0], b, c

    for t in product(range(M.n), repeat=3):
        lhs = r12(r23(r12(t)))
        rhs = r23(r12(r23(t)))
        if lhs != rhs:
            return Witness("braid", t, lhs, rhs)
    return None


@dataclass(frozen=True)
class SolutionProperties:
    left_nondegenerate: Flag
    right_nondegenerate: Flag
    involutive: Flag
    idempotent: Flag


@dataclass(frozen=True)
class YbeReport:
    maps: YbeMaps
    is_solution: bool
    failing: Optional[Witness]
    braid_failing: Optional[Witness]
    braid_agrees: bool
    properties: SolutionProperties


def _nondegenerate(table: BinOp, axiom: str) -> Flag:
    # table[a] is the map; witness (a,) with two arguments sharing an image
    for a, row in enumerate(table):
        seen = {}
        for b, v in enumerate(row):
            if v in seen:
                return Flag(False, Witness(axiom, (a,), seen[v], b))
            seen[v] = b
    return Flag(True)


def solution_properties(A_or_maps) -> SolutionProperties:
    M = A_or_maps if isinstance(A_or_maps, YbeMaps) else derive_maps(A_or_maps)
    n = M.n
    involutive = idempotent = Flag(True)
    for a, b in product(range(n), repeat=2):
        once = M.r(a, b)
        twice = M.r(*once)
        if involutive.holds and twice != (a, b):
            involutive = Flag(False, Witness("involutive", (a, b), twice, (a, b)))
        if idempotent.holds and twice != once:
            idempotent = Flag(False, Witness("idempotent", (a, b), twice, once))
    return SolutionProperties(
        left_nondegenerate=_nondegenerate(M.lam, "left_nondegenerate"),
        right_nondegenerate=_nondegenerate(M.rho, "right_nondegenerate"),
        involutive=involutive,
        idempotent=idempotent,
    )


def check_solution(A: TwoTwoOneAlgebra) -> YbeReport:
    M = derive_maps(A)
    failing = check_equations(M)
    braid = check_braid(M)
    agrees = (failing is None) == (braid is None)
    if not agrees:
        raise ConsistencyError(
            f"component equations ({failing.line() if failing else 'hold'}) disagree with "
            f"braid relation ({braid.line() if braid else 'holds'})"
        )
    return YbeReport(M, failing is None, failing, braid, agrees, solution_properties(M))
