"""Finite operation tables, elementary predicates and canonical encodings.

Elements of an n-element carrier are the integers ``0 .. n-1``.  A binary
operation is an ``n x n`` tuple of tuples (row = left operand), a unary
operation is a length-``n`` tuple.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterable, Optional, Sequence, Tuple, Union

BinOp = Tuple[Tuple[int, ...], ...]
UnOp = Tuple[int, ...]
Value = Union[int, Tuple[int, ...]]

DEFAULT_MAX_ORDER = 4
HARD_MAX_ORDER = 6


class StarbraceError(Exception):
    """Base class for all errors raised by this package."""


class MalformedTableError(StarbraceError, ValueError):
    """A table is not total, not square, or leaves the carrier."""


class CapacityError(StarbraceError):
    """An order exceeds the configured bound."""


class InputError(StarbraceError, ValueError):
    """Invalid user-supplied arguments."""


class ConsistencyError(StarbraceError):
    """Two routes that must agree did not.

    Raised when a computation contradicts a proven statement (for example a
    definitional class flag disagreeing with its equational characterization).
    Never expected on correct code.
    """


@dataclass(frozen=True)
class Witness:
    """A concrete counterexample to an identity.

    ``tuple`` holds the instantiated variables, ``lhs``/``rhs`` the two
    differing evaluations.  For non-equational properties (e.g. "unique
    inverse") the fields keep the same shape; see the producing function.
    """

    axiom: str
    tuple: Tuple[int, ...]
    lhs: Value
    rhs: Value

    def line(self) -> str:
        return (
            f"WITNESS axiom={self.axiom} tuple=({','.join(map(str, self.tuple))})"
            f" lhs={_fmt(self.lhs)} rhs={_fmt(self.rhs)}"
        )


def _fmt(v: Value) -> str:
    if isinstance(v, tuple):
        return "(" + ",".join(map(str, v)) + ")"
    return str(v)


def configured_max_order() -> int:
    """Order bound for model search, from ``STARBRACE_MAX_ORDER`` (default 4, cap 6)."""
    raw = os.environ.get("STARBRACE_MAX_ORDER")
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_ORDER
    try:
        value = int(raw)
    except ValueError as exc:
        raise InputError(f"STARBRACE_MAX_ORDER must be an integer, got {raw!r}") from exc
    if value < 1:
        raise InputError("STARBRACE_MAX_ORDER must be positive")
    return min(value, HARD_MAX_ORDER)


def binop(rows: Iterable[Iterable[int]], n: Optional[int] = None, name: str = "op") -> BinOp:
    """Freeze ``rows`` into a BinOp, checking shape and closure."""
    table = tuple(tuple(int(v) for v in row) for row in rows)
    if n is None:
        n = len(table)
    if n < 1:
        raise MalformedTableError(f"{name}: empty carrier")
    if len(table) != n:
        raise MalformedTableError(f"{name}: expected {n} rows, got {len(table)}")
    for i, row in enumerate(table):
        if len(row) != n:
            raise MalformedTableError(f"{name}: row {i} has {len(row)} entries, expected {n}")
        for j, v in enumerate(row):
            if not 0 <= v < n:
                raise MalformedTableError(f"{name}[{i}][{j}] = {v} is outside 0..{n - 1}")
    return table


def unop(values: Iterable[int], n: Optional[int] = None, name: str = "op") -> UnOp:
    """Freeze ``values`` into a UnOp, checking length and closure."""
    table = tuple(int(v) for v in values)
    if n is None:
        n = len(table)
    if len(table) != n:
        raise MalformedTableError(f"{name}: expected {n} entries, got {len(table)}")
    for i, v in enumerate(table):
        if not 0 <= v < n:
            raise MalformedTableError(f"{name}[{i}] = {v} is outside 0..{n - 1}")
    return table


def binop_from(n: int, fn) -> BinOp:
    """Tabulate ``fn(a, b)`` over the carrier."""
    return binop(([fn(a, b) for b in range(n)] for a in range(n)), n)


def associativity_check(op: Sequence[Sequence[int]], axiom: str = "assoc") -> Optional[Witness]:
    """Return the lexicographically first ``(a, b, c)`` with ``(ab)c != a(bc)``, or None."""
    t = binop(op)
    n = len(t)
    for a, b, c in product(range(n), repeat=3):
        lhs = t[t[a][b]][c]
        rhs = t[a][t[b][c]]
        if lhs != rhs:
            return Witness(axiom, (a, b, c), lhs, rhs)
    return None


def is_associative(op: Sequence[Sequence[int]]) -> bool:
    return associativity_check(op) is None


def bijection_check(f: Sequence[int]) -> bool:
    """True iff ``f`` is a permutation of ``0 .. len(f)-1``."""
    t = unop(f)
    return len(set(t)) == len(t)


def identity_element(op: BinOp) -> Optional[int]:
    """The two-sided identity of ``op`` if there is one."""
    n = len(op)
    for e in range(n):
        if all(op[e][x] == x and op[x][e] == x for x in range(n)):
            return e
    return None


def transpose(op: BinOp) -> BinOp:
    """The opposite operation ``a * b := b . a``."""
    n = len(op)
    return tuple(tuple(op[b][a] for b in range(n)) for a in range(n))


def relabel(table: Union[BinOp, UnOp], sigma: Sequence[int]) -> Union[BinOp, UnOp]:
    """Apply the bijection ``sigma`` to every element of a table.

    The result ``t'`` satisfies ``t'[s(a)][s(b)] = s(t[a][b])`` (binary) or
    ``t'[s(a)] = s(t[a])`` (unary).
    """
    n = len(sigma)
    inv = [0] * n
    for i, s in enumerate(sigma):
        inv[s] = i
    if table and isinstance(table[0], tuple):
        return tuple(
            tuple(sigma[table[inv[a]][inv[b]]] for b in range(n)) for a in range(n)
        )
    return tuple(sigma[table[inv[a]]] for a in range(n))


def _encode(tables: Sequence[Union[BinOp, UnOp]], sigma: Sequence[int], inv: Sequence[int]) -> bytes:
    n = len(sigma)
    out = bytearray()
    for t in tables:
        if t and isinstance(t[0], tuple):
            for a in range(n):
                row = t[inv[a]]
                out.extend(sigma[row[inv[b]]] for b in range(n))
        else:
            out.extend(sigma[t[inv[a]]] for a in range(n))
    return bytes(out)


def canonical_encoding(
    tables: Sequence[Union[BinOp, UnOp]], n: int, bound: int = HARD_MAX_ORDER
) -> bytes:
    """Lexicographically least row-major encoding over all relabelings.

    All tables are relabeled simultaneously, so two structures receive the
    same encoding iff they are isomorphic as structures with every listed
    operation.
    """
    return canonical_form(tables, n, bound)[0]


def canonical_form(
    tables: Sequence[Union[BinOp, UnOp]], n: int, bound: int = HARD_MAX_ORDER
) -> Tuple[bytes, Tuple[int, ...]]:
    """The canonical encoding together with a relabeling that attains it."""
    if n > bound:
        raise CapacityError(f"canonical encoding limited to order {bound}, got {n}")
    for t in tables:
        if len(t) != n:
            raise MalformedTableError(f"table of order {len(t)} given with n = {n}")
    best: Optional[bytes] = None
    best_sigma: Tuple[int, ...] = tuple(range(n))
    for sigma in permutations(range(n)):
        inv = [0] * n
        for i, s in enumerate(sigma):
            inv[s] = i
        enc = _encode(tables, sigma, inv)
        if best is None or enc < best:
            best, best_sigma = enc, sigma
    assert best is not None
    return best, best_sigma
