"""Named concrete structures with fixed element orderings."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .semibrace import TwoTwoOneAlgebra
from .star_semigroup import StarSemigroup, star_semigroup
from .table_core import StarbraceError, UnOp, Witness, binop, binop_from, unop
from .weak_brace import WeakStarBrace, validate_wsb

__all__ = ["CatalogEntry", "NotFoundError", "get_entry", "list_entries", "label_index"]

Structure = Union[StarSemigroup, TwoTwoOneAlgebra, WeakStarBrace]


class NotFoundError(StarbraceError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "not found"


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    description: str
    structure: Structure
    labels: Tuple[str, ...]
    neg: Optional[UnOp] = None  # candidate negation for non-validating entries
    counterexample: bool = False
    notes: str = ""

    @property
    def order(self) -> int:
        return len(self.labels)

    @property
    def semigroup(self) -> StarSemigroup:
        s = self.structure
        if isinstance(s, StarSemigroup):
            return s
        if isinstance(s, WeakStarBrace):
            return s.multiplicative
        return s.semigroup

    @property
    def algebra(self) -> Optional[TwoTwoOneAlgebra]:
        s = self.structure
        if isinstance(s, WeakStarBrace):
            return s.algebra
        if isinstance(s, TwoTwoOneAlgebra):
            return s
        return None

    def idx(self, label: str) -> int:
        return self.labels.index(label)


def label_index(entry: CatalogEntry, label: str) -> int:
    try:
        return entry.labels.index(label)
    except ValueError:
        raise NotFoundError(f"{entry.name} has no element {label!r}") from None


def _wsb(add, neg, mul, star) -> WeakStarBrace:
    W = validate_wsb(add, neg, mul, star)
    if isinstance(W, Witness):
        raise AssertionError(f"catalog weak star-brace fails validation: {W.line()}")
    return W


def _group_inverse(mul) -> UnOp:
    n = len(mul)
    one = next(e for e in range(n) if all(mul[e][x] == x == mul[x][e] for x in range(n)))
    return unop(next(y for y in range(n) if mul[x][y] == one) for x in range(n))


# S3 as permutations of {0,1,2}; products compose right to left
_S3_PERMS = [(0, 1, 2), (1, 0, 2), (2, 1, 0), (0, 2, 1), (1, 2, 0), (2, 0, 1)]
_S3_LABELS = ("(1)", "(12)", "(13)", "(23)", "(123)", "(132)")


def _s3_mul():
    def comp(i, j):
        p, q = _S3_PERMS[i], _S3_PERMS[j]
        return _S3_PERMS.index(tuple(p[q[k]] for k in range(3)))

    return binop_from(6, comp)


def _d8_mul():
    # b^i a^j has index 4i + j;  (b^i a^j)(b^k a^l) = b^(i+k) a^((-1)^k j + l)
    def m(x, y):
        i, j = divmod(x, 4)
        k, l = divmod(y, 4)
        sign = -1 if k else 1
        return 4 * ((i + k) % 2) + (sign * j + l) % 4

    return binop_from(8, m)


_D8_LABELS = ("e", "a", "a^2", "a^3", "b", "ba", "ba^2", "ba^3")
_D8_ADD_ROWS = [
    "e a a^2 a^3 b ba ba^2 ba^3",
    "a e ba^2 ba^3 ba b a^2 a^3",
    "a^2 ba^2 e b a^3 ba^3 a ba",
    "a^3 ba^3 b e a^2 ba^2 ba a",
    "b ba a^3 a^2 e a ba^3 ba^2",
    "ba b ba^3 ba^2 a e a^3 a^2",
    "ba^2 a^2 a ba ba^3 a^3 e b",
    "ba^3 a^3 ba a ba^2 a^2 b e",
]

_Z8_MUL = [
    [0, 1, 2, 3, 4, 5, 6, 7],
    [1, 0, 7, 6, 5, 4, 3, 2],
    [2, 7, 4, 1, 6, 3, 0, 5],
    [3, 6, 1, 4, 7, 2, 5, 0],
    [4, 5, 6, 7, 0, 1, 2, 3],
    [5, 4, 3, 2, 1, 0, 7, 6],
    [6, 3, 0, 5, 2, 7, 4, 1],
    [7, 2, 5, 0, 3, 6, 1, 4],
]

_C4_LABELS = ("e", "a", "a^2", "a^3")
_C4_ADD_ROWS = [
    "e e a^2 a^2",
    "a a a^3 a^3",
    "a^2 a^2 e e",
    "a^3 a^3 a a",
]


def _rows(labels: Sequence[str], rows: Sequence[str]):
    return binop([[labels.index(t) for t in row.split()] for row in rows], len(labels))


def _pair_index(i: int, j: int) -> int:
    # (i, j) with i, j in {1, 2}, listed as (1,1), (1,2), (2,1), (2,2)
    return 2 * (i - 1) + (j - 1)


def _build() -> Dict[str, CatalogEntry]:
    out: Dict[str, CatalogEntry] = {}

    def put(e: CatalogEntry) -> None:
        out[e.name] = e

    put(
        CatalogEntry(
            "sl2",
            "two-element semilattice (min) with identity involution",
            star_semigroup([[0, 0], [0, 1]], [0, 1]),
            ("0", "1"),
        )
    )

    rect_pairs = [(1, 1), (1, 2), (2, 1), (2, 2)]
    rect_mul = binop_from(4, lambda x, y: _pair_index(rect_pairs[x][0], rect_pairs[y][1]))
    rect_star = unop(_pair_index(b, a) for a, b in rect_pairs)
    put(
        CatalogEntry(
            "rect22",
            "2x2 rectangular band (a,b)(c,d) = (a,d) with (a,b)* = (b,a)",
            star_semigroup(rect_mul, rect_star),
            tuple(f"({a},{b})" for a, b in rect_pairs),
        )
    )

    c3_mul = binop_from(3, lambda a, b: (a + b) % 3)
    put(
        CatalogEntry(
            "c3",
            "cyclic group {e, x, y} with x* = y",
            star_semigroup(c3_mul, [0, 2, 1]),
            ("e", "x", "y"),
        )
    )

    put(
        CatalogEntry(
            "klein4",
            "Klein four-group with identity involution",
            star_semigroup(binop_from(4, lambda a, b: a ^ b), [0, 1, 2, 3]),
            ("e", "a", "b", "c"),
        )
    )

    s3_mul = _s3_mul()
    s3_inv = _group_inverse(s3_mul)
    put(
        CatalogEntry(
            "s3",
            "symmetric group S3 with inversion",
            star_semigroup(s3_mul, s3_inv),
            _S3_LABELS,
        )
    )
    put(
        CatalogEntry(
            "s3_skewbrace",
            "trivial skew brace on S3: x + y = xy",
            _wsb(s3_mul, s3_inv, s3_mul, s3_inv),
            _S3_LABELS,
        )
    )

    put(
        CatalogEntry(
            "ls2",
            "left semibrace on {0,1}: min product, 0 + y = 0, 1 + y = 1",
            TwoTwoOneAlgebra.build([[0, 0], [1, 1]], [[0, 0], [0, 1]], [0, 1]),
            ("0", "1"),
            notes="1 + 1 = 1 is inferred from the computation of lambda_1(0)",
        )
    )

    d8_mul = _d8_mul()
    d8_add = _rows(_D8_LABELS, _D8_ADD_ROWS)
    put(
        CatalogEntry(
            "d8_brace",
            "left brace on D8 with elementary abelian addition",
            _wsb(d8_add, _group_inverse(d8_add), d8_mul, _group_inverse(d8_mul)),
            _D8_LABELS,
        )
    )

    c4_mul = binop_from(4, lambda a, b: (a + b) % 4)
    put(
        CatalogEntry(
            "c4_semibrace",
            "left semibrace on the cyclic group of order 4",
            TwoTwoOneAlgebra.build(_rows(_C4_LABELS, _C4_ADD_ROWS), c4_mul, _group_inverse(c4_mul)),
            _C4_LABELS,
        )
    )

    z8_add = binop_from(8, lambda a, b: (a + b) % 8)
    z8_mul = binop(_Z8_MUL)
    put(
        CatalogEntry(
            "z8_brace",
            "left brace with additive group Z8 and multiplicative group Z2 x Z4",
            _wsb(z8_add, _group_inverse(z8_add), z8_mul, _group_inverse(z8_mul)),
            tuple(str(i) for i in range(8)),
        )
    )

    # e=(1,1), f=(2,2), g=(1,2), h=(2,1)
    kr_pairs = [(1, 1), (2, 2), (1, 2), (2, 1)]
    kr_add = binop_from(4, lambda x, y: kr_pairs.index((kr_pairs[x][0], kr_pairs[y][1])))
    kr_neg = unop(kr_pairs.index((j, i)) for i, j in kr_pairs)
    kr_mul = binop_from(4, lambda a, b: a ^ b)  # e=0, f=1, g=2, h=3 = f xor g
    put(
        CatalogEntry(
            "klein_rs",
            "rectangular-band addition over the Klein four-group; not a weak star-brace",
            TwoTwoOneAlgebra.build(kr_add, kr_mul, [0, 1, 2, 3]),
            ("e", "f", "g", "h"),
            neg=kr_neg,
            counterexample=True,
        )
    )
    return out


_ENTRIES: Optional[Dict[str, CatalogEntry]] = None


def _entries() -> Dict[str, CatalogEntry]:
    global _ENTRIES
    if _ENTRIES is None:
        _ENTRIES = _build()
    return _ENTRIES


def get_entry(name: str) -> CatalogEntry:
    try:
        return _entries()[name]
    except KeyError:
        raise NotFoundError(f"no catalog entry named {name!r}") from None


def list_entries() -> List[Tuple[str, str]]:
    return [(name, _entries()[name].description) for name in sorted(_entries())]
