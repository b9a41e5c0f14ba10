"""Exhaustive enumeration of small models with isomorphism rejection.

Regular star-semigroups are found by backtracking: the involution is fixed
first, then the multiplication is filled cell by cell in row-major order.
Setting ``xy = v`` forces ``y*x* = v*``, and every assignment is followed by
a scan of all fully determined associativity and ``xx*x = x`` instances.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, product
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .semibrace import AdditionKind, TwoTwoOneAlgebra, classify_semibrace, induce_addition, parse_kind
from .star_semigroup import ClassReport, StarSemigroup, classify, validate_star
from .table_core import (
    BinOp,
    CapacityError,
    InputError,
    UnOp,
    Witness,
    canonical_form,
    configured_max_order,
    relabel,
)
from .weak_brace import WeakStarBrace, validate_wsb
from .ybe import check_solution

__all__ = [
    "SIGNATURES",
    "CLASS_PREDICATES",
    "SearchQuery",
    "Pair",
    "enumerate_models",
    "find_model",
    "star_semigroups",
    "labeled_star_semigroups",
    "enumerate_naive",
    "parse_orders",
    "parse_predicates",
]

SIGNATURES = ("star_semigroup", "two_two_one", "weak_star_brace", "pair")

CLASS_PREDICATES = (
    "inverse",
    "orthodox",
    "completely-regular",
    "locally-inverse",
    "clifford",
    "commutative",
    "star-identity",
    "cro-li",
    "cr-li",
    "o-li",
)
ALGEBRA_PREDICATES = ("add-associative", "left-semibrace", "right-semibrace", "two-sided-semibrace", "solution")
OTHER_PREDICATES = ("regular-star", "monoid")


@dataclass(frozen=True)
class Pair:
    """Two regular star-semigroup structures on one carrier, not yet checked
    against the weak star-brace axioms."""

    add: BinOp
    neg: UnOp
    mul: BinOp
    star: UnOp

    @property
    def n(self) -> int:
        return len(self.star)

    @property
    def algebra(self) -> TwoTwoOneAlgebra:
        return TwoTwoOneAlgebra(self.add, self.mul, self.star)


Model = Union[StarSemigroup, TwoTwoOneAlgebra, WeakStarBrace, Pair]


# ---------------------------------------------------------------------------
# predicates


def _normalize_token(tok: str) -> str:
    t = tok.strip().lower().replace("_", "-")
    if t.startswith("solution(") and t.endswith(")"):
        t = "solution:" + t[len("solution("):-1]
    return t


def _check_token(tok: str, signature: str) -> str:
    t = _normalize_token(tok)
    base = t[4:] if t.startswith("add-") and t[4:] in CLASS_PREDICATES + ("monoid",) else None
    if t in CLASS_PREDICATES or t in OTHER_PREDICATES:
        return t
    if base is not None:
        if signature not in ("weak_star_brace", "pair"):
            raise InputError(f"predicate {tok!r} needs a signature with an additive involution")
        return t
    if t in ALGEBRA_PREDICATES:
        if signature == "star_semigroup":
            raise InputError(f"predicate {tok!r} needs an addition; use solution:KIND")
        return t
    if t.startswith("solution:"):
        kind = parse_kind(t.split(":", 1)[1])
        return "solution:" + kind.value
    known = ", ".join(CLASS_PREDICATES + OTHER_PREDICATES + ALGEBRA_PREDICATES + ("solution:KIND", "add-<class>"))
    raise InputError(f"unknown predicate {tok!r}; known: {known}")


def parse_predicates(text: Optional[Union[str, Iterable[str]]], signature: str = "star_semigroup") -> FrozenSet[str]:
    if text is None:
        return frozenset()
    items = text.split(",") if isinstance(text, str) else list(text)
    return frozenset(_check_token(t, signature) for t in items if t.strip())


class _Ctx:
    """Lazily computed facts about one model."""

    def __init__(self, model: Model):
        self.model = model
        self._cache: Dict[str, object] = {}

    @property
    def semigroup(self) -> StarSemigroup:
        m = self.model
        return m if isinstance(m, StarSemigroup) else StarSemigroup(m.mul, m.star)

    @property
    def algebra(self) -> TwoTwoOneAlgebra:
        m = self.model
        return m if isinstance(m, TwoTwoOneAlgebra) else m.algebra

    def classes(self) -> ClassReport:
        if "cls" not in self._cache:
            self._cache["cls"] = classify(self.semigroup)
        return self._cache["cls"]

    def add_classes(self) -> ClassReport:
        if "acls" not in self._cache:
            m = self.model
            self._cache["acls"] = classify(StarSemigroup(m.add, m.neg))
        return self._cache["acls"]

    def semibrace(self):
        if "sb" not in self._cache:
            self._cache["sb"] = classify_semibrace(self.algebra)
        return self._cache["sb"]

    def holds(self, tok: str) -> bool:
        if tok == "regular-star":
            return True
        if tok == "monoid":
            return self.semigroup.identity is not None
        if tok in CLASS_PREDICATES:
            return self.classes().flags()[tok.replace("-", "_")].holds
        if tok.startswith("add-"):
            base = tok[4:]
            if base == "monoid":
                return StarSemigroup(self.model.add, self.model.neg).identity is not None
            return self.add_classes().flags()[base.replace("-", "_")].holds
        if tok == "add-associative":
            return self.semibrace().add_associative.holds
        if tok == "left-semibrace":
            return self.semibrace().is_left
        if tok == "right-semibrace":
            return self.semibrace().is_right
        if tok == "two-sided-semibrace":
            return self.semibrace().is_two_sided
        if tok == "solution":
            return check_solution(self.algebra).is_solution
        if tok.startswith("solution:"):
            return check_solution(induce_addition(self.semigroup, tok.split(":", 1)[1])).is_solution
        raise InputError(f"unknown predicate {tok!r}")


# ---------------------------------------------------------------------------
# query


def parse_orders(text: str) -> Tuple[int, int]:
    """``"A..B"`` or ``"A"`` to an inclusive range."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        v = int(text)
        return v, v
    except ValueError:
        raise InputError(f"order range must look like A..B, got {text!r}") from None


@dataclass(frozen=True)
class SearchQuery:
    orders: Tuple[int, int]
    signature: str = "star_semigroup"
    kind: Optional[AdditionKind] = None
    require: FrozenSet[str] = frozenset()
    forbid: FrozenSet[str] = frozenset()
    limit: Optional[int] = None
    dedup_iso: bool = True
    workers: int = 1

    def __post_init__(self):
        if self.signature not in SIGNATURES:
            raise InputError(f"unknown signature {self.signature!r}; expected one of {', '.join(SIGNATURES)}")
        if self.signature == "two_two_one":
            if self.kind is None:
                raise InputError("signature two_two_one needs an addition kind")
            object.__setattr__(self, "kind", parse_kind(self.kind))
        object.__setattr__(self, "require", parse_predicates(self.require, self.signature))
        object.__setattr__(self, "forbid", parse_predicates(self.forbid, self.signature))
        lo, hi = self.orders
        if lo < 1 or hi < lo:
            raise InputError(f"invalid order range {lo}..{hi}")
        bound = configured_max_order()
        if hi > bound:
            raise CapacityError(f"order {hi} exceeds the configured bound {bound}")
        clash = self.require & self.forbid
        if clash:
            raise InputError(f"predicates both required and forbidden: {', '.join(sorted(clash))}")
        if self.limit is not None and self.limit < 0:
            raise InputError("limit must be non-negative")
        if self.workers < 1:
            raise InputError("workers must be positive")


# ---------------------------------------------------------------------------
# star-semigroup backtracking


def all_involutions(n: int) -> List[UnOp]:
    return [p for p in permutations(range(n)) if all(p[p[i]] == i for i in range(n))]


def involution_representatives(n: int) -> List[UnOp]:
    """One involution per conjugacy class: ``(0 1)(2 3)...`` with k swaps."""
    reps = []
    for k in range(n // 2 + 1):
        p = list(range(n))
        for i in range(k):
            p[2 * i], p[2 * i + 1] = 2 * i + 1, 2 * i
        reps.append(tuple(p))
    return reps


def _consistent(t: List[List[int]], s: Sequence[int], n: int) -> bool:
    for a in range(n):
        ta = t[a]
        for b in range(n):
            ab = ta[b]
            if ab < 0:
                continue
            tab = t[ab]
            tb = t[b]
            for c in range(n):
                bc = tb[c]
                if bc < 0:
                    continue
                lhs = tab[c]
                if lhs < 0:
                    continue
                rhs = ta[bc]
                if rhs >= 0 and lhs != rhs:
                    return False
    for x in range(n):
        xs = t[x][s[x]]
        if xs >= 0:
            v = t[xs][x]
            if v >= 0 and v != x:
                return False
    return True


def _backtrack(n: int, star: UnOp, first: Optional[int] = None) -> List[BinOp]:
    t = [[-1] * n for _ in range(n)]
    cells = [(x, y) for x in range(n) for y in range(n)]
    out: List[BinOp] = []

    def rec(i: int) -> None:
        while i < len(cells) and t[cells[i][0]][cells[i][1]] >= 0:
            i += 1
        if i == len(cells):
            out.append(tuple(tuple(r) for r in t))
            return
        x, y = cells[i]
        px, py = star[y], star[x]
        values = range(n) if first is None or i != 0 else (first,)
        for v in values:
            sv = star[v]
            partner = t[px][py]
            if (px, py) == (x, y):
                if sv != v:
                    continue
                t[x][y] = v
                placed = False
            elif partner >= 0:
                if partner != sv:
                    continue
                t[x][y] = v
                placed = False
            else:
                t[x][y] = v
                t[px][py] = sv
                placed = True
            if _consistent(t, star, n):
                rec(i + 1)
            t[x][y] = -1
            if placed:
                t[px][py] = -1

    rec(0)
    return out


def _task(args: Tuple[int, UnOp, int]) -> List[Tuple[BinOp, UnOp]]:
    n, star, first = args
    return [(m, star) for m in _backtrack(n, star, first)]


def _run_tasks(tasks: List[Tuple[int, UnOp, int]], workers: int) -> List[Tuple[BinOp, UnOp]]:
    if workers <= 1 or len(tasks) <= 1:
        chunks = [_task(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_task, tasks))
    return [item for chunk in chunks for item in chunk]


def _canonicalize(tables: Sequence, n: int) -> Tuple[bytes, Tuple]:
    enc, sigma = canonical_form(tables, n)
    return enc, tuple(relabel(t, sigma) for t in tables)


@lru_cache(maxsize=None)
def labeled_star_semigroups(n: int, workers: int = 1) -> Tuple[StarSemigroup, ...]:
    """Every regular star-semigroup on ``0..n-1`` (no isomorphism rejection)."""
    tasks = [(n, s, v) for s in all_involutions(n) for v in range(n)]
    found = _run_tasks(tasks, workers)
    return tuple(sorted((StarSemigroup(m, s) for m, s in found), key=lambda S: (S.star, S.mul)))


@lru_cache(maxsize=None)
def star_semigroups(n: int, workers: int = 1) -> Tuple[StarSemigroup, ...]:
    """One canonical representative per isomorphism class, in encoding order."""
    if n > configured_max_order():
        raise CapacityError(f"order {n} exceeds the configured bound {configured_max_order()}")
    tasks = [(n, s, v) for s in involution_representatives(n) for v in range(n)]
    found = _run_tasks(tasks, workers)
    classes: Dict[bytes, Tuple] = {}
    for m, s in found:
        enc, (cm, cs) = _canonicalize((m, s), n)
        classes.setdefault(enc, (cm, cs))
    return tuple(StarSemigroup(*classes[k]) for k in sorted(classes))


def enumerate_naive(n: int) -> Tuple[StarSemigroup, ...]:
    """Reference oracle: try every table and involution, then filter."""
    if n > 3:
        raise CapacityError("the naive oracle is limited to order 3")
    classes: Dict[bytes, Tuple] = {}
    invs = all_involutions(n)
    for flat in product(range(n), repeat=n * n):
        mul = tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n))
        for s in invs:
            if isinstance(validate_star(mul, s), StarSemigroup):
                enc, (cm, cs) = _canonicalize((mul, s), n)
                classes.setdefault(enc, (cm, cs))
    return tuple(StarSemigroup(*classes[k]) for k in sorted(classes))


# ---------------------------------------------------------------------------
# other signatures


def _algebras(n: int, kind: AdditionKind, dedup: bool, workers: int) -> List[TwoTwoOneAlgebra]:
    base = star_semigroups(n, workers) if dedup else labeled_star_semigroups(n, workers)
    algs = [induce_addition(S, kind) for S in base]
    if not dedup:
        return algs
    keyed = {}
    for A in algs:
        enc, (add, mul, star) = _canonicalize((A.add, A.mul, A.star), n)
        keyed.setdefault(enc, TwoTwoOneAlgebra(add, mul, star))
    return [keyed[k] for k in sorted(keyed)]


def _pairs(n: int, only_wsb: bool, dedup: bool, workers: int) -> List[Union[Pair, WeakStarBrace]]:
    muls = star_semigroups(n, workers) if dedup else labeled_star_semigroups(n, workers)
    adds = labeled_star_semigroups(n, workers)
    keyed: Dict[bytes, Union[Pair, WeakStarBrace]] = {}
    plain: List[Union[Pair, WeakStarBrace]] = []
    for M in muls:
        for A in adds:
            if only_wsb:
                W = validate_wsb(A.mul, A.star, M.mul, M.star)
                if isinstance(W, Witness):
                    continue
                item: Union[Pair, WeakStarBrace] = W
            else:
                item = Pair(A.mul, A.star, M.mul, M.star)
            if not dedup:
                plain.append(item)
                continue
            enc, tabs = _canonicalize((item.add, item.neg, item.mul, item.star), n)
            if enc not in keyed:
                keyed[enc] = type(item)(*tabs)
    if not dedup:
        return plain
    return [keyed[k] for k in sorted(keyed)]


def _models_of_order(q: SearchQuery, n: int) -> Sequence[Model]:
    if q.signature == "star_semigroup":
        return star_semigroups(n, q.workers) if q.dedup_iso else labeled_star_semigroups(n, q.workers)
    if q.signature == "two_two_one":
        return _algebras(n, q.kind, q.dedup_iso, q.workers)
    return _pairs(n, q.signature == "weak_star_brace", q.dedup_iso, q.workers)


def enumerate_models(query: SearchQuery) -> Iterator[Model]:
    """Models of the query's signature meeting every required predicate and
    no forbidden one, by ascending order and then canonical encoding."""
    emitted = 0
    lo, hi = query.orders
    for n in range(lo, hi + 1):
        for model in _models_of_order(query, n):
            if query.limit is not None and emitted >= query.limit:
                return
            ctx = _Ctx(model)
            if all(ctx.holds(t) for t in sorted(query.require)) and not any(
                ctx.holds(t) for t in sorted(query.forbid)
            ):
                emitted += 1
                yield model


def find_model(query: SearchQuery) -> Optional[Model]:
    for model in enumerate_models(query):
        return model
    return None
