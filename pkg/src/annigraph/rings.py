"""Finite commutative rings with identity, stored as explicit operation tables.

Every ring is materialised as a pair of ``order x order`` index tables.  The
orders that matter here are tiny (the classification witnesses all have at most
64 elements), so exhaustive checks are cheap and the tables are the single
source of truth for every algebraic question asked later on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Iterable, Sequence

import numpy as np

from .errors import ArityError, EmptySet, InvalidOrder, RingTooLarge

MAX_ORDER = 4096


class Ring:
    """A finite commutative ring with identity given by its tables.

    ``factors`` is non-empty for direct products; element ``i`` of a product
    is addressed mixed-radix over the factor orders, first factor most
    significant.  ``presentation`` carries the basis/structure-constant
    description when the ring came from a quotient construction.
    """

    def __init__(
        self,
        add: np.ndarray,
        mul: np.ndarray,
        zero: int,
        one: int,
        labels: Sequence[str],
        name: str = "",
        factors: Sequence["Ring"] = (),
        presentation=None,
    ):
        add = np.array(add, dtype=np.int32)
        mul = np.array(mul, dtype=np.int32)
        n = len(labels)
        if add.shape != (n, n) or mul.shape != (n, n):
            raise ValueError(f"tables must be {n}x{n}")
        add.setflags(write=False)
        mul.setflags(write=False)
        self.add = add
        self.mul = mul
        self.zero = int(zero)
        self.one = int(one)
        self.labels = tuple(labels)
        self.name = name
        self.factors = tuple(factors)
        self.presentation = presentation
        self._index = {lab: i for i, lab in enumerate(self.labels)}

    def __repr__(self) -> str:
        return f"Ring({self.name or '?'}, order={self.order})"

    def __len__(self) -> int:
        return self.order

    @property
    def order(self) -> int:
        return len(self.labels)

    @property
    def is_product(self) -> bool:
        return bool(self.factors)

    def element(self, label: str) -> int:
        """Index of the element carrying ``label``."""
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"{label!r} is not an element of {self.name or 'ring'}") from None

    def label(self, i: int) -> str:
        return self.labels[i]

    def plus(self, a: int, b: int) -> int:
        return int(self.add[a, b])

    def times(self, a: int, b: int) -> int:
        return int(self.mul[a, b])

    @cached_property
    def negation(self) -> np.ndarray:
        neg = np.argmax(self.add == self.zero, axis=1).astype(np.int32)
        neg.setflags(write=False)
        return neg

    def neg(self, a: int) -> int:
        return int(self.negation[a])

    def power(self, a: int, k: int) -> int:
        result = self.one
        for _ in range(k):
            result = int(self.mul[result, a])
        return result

    def coords(self, i: int) -> tuple[int, ...]:
        """Factor coordinates of element ``i`` of a product ring."""
        if not self.factors:
            return (i,)
        out = []
        for f in reversed(self.factors):
            i, r = divmod(i, f.order)
            out.append(r)
        return tuple(reversed(out))

    def from_coords(self, coords: Sequence[int]) -> int:
        if not self.factors:
            (i,) = coords
            return int(i)
        idx = 0
        for f, c in zip(self.factors, coords):
            idx = idx * f.order + int(c)
        return idx

    @cached_property
    def classes(self) -> "ElementClasses":
        return _compute_classes(self)


@dataclass(frozen=True)
class ElementClasses:
    units: frozenset[int]
    zero_divisors: frozenset[int]
    nilpotents: frozenset[int]


@dataclass(frozen=True)
class LocalFactor:
    """The local factor ``eR`` attached to a primitive idempotent ``e``."""

    ring: Ring
    embedding: tuple[int, ...]
    idempotent: int


@dataclass(frozen=True)
class StructurePredicates:
    is_field: bool
    is_local: bool
    is_reduced: bool
    minimal_prime_orders: tuple[int, ...]


# -- constructors ------------------------------------------------------------


def make_zn(n: int) -> Ring:
    """The ring of integers modulo ``n``."""
    if n < 2:
        raise InvalidOrder(f"Z_n needs n >= 2, got {n}")
    if n > MAX_ORDER:
        raise RingTooLarge(f"order {n} exceeds cap {MAX_ORDER}")
    r = np.arange(n)
    add = (r[:, None] + r[None, :]) % n
    mul = (r[:, None] * r[None, :]) % n
    return Ring(add, mul, 0, 1, [str(i) for i in range(n)], name=f"Z{n}")


def make_product(factors: Sequence[Ring], max_order: int = MAX_ORDER) -> Ring:
    """Direct product with componentwise operations and tuple labels."""
    factors = list(factors)
    if len(factors) < 2:
        raise ArityError(f"a product needs at least 2 factors, got {len(factors)}")
    order = math.prod(f.order for f in factors)
    if order > max_order:
        raise RingTooLarge(f"order {order} exceeds cap {max_order}")
    idx = np.arange(order)
    add = np.zeros((order, order), dtype=np.int64)
    mul = np.zeros((order, order), dtype=np.int64)
    stride = order
    coords = []
    for f in factors:
        stride //= f.order
        c = (idx // stride) % f.order
        coords.append(c)
        add += f.add[c[:, None], c[None, :]].astype(np.int64) * stride
        mul += f.mul[c[:, None], c[None, :]].astype(np.int64) * stride
    zero = reduce(lambda acc, f: acc * f.order + f.zero, factors, 0)
    one = reduce(lambda acc, f: acc * f.order + f.one, factors, 0)
    labels = [
        "(" + ",".join(f.labels[c[i]] for f, c in zip(factors, coords)) + ")" for i in range(order)
    ]
    name = " x ".join(f"({f.name})" if f.is_product else f.name for f in factors)
    return Ring(add, mul, zero, one, labels, name=name, factors=factors)


# -- verification -------------------------------------------------------------


def axiom_check(ring: Ring) -> list[str]:
    """Exhaustively test the commutative-ring-with-identity axioms.

    Returns a list of human-readable violations; an empty list means the
    tables define a valid ring.  Large products are checked through their
    factors, since componentwise tables inherit every axiom, and large
    quotients with a diagonal lattice are checked on their structure
    constants (basis triples) after confirming the tables match them.
    """
    if ring.is_product and ring.order > 256:
        problems = []
        for k, f in enumerate(ring.factors):
            problems += [f"factor {k}: {p}" for p in axiom_check(f)]
        return problems
    if ring.order > 256 and ring.presentation is not None and ring.presentation.diagonal:
        return ring.presentation.check_tables(ring)
    add, mul, n = ring.add, ring.mul, ring.order
    chunk = max(1, (1 << 22) // (n * n))
    problems: list[str] = []
    if len(set(ring.labels)) != n:
        problems.append("labels are not pairwise distinct")
    if add.min() < 0 or add.max() >= n or mul.min() < 0 or mul.max() >= n:
        return problems + ["table entries out of range"]
    if ring.zero == ring.one:
        problems.append("one equals zero")
    if not np.array_equal(add, add.T):
        problems.append("addition is not commutative")
    if not np.array_equal(mul, mul.T):
        problems.append("multiplication is not commutative")
    r = np.arange(n)
    if not np.array_equal(add[ring.zero], r):
        problems.append("zero is not an additive identity")
    if not np.array_equal(mul[ring.one], r):
        problems.append("one is not a multiplicative identity")
    if not (add == ring.zero).any(axis=1).all():
        problems.append("some element lacks an additive inverse")
    assoc_add = assoc_mul = distrib = True
    for lo in range(0, n, chunk):
        a = r[lo : lo + chunk]
        # (a+b)+c == a+(b+c), indexed [a, b, c]
        if assoc_add and not np.array_equal(add[add[a]], add[a][:, add]):
            assoc_add = False
        if assoc_mul and not np.array_equal(mul[mul[a]], mul[a][:, mul]):
            assoc_mul = False
        # a*(b+c) == a*b + a*c
        if distrib:
            ab = mul[a]
            lhs = mul[a][:, add]
            rhs = add[ab[:, :, None], ab[:, None, :]]
            if not np.array_equal(lhs, rhs):
                distrib = False
    if not assoc_add:
        problems.append("addition is not associative")
    if not assoc_mul:
        problems.append("multiplication is not associative")
    if not distrib:
        problems.append("multiplication does not distribute over addition")
    return problems


# -- element structure ----------------------------------------------------------


def annihilator(ring: Ring, subset: Iterable[int]) -> frozenset[int]:
    """All ``r`` with ``r*s == 0`` for every ``s`` in ``subset``."""
    subset = list(subset)
    if not subset:
        raise EmptySet("annihilator of the empty set is undefined")
    mask = np.all(ring.mul[:, subset] == ring.zero, axis=1)
    return frozenset(int(i) for i in np.flatnonzero(mask))


def _compute_classes(ring: Ring) -> ElementClasses:
    mul, zero, one = ring.mul, ring.zero, ring.one
    units = np.flatnonzero((mul == one).any(axis=1))
    hits = mul == zero
    hits[:, zero] = False
    zd = set(int(i) for i in np.flatnonzero(hits.any(axis=1)))
    zd.add(zero)
    # a is nilpotent iff a^(2^k) == 0 once 2^k >= order
    p = np.arange(ring.order)
    for _ in range(max(1, ring.order.bit_length())):
        p = mul[p, p]
    nil = np.flatnonzero(p == zero)
    return ElementClasses(
        units=frozenset(int(i) for i in units),
        zero_divisors=frozenset(zd),
        nilpotents=frozenset(int(i) for i in nil),
    )


def element_classes(ring: Ring) -> ElementClasses:
    return ring.classes


def idempotents(ring: Ring) -> list[int]:
    r = np.arange(ring.order)
    return [int(i) for i in np.flatnonzero(ring.mul[r, r] == r)]


def primitive_idempotents(ring: Ring) -> list[int]:
    """Minimal nonzero idempotents; pairwise orthogonal and summing to one."""
    es = [e for e in idempotents(ring) if e != ring.zero]
    prim = []
    for e in es:
        below = [f for f in es if f != e and ring.mul[e, f] == f]
        if not below:
            prim.append(e)
    return sorted(prim)


def local_decomposition(ring: Ring) -> list[LocalFactor]:
    """Split ``ring`` as the product of the local rings ``eR``."""
    out = []
    for e in primitive_idempotents(ring):
        members = sorted(set(int(i) for i in ring.mul[e]))
        pos = {x: k for k, x in enumerate(members)}
        sub = np.array(members)
        to_local = np.vectorize(pos.__getitem__, otypes=[np.int32])
        add = to_local(ring.add[np.ix_(sub, sub)])
        mul = to_local(ring.mul[np.ix_(sub, sub)])
        if ring.order == len(members):
            name = ring.name
        else:
            name = f"{ring.label(e)}*({ring.name})"
        factor = Ring(
            add,
            mul,
            pos[ring.zero],
            pos[e],
            [ring.labels[x] for x in members],
            name=name,
        )
        out.append(LocalFactor(factor, tuple(members), e))
    return out


def maximal_ideal(local: Ring) -> frozenset[int]:
    """Non-units of a local ring."""
    return frozenset(range(local.order)) - local.classes.units


def is_local(ring: Ring) -> bool:
    nonunits = sorted(frozenset(range(ring.order)) - ring.classes.units)
    sub = ring.add[np.ix_(nonunits, nonunits)]
    return bool(np.isin(sub, nonunits).all())


def structure_predicates(ring: Ring) -> StructurePredicates:
    cls = ring.classes
    factors = local_decomposition(ring)
    orders = []
    for lf in factors:
        residue = lf.ring.order // len(maximal_ideal(lf.ring))
        orders.append(ring.order // residue)
    return StructurePredicates(
        is_field=cls.zero_divisors == frozenset({ring.zero}),
        is_local=len(factors) == 1,
        is_reduced=cls.nilpotents == frozenset({ring.zero}),
        minimal_prime_orders=tuple(sorted(orders)),
    )


def is_ideal(ring: Ring, subset: Iterable[int]) -> bool:
    s = sorted(set(subset))
    if ring.zero not in s:
        return False
    if not np.isin(ring.add[np.ix_(s, s)], s).all():
        return False
    return bool(np.isin(ring.mul[:, s], s).all())
