"""Structural predictions of planarity and toroidality, and the ring family they are tested on.

The predictions read only algebraic invariants (local factors, nilradical,
zero-divisors, the annihilator of Z(R)) and never look at the graph, so
comparing them with the computed genus is a genuine consistency test.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .catalog import LOCAL_M78, PLANAR_LOCAL
from .errors import NoZeroDivisors
from .parse import ring_from_text
from .presentation import is_prime, prime_power
from .rings import Ring, annihilator, local_decomposition, make_product, structure_predicates

TOROIDAL_FIELD_PAIRS = frozenset({(4, 7), (5, 5), (4, 5), (4, 4)})


@dataclass(frozen=True)
class Prediction:
    planar: bool
    toroidal: bool
    rule: str


def is_prime_ideal(ring: Ring, ideal: frozenset[int]) -> bool:
    """Proper ideal P with ab in P only if a or b is in P (P assumed to be an ideal)."""
    if ring.one in ideal:
        return False
    inside = np.zeros(ring.order, dtype=bool)
    inside[list(ideal)] = True
    outside = np.flatnonzero(~inside)
    return not inside[ring.mul[np.ix_(outside, outside)]].any()


def predict_classification(ring: Ring) -> Prediction:
    sp = structure_predicates(ring)
    if sp.is_field:
        raise NoZeroDivisors(f"{ring.name or 'ring'} is a field")
    factors = local_decomposition(ring)
    orders = sorted(f.ring.order for f in factors)
    n = len(factors)

    if sp.is_reduced:
        # a finite reduced ring is a product of fields
        if n >= 4:
            return Prediction(False, False, "reduced, at least four field factors")
        if n == 3:
            if orders == [2, 2, 2]:
                return Prediction(True, False, "reduced, Z2 x Z2 x Z2")
            if orders == [2, 2, 3]:
                return Prediction(False, True, "reduced, Z2 x Z2 x Z3")
            return Prediction(False, False, "reduced, three fields other than Z2^3 or Z2^2 x Z3")
        if min(sp.minimal_prime_orders) <= 3:
            return Prediction(True, False, "reduced, a minimal prime has at most 3 elements")
        if tuple(orders) in TOROIDAL_FIELD_PAIRS:
            return Prediction(False, True, "reduced, field pair of orders " + "x".join(map(str, orders)))
        return Prediction(False, False, "reduced, two fields both of order at least 4")

    cls = ring.classes
    nil = len(cls.nilpotents)
    zd = cls.zero_divisors

    if n == 2:
        small, big = sorted(factors, key=lambda f: f.ring.order)
        if small.ring.order == 2 and big.ring.order == 4 and not _is_field(big.ring):
            return Prediction(True, False, "non-reduced, Z2 times a local ring of order 4")
    if zd == cls.nilpotents and 4 <= nil <= 5:
        return Prediction(True, False, "non-reduced, Z(R) = Nil(R) with 4 or 5 elements")
    if 2 <= nil <= 3 and is_prime_ideal(ring, annihilator(ring, zd)):
        return Prediction(True, False, "non-reduced, Ann(Z(R)) prime and |Nil(R)| in {2, 3}")

    if n == 1:
        m = len(zd)
        if m in (7, 8):
            return Prediction(False, True, f"non-reduced local, |m| = {m}")
        return Prediction(False, False, f"non-reduced local, |m| = {m}")
    if n == 2:
        a, b = sorted(factors, key=lambda f: f.ring.order)
        if a.ring.order == 3 and b.ring.order == 4 and not _is_field(b.ring):
            return Prediction(False, True, "non-reduced, local ring of order 4 times Z3")
        if b.ring.order == 3 and a.ring.order == 4 and not _is_field(a.ring):
            return Prediction(False, True, "non-reduced, local ring of order 4 times Z3")
    return Prediction(False, False, f"non-reduced, {n} local factors")


def _is_field(ring: Ring) -> bool:
    return len(ring.classes.units) == ring.order - 1


# -- family ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _build(expr: str) -> Ring:
    return ring_from_text(expr)


def _pool(limit: int) -> list[Ring]:
    """Factors allowed in products: fields, prime-power Z_n, named local rings."""
    exprs = [f"Z{p}" for p in range(2, limit + 1) if is_prime(p)]
    exprs += [f"GF({q})" for q in (4, 8, 9) if q <= limit]
    exprs += [f"Z{q}" for q in range(4, limit + 1) if not is_prime(q) and prime_power(q)]
    exprs += list(PLANAR_LOCAL) + [e.expr for e in LOCAL_M78]
    out, seen = [], set()
    for e in exprs:
        ring = _build(e)
        if ring.order <= limit and ring.name not in seen:
            seen.add(ring.name)
            out.append(ring)
    return out


def enumerate_family(max_order: int) -> list[Ring]:
    """Finite rings with zero-divisors of order at most ``max_order``.

    The family holds every composite Z_n, the named local rings, and all
    products of two or three factors drawn from the prime fields, GF(4),
    GF(8), GF(9), the prime-power Z_n and the named local rings.  Rings are
    deduplicated by construction recipe and sorted by (order, recipe).
    """
    if max_order > 256:
        raise ValueError("enumerate_family supports max_order <= 256")
    found: dict[str, Ring] = {}
    for n in range(4, max_order + 1):
        if not is_prime(n):
            ring = _build(f"Z{n}")
            found[ring.name] = ring
    for expr in list(PLANAR_LOCAL) + [e.expr for e in LOCAL_M78]:
        ring = _build(expr)
        if ring.order <= max_order:
            found.setdefault(ring.name, ring)
    pool = _pool(max_order // 2)
    for k in (2, 3):
        for combo in itertools.combinations_with_replacement(range(len(pool)), k):
            order = 1
            for i in combo:
                order *= pool[i].order
            if order > max_order:
                continue
            ring = make_product([pool[i] for i in combo])
            found.setdefault(ring.name, ring)
    return sorted(found.values(), key=lambda r: (r.order, r.name))
