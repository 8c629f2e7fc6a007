"""Annihilator graphs and zero-divisor graphs of finite rings.

``annihilator_graph`` evaluates the defining condition literally on
annihilator sets.  ``edge_criteria`` re-derives adjacency two more ways (the
ideal form and the module form of the edge condition) with deliberately
separate code, so that agreement between the three is a real check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidVertexPair, NoZeroDivisors
from .graph import Graph
from .rings import Ring, annihilator


def _ann_masks(ring: Ring) -> list[int]:
    """Bitmask of ann(x) for every element x."""
    hits = np.packbits(ring.mul == ring.zero, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in hits]


def vertices(ring: Ring) -> list[int]:
    """Nonzero zero-divisors in element-index order."""
    zd = sorted(ring.classes.zero_divisors - {ring.zero})
    if not zd:
        raise NoZeroDivisors(f"{ring.name or 'ring'} has no nonzero zero-divisors")
    return zd


def annihilator_graph(ring: Ring) -> Graph:
    """AG(R): x ~ y iff ann(xy) differs from ann(x) union ann(y)."""
    verts = vertices(ring)
    ann = _ann_masks(ring)
    mul = ring.mul
    edges = []
    for i, x in enumerate(verts):
        ax = ann[x]
        row = mul[x]
        for j in range(i + 1, len(verts)):
            y = verts[j]
            if ann[row[y]] != ax | ann[y]:
                edges.append((i, j))
    return Graph([ring.labels[v] for v in verts], edges)


def zero_divisor_graph(ring: Ring) -> Graph:
    """The classical graph: x ~ y iff xy = 0."""
    verts = vertices(ring)
    sub = ring.mul[np.ix_(verts, verts)] == ring.zero
    np.fill_diagonal(sub, False)
    edges = [(int(i), int(j)) for i, j in zip(*np.nonzero(np.triu(sub, 1)))]
    return Graph([ring.labels[v] for v in verts], edges)


@dataclass(frozen=True)
class EdgeCriteria:
    def_edge: bool
    ideal_edge: bool
    module_edge: bool

    @property
    def agree(self) -> bool:
        return self.def_edge == self.ideal_edge == self.module_edge


def edge_criteria(ring: Ring, x: int, y: int) -> EdgeCriteria:
    zd = ring.classes.zero_divisors
    if x == y or x == ring.zero or y == ring.zero or x not in zd or y not in zd:
        raise InvalidVertexPair(f"({x}, {y}) is not a pair of distinct nonzero zero-divisors")
    n, zero, mul = ring.order, ring.zero, ring.mul

    # the definition, on annihilator sets
    xy = int(mul[x, y])
    def_edge = annihilator(ring, [xy]) != annihilator(ring, [x]) | annihilator(ring, [y])

    # Rx meets ann(y) nontrivially, and Ry meets ann(x) nontrivially
    def principal(a: int) -> set[int]:
        return {int(mul[r, a]) for r in range(n)}

    def killers(a: int) -> set[int]:
        return {r for r in range(n) if mul[a, r] == zero}

    ideal_edge = bool((principal(x) & killers(y)) - {zero}) and bool(
        (principal(y) & killers(x)) - {zero}
    )

    # x is a zero-divisor on the module Ry, and y on Rx
    def kills_some(a: int, b: int) -> bool:
        for r in range(n):
            rb = mul[r, b]
            if rb != zero and mul[a, rb] == zero:
                return True
        return False

    module_edge = kills_some(x, y) and kills_some(y, x)
    return EdgeCriteria(bool(def_edge), ideal_edge, module_edge)
