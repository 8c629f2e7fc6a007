"""Structural predictions, the ring family and the named-ring catalog."""

from __future__ import annotations

import collections
import itertools

import pytest

from annigraph import ring_from_text
from annigraph.catalog import LOCAL_M78, PLANAR_LOCAL, PLANAR_PRODUCTS
from annigraph.classify import enumerate_family, is_prime_ideal, predict_classification
from annigraph.errors import NoZeroDivisors
from annigraph.rings import annihilator, is_local, maximal_ideal

from .oracles import isomorphic


@pytest.mark.parametrize(
    "expr, planar, toroidal",
    [
        ("Z2 x Z2 x Z3", False, True),
        ("Z2 x GF(1024)", True, False),
        ("GF(9) x GF(4)", False, False),
        ("Z2 x Z2 x Z2", True, False),
        ("Z2 x Z2 x Z2 x Z2", False, False),
        ("GF(4) x GF(7)", False, True),
        ("Z4 x Z3", False, True),
        ("Z2 x Z4", True, False),
        ("Z8", True, False),
        ("Z16", False, True),
        ("Z32", False, False),
        ("Z4 x GF(4)", False, False),
    ],
)
def test_prediction(expr, planar, toroidal):
    pred = predict_classification(ring_from_text(expr))
    assert (pred.planar, pred.toroidal) == (planar, toroidal)
    assert pred.rule


@pytest.mark.parametrize("expr", ["Z7", "GF(8)", "Z2[x]/(x^2 + x + 1)"])
def test_prediction_rejects_fields(expr):
    with pytest.raises(NoZeroDivisors):
        predict_classification(ring_from_text(expr))


def test_prime_ideal():
    z12 = ring_from_text("Z12")
    ideal = lambda d: frozenset(x for x in range(12) if x % d == 0)  # noqa: E731
    assert is_prime_ideal(z12, frozenset(z12.element(str(x)) for x in ideal(2)))
    assert is_prime_ideal(z12, frozenset(z12.element(str(x)) for x in ideal(3)))
    assert not is_prime_ideal(z12, frozenset(z12.element(str(x)) for x in ideal(4)))
    assert not is_prime_ideal(z12, frozenset(range(12)))


def test_family_small_orders():
    assert enumerate_family(3) == []
    assert {r.name for r in enumerate_family(4)} == {"Z4", "Z2 x Z2", "Z2[x]/(x^2)"}
    names = {r.name for r in enumerate_family(8)}
    assert {"Z4", "Z6", "Z8", "Z2 x Z2", "Z2 x Z3", "Z2 x Z4", "Z2 x Z2 x Z2"} <= names
    assert all(r.order <= 8 for r in enumerate_family(8))


def test_family_is_sorted_and_has_zero_divisors():
    family = enumerate_family(32)
    keys = [(r.order, r.name) for r in family]
    assert keys == sorted(keys)
    assert len({r.name for r in family}) == len(family)
    assert all(r.classes.zero_divisors for r in family)


def test_family_order_cap():
    with pytest.raises(ValueError):
        enumerate_family(257)


def test_planar_catalog_is_local():
    for expr in PLANAR_LOCAL:
        ring = ring_from_text(expr)
        assert is_local(ring), expr
        assert ring.classes.zero_divisors, expr
    for expr in PLANAR_PRODUCTS:
        assert not is_local(ring_from_text(expr)), expr


def test_m78_catalog_entries_are_local_with_small_maximal_ideal():
    assert len(LOCAL_M78) == 22
    for entry in LOCAL_M78:
        ring = ring_from_text(entry.expr)
        assert is_local(ring), entry.expr
        assert len(maximal_ideal(ring)) in (7, 8), entry.expr


def test_m78_corrections_are_exactly_the_broken_printed_forms():
    corrected = [e for e in LOCAL_M78 if e.corrected]
    assert len(corrected) == 3
    for entry in LOCAL_M78:
        ring = ring_from_text(entry.printed)
        valid = is_local(ring) and len(maximal_ideal(ring)) in (7, 8)
        assert valid != entry.corrected, entry.printed
        assert bool(entry.note) == entry.corrected


def _fingerprint(ring):
    m = sorted(maximal_ideal(ring))
    squares = {ring.times(a, b) for a in m for b in m}
    ann_sizes = collections.Counter(len(annihilator(ring, [a])) for a in m)
    return (ring.order, len(m), len(squares), sorted(ann_sizes.items()))


def test_m78_catalog_has_no_isomorphic_pair():
    rings = [ring_from_text(e.expr) for e in LOCAL_M78]
    groups = collections.defaultdict(list)
    for ring in rings:
        groups[repr(_fingerprint(ring))].append(ring)
    for group in groups.values():
        for r, s in itertools.combinations(group, 2):
            assert not isomorphic(r, s), (r.name, s.name)
