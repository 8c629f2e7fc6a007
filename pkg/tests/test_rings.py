import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from annigraph import (
    annihilator,
    axiom_check,
    element_classes,
    local_decomposition,
    make_gf,
    make_product,
    make_quotient,
    make_zn,
    primitive_idempotents,
    ring_from_text,
    structure_predicates,
)
from annigraph.errors import (
    ArityError,
    EmptySet,
    InvalidOrder,
    NotPrime,
    ReduciblePolynomial,
    TrivialRing,
)
from annigraph.presentation import smallest_irreducible
from annigraph.rings import Ring, is_ideal

from .oracles import radical


def labels(ring, idx):
    return {ring.label(i) for i in idx}


# -- constructors ----------------------------------------------------------------------


def test_zn_zero_divisors_of_z6():
    z6 = make_zn(6)
    zd = element_classes(z6).zero_divisors
    assert labels(z6, zd) - {"0"} == {"2", "3", "4"}
    # oracle: gcd(a, n) > 1
    assert labels(z6, zd) == {str(a) for a in range(6) if math.gcd(a, 6) > 1}


def test_zn_nilpotents_of_z4():
    z4 = make_zn(4)
    assert labels(z4, element_classes(z4).nilpotents) == {"0", "2"}


def test_zn_rejects_order_one():
    with pytest.raises(InvalidOrder):
        make_zn(1)


def test_gf_default_polynomials():
    assert smallest_irreducible(2, 2) == [1, 1, 1]
    assert smallest_irreducible(2, 3) == [1, 1, 0, 1]  # 1 + x + x^3, low degree first
    f8 = make_gf(2, 3)
    assert f8.order == 8
    assert len(element_classes(f8).units) == 7


def test_gf_errors():
    with pytest.raises(NotPrime):
        make_gf(4, 1)
    with pytest.raises(ReduciblePolynomial):
        make_gf(2, 2, [1, 0, 1])


def test_quotient_z4_x2_minus_2():
    r = make_quotient(4, ["x"], [{(2,): 1, (0,): -2}, {(1,): 2}])
    assert r.order == 8
    assert r.presentation.basis_labels == ("1", "x")
    assert r.presentation.moduli == (4, 2)
    assert axiom_check(r) == []


def test_quotient_z2_xy():
    r = make_quotient(2, ["x", "y"], [{(2, 0): 1}, {(1, 1): 1}, {(0, 2): 1}])
    assert r.order == 8
    assert r.presentation.basis_labels == ("1", "x", "y")


def test_quotient_collapsing_to_zero():
    with pytest.raises(TrivialRing):
        make_quotient(2, ["x"], [{(1,): 1}, {(1,): 1, (0,): 1}])


def test_product_counts():
    r = make_product([make_zn(2)] * 3)
    assert r.order == 8
    zd = element_classes(r).zero_divisors
    # oracle: tuples with some zero coordinate, minus the zero tuple
    assert len(zd) - 1 == 2**3 - 1 - 1
    assert make_product([make_zn(4), make_gf(2, 2)]).order == 16


def test_product_arity():
    with pytest.raises(ArityError):
        make_product([make_zn(2)])


# -- checks and queries ------------------------------------------------------------------


def test_axiom_check_clean_and_corrupted():
    z6 = make_zn(6)
    assert axiom_check(z6) == []
    mul = z6.mul.copy()
    mul[1, 2] = mul[2, 1] = 5
    report = axiom_check(Ring(z6.add, mul, 0, 1, z6.labels))
    assert any("distribut" in p for p in report)
    assert any("associat" in p for p in report)


def test_galois_ring_gr_4_2():
    gr = ring_from_text("Z4[x]/(x^2 + x + 1)")
    assert axiom_check(gr) == []
    cls = element_classes(gr)
    assert len(cls.units) == 12
    assert labels(gr, cls.zero_divisors) == {"0", "2", "2x", "2+2x"}
    assert len(cls.nilpotents) == 4
    assert structure_predicates(gr).is_local


def test_annihilator_examples():
    z6 = make_zn(6)
    assert labels(z6, annihilator(z6, [2])) == {"0", "3"}
    assert labels(z6, annihilator(z6, [2, 3])) == {"0"}
    assert annihilator(z6, [z6.one]) == frozenset({z6.zero})
    with pytest.raises(EmptySet):
        annihilator(z6, [])


def test_primitive_idempotents():
    assert labels(make_zn(6), primitive_idempotents(make_zn(6))) == {"3", "4"}
    assert labels(make_zn(8), primitive_idempotents(make_zn(8))) == {"1"}
    r = ring_from_text("Z2 x Z2 x Z3")
    assert labels(r, primitive_idempotents(r)) == {"(1,0,0)", "(0,1,0)", "(0,0,1)"}


def test_local_decomposition():
    # oracle: CRT, Z12 = Z4 x Z3
    assert sorted(f.ring.order for f in local_decomposition(make_zn(12))) == [3, 4]
    assert [f.ring.order for f in local_decomposition(make_zn(49))] == [49]
    assert sorted(f.ring.order for f in local_decomposition(ring_from_text("Z2 x GF(4)"))) == [2, 4]


def test_structure_predicates():
    sp = structure_predicates(make_zn(9))
    assert (sp.is_field, sp.is_local, sp.is_reduced, sp.minimal_prime_orders) == (False, True, False, (3,))
    sp = structure_predicates(ring_from_text("Z2 x GF(4)"))
    assert sp.is_reduced and sp.minimal_prime_orders == (2, 4)
    sp = structure_predicates(ring_from_text("GF(8)"))
    assert (sp.is_field, sp.is_local, sp.is_reduced, sp.minimal_prime_orders) == (True, True, True, (1,))


# -- properties --------------------------------------------------------------------------


SAMPLE_EXPRS = [
    "Z12",
    "Z2 x GF(4)",
    "Z4[x]/(x^2 - 2, 2*x)",
    "Z2[x,y]/(x^2, x*y, y^2)",
    "Z4 x Z3",
    "Z8[x]/(2x, x^2 + 4)",
    "GF(9)",
    "Z2 x Z2 x Z3",
]


@pytest.mark.parametrize("expr", SAMPLE_EXPRS)
def test_constructed_rings_satisfy_axioms(expr):
    assert axiom_check(ring_from_text(expr)) == []


@pytest.mark.parametrize("expr", SAMPLE_EXPRS)
def test_annihilators_are_ideals_and_classes_partition(expr):
    r = ring_from_text(expr)
    for x in range(r.order):
        ann = annihilator(r, [x])
        assert r.zero in ann and is_ideal(r, ann)
        assert (x in ann) == (r.times(x, x) == r.zero)
    cls = element_classes(r)
    nonzero = set(range(r.order)) - {r.zero}
    assert cls.units.isdisjoint(cls.zero_divisors)
    assert cls.units | (cls.zero_divisors - {r.zero}) == nonzero
    assert cls.nilpotents <= cls.zero_divisors


@pytest.mark.parametrize("expr", SAMPLE_EXPRS)
def test_local_factors_multiply_back(expr):
    r = ring_from_text(expr)
    factors = local_decomposition(r)
    assert math.prod(f.ring.order for f in factors) == r.order
    # every element is the sum of its components e*x, and products split componentwise
    for x in range(r.order):
        total = r.zero
        for f in factors:
            total = r.plus(total, r.times(f.idempotent, x))
        assert total == x


@pytest.mark.parametrize("n", range(2, 65))
def test_zn_nilpotents_are_multiples_of_the_radical(n):
    z = make_zn(n)
    rad = radical(n)
    expected = {str(a) for a in range(n) if a % rad == 0}
    scan = {str(a) for a in range(n) if any(pow(a, k, n) == 0 for k in range(1, n + 1))}
    assert labels(z, element_classes(z).nilpotents) == expected == scan


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(2, 6), min_size=2, max_size=3))
def test_product_matches_componentwise_arithmetic(moduli):
    r = make_product([make_zn(n) for n in moduli])
    rng = np.random.default_rng(len(moduli))
    for _ in range(20):
        a, b = (int(v) for v in rng.integers(0, r.order, 2))
        ca, cb = r.coords(a), r.coords(b)
        assert r.coords(r.times(a, b)) == tuple((x * y) % n for x, y, n in zip(ca, cb, moduli))
        assert r.coords(r.plus(a, b)) == tuple((x + y) % n for x, y, n in zip(ca, cb, moduli))
