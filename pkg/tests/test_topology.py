import itertools
import random

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from annigraph import (
    Budget,
    Graph,
    annihilator_graph,
    closed_form_genus,
    find_subdivision,
    genus_lower_bound,
    is_planar,
    min_genus,
    ring_from_text,
    trace_faces,
)
from annigraph.errors import Exhausted, InvalidRotation, InvalidWitness
from annigraph.topology import (
    PlanarEmbedding,
    RotationSystem,
    SubdivisionWitness,
    search_whole,
    validate_witness,
)

from .oracles import brute_genus, rotation_count


@st.composite
def small_graphs(draw, max_vertices=7):
    n = draw(st.integers(2, max_vertices))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph([str(i) for i in range(n)], [p for p, k in zip(pairs, keep) if k])


def connected(g):
    return len(g.components()) == 1


# -- face tracing ----------------------------------------------------------------------


def test_trace_triangle():
    g = Graph.cycle(3)
    res = trace_faces(g, RotationSystem.from_mapping(3, {0: [1, 2], 1: [2, 0], 2: [0, 1]}))
    assert (res.faces, res.genus) == (2, 0)


def test_trace_planar_k4():
    g = Graph.complete(4)
    ok, cert = is_planar(g)
    assert ok
    res = trace_faces(g, cert.rotation)
    assert (res.faces, res.genus) == (4, 0)


def test_k33_needs_a_handle():
    g = Graph.complete_bipartite(3, 3)
    assert brute_genus(g.order, g.edges()) == 1
    rot = RotationSystem(tuple(tuple(sorted(g.adj[v])) for v in range(g.order)))
    assert trace_faces(g, rot).genus >= 1


def test_invalid_rotation():
    g = Graph.cycle(3)
    with pytest.raises(InvalidRotation):
        trace_faces(g, RotationSystem(((1,), (0, 2), (0, 1))))


# -- bounds and closed forms -----------------------------------------------------------


def test_lower_bound_examples():
    assert genus_lower_bound(Graph.complete(7)) == 1
    assert genus_lower_bound(Graph.complete_bipartite(3, 3)) == 1
    assert genus_lower_bound(Graph.path(6)) == 0


def test_closed_forms():
    assert closed_form_genus("Kn", 7) == 1
    assert closed_form_genus("Kmn", 4, 4) == 1
    assert closed_form_genus("Kn", 3) == 0
    assert closed_form_genus("Kmn", 1, 9) == 0
    # the bipartite graphs met in non-toroidality arguments
    assert closed_form_genus("Kmn", 5, 4) == 2
    assert closed_form_genus("Kmn", 7, 4) == 3
    assert closed_form_genus("Kmn", 8, 3) == 2


@pytest.mark.parametrize("n", range(3, 8))
def test_min_genus_complete(n):
    res = min_genus(Graph.complete(n))
    assert res.genus == closed_form_genus("Kn", n)
    assert trace_faces(Graph.complete(n), res.embedding.rotation).genus == res.genus


@pytest.mark.parametrize(
    "m, n", [(m, n) for m in range(2, 11) for n in range(m, 11) if m * n <= 20]
)
def test_min_genus_complete_bipartite(m, n):
    assert min_genus(Graph.complete_bipartite(m, n)).genus == closed_form_genus("Kmn", m, n)


# -- genus search ----------------------------------------------------------------------


def test_min_genus_examples():
    assert min_genus(Graph.complete(5)).genus == 1
    assert min_genus(Graph.path(3)).genus == 0
    g = annihilator_graph(ring_from_text("Z4 x GF(4)"))
    res = min_genus(g)
    assert res.genus == 2
    assert trace_faces(g, res.embedding.rotation).genus == 2


def test_single_vertex_is_planar():
    g = annihilator_graph(ring_from_text("Z4"))
    assert min_genus(g).genus == 0
    assert is_planar(g)[0]


def test_genus_above_budget_is_reported_not_guessed():
    g = annihilator_graph(ring_from_text("Z2 x Z2 x Z2 x Z2"))
    res = min_genus(g, Budget(max_genus=1))
    assert res.genus is None and res.lower >= 2


def test_node_limit_raises():
    g = annihilator_graph(ring_from_text("Z4 x GF(4)"))
    with pytest.raises(Exhausted):
        min_genus(g, Budget(max_genus=3, node_limit=10))


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_min_genus_matches_brute_force(g):
    assume(connected(g) and rotation_count(g.order, g.edges()) <= 3000)
    assert min_genus(g).genus == brute_genus(g.order, g.edges())


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_compiled_and_reference_engines_agree(g):
    fast = min_genus(g)
    slow = min_genus(g, compiled=False)
    assert fast.genus == slow.genus


@settings(max_examples=60, deadline=None)
@given(small_graphs(8))
def test_lower_bound_and_planarity_consistent(g):
    res = min_genus(g)
    assert res.genus is not None
    if connected(g):
        assert genus_lower_bound(g) <= res.genus
    ok, cert = is_planar(g)
    assert ok == (res.genus == 0)
    if not ok:
        validate_witness(g, cert)


@settings(max_examples=40, deadline=None)
@given(small_graphs(), st.randoms(use_true_random=False))
def test_genus_is_permutation_invariant(g, rnd):
    perm = list(range(g.order))
    rnd.shuffle(perm)
    assert min_genus(g.permuted(perm)).genus == min_genus(g).genus


@settings(max_examples=40, deadline=None)
@given(small_graphs(8))
def test_block_additivity(g):
    assert min_genus(g).genus == search_whole(g).genus


def test_block_additivity_on_glued_k5s():
    # two K5 sharing a vertex
    edges = list(itertools.combinations(range(5), 2))
    edges += [(a + 4, b + 4) for a, b in itertools.combinations(range(5), 2)]
    g = Graph([str(i) for i in range(9)], edges)
    assert min_genus(g).genus == 2 == search_whole(g).genus


def test_block_additivity_with_bridge_and_pendant():
    # K4 and K5 sharing a vertex, with a path closing a cycle through both
    edges = list(itertools.combinations(range(4), 2))
    edges += [(a + 3, b + 3) for a, b in itertools.combinations(range(5), 2)]
    edges += [(7, 8), (8, 0)]
    g = Graph([str(i) for i in range(9)], edges)
    assert min_genus(g).genus == 1 == search_whole(g).genus


# -- planarity and subdivisions -------------------------------------------------------------


def test_is_planar_examples():
    assert is_planar(Graph.complete(4))[0]
    ok, cert = is_planar(Graph.complete(5))
    assert not ok and cert.name == "K5"
    ok, cert = is_planar(Graph.complete_bipartite(3, 3))
    assert not ok and cert.name == "K3,3"
    ok, cert = is_planar(annihilator_graph(ring_from_text("Z2 x Z2 x Z2")))
    assert ok and isinstance(cert, PlanarEmbedding)


def test_planar_certificate_traces_to_sphere():
    g = annihilator_graph(ring_from_text("Z3 x GF(9)"))
    ok, cert = is_planar(g)
    assert ok and trace_faces(g, cert.rotation).genus == 0


def test_k5_on_the_listed_vertices():
    g = annihilator_graph(ring_from_text("Z2 x Z2 x Z2 x Z2"))
    branch = [g.index(lab) for lab in ("(1,1,0,0)", "(0,1,1,0)", "(0,0,1,1)", "(1,0,1,0)", "(0,1,0,1)")]
    w = find_subdivision(g, "Kn", 5, branch=branch)
    assert w is not None and set(w.branch) == set(branch)
    # they are pairwise adjacent, so every path is a single edge
    assert all(len(p) == 2 for p in w.paths)


def test_k33_in_z4_x_z3():
    g = annihilator_graph(ring_from_text("Z4 x Z3"))
    w = find_subdivision(g, "Kmn", 3, 3)
    assert w is not None
    validate_witness(g, w)


def test_no_subdivision_in_a_cycle():
    assert find_subdivision(Graph.cycle(5), "Kmn", 3, 3) is None


def test_subdivision_with_long_paths():
    # K4 with every edge subdivided twice still contains K4, and nothing with a degree-4 vertex
    edges, n = [], 4
    for a, b in itertools.combinations(range(4), 2):
        edges += [(a, n), (n, n + 1), (n + 1, b)]
        n += 2
    g = Graph([str(i) for i in range(n)], edges)
    w = find_subdivision(g, "Kn", 4)
    assert w is not None and max(len(p) for p in w.paths) == 4
    assert find_subdivision(g, "Kn", 5) is None


def test_subdivision_budget():
    g = Graph.complete_bipartite(4, 4)
    with pytest.raises(Exhausted):
        find_subdivision(g, "Kn", 5, node_limit=5)


def test_tampered_witness_is_rejected():
    g = Graph.complete(5)
    w = find_subdivision(g, "Kn", 5)
    bad = SubdivisionWitness(w.kind, w.params, w.branch, w.paths[:-1] + ((w.branch[3], w.branch[0]),))
    with pytest.raises(InvalidWitness):
        validate_witness(g, bad)


def test_random_kuratowski_witnesses_recheck():
    rnd = random.Random(7)
    for _ in range(30):
        n = rnd.randint(6, 12)
        edges = [p for p in itertools.combinations(range(n), 2) if rnd.random() < 0.5]
        g = Graph([str(i) for i in range(n)], edges)
        ok, cert = is_planar(g)
        if not ok:
            validate_witness(g, cert)
            assert cert.name in ("K5", "K3,3")
