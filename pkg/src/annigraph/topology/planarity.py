"""Planarity with certificates, and subdivision search for K_n and K_{m,n}.

A planar verdict carries a rotation system whose traced genus is 0; a
non-planar verdict carries a subdivision of K_5 or K_{3,3}.  Both are
re-checked before they are returned.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Sequence, Union

import networkx as nx

from ..errors import Exhausted, InvalidWitness
from ..graph import Graph
from .embedding import RotationSystem, trace_faces


@dataclass(frozen=True)
class PlanarEmbedding:
    rotation: RotationSystem


@dataclass(frozen=True)
class SubdivisionWitness:
    """A subdivision of ``K_n`` or ``K_{m,n}`` inside a graph.

    ``branch[i]`` is the graph vertex playing target vertex ``i``; target
    vertices of ``K_{m,n}`` are ``0..m-1`` on one side and ``m..m+n-1`` on
    the other.  ``paths`` follows :func:`target_edges` order and each path
    runs from the branch vertex of the smaller target vertex to the other.
    """

    kind: str
    params: tuple[int, ...]
    branch: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]

    @property
    def name(self) -> str:
        return f"K{self.params[0]}" if self.kind == "Kn" else "K{},{}".format(*self.params)


Certificate = Union[PlanarEmbedding, SubdivisionWitness]


def target_edges(kind: str, *params: int) -> list[tuple[int, int]]:
    if kind == "Kn":
        (n,) = params
        return [(i, j) for i in range(n) for j in range(i + 1, n)]
    if kind == "Kmn":
        m, n = params
        return [(i, m + j) for i in range(m) for j in range(n)]
    raise ValueError(f"unknown graph family {kind!r}")


def validate_witness(g: Graph, w: SubdivisionWitness) -> None:
    """Raise :class:`InvalidWitness` unless ``w`` is a subdivision of its target in ``g``."""
    edges = target_edges(w.kind, *w.params)
    size = sum(w.params)
    if len(w.branch) != size or len(set(w.branch)) != size:
        raise InvalidWitness("branch vertices must be distinct and match the target order")
    if len(w.paths) != len(edges):
        raise InvalidWitness("one path per target edge is required")
    branch = set(w.branch)
    interior_seen: set[int] = set()
    for (i, j), path in zip(edges, w.paths):
        if len(path) < 2 or path[0] != w.branch[i] or path[-1] != w.branch[j]:
            raise InvalidWitness(f"path for target edge {i}-{j} has the wrong ends")
        for a, b in zip(path, path[1:]):
            if not g.has_edge(a, b):
                raise InvalidWitness(f"path uses a non-edge {a}-{b}")
        for v in path[1:-1]:
            if v in branch or v in interior_seen:
                raise InvalidWitness(f"vertex {v} is shared between paths")
            interior_seen.add(v)


def validate_planar(g: Graph, cert: PlanarEmbedding) -> None:
    if trace_faces(g, cert.rotation).genus != 0:
        raise InvalidWitness("rotation system does not trace to genus 0")


def is_planar(g: Graph) -> tuple[bool, Certificate]:
    """Planarity verdict with a re-checked certificate (networkx left-right test)."""
    h = g.to_networkx()
    ok, result = nx.check_planarity(h)
    if ok:
        data = result.get_data()
        cert = PlanarEmbedding(RotationSystem.from_mapping(g.order, data))
        validate_planar(g, cert)
        return True, cert
    witness = _kuratowski_from_subgraph(_minimal_nonplanar(h))
    validate_witness(g, witness)
    return False, witness


def _minimal_nonplanar(h: nx.Graph) -> nx.Graph:
    """Edge-minimal non-planar subgraph, found by deleting edges in halving batches.

    An edge survives only if deleting it made the graph planar at that
    moment, and later deletions keep that true, so the result is minimal:
    a subdivision of K_5 or K_{3,3}.
    """
    h = h.copy()

    def planar() -> bool:
        return nx.check_planarity(h)[0]

    def shrink(batch: list) -> None:
        h.remove_edges_from(batch)
        if not planar():
            return
        h.add_edges_from(batch)
        if len(batch) > 1:
            mid = len(batch) // 2
            shrink(batch[:mid])
            shrink(batch[mid:])

    edges = sorted(h.edges)
    step = max(1, len(edges) // 8)
    for i in range(0, len(edges), step):
        shrink(edges[i : i + step])
    h.remove_nodes_from([v for v in list(h) if h.degree(v) == 0])
    return h


def _kuratowski_from_subgraph(h: nx.Graph) -> SubdivisionWitness:
    """Read branch vertices and paths off a minimal Kuratowski subgraph."""
    branch = sorted(v for v in h if h.degree(v) > 2)
    chains: dict[tuple[int, int], tuple[int, ...]] = {}
    for s in branch:
        for nb in sorted(h[s]):
            path, prev, cur = [s], s, nb
            while h.degree(cur) == 2:
                path.append(cur)
                prev, cur = cur, next(x for x in h[cur] if x != prev)
            path.append(cur)
            chains[(s, cur)] = tuple(path)
    if len(branch) == 5:
        kind, params, order = "Kn", (5,), branch
    else:
        a = branch[0]
        side = [v for v in branch if v == a or (a, v) not in chains]
        other = [v for v in branch if v not in side]
        kind, params, order = "Kmn", (3, 3), side + other
    paths = tuple(chains[(order[i], order[j])] for i, j in target_edges(kind, *params))
    return SubdivisionWitness(kind, params, tuple(order), paths)


def find_subdivision(
    g: Graph,
    kind: str,
    *params: int,
    node_limit: int = 1_000_000,
    branch: Sequence[int] | None = None,
) -> SubdivisionWitness | None:
    """Search for a subdivision of ``K_n`` (``kind="Kn"``) or ``K_{m,n}`` (``"Kmn"``).

    Branch vertices are tried as combinations (one side at a time for
    ``K_{m,n}``); edges between adjacent branch vertices are used directly,
    the rest are routed by backtracking over simple paths through unused
    vertices.  ``branch`` pins the branch vertices in target order.
    Returns ``None`` only after the whole space is refuted; raises
    :class:`Exhausted` when ``node_limit`` search steps are spent first.
    """
    edges = target_edges(kind, *params)
    size = sum(params)
    tdeg = [0] * size
    for i, j in edges:
        tdeg[i] += 1
        tdeg[j] += 1
    if len(edges) > g.size or size > g.order:
        return None
    counter = [0]

    def tick() -> None:
        counter[0] += 1
        if counter[0] > node_limit:
            raise Exhausted("subdivision search node limit reached", counter[0])

    if branch is not None:
        assignments = iter([tuple(branch)])
    else:
        assignments = _assignments(g, kind, params, tdeg)
    for assign in assignments:
        tick()
        if any(g.degree(v) < tdeg[i] for i, v in enumerate(assign)):
            continue
        paths = _route(g, assign, edges, tick)
        if paths is not None:
            w = SubdivisionWitness(kind, tuple(params), tuple(assign), tuple(paths))
            validate_witness(g, w)
            return w
    return None


def _assignments(g: Graph, kind: str, params: tuple[int, ...], tdeg: list[int]):
    if kind == "Kn":
        (n,) = params
        cands = [v for v in range(g.order) if g.degree(v) >= n - 1]
        yield from itertools.combinations(cands, n)
        return
    m, n = params
    a_cands = [v for v in range(g.order) if g.degree(v) >= n]
    b_cands = [v for v in range(g.order) if g.degree(v) >= m]
    for side_a in itertools.combinations(a_cands, m):
        rest = [v for v in b_cands if v not in side_a]
        for side_b in itertools.combinations(rest, n):
            if m == n and side_b[0] < side_a[0]:
                continue
            yield side_a + side_b


def _route(g: Graph, assign: Sequence[int], edges, tick) -> list[tuple[int, ...]] | None:
    branch = set(assign)
    paths: list[tuple[int, ...] | None] = [None] * len(edges)
    todo = []
    for k, (i, j) in enumerate(edges):
        a, b = assign[i], assign[j]
        if g.has_edge(a, b):
            paths[k] = (a, b)
        else:
            todo.append(k)
    used: set[int] = set()

    def reachable(a: int, b: int) -> bool:
        seen = {a}
        q = deque([a])
        while q:
            u = q.popleft()
            for w in g.adj[u]:
                if w == b:
                    return True
                if w not in seen and w not in used and w not in branch:
                    seen.add(w)
                    q.append(w)
        return False

    def simple_paths(a: int, b: int):
        stack = [(a, iter(sorted(g.adj[a])))]
        path = [a]
        while stack:
            u, it = stack[-1]
            w = next(it, None)
            if w is None:
                stack.pop()
                path.pop()
                if path:
                    used.discard(u)
                continue
            tick()
            if w == b:
                yield tuple(path) + (b,)
            elif w not in used and w not in branch and w not in path:
                used.add(w)
                path.append(w)
                stack.append((w, iter(sorted(g.adj[w]))))

    def solve(rest: list[int]) -> bool:
        if not rest:
            return True
        for k in rest:
            i, j = edges[k]
            if not reachable(assign[i], assign[j]):
                return False
        k = rest[0]
        i, j = edges[k]
        for p in simple_paths(assign[i], assign[j]):
            paths[k] = p
            if solve(rest[1:]):
                return True
        paths[k] = None
        return False

    if not solve(todo):
        return None
    return [p for p in paths]  # type: ignore[misc]
