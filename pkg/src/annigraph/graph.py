"""Simple undirected labelled graphs plus the shape recognisers used in reports."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import networkx as nx


class Graph:
    """Immutable simple graph on vertices ``0..n-1`` with display labels."""

    def __init__(self, labels: Sequence[str], edges: Iterable[tuple[int, int]]):
        self.labels = tuple(labels)
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("vertex labels must be distinct")
        n = len(self.labels)
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range")
            adj[u].add(v)
            adj[v].add(u)
        self.adj = tuple(frozenset(a) for a in adj)

    @classmethod
    def from_adjacency(cls, labels: Sequence[str], adj: Sequence[Iterable[int]]) -> "Graph":
        return cls(labels, ((u, v) for u, nb in enumerate(adj) for v in nb if u < v))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls([str(i) for i in range(n)], ((i, j) for i in range(n) for j in range(i + 1, n)))

    @classmethod
    def complete_bipartite(cls, m: int, n: int) -> "Graph":
        labels = [f"a{i}" for i in range(m)] + [f"b{j}" for j in range(n)]
        return cls(labels, ((i, m + j) for i in range(m) for j in range(n)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls([str(i) for i in range(n)], ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls([str(i) for i in range(n)], ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "Graph":
        nodes = list(g.nodes)
        pos = {v: i for i, v in enumerate(nodes)}
        return cls([str(v) for v in nodes], ((pos[u], pos[v]) for u, v in g.edges))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, size={self.size})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.labels == other.labels and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.labels, self.adj))

    @property
    def order(self) -> int:
        return len(self.labels)

    @property
    def size(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u in range(self.order) for v in self.adj[u] if u < v)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def labelled_edges(self) -> set[frozenset[str]]:
        return {frozenset((self.labels[u], self.labels[v])) for u, v in self.edges()}

    def subgraph(self, vertices: Iterable[int]) -> "Graph":
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        return Graph(
            [self.labels[v] for v in keep],
            ((pos[u], pos[v]) for u, v in self.edges() if u in pos and v in pos),
        )

    def permuted(self, perm: Sequence[int]) -> "Graph":
        """Relabel vertex ``v`` as position ``perm[v]``; labels travel along."""
        labels = [""] * self.order
        for v, p in enumerate(perm):
            labels[p] = self.labels[v]
        return Graph(labels, ((perm[u], perm[v]) for u, v in self.edges()))

    def complement(self) -> "Graph":
        n = self.order
        return Graph(
            self.labels,
            ((u, v) for u in range(n) for v in range(u + 1, n) if v not in self.adj[u]),
        )

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.order))
        g.add_edges_from(self.edges())
        return g

    def components(self) -> list[list[int]]:
        seen = [False] * self.order
        comps = []
        for s in range(self.order):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [], [s]
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def distances_from(self, s: int) -> dict[int, int]:
        dist = {s: 0}
        q = deque([s])
        while q:
            u = q.popleft()
            for w in self.adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    q.append(w)
        return dist

    def girth(self) -> float:
        """Length of a shortest cycle, ``math.inf`` for forests."""
        best = math.inf
        for s in range(self.order):
            dist = {s: 0}
            parent = {s: -1}
            q = deque([s])
            while q:
                u = q.popleft()
                if 2 * dist[u] + 1 >= best:
                    break
                for w in self.adj[u]:
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        q.append(w)
                    elif parent[u] != w:
                        best = min(best, dist[u] + dist[w] + 1)
        return best


@dataclass(frozen=True)
class GraphStats:
    order: int
    size: int
    degrees: tuple[int, ...]
    girth: float
    diameters: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]


def graph_stats(g: Graph) -> GraphStats:
    comps = g.components()
    diameters = []
    for comp in comps:
        diameters.append(max(max(g.distances_from(v).values()) for v in comp))
    return GraphStats(
        order=g.order,
        size=g.size,
        degrees=tuple(sorted((g.degree(v) for v in range(g.order)), reverse=True)),
        girth=g.girth(),
        diameters=tuple(diameters),
        components=tuple(tuple(c) for c in comps),
    )


@dataclass(frozen=True)
class ShapeReport:
    complete: bool
    bipartition: tuple[tuple[int, ...], tuple[int, ...]] | None
    join_parts: tuple[tuple[int, ...], ...] | None
    descriptor: str | None


def _complete_bipartition(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    n = g.order
    if n < 2 or g.size == 0:
        return None
    # in a complete bipartite graph, the part of v0 is exactly its non-neighbours
    a = tuple(v for v in range(n) if v not in g.adj[0])
    b = tuple(sorted(g.adj[0]))
    if not b or len(a) + len(b) != n:
        return None
    if g.size != len(a) * len(b):
        return None
    if all(set(b) <= g.adj[u] for u in a):
        return (a, b) if len(a) <= len(b) else (b, a)
    return None


def _describe_part(g: Graph, part: Sequence[int]) -> str:
    sub = g.subgraph(part)
    if sub.size == 0:
        return f"{len(part)}K_1"
    pieces = []
    isolated = 0
    for comp in sub.components():
        if len(comp) == 1:
            isolated += 1
            continue
        piece = sub.subgraph(comp)
        if piece.size == len(comp) * (len(comp) - 1) // 2:
            pieces.append(f"K_{len(comp)}")
        else:
            pieces.append(f"G({len(comp)},{piece.size})")
    return "+".join(sorted(pieces))


def recognize_shape(g: Graph) -> ShapeReport:
    """Complete / complete-bipartite / join structure of ``g``.

    The join decomposition comes from the components of the complement: ``g``
    is a join exactly when its complement is disconnected.
    """
    n = g.order
    complete = g.size == n * (n - 1) // 2
    bip = _complete_bipartition(g)
    comp_parts = g.complement().components()
    join = tuple(tuple(c) for c in comp_parts) if len(comp_parts) > 1 else None

    descriptor = None
    if complete:
        descriptor = f"K_{n}"
    elif bip is not None:
        descriptor = f"K_{{{len(bip[0])},{len(bip[1])}}}"
    elif join is not None and len(join) == 2:
        indep = [p for p in join if g.subgraph(p).size == 0]
        if len(indep) == 1:
            other = join[1] if join[0] == indep[0] else join[0]
            m, k = sorted((len(indep[0]), len(other)))
            descriptor = f"K_{{{m},{k}}}+{_describe_part(g, other)}"
    return ShapeReport(complete=complete, bipartition=bip, join_parts=join, descriptor=descriptor)
