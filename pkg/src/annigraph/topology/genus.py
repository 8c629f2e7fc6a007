"""Exact orientable genus by rotation-system search.

The pipeline is:

1. strip vertices of degree 0 and 1 and smooth vertices of degree 2, merging
   the parallel edges this creates (none of these steps changes the genus);
2. split what is left into biconnected blocks, whose genera add up;
3. for each block, deepen the target genus from a lower bound and run a
   face-following backtracking search over rotations.

The search fixes successors dart by dart.  Choosing the rotation successor
of ``v->u`` at ``v`` also fixes the face successor of ``u->v``, so partial
faces are maintained as chains and the number of faces still reachable can
be bounded from above.  Every answer comes with a rotation system for the
original graph, obtained by undoing the reductions.
"""

from __future__ import annotations

import itertools
import math
import random
import sys
from dataclasses import dataclass
from typing import Iterable

import networkx as nx
import numpy as np

from ..errors import Exhausted
from ..graph import Graph
from .embedding import EmbeddingResult, RotationSystem, trace_faces

Adj = dict[int, set[int]]


@dataclass(frozen=True)
class Budget:
    max_genus: int = 3
    node_limit: int = 50_000_000


@dataclass(frozen=True)
class GenusResult:
    """Outcome of :func:`min_genus`.

    ``genus`` is exact when set.  When it is ``None`` the search proved the
    genus exceeds ``budget.max_genus`` and ``lower`` holds the proven bound.
    """

    genus: int | None
    lower: int
    embedding: EmbeddingResult | None
    nodes: int


class _Counter:
    def __init__(self, limit: int):
        self.limit = limit
        self.nodes = 0


# -- bounds ---------------------------------------------------------------------------


def _euler_bound(v: int, e: int, girth: float) -> int:
    if e == 0 or math.isinf(girth):
        return 0
    # 2 - 2g = V - E + F with F <= 2E / girth
    need = e * (girth - 2) - girth * (v - 2)
    return max(0, -(-need // (2 * girth))) if need > 0 else 0


def genus_lower_bound(g: Graph) -> int:
    """Euler bound using the girth, summed over components."""
    total = 0
    for comp in g.components():
        sub = g.subgraph(comp)
        total += _euler_bound(sub.order, sub.size, sub.girth())
    return total


def _adj_girth(adj: Adj) -> float:
    best = math.inf
    for s in adj:
        dist = {s: 0}
        parent = {s: -1}
        frontier = [s]
        while frontier and 2 * dist[frontier[0]] + 1 < best:
            nxt = []
            for u in frontier:
                for w in adj[u]:
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        nxt.append(w)
                    elif parent[u] != w:
                        best = min(best, dist[u] + dist[w] + 1)
            frontier = nxt
    return best


def _core(adj: Adj, k: int) -> Adj:
    sub = {v: set(nb) for v, nb in adj.items()}
    stack = [v for v in sub if len(sub[v]) < k]
    while stack:
        v = stack.pop()
        if v not in sub:
            continue
        for w in sub.pop(v):
            sub[w].discard(v)
            if len(sub[w]) < k:
                stack.append(w)
    return sub


def _max_faces(adj: Adj) -> int:
    """Upper bound on the faces of any embedding of a connected graph of min degree >= 3.

    Faces have length at least the girth.  When the girth is 3 the count is
    sharpened with triangles: a triangle bounds at most one face (two would
    force a vertex of degree 2), and an edge lies on at most two faces, so
    ``3*F3 <= sum over edges of min(2, triangles through the edge)``.  All
    other faces have length at least 4.
    """
    twice_e = sum(len(nb) for nb in adj.values())
    girth = _adj_girth(adj)
    if girth > 3:
        return int(twice_e // girth)
    triangles = 0
    capacity = 0
    for u in adj:
        for v in adj[u]:
            if u < v:
                t = len(adj[u] & adj[v])
                triangles += t
                capacity += min(2, t)
    triangles //= 3
    f3 = min(triangles, capacity // 3)
    return f3 + (twice_e - 3 * f3) // 4


def _components(adj: Adj) -> list[Adj]:
    seen: set[int] = set()
    comps = []
    for s in adj:
        if s in seen:
            continue
        seen.add(s)
        stack, comp = [s], []
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append({v: adj[v] for v in comp})
    return comps


def _face_bound(adj: Adj) -> int:
    """Best face-count bound over the k-cores (k >= 3) of a block.

    Any subgraph bound is valid since genus is monotone under taking
    subgraphs and additive over components; denser cores often give a
    sharper count.
    """
    best = 0
    for k in range(3, max(len(nb) for nb in adj.values()) + 1):
        core = _core(adj, k)
        if not core:
            break
        total = 0
        for comp in _components(core):
            e = sum(len(nb) for nb in comp.values()) // 2
            need = 2 - len(comp) + e - _max_faces(comp)
            total += max(0, -(-need // 2))
        best = max(best, total)
    return best


def _bipartite_bound(adj: Adj, beat: int, max_side: int = 6) -> int:
    """Largest genus of a complete bipartite subgraph K_{m,n}, m <= ``max_side``.

    Stops as soon as the bound exceeds ``beat``.  Side A is grown one vertex
    at a time; side B is the common neighbourhood of A.
    """
    verts = sorted(adj, key=lambda v: (-len(adj[v]), v))
    mask = {v: sum(1 << w for w in adj[v]) for v in verts}
    best = 0

    def grow(start: int, size: int, common: int) -> bool:
        nonlocal best
        n = common.bit_count()
        if size >= 2:
            best = max(best, closed_form_genus("Kmn", size, n))
            if best > beat:
                return True
        if size == max_side or closed_form_genus("Kmn", max_side, n) <= best:
            return False
        for i in range(start, len(verts)):
            v = verts[i]
            nm = common & mask[v]
            if nm.bit_count() >= 3 and grow(i + 1, size + 1, nm):
                return True
        return False

    grow(0, 0, (1 << (max(verts) + 1)) - 1)
    return best


def _block_lower_bound(adj: Adj, beat: int | None = None) -> int:
    """Rigorous genus lower bound for a block (min degree >= 3).

    Combines face counting with complete bipartite subgraphs, whose genus
    is known in closed form.  The second, costlier bound is only tried
    when the first does not already exceed ``beat``.
    """
    best = _face_bound(adj)
    if beat is not None and best > beat:
        return best
    return max(best, _bipartite_bound(adj, best if beat is None else max(beat, best)))


# -- reductions -----------------------------------------------------------------------


def _reduce(adj: Adj, log: list) -> None:
    """Strip and smooth in place, logging each step so it can be undone."""
    queue = list(adj)
    while queue:
        v = queue.pop()
        if v not in adj:
            continue
        nb = adj[v]
        if len(nb) == 0:
            del adj[v]
            log.append(("drop", v, None))
        elif len(nb) == 1:
            (a,) = nb
            adj[a].discard(v)
            del adj[v]
            log.append(("drop", v, a))
            queue.append(a)
        elif len(nb) == 2:
            a, b = sorted(nb)
            adj[a].discard(v)
            adj[b].discard(v)
            del adj[v]
            parallel = b in adj[a]
            if not parallel:
                adj[a].add(b)
                adj[b].add(a)
            log.append(("smooth", v, a, b, parallel))
            queue.extend((a, b))


def _lift(rot: dict[int, list[int]], log: list) -> None:
    """Undo :func:`_reduce` on a rotation system without changing its genus."""
    for step in reversed(log):
        if step[0] == "drop":
            _, v, a = step
            if a is None:
                rot[v] = []
            else:
                rot[v] = [a]
                rot[a].append(v)
            continue
        _, v, a, b, parallel = step
        ra, rb = rot[a], rot[b]
        if parallel:
            # new digon-like face a -> v -> b -> a alongside the existing edge
            ra.insert(ra.index(b) + 1, v)
            rb.insert(rb.index(a), v)
        else:
            ra[ra.index(b)] = v
            rb[rb.index(a)] = v
        rot[v] = [a, b]


# -- face-following search ------------------------------------------------------------


class _BlockSearch:
    """Backtracking over rotations of one graph, looking for many faces."""

    def __init__(self, adj: Adj, counter: _Counter):
        self.verts = sorted(adj, key=lambda v: (-len(adj[v]), v))
        self.adj = adj
        self.counter = counter
        head, tail, out = [], [], {}
        for v in self.verts:
            out[v] = []
            for u in sorted(adj[v]):
                out[v].append(len(head))
                tail.append(v)
                head.append(u)
        index = {(tail[d], head[d]): d for d in range(len(head))}
        self.head = head
        self.tail = tail
        self.rev = [index[(head[d], tail[d])] for d in range(len(head))]
        self.out = out
        self.D = len(head)
        self.E = self.D // 2
        self.V = len(adj)
        # in a connected graph with a cycle every face boundary contains a cycle,
        # so faces are at least girth long even when pendant vertices remain
        g = _adj_girth(adj)
        self.girth = 1 if math.isinf(g) else int(g)
        self._arrays = None
        # mirror symmetry is broken at a vertex of least degree: fewest cyclic orders
        self.pivot = min(self.verts, key=lambda v: (len(adj[v]), v))

    def run(self, genus: int) -> dict[int, list[int]] | None:
        """A rotation with at least the faces genus ``genus`` needs, if any."""
        D = self.D
        head, rev, out, tail = self.head, self.rev, self.out, self.tail
        girth = self.girth
        target = self.E - self.V + 2 - 2 * genus
        deg = [0] * D
        for d in range(D):
            deg[d] = len(out[tail[d]])

        nxt = [-1] * D
        prv = [-1] * D
        rs = list(range(D))  # rotation chains: start of the chain ending here
        re = list(range(D))  # end of the chain starting here
        rl = [1] * D
        fs = list(range(D))  # face chains, same layout
        fe = list(range(D))
        fl = [1] * D
        # open face chains of length >= girth can close into at most one face
        # each; shorter ones must pool their darts.  state holds: closed faces,
        # open chains of length >= girth, total length of shorter open chains,
        # assigned successors.
        state = [0, 0, 0, 0]
        counter = self.counter
        order = [d for v in self.verts for d in out[v]]

        def pick() -> int:
            # continue the longest open face chain; fall back to a fresh dart
            best, best_len = -1, 0
            for d in order:
                if nxt[rev[d]] < 0 and fl[fs[d]] > best_len:
                    best, best_len = d, fl[fs[d]]
            return best

        def apply(e: int, a: int, b: int):
            """Set rotation successor of ``a`` to ``b``; return an undo record."""
            nxt[a] = b
            prv[b] = a
            s = rs[a]
            if s != b:
                t = re[b]
                rot_undo = (s, t, re[s], rs[t], rl[s])
                re[s] = t
                rs[t] = s
                rl[s] += rl[b]
            else:
                rot_undo = None
            f0 = fs[e]
            la, lb = fl[f0], fl[b]
            old = (state[0], state[1], state[2])
            if la >= girth:
                state[1] -= 1
            else:
                state[2] -= la
            if f0 == b:
                state[0] += 1
                face_undo = None
                follow = -1
            else:
                if lb >= girth:
                    state[1] -= 1
                else:
                    state[2] -= lb
                if la + lb >= girth:
                    state[1] += 1
                else:
                    state[2] += la + lb
                t2 = fe[b]
                face_undo = (f0, t2, fe[f0], fs[t2], la)
                fe[f0] = t2
                fs[t2] = f0
                fl[f0] = la + lb
                follow = t2
            state[3] += 1
            return follow, rot_undo, face_undo, old

        def undo(a: int, b: int, rec) -> None:
            _, rot_undo, face_undo, old = rec
            state[0], state[1], state[2] = old
            state[3] -= 1
            if face_undo is not None:
                f0, t2, fe[f0], fs[t2], fl[f0] = face_undo
            if rot_undo is not None:
                s, t, re[s], rs[t], rl[s] = rot_undo
            nxt[a] = -1
            prv[b] = -1

        def bound_ok() -> bool:
            return state[0] + state[1] + state[2] // girth >= target

        def dfs(e: int) -> bool:
            counter.nodes += 1
            if counter.nodes > counter.limit:
                raise Exhausted("genus search node limit reached", counter.nodes)
            if e < 0:
                if state[3] == D:
                    return state[0] >= target
                e = pick()
            a = rev[e]
            start = fs[e]
            cands = []
            for b in out[tail[a]]:
                if prv[b] >= 0:
                    continue
                s = rs[a]
                if s == b and rl[s] != deg[a]:
                    continue
                cands.append(b)
            # closing the current face first keeps faces short
            if start in cands:
                cands.remove(start)
                cands.insert(0, start)
            for b in cands:
                rec = apply(e, a, b)
                if bound_ok() and dfs(rec[0]):
                    return True
                undo(a, b, rec)
            return False

        snapshot = (nxt, prv, rs, re, rl, fs, fe, fl)
        initial = [list(x) for x in snapshot]
        for cyc in _first_rotations(out[self.pivot]):
            for arr, init in zip(snapshot, initial):
                arr[:] = init
            state[:] = [0, 0, D, 0] if girth > 1 else [0, D, 0, 0]
            for i, a in enumerate(cyc):
                apply(rev[a], a, cyc[(i + 1) % len(cyc)])
            if not bound_ok():
                continue
            if dfs(-1):
                return self._rotation(nxt)
        return None

    def _rotation(self, nxt) -> dict[int, list[int]]:
        rot: dict[int, list[int]] = {}
        for v in self.verts:
            d0 = self.out[v][0]
            cyc, d = [], d0
            while True:
                cyc.append(self.head[d])
                d = int(nxt[d])
                if d == d0:
                    break
            rot[v] = cyc
        return rot

    def run_compiled(self, genus: int) -> dict[int, list[int]] | None:
        """Same search as :meth:`run`, executed by the compiled kernel."""
        from . import _kernel

        if self._arrays is None:
            pos = {v: i for i, v in enumerate(self.verts)}
            out_ptr = np.zeros(len(self.verts) + 1, np.int64)
            for i, v in enumerate(self.verts):
                out_ptr[i + 1] = out_ptr[i] + len(self.out[v])
            self._arrays = (
                np.array(self.head, np.int64),
                np.array([pos[t] for t in self.tail], np.int64),
                np.array(self.rev, np.int64),
                out_ptr,
                np.arange(self.D, dtype=np.int64),
                np.array([d for v in self.verts for d in self.out[v]], np.int64),
            )
            dart_at = -np.ones((len(self.verts), len(self.verts)), np.int64)
            for d in range(self.D):
                dart_at[pos[self.tail[d]], pos[self.head[d]]] = d
            self._arrays += (dart_at,)
        head, tail, rev, out_ptr, out_list, order, dart_at = self._arrays
        target = self.E - self.V + 2 - 2 * genus
        counter = self.counter
        for cyc in _first_rotations(self.out[self.pivot]):
            left = counter.limit - counter.nodes
            status, used, nxt = _kernel.search(
                head, tail, rev, out_ptr, out_list, order, dart_at,
                np.array(cyc, np.int64), self.girth, target, left,
            )
            counter.nodes += int(used)
            if status == _kernel.EXHAUSTED:
                raise Exhausted("genus search node limit reached", counter.nodes)
            if status == _kernel.FOUND:
                return self._rotation(nxt)
        return None


def _first_rotations(darts: list[int]) -> Iterable[tuple[int, ...]]:
    """Cyclic orders of ``darts`` up to reversal (mirror images give the same genus)."""
    first, rest = darts[0], darts[1:]
    for perm in itertools.permutations(rest):
        if len(perm) >= 2 and perm[0] > perm[-1]:
            continue
        yield (first,) + perm


def _trace(rot: dict[int, list[int]]) -> list[list[tuple[int, int]]]:
    pos = {v: {u: i for i, u in enumerate(cyc)} for v, cyc in rot.items()}
    seen: set[tuple[int, int]] = set()
    faces = []
    for v in sorted(rot):
        for u in rot[v]:
            if (v, u) in seen:
                continue
            walk = []
            a, b = v, u
            while (a, b) not in seen:
                seen.add((a, b))
                walk.append((a, b))
                c = rot[b]
                a, b = b, c[(pos[b][a] + 1) % len(c)]
            faces.append(walk)
    return faces


def _heuristic_embedding(adj: Adj, rounds: int = 8, seed: int = 0) -> tuple[int, dict[int, list[int]]]:
    """Greedy embedding: grow from a spanning tree, adding edges inside a face when possible.

    An edge whose ends share a face splits it (one more face); otherwise it
    joins two faces.  Deterministic for a given seed; only ever used as an
    upper bound on the genus.
    """
    rng = random.Random(seed)
    verts = sorted(adj)
    best_f, best_rot = -1, None
    for _ in range(rounds):
        root = rng.choice(verts)
        rot: dict[int, list[int]] = {v: [] for v in verts}
        seen = {root}
        queue = [root]
        tree = set()
        while queue:
            u = queue.pop(rng.randrange(len(queue)))
            nbs = sorted(adj[u])
            rng.shuffle(nbs)
            for w in nbs:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
                    rot[u].append(w)
                    rot[w].append(u)
                    tree.add((min(u, w), max(u, w)))
        rest = [(u, w) for u in verts for w in adj[u] if u < w and (u, w) not in tree]
        rng.shuffle(rest)
        while rest:
            # corners: the corner of face f at u sits just after neighbour x in rot[u]
            corners: dict[int, dict[int, list[int]]] = {}
            for fi, walk in enumerate(_trace(rot)):
                for x, u in walk:
                    corners.setdefault(u, {}).setdefault(fi, []).append(x)
            pick = None
            for k, (u, w) in enumerate(rest):
                shared = set(corners.get(u, {})) & set(corners.get(w, {}))
                if shared:
                    pick = (k, min(shared))
                    break
            if pick is None:
                k = 0
                u, w = rest[0]
                xu = rng.choice(rot[u]) if rot[u] else None
                xw = rng.choice(rot[w]) if rot[w] else None
            else:
                k, fi = pick
                u, w = rest[k]
                xu = rng.choice(corners[u][fi])
                xw = rng.choice(corners[w][fi])
            rest.pop(k)
            for a, b, x in ((u, w, xu), (w, u, xw)):
                cyc = rot[a]
                cyc.insert(cyc.index(x) + 1 if x is not None else 0, b)
        faces = len(_trace(rot))
        if faces > best_f:
            best_f, best_rot = faces, rot
    return best_f, best_rot


def _search_block(adj: Adj, lo: int, hi: int, counter: _Counter, compiled: bool = True):
    """Least genus in ``lo..hi`` with a rotation, or ``(None, None)`` if above ``hi``."""
    v = len(adj)
    e = sum(len(nb) for nb in adj.values()) // 2
    faces, heur_rot = _heuristic_embedding(adj)
    upper = (2 - v + e - faces) // 2
    if upper <= lo:
        return upper, heur_rot
    search = _BlockSearch(adj, counter)
    for genus in range(lo, min(hi, upper - 1) + 1):
        rot = search.run_compiled(genus) if compiled else search.run(genus)
        if rot is not None:
            return genus, rot
    if upper <= hi:
        return upper, heur_rot
    return None, None


def _solve(adj: Adj, cap: int, counter: _Counter, compiled: bool = True):
    """Genus and rotation of a graph given as adjacency sets, or ``(None, lb)`` above ``cap``."""
    adj = {v: set(nb) for v, nb in adj.items()}
    log: list = []
    _reduce(adj, log)
    rot: dict[int, list[int]] = {v: [] for v in adj}
    total = 0
    if adj:
        nxg = nx.Graph()
        nxg.add_edges_from((u, v) for u in adj for v in adj[u] if u < v)
        blocks = []
        for edges in nx.biconnected_component_edges(nxg):
            badj: Adj = {}
            for u, v in edges:
                badj.setdefault(u, set()).add(v)
                badj.setdefault(v, set()).add(u)
            blocks.append(badj)
        blocks.sort(key=lambda b: min(b))
        bounds = [_block_lower_bound(b, cap) if len(b) > 2 else 0 for b in blocks]
        for i, badj in enumerate(blocks):
            rest = sum(bounds[i + 1 :])
            room = cap - total - rest
            if room < bounds[i]:
                return None, total + bounds[i] + rest
            if len(badj) == 2:
                g_b, r_b = 0, {u: list(nb) for u, nb in badj.items()}
            elif min(len(nb) for nb in badj.values()) < 3:
                g_b, r_b = _solve(badj, room, counter, compiled)
                if g_b is None:
                    return None, total + max(r_b, bounds[i]) + rest
            else:
                g_b, r_b = _search_block(badj, bounds[i], room, counter, compiled)
                if g_b is None:
                    return None, total + room + 1 + rest
            total += g_b
            for v, cyc in r_b.items():
                rot.setdefault(v, []).extend(cyc)
    _lift(rot, log)
    return total, rot


def min_genus(g: Graph, budget: Budget = Budget(), *, compiled: bool = True) -> GenusResult:
    """Exact orientable genus of ``g`` (sum over components) within ``budget``.

    ``compiled=False`` runs the pure-Python reference search instead of the
    numba kernel; both explore the same tree.  Raises :class:`Exhausted` if
    the node limit is reached before a verdict.
    """
    counter = _Counter(budget.node_limit)
    adj = {v: set(g.adj[v]) for v in range(g.order)}
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * g.size + 1000))
    try:
        genus, rot = _solve(adj, budget.max_genus, counter, compiled)
    finally:
        sys.setrecursionlimit(limit)
    if genus is None:
        return GenusResult(genus=None, lower=rot, embedding=None, nodes=counter.nodes)
    emb = trace_faces(g, RotationSystem.from_mapping(g.order, rot))
    if emb.genus != genus:
        raise AssertionError(f"lifted embedding has genus {emb.genus}, search reported {genus}")
    return GenusResult(genus=genus, lower=genus, embedding=emb, nodes=counter.nodes)


def search_whole(g: Graph, budget: Budget = Budget(), *, compiled: bool = True) -> GenusResult:
    """Genus by searching ``g`` directly, with no reductions or block split.

    Slow; exists so that the block decomposition can be cross-checked.
    """
    counter = _Counter(budget.node_limit)
    comps = [c for c in g.components() if len(c) > 1]
    rot: dict[int, list[int]] = {v: [] for v in range(g.order)}
    total = 0
    for comp in comps:
        adj = {v: set(g.adj[v]) for v in comp}
        lo = _euler_bound(len(comp), sum(len(nb) for nb in adj.values()) // 2, _adj_girth(adj))
        gen, r = _search_block(adj, lo, budget.max_genus - total, counter, compiled)
        if gen is None:
            return GenusResult(genus=None, lower=budget.max_genus + 1, embedding=None, nodes=counter.nodes)
        total += gen
        rot.update(r)
    emb = trace_faces(g, RotationSystem.from_mapping(g.order, rot))
    return GenusResult(genus=emb.genus, lower=emb.genus, embedding=emb, nodes=counter.nodes)


def closed_form_genus(kind: str, *params: int) -> int:
    """Genus of ``K_n`` (``kind="Kn"``) or ``K_{m,n}`` (``kind="Kmn"``) from the classical formulas."""
    if kind == "Kn":
        (n,) = params
        return 0 if n < 3 else -(-(n - 3) * (n - 4) // 12)
    if kind == "Kmn":
        m, n = params
        if m < 2 or n < 2:
            return 0
        return -(-(m - 2) * (n - 2) // 4)
    raise ValueError(f"unknown graph family {kind!r}")
