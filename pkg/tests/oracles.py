"""Independent brute-force oracles, sharing no code with the package."""

from __future__ import annotations

import itertools
import math
from functools import reduce


def zn_product_elements(moduli):
    return list(itertools.product(*(range(n) for n in moduli)))


def zn_product_mul(a, b, moduli):
    return tuple((x * y) % n for x, y, n in zip(a, b, moduli))


def zn_product_ag(moduli):
    """AG of Z_{n1} x ... x Z_{nk} straight from the definition, labels as in the package."""
    elems = zn_product_elements(moduli)
    zero = tuple(0 for _ in moduli)

    def ann(x):
        return frozenset(r for r in elems if zn_product_mul(r, x, moduli) == zero)

    zds = [x for x in elems if x != zero and len(ann(x)) > 1]
    edges = set()
    for x, y in itertools.combinations(zds, 2):
        if ann(zn_product_mul(x, y, moduli)) != ann(x) | ann(y):
            edges.add(frozenset((_label(x, moduli), _label(y, moduli))))
    return [_label(x, moduli) for x in zds], edges


def zn_product_gamma(moduli):
    elems = zn_product_elements(moduli)
    zero = tuple(0 for _ in moduli)
    zds = [x for x in elems if x != zero and any(zn_product_mul(x, r, moduli) == zero for r in elems if r != zero)]
    return {
        frozenset((_label(x, moduli), _label(y, moduli)))
        for x, y in itertools.combinations(zds, 2)
        if zn_product_mul(x, y, moduli) == zero
    }


def _label(x, moduli):
    return str(x[0]) if len(moduli) == 1 else "(" + ",".join(map(str, x)) + ")"


def radical(n):
    return reduce(lambda a, p: a * p, (p for p in range(2, n + 1) if n % p == 0 and all(p % q for q in range(2, p))), 1)


def brute_genus(n, edges):
    """Minimum genus over every rotation system (connected graphs, tiny only)."""
    adj = {v: sorted({b for a, b in edges if a == v} | {a for a, b in edges if b == v}) for v in range(n)}
    choices = []
    for v in range(n):
        nb = adj[v]
        if len(nb) <= 2:
            choices.append([tuple(nb)])
        else:
            choices.append([(nb[0],) + p for p in itertools.permutations(nb[1:])])
    best_faces = 0
    darts = [(a, b) for a in range(n) for b in adj[a]]
    for combo in itertools.product(*choices):
        succ = {}
        for v, cyc in enumerate(combo):
            for i, u in enumerate(cyc):
                succ[(v, u)] = cyc[(i + 1) % len(cyc)]
        seen = set()
        faces = 0
        for d in darts:
            if d in seen:
                continue
            faces += 1
            a, b = d
            while (a, b) not in seen:
                seen.add((a, b))
                a, b = b, succ[(b, a)]
        best_faces = max(best_faces, faces)
    e = len(edges)
    return (2 - n + e - best_faces) // 2


def rotation_count(n, edges):
    deg = [0] * n
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    return math.prod(math.factorial(max(d - 1, 0)) for d in deg)


def _closure(add, mul, seeds):
    cur = set(seeds)
    while True:
        new = set(cur)
        for a in cur:
            for b in cur:
                new.add(int(add[a][b]))
                new.add(int(mul[a][b]))
        if new == cur:
            return cur
        cur = new


def isomorphic(r, s):
    """Brute-force ring isomorphism test from the addition and multiplication tables.

    A small generating set of ``r`` is chosen greedily; every assignment of
    images in ``s`` is extended along a fixed derivation of each element and
    the result is checked to be a bijective homomorphism.
    """
    n = len(r.add)
    if n != len(s.add):
        return False
    base = {r.zero, r.one}
    gens, span = [], _closure(r.add, r.mul, base)
    while len(span) < n:
        g = min(x for x in range(n) if x not in span)
        gens.append(g)
        span = _closure(r.add, r.mul, base | set(gens))
    # derivation: each element as (op, a, b) over earlier elements
    known = [r.zero, r.one] + [g for g in gens if g not in (r.zero, r.one)]
    steps, seen = [], set(known)
    while len(seen) < n:
        for a, b in itertools.product(list(seen), repeat=2):
            for op, table in (("+", r.add), ("*", r.mul)):
                c = int(table[a][b])
                if c not in seen:
                    seen.add(c)
                    steps.append((c, op, a, b))
    for images in itertools.product(range(n), repeat=len(gens)):
        f = {r.zero: s.zero, r.one: s.one}
        ok = True
        for g, im in zip(gens, images):
            if f.get(g, im) != im:
                ok = False
            f[g] = im
        if not ok:
            continue
        for c, op, a, b in steps:
            table = s.add if op == "+" else s.mul
            f[c] = int(table[f[a]][f[b]])
        if len(set(f.values())) != n:
            continue
        if all(
            f[int(r.add[a][b])] == int(s.add[f[a]][f[b]]) and f[int(r.mul[a][b])] == int(s.mul[f[a]][f[b]])
            for a in range(n)
            for b in range(n)
        ):
            return True
    return False
