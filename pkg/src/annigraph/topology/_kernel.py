"""Compiled inner loop of the face-following rotation search.

Same algorithm as the reference search in ``genus.py``, written with an
explicit stack over flat int arrays so numba can compile it.
"""

from __future__ import annotations

import numpy as np
from numba import njit

FOUND = 1
NOT_FOUND = 0
EXHAUSTED = -1


@njit(cache=True)
def _pick(order, rev, nxt, fs, fl):
    best = -1
    best_len = 0
    for k in range(order.shape[0]):
        d = order[k]
        if nxt[rev[d]] < 0:
            ln = fl[fs[d]]
            if ln > best_len:
                best = d
                best_len = ln
    return best


@njit(cache=True)
def _apply(e, a, b, girth, nxt, prv, rs, re, rl, fs, fe, fl, st, undo, depth):
    """Make ``b`` the rotation successor of ``a`` (so ``b`` follows ``e`` on its face)."""
    nxt[a] = b
    prv[b] = a
    u = undo[depth]
    u[12] = st[0]
    u[13] = st[1]
    u[14] = st[2]
    s = rs[a]
    if s != b:
        t = re[b]
        u[0] = 1
        u[1] = s
        u[2] = t
        u[3] = re[s]
        u[4] = rs[t]
        u[5] = rl[s]
        re[s] = t
        rs[t] = s
        rl[s] += rl[b]
    else:
        u[0] = 0
    f0 = fs[e]
    la = fl[f0]
    lb = fl[b]
    if la >= girth:
        st[1] -= 1
    else:
        st[2] -= la
    follow = -1
    if f0 == b:
        st[0] += 1
        u[6] = 0
    else:
        if lb >= girth:
            st[1] -= 1
        else:
            st[2] -= lb
        if la + lb >= girth:
            st[1] += 1
        else:
            st[2] += la + lb
        t2 = fe[b]
        u[6] = 1
        u[7] = f0
        u[8] = t2
        u[9] = fe[f0]
        u[10] = fs[t2]
        u[11] = la
        fe[f0] = t2
        fs[t2] = f0
        fl[f0] = la + lb
        follow = t2
    st[3] += 1
    return follow


@njit(cache=True)
def _undo(a, b, nxt, prv, rs, re, rl, fs, fe, fl, st, undo, depth):
    u = undo[depth]
    st[0] = u[12]
    st[1] = u[13]
    st[2] = u[14]
    st[3] -= 1
    if u[6] == 1:
        f0 = u[7]
        t2 = u[8]
        fe[f0] = u[9]
        fs[t2] = u[10]
        fl[f0] = u[11]
    if u[0] == 1:
        s = u[1]
        t = u[2]
        re[s] = u[3]
        rs[t] = u[4]
        rl[s] = u[5]
    nxt[a] = -1
    prv[b] = -1


@njit(cache=True)
def _frame(depth, e, rev, tail, out_ptr, out_list, deg, prv, rs, rl, fs, E, A, cands, ncand, ci):
    a = rev[e]
    v = tail[a]
    E[depth] = e
    A[depth] = a
    k = 0
    start = fs[e]
    # closing the current face comes first
    if tail[start] == v and prv[start] < 0:
        if rs[a] != start or rl[start] == deg[v]:
            cands[depth, k] = start
            k += 1
    for j in range(out_ptr[v], out_ptr[v + 1]):
        b = out_list[j]
        if b == start or prv[b] >= 0:
            continue
        if rs[a] == b and rl[b] != deg[v]:
            continue
        cands[depth, k] = b
        k += 1
    ncand[depth] = k
    ci[depth] = 0


@njit(cache=True)
def _refined_ok(D, girth, target, closed, tail, rev, dart_at, prv, nxt, fe, fl):
    """Face bound that charges every open chain its unavoidable excess length.

    A face of length l wastes l - girth darts.  A chain of length L > girth
    wastes at least L - girth.  For girth 3, a 2-dart chain that cannot be
    closed by a single free dart, or a 3-dart chain whose ends do not meet,
    lies in a face of length >= 4; any face holds at most two such short
    chains per wasted dart, so each is charged 1/2 (doubled below).
    """
    open_darts = 0
    waste2 = 0
    for s in range(D):
        if prv[s] >= 0:
            continue
        L = fl[s]
        open_darts += L
        if L > girth:
            waste2 += 2 * (L - girth)
        elif girth == 3 and L >= 2:
            t = fe[s]
            u = tail[s]
            w = tail[rev[t]]  # vertex positions, as in dart_at
            if L == 2:
                x = dart_at[w, u]
                if x < 0 or prv[x] >= 0 or nxt[rev[x]] >= 0:
                    waste2 += 1
            elif w != u:
                waste2 += 2
    return closed + (2 * open_darts - waste2) // (2 * girth) >= target


@njit(cache=True)
def search(head, tail, rev, out_ptr, out_list, order, dart_at, first_cycle, girth, target, node_limit):
    """Look for a rotation with at least ``target`` faces.

    Returns ``(status, nodes, nxt)`` where ``nxt`` is the rotation successor
    of every dart when ``status == FOUND``.
    """
    D = head.shape[0]
    nv = out_ptr.shape[0] - 1
    deg = np.zeros(nv, np.int64)
    maxdeg = 0
    for v in range(nv):
        deg[v] = out_ptr[v + 1] - out_ptr[v]
        if deg[v] > maxdeg:
            maxdeg = deg[v]
    nxt = -np.ones(D, np.int64)
    prv = -np.ones(D, np.int64)
    rs = np.arange(D)
    re = np.arange(D)
    rl = np.ones(D, np.int64)
    fs = np.arange(D)
    fe = np.arange(D)
    fl = np.ones(D, np.int64)
    st = np.zeros(4, np.int64)  # closed, long open chains, short open length, assigned
    if girth > 1:
        st[2] = D
    else:
        st[1] = D
    undo = np.zeros((D + 1, 15), np.int64)
    E = np.zeros(D + 1, np.int64)
    A = np.zeros(D + 1, np.int64)
    cands = np.zeros((D + 1, maxdeg + 1), np.int64)
    ncand = np.zeros(D + 1, np.int64)
    ci = np.zeros(D + 1, np.int64)
    applied = np.zeros(D + 1, np.int64)
    chosen = np.zeros(D + 1, np.int64)

    # fixed rotation at the first vertex
    m = first_cycle.shape[0]
    for i in range(m):
        a = first_cycle[i]
        b = first_cycle[(i + 1) % m]
        _apply(rev[a], a, b, girth, nxt, prv, rs, re, rl, fs, fe, fl, st, undo, D)
    if st[0] + st[1] + st[2] // girth < target:
        return NOT_FOUND, 0, nxt
    if st[3] == D:
        return (FOUND if st[0] >= target else NOT_FOUND), 0, nxt

    nodes = 0
    depth = 0
    e0 = _pick(order, rev, nxt, fs, fl)
    _frame(0, e0, rev, tail, out_ptr, out_list, deg, prv, rs, rl, fs, E, A, cands, ncand, ci)
    applied[0] = 0
    while depth >= 0:
        if applied[depth] == 1:
            _undo(A[depth], chosen[depth], nxt, prv, rs, re, rl, fs, fe, fl, st, undo, depth)
            applied[depth] = 0
        if ci[depth] >= ncand[depth]:
            depth -= 1
            continue
        b = cands[depth, ci[depth]]
        ci[depth] += 1
        a = A[depth]
        if prv[b] >= 0:
            continue
        nodes += 1
        if nodes > node_limit:
            return EXHAUSTED, nodes, nxt
        follow = _apply(E[depth], a, b, girth, nxt, prv, rs, re, rl, fs, fe, fl, st, undo, depth)
        applied[depth] = 1
        chosen[depth] = b
        if st[0] + st[1] + st[2] // girth < target:
            continue
        if not _refined_ok(D, girth, target, st[0], tail, rev, dart_at, prv, nxt, fe, fl):
            continue
        if st[3] == D:
            if st[0] >= target:
                return FOUND, nodes, nxt
            continue
        if follow < 0:
            follow = _pick(order, rev, nxt, fs, fl)
        depth += 1
        _frame(depth, follow, rev, tail, out_ptr, out_list, deg, prv, rs, rl, fs, E, A, cands, ncand, ci)
        applied[depth] = 0
    return NOT_FOUND, nodes, nxt
