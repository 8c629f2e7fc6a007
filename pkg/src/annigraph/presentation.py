"""Quotient rings ``Z_n[vars]/(relations)`` and finite fields.

A presentation is oriented into rewrite rules (leading monomial -> lower
terms) plus a lattice of linear relations that the rules cannot express
(``2*x`` over ``Z_4`` for instance).  The lattice is closed under
multiplication by the variables and put in Hermite normal form; its diagonal
gives the additive order of each surviving basis monomial.  The expanded
tables are then checked against every ring axiom, so a presentation that the
rules fail to resolve is reported instead of silently accepted.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .errors import (
    InvalidOrder,
    NonFiniteQuotient,
    NotPrime,
    PresentationNotConfluent,
    ReduciblePolynomial,
    RingTooLarge,
    TrivialRing,
)
from .rings import MAX_ORDER, Ring, axiom_check

Monomial = tuple[int, ...]
Poly = dict[Monomial, int]

STEP_BUDGET = 200_000


def mono_key(m: Monomial, perm: Sequence[int] | None = None) -> tuple[int, Monomial]:
    """Graded lexicographic order key: total degree first, then exponents.

    ``perm`` ranks the variables for the lexicographic tie-break.
    """
    if perm is None:
        return (sum(m), m)
    return (sum(m), tuple(m[p] for p in perm))


def monomial_label(m: Monomial, variables: Sequence[str]) -> str:
    sep = "" if all(len(v) == 1 for v in variables) else "*"
    parts = [v if e == 1 else f"{v}^{e}" for v, e in zip(variables, m) if e]
    return sep.join(parts) or "1"


@dataclass(frozen=True)
class Rule:
    lead: Monomial
    rhs: tuple[tuple[Monomial, int], ...]


@dataclass(frozen=True)
class BasisPresentation:
    """Additive basis, per-monomial moduli and structure constants.

    ``structure[i][j]`` is the coefficient vector of ``basis[i] * basis[j]``
    with each coordinate reduced into ``range(moduli[k])``.
    """

    variables: tuple[str, ...]
    basis: tuple[Monomial, ...]
    moduli: tuple[int, ...]
    structure: tuple[tuple[tuple[int, ...], ...], ...]
    diagonal: bool = True

    @property
    def basis_labels(self) -> tuple[str, ...]:
        return tuple(monomial_label(m, self.variables) for m in self.basis)

    @property
    def cardinality(self) -> int:
        return math.prod(self.moduli)

    def coefficients(self) -> np.ndarray:
        """Coefficient vectors of all elements, in element-index order."""
        strides = np.cumprod([1] + list(self.moduli[:-1]))
        idx = np.arange(self.cardinality)
        return (idx[:, None] // strides[None, :]) % np.asarray(self.moduli)[None, :]

    def _multiply(self, rows: np.ndarray, cols: np.ndarray) -> np.ndarray:
        """Bilinear products of every pair, shape ``(len(rows), len(cols), B)``."""
        S = np.asarray(self.structure, dtype=np.int64)
        return _bilinear(rows, cols, S) % np.asarray(self.moduli)

    def check_tables(self, ring: Ring) -> list[str]:
        """Axiom check through structure constants (diagonal lattices only).

        With additive group ``sum Z_{d_i} b_i`` and a well-defined bilinear
        product, associativity, commutativity and identity reduce to checks on
        basis elements; the tables are compared against that bilinear product
        in full.
        """
        problems = []
        d = np.asarray(self.moduli)
        B = len(d)
        S = np.asarray(self.structure, dtype=np.int64)
        eye = np.eye(B, dtype=np.int64)
        if not np.array_equal(S[0], eye):
            problems.append("basis[0] is not a multiplicative identity")
        if not np.array_equal(S, S.transpose(1, 0, 2)):
            problems.append("structure constants are not symmetric")
        if ((d[:, None, None] * S) % d[None, None, :]).any():
            problems.append("structure constants are not compatible with the moduli")
        left = np.einsum("ijm,mkn->ijkn", S, S) % d
        right = np.einsum("jkm,imn->ijkn", S, S) % d
        if not np.array_equal(left, right):
            problems.append("multiplication is not associative")
        C = self.coefficients()
        strides = np.cumprod([1] + list(self.moduli[:-1]))
        if len(set(ring.labels)) != ring.order or ring.zero != 0 or ring.one != 1:
            problems.append("labels or identities are inconsistent")
        step = max(1, (1 << 20) // max(1, ring.order * B))
        for lo in range(0, ring.order, step):
            U = C[lo : lo + step]
            if not np.array_equal(((U[:, None] + C[None]) % d) @ strides, ring.add[lo : lo + step]):
                problems.append("addition table does not match the coefficient group")
                break
            if not np.array_equal(self._multiply(U, C) @ strides, ring.mul[lo : lo + step]):
                problems.append("multiplication table does not match the structure constants")
                break
        return problems


def _bilinear(rows: np.ndarray, cols: np.ndarray, S: np.ndarray) -> np.ndarray:
    B, _, K = S.shape
    T = (rows @ S.reshape(B, -1)).reshape(len(rows), B, K)
    return np.matmul(cols[None], T)


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _sub(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def _addm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


class _Rewriter:
    def __init__(self, n: int, rules: Sequence[Rule], perm: Sequence[int], budget: int = STEP_BUDGET):
        self.n = n
        self.rules = list(rules)
        self.key = lambda m: mono_key(m, perm)
        self.budget = budget

    def reduce(self, poly: Mapping[Monomial, int]) -> Poly:
        work = {m: c % self.n for m, c in poly.items() if c % self.n}
        out: Poly = {}
        steps = 0
        while work:
            m = max(work, key=self.key)
            c = work.pop(m)
            if c == 0:
                continue
            rule = next((r for r in self.rules if _divides(r.lead, m)), None)
            if rule is None:
                out[m] = c
                continue
            steps += 1
            if steps > self.budget:
                raise PresentationNotConfluent("rewriting exceeded its step budget")
            q = _sub(m, rule.lead)
            for rm, rc in rule.rhs:
                t = _addm(q, rm)
                v = (work.get(t, 0) + c * rc) % self.n
                if v:
                    work[t] = v
                else:
                    work.pop(t, None)
        return out


class _Lattice:
    """Integer row lattice in Hermite normal form (upper triangular)."""

    def __init__(self, rows: Sequence[Sequence[int]], ncols: int):
        self.ncols = ncols
        self.pivots = _hermite([list(r) for r in rows], ncols)
        self.diag = [0] * ncols
        for col, row in self.pivots:
            self.diag[col] = row[col]

    @property
    def rows(self) -> list[list[int]]:
        return [row for _, row in self.pivots]

    def canonical(self, vec: Sequence[int]) -> list[int]:
        v = list(vec)
        for col, row in self.pivots:
            q = v[col] // row[col]
            if q:
                v = [a - q * b for a, b in zip(v, row)]
        return v

    def canonical_many(self, V: np.ndarray) -> np.ndarray:
        V = V.copy()
        for col, row in self.pivots:
            q = np.floor_divide(V[..., col], row[col])
            V -= q[..., None] * np.asarray(row, dtype=np.int64)
        return V


def _hermite(rows: list[list[int]], ncols: int) -> list[tuple[int, list[int]]]:
    rows = [r for r in rows if any(r)]
    pivots: list[tuple[int, list[int]]] = []
    for col in range(ncols):
        active = [r for r in rows if r[col]]
        rest = [r for r in rows if not r[col]]
        while len(active) > 1:
            active.sort(key=lambda r: abs(r[col]))
            piv = active[0]
            nxt = [piv]
            for r in active[1:]:
                q = r[col] // piv[col]
                r2 = [a - q * b for a, b in zip(r, piv)]
                if r2[col]:
                    nxt.append(r2)
                elif any(r2):
                    rest.append(r2)
            active = nxt
        if active:
            piv = active[0]
            if piv[col] < 0:
                piv = [-a for a in piv]
            pivots.append((col, piv))
        rows = rest
    # reduce entries above each pivot into [0, d)
    for i, (col, row) in enumerate(pivots):
        for j in range(i):
            cj, rj = pivots[j]
            q = rj[col] // row[col]
            if q:
                pivots[j] = (cj, [a - q * b for a, b in zip(rj, row)])
    return pivots


def _normalize(poly: Mapping[Monomial, int], n: int) -> Poly:
    return {m: c % n for m, c in poly.items() if c % n}


def _orient(relations: Sequence[Poly], n: int, perm: Sequence[int]) -> tuple[list[Rule], list[Poly]]:
    rules: list[Rule] = []
    linear: list[Poly] = []
    for rel in relations:
        if not rel:
            continue
        lead = max(rel, key=lambda m: mono_key(m, perm))
        lc = rel[lead]
        if math.gcd(lc, n) == 1:
            inv = pow(lc, -1, n)
            rhs = tuple(
                sorted(
                    ((m, (-c * inv) % n) for m, c in rel.items() if m != lead and (-c * inv) % n),
                    key=lambda t: mono_key(t[0], perm),
                )
            )
            rules.append(Rule(lead, rhs))
        else:
            linear.append(rel)
    return rules, linear


def _power_bounds(rules: Sequence[Rule], k: int) -> list[int] | None:
    bounds = []
    for v in range(k):
        pure = [
            r.lead[v]
            for r in rules
            if r.lead[v] > 0 and all(e == 0 for i, e in enumerate(r.lead) if i != v)
        ]
        if not pure:
            return None
        bounds.append(min(pure))
    return bounds


def _critical_pairs(rules: Sequence[Rule]) -> list[Poly]:
    out = []
    for r1, r2 in itertools.combinations(rules, 2):
        lcm = tuple(max(a, b) for a, b in zip(r1.lead, r2.lead))
        q1, q2 = _sub(lcm, r1.lead), _sub(lcm, r2.lead)
        diff: Poly = {}
        for m, c in r1.rhs:
            t = _addm(q1, m)
            diff[t] = diff.get(t, 0) + c
        for m, c in r2.rhs:
            t = _addm(q2, m)
            diff[t] = diff.get(t, 0) - c
        out.append(diff)
    return out


def make_quotient(
    char_modulus: int,
    variables: Sequence[str],
    relations: Sequence[Mapping[Monomial, int]],
    name: str | None = None,
    max_order: int = MAX_ORDER,
) -> Ring:
    """Build ``Z_n[variables]/(relations)`` as a verified table ring.

    Relations are dictionaries mapping exponent tuples to integer
    coefficients.  Every variable must be bounded by a relation whose leading
    monomial is a pure power of it with a unit coefficient.
    """
    n = int(char_modulus)
    if n < 2:
        raise InvalidOrder(f"characteristic modulus must be >= 2, got {n}")
    variables = tuple(variables)
    k = len(variables)
    rels = [_normalize(r, n) for r in relations]
    for r in rels:
        if any(len(m) != k for m in r):
            raise ValueError("relation exponent vectors do not match the variable count")
    # pick the first variable ranking under which every variable is bounded
    for perm in itertools.permutations(range(k)):
        rules, linear = _orient(rels, n, perm)
        bounds = _power_bounds(rules, k)
        if bounds is not None:
            break
    else:
        raise NonFiniteQuotient("no term order bounds every variable by a power relation")
    basis = [
        m
        for m in itertools.product(*(range(b) for b in bounds))
        if not any(_divides(r.lead, m) for r in rules)
    ]
    basis.sort(key=lambda m: (sum(m), tuple(-e for e in m)))
    col = {m: i for i, m in enumerate(basis)}
    width = len(basis)
    rw = _Rewriter(n, rules, perm)

    def vec(poly: Mapping[Monomial, int]) -> list[int]:
        v = [0] * width
        for m, c in rw.reduce(poly).items():
            v[col[m]] = c
        return v

    def times_var(row: Sequence[int], var: int) -> list[int]:
        shift = tuple(1 if i == var else 0 for i in range(k))
        return vec({_addm(basis[i], shift): c for i, c in enumerate(row) if c})

    gens = [[n if i == j else 0 for j in range(width)] for i in range(width)]
    gens += [vec(p) for p in linear]
    gens += [vec(p) for p in _critical_pairs(rules)]
    lattice = _Lattice(gens, width)
    for _ in range(10 * width + 10):
        extra = []
        for row in lattice.rows:
            for var in range(k):
                w = lattice.canonical(times_var(row, var))
                if any(w):
                    extra.append(w)
        if not extra:
            break
        lattice = _Lattice(lattice.rows + extra, width)
    else:
        raise PresentationNotConfluent("ideal closure did not stabilise")

    keep = [i for i in range(width) if lattice.diag[i] > 1]
    moduli = [lattice.diag[i] for i in keep]
    order = math.prod(moduli)
    if order == 1:
        raise TrivialRing("the relations collapse the ring to {0}")
    if order > max_order:
        raise RingTooLarge(f"order {order} exceeds cap {max_order}")
    if not keep or keep[0] != 0:
        raise PresentationNotConfluent("the constant monomial does not survive in the basis")

    structure = []
    full_struct = np.zeros((len(keep), len(keep), width), dtype=np.int64)
    for a, i in enumerate(keep):
        row = []
        for b, j in enumerate(keep):
            v = lattice.canonical(vec({_addm(basis[i], basis[j]): 1}))
            full_struct[a, b] = v
            row.append(tuple(v[c] for c in keep))
        structure.append(tuple(row))
    diagonal = not any(
        any(lattice.canonical([lattice.diag[c] if j == c else 0 for j in range(width)]))
        for c in keep
    )
    pres = BasisPresentation(
        variables=variables,
        basis=tuple(basis[i] for i in keep),
        moduli=tuple(moduli),
        structure=tuple(structure),
        diagonal=diagonal,
    )
    add, mul, labels = _expand(pres, lattice, keep, width, full_struct)
    ring = Ring(add, mul, 0, 1, labels, name=name or "", presentation=pres)
    problems = axiom_check(ring)
    if problems:
        raise PresentationNotConfluent("expanded table violates: " + "; ".join(problems))
    return ring


def _expand(pres: BasisPresentation, lattice: _Lattice, keep, width, full_struct):
    moduli = pres.moduli
    order = pres.cardinality
    strides = np.cumprod([1] + list(moduli[:-1]))
    idx = np.arange(order)
    coeffs = (idx[:, None] // strides[None, :]) % np.asarray(moduli)[None, :]
    E = np.zeros((order, width), dtype=np.int64)
    E[:, keep] = coeffs
    full_strides = np.zeros(width, dtype=np.int64)
    full_strides[keep] = strides

    def index_of(V: np.ndarray) -> np.ndarray:
        return lattice.canonical_many(V) @ full_strides

    add = index_of(E[:, None, :] + E[None, :, :])
    mul = np.empty((order, order), dtype=np.int64)
    step = max(1, (1 << 21) // max(1, order * width * len(keep)))
    for lo in range(0, order, step):
        A = coeffs[lo : lo + step]
        P = _bilinear(A, coeffs, full_struct)
        mul[lo : lo + step] = index_of(P)
    labels = []
    for c in coeffs:
        terms = []
        for coef, m in zip(c, pres.basis):
            if not coef:
                continue
            mono = monomial_label(m, pres.variables)
            if mono == "1":
                terms.append(str(coef))
            else:
                terms.append(mono if coef == 1 else f"{coef}{mono}")
        labels.append("+".join(terms) or "0")
    return add, mul, labels


# -- finite fields ----------------------------------------------------------------


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, k)`` with ``q == p**k`` or None."""
    if q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k = 0
    while q % p == 0:
        q //= p
        k += 1
    return (p, k) if q == 1 else None


def _poly_mod(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of a by monic b over Z_p, coefficient lists low-degree first."""
    a = [c % p for c in a]
    db = len(b) - 1
    while len(a) - 1 >= db and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) - 1 < db:
            break
        c = a[-1]
        shift = len(a) - 1 - db
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bc) % p
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Brute-force irreducibility over Z_p for a monic coefficient list."""
    deg = len(poly) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _poly_mod(list(poly), list(low) + [1], p):
                return False
    return True


def smallest_irreducible(p: int, k: int) -> list[int]:
    """Smallest monic irreducible of degree k, returned low coefficients first.

    Candidates are ordered as base-p numbers read from the leading end, so
    x^3 + x + 1 comes before x^3 + x^2 + 1.
    """
    for high in itertools.product(range(p), repeat=k):
        cand = list(reversed(high)) + [1]
        if is_irreducible(cand, p):
            return cand
    raise AssertionError("every degree has an irreducible polynomial")


def make_gf(p: int, k: int = 1, poly: Sequence[int] | None = None, max_order: int = MAX_ORDER) -> Ring:
    """The field with ``p**k`` elements.

    ``poly`` is the defining monic polynomial as a low-degree-first
    coefficient list; when omitted the lexicographically smallest monic
    irreducible (see :func:`smallest_irreducible`) is used so that
    labels are stable.
    """
    from .rings import make_zn

    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 1:
        raise InvalidOrder(f"extension degree must be >= 1, got {k}")
    if poly is None:
        poly = smallest_irreducible(p, k)
    else:
        poly = [c % p for c in poly]
        if len(poly) != k + 1 or poly[-1] != 1:
            raise ValueError(f"defining polynomial must be monic of degree {k}")
        if not is_irreducible(poly, p):
            raise ReduciblePolynomial(f"{poly} is reducible over Z_{p}")
    if k == 1:
        zp = make_zn(p)
        return Ring(zp.add, zp.mul, 0, 1, zp.labels, name=f"GF({p})")
    rel = {(i,): c for i, c in enumerate(poly) if c}
    return make_quotient(p, ["a"], [rel], name=f"GF({p**k})", max_order=max_order)
