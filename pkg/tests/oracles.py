"""Brute-force reference computations, written without the package's own helpers.

Everything here works with plain tuples and dictionaries.  These routines are
slow on purpose: they enumerate rather than construct.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product
from math import gcd


@lru_cache(maxsize=None)
def monotone(m, n):
    """All monotone maps [m] → [n] as value tuples."""
    return [v for v in product(range(n + 1), repeat=m + 1) if all(a <= b for a, b in zip(v, v[1:]))]


@lru_cache(maxsize=None)
def _surjections(m, k):
    return [v for v in monotone(m, k) if set(v) == set(range(k + 1))]


@lru_cache(maxsize=None)
def _injections(k, n):
    return [v for v in monotone(k, n) if len(set(v)) == len(v)]


def compose(a, b):
    """a∘b as functions on indices."""
    return tuple(a[i] for i in b)


def epi_mono_pairs(values, target):
    """Every (epi, mono) with mono∘epi = values, epi surjective and mono injective."""
    m = len(values) - 1
    out = []
    for k in range(0, m + 1):
        for epi in _surjections(m, k):
            for mono in _injections(k, target):
                if compose(mono, epi) == tuple(values):
                    out.append((epi, mono))
    return out


def horn_faces(n, k):
    """Nondegenerate simplices of Λⁿ,ᵏ as vertex tuples."""
    out = []
    for d in range(n + 1):
        for s in combinations(range(n + 1), d + 1):
            if set(s) | {k} != set(range(n + 1)):
                out.append(s)
    return out


def chains(points, leq):
    """Nondegenerate simplices of the nerve of a finite poset (strict chains), by dimension."""
    pts = list(points)
    lt = {a: [b for b in pts if b != a and leq(a, b)] for a in pts}
    out = {}

    def walk(ch):
        out.setdefault(len(ch) - 1, []).append(tuple(ch))
        for b in lt[ch[-1]]:
            walk(ch + [b])

    for a in pts:
        walk([a])
    return out


def chain_counts(points, leq):
    c = chains(points, leq)
    return tuple(len(c[d]) for d in sorted(c))


def grid_counts(p, q):
    """Nondegenerate simplex counts of Δᵖ×Δ^q: strict chains in [p]×[q]."""
    pts = [(i, j) for i in range(p + 1) for j in range(q + 1)]
    return chain_counts(pts, lambda a, b: a[0] <= b[0] and a[1] <= b[1])


def fat_join_counts(p, q):
    """Counts for Δᵖ◇Δ^q as the quotient of Δᵖ⊔(Δᵖ×Δ¹×Δ^q)⊔Δ^q.

    Pushout along the two ends: a simplex of the middle survives exactly when
    it is not contained in either end, so nondegenerate counts add up.
    """
    pts = [(i, e, j) for i in range(p + 1) for e in (0, 1) for j in range(q + 1)]
    leq = lambda a, b: all(x <= y for x, y in zip(a, b))
    c = chains(pts, leq)
    top = max(c)
    counts = [0] * (top + 1)
    for d, cs in c.items():
        for ch in cs:
            if len({e for _, e, _ in ch}) == 2:
                counts[d] += 1
    for d, k in enumerate(binomial_row(p)):
        counts[d] += k
    for d, k in enumerate(binomial_row(q)):
        counts[d] += k
    while counts and counts[-1] == 0:
        counts.pop()
    return tuple(counts)


def binomial_row(n):
    from math import comb
    return [comb(n + 1, d + 1) for d in range(n + 1)]


def groupoid_strings(objects, length):
    """Identity-free composable strings in the contractible groupoid: consecutive objects differ."""
    return [s for s in product(objects, repeat=length + 1) if all(a != b for a, b in zip(s, s[1:]))]


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def lattice_meet(a, b):
    return gcd(a, b)


def lattice_join(a, b):
    return a * b // gcd(a, b)


def poset_right_adjoint(f, B, A, leq_b, leq_a):
    """u(a) = the greatest b with f(b) ≤ a, or None if it fails to exist."""
    out = {}
    for a in A:
        below = [b for b in B if leq_a(f[b], a)]
        top = [b for b in below if all(leq_b(c, b) for c in below)]
        out[a] = top[0] if top else None
    return out


def poset_terminal(points, leq):
    return [t for t in points if all(leq(x, t) for x in points)]


def arrows_into(points, leq, a):
    """Arrows x → a in a poset, including the identity."""
    return [x for x in points if leq(x, a)]


def isomorphic(X, Y):
    """A cell bijection X → Y commuting with faces, or None.

    Works directly on the stored face lists: an isomorphism sends nondegenerate
    cells to nondegenerate cells and leaves the degeneracy part of each face alone.
    """
    if sorted(X.dims) != sorted(Y.dims):
        return None
    order = sorted(range(len(X.dims)), key=lambda c: X.dims[c])
    phi, used = {}, set()

    def ok(c, d):
        if X.dims[c] != Y.dims[d]:
            return False
        fx, fy = X.faces[c], Y.faces[d]
        return all(phi[a.cell] == b.cell and tuple(a.degen) == tuple(b.degen) for a, b in zip(fx, fy))

    def walk(i):
        if i == len(order):
            return True
        c = order[i]
        for d in range(len(Y.dims)):
            if d not in used and ok(c, d):
                phi[c] = d
                used.add(d)
                if walk(i + 1):
                    return True
                used.discard(d)
                del phi[c]
        return False

    return dict(phi) if walk(0) else None


def nondegenerate_counts(X):
    top = max(X.dims, default=-1)
    return tuple(sum(1 for d in X.dims if d == n) for n in range(top + 1))
