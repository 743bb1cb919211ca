"""The comparison s: X◇Y → X⋆Y and explicit retraction data for simplices.

For Δⁿ◇Δᵐ the maps t, u, h, k are induced by order-preserving maps on the
poset T = [n]×[1]×[m].  Δⁿ◇Δᵐ is a quotient of the nerve of T, so each map is
defined on a chosen preimage of every cell and then checked to descend: the
defining square with the quotient is compared on every maximal chain.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict

from ..kernel.limits import Product
from ..kernel.maps import SimplicialMap, identity_map
from ..kernel.sset import FiniteSimplicialSet, Simplex, sequence_simplex
from ..kernel.standard import standard_simplex
from .fatjoin import FatJoin
from .join import Join, join_vertices


def comparison_map(F: FatJoin, J: Join) -> SimplicialMap:
    """s: X◇Y → X⋆Y sending [s, β, t] to (s restricted to β⁻¹(0), t restricted to β⁻¹(1))."""
    S = F.sset
    out = []
    for c in range(len(S)):
        s, beta, t = F.split(S.simplex(c))
        if t is None:
            out.append(J.pair(s, None))
        elif s is None:
            out.append(J.pair(None, t))
        else:
            cut = beta.index(1)
            lo = F.X.act(s, tuple(range(cut)))
            hi = F.Y.act(t, tuple(range(cut, len(beta))))
            out.append(J.pair(lo, hi))
    return SimplicialMap(S, J.sset, out)


def comparison_s(X: FiniteSimplicialSet, Y: FiniteSimplicialSet) -> SimplicialMap:
    return comparison_map(FatJoin(X, Y), Join(X, Y))


def _maximal_chains(dims):
    """Maximal chains of a product of ordinals [d_0]×…×[d_r], as point lists."""
    out = []
    total = sum(dims)

    def walk(path, pt):
        if len(path) == total + 1:
            out.append(tuple(path))
            return
        for a in range(len(dims)):
            if pt[a] < dims[a]:
                nxt = pt[:a] + (pt[a] + 1,) + pt[a + 1:]
                path.append(nxt)
                walk(path, nxt)
                path.pop()

    start = (0,) * len(dims)
    walk([start], start)
    return out


@dataclass
class RetractionData:
    n: int
    m: int
    join: Join
    fat: FatJoin
    s: SimplicialMap
    t: SimplicialMap
    u: SimplicialMap
    h: SimplicialMap
    k: SimplicialMap
    cylinder: Product
    checks: Dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def retraction_data(n: int, m: int) -> RetractionData:
    Dn, Dm, I = standard_simplex(n), standard_simplex(m), standard_simplex(1)
    J, F = Join(Dn, Dm), FatJoin(Dn, Dm)
    P = F.sset
    s = comparison_map(F, J)

    def q(seq):
        """Class in Δⁿ◇Δᵐ of a chain of points of T."""
        return F.triple(sequence_simplex(Dn, [a for a, _, _ in seq]), tuple(e for _, e, _ in seq),
                        sequence_simplex(Dm, [c for _, _, c in seq]))

    def t_bar(i):
        return (i, 0, 0) if i <= n else (n, 1, i - n - 1)

    def s_bar(p):
        i, e, k = p
        return i if e == 0 else n + 1 + k

    def u_bar(p):
        i, e, k = p
        return (i, 0, 0) if e == 0 else (i, 1, k)

    def ts_bar(p):
        return t_bar(s_bar(p))

    def h_bar(p, e):
        return u_bar(p) if e == 0 else ts_bar(p)

    def k_bar(p, e):
        return u_bar(p) if e == 0 else p

    def preimage(c):
        key = F.kind(c)
        if key[0] == "L":
            return [(i, 0, 0) for i in Dn.labels[key[1]]]
        if key[0] == "R":
            return [(n, 1, k) for k in Dm.labels[key[1]]]
        _, x, y, ch = key
        xs, ys = Dn.labels[x], Dm.labels[y]
        return [(xs[a], e, ys[c]) for a, e, c in ch]

    pre = [preimage(c) for c in range(len(P))]
    checks: Dict[str, bool] = {}

    t = SimplicialMap(J.sset, P, [q([t_bar(i) for i in join_vertices(J, c)]) for c in range(len(J.sset))])
    u = SimplicialMap(P, P, [q([u_bar(p) for p in pre[c]]) for c in range(len(P))])

    cyl = Product(P, I)
    C = cyl.sset

    def cyl_preimage(c):
        a, b = cyl.components(C.simplex(c))
        pts = pre[a.cell]
        es = I.labels[b.cell]
        return [(pts[i], es[j]) for i, j in zip(a.degen, b.degen)]

    cpre = [cyl_preimage(c) for c in range(len(C))]
    h = SimplicialMap(C, P, [q([h_bar(p, e) for p, e in cpre[c]]) for c in range(len(C))])
    k = SimplicialMap(C, P, [q([k_bar(p, e) for p, e in cpre[c]]) for c in range(len(C))])

    # the maps descend from the nerve of T: compare on maximal chains
    chains = [[(a, e, c) for a, e, c in ch] for ch in _maximal_chains((n, 1, m))]
    checks["u descends"] = all(u(q(ch)) == q([u_bar(p) for p in ch]) for ch in chains)
    cyl_chains = [[((a, e, c), f) for a, e, c, f in ch] for ch in _maximal_chains((n, 1, m, 1))]

    def qc(ch):
        return cyl.pair(q([p for p, _ in ch]), sequence_simplex(I, [e for _, e in ch]))

    checks["h descends"] = all(h(qc(ch)) == q([h_bar(p, e) for p, e in ch]) for ch in cyl_chains)
    checks["k descends"] = all(k(qc(ch)) == q([k_bar(p, e) for p, e in ch]) for ch in cyl_chains)

    top = J.sset
    checks["s∘t = id"] = t.then(s).images == identity_map(top).images
    ends = []
    for e in (0, 1):
        ends.append(SimplicialMap(P, C, [cyl.pair(P.simplex(c), Simplex(e, (0,) * (P.dims[c] + 1)))
                                         for c in range(len(P))], check=False))
    ts = s.then(t)
    checks["h at 0 is u"] = ends[0].then(h).images == u.images
    checks["h at 1 is t∘s"] = ends[1].then(h).images == ts.images
    checks["k at 0 is u"] = ends[0].then(k).images == u.images
    checks["k at 1 is id"] = ends[1].then(k).images == identity_map(P).images
    edge = Simplex(len(I) - 1, (0, 1))
    designated = [cyl.pair(Simplex(v, (0, 0)), edge) for v in P.cells(0)]
    checks["h degenerate on designated edges"] = all(P.is_degenerate(h(z)) for z in designated)
    checks["k degenerate on designated edges"] = all(P.is_degenerate(k(z)) for z in designated)
    jcyl = Product(top, I)
    tI = SimplicialMap(jcyl.sset, C, [cyl.pair(t(a), b) for a, b in
                                      (jcyl.components(jcyl.sset.simplex(c)) for c in range(len(jcyl.sset)))],
                       check=False)
    t_pi = jcyl.proj[0].then(t)
    checks["h∘(t×Δ¹) = t∘π"] = tI.then(h).images == t_pi.images
    checks["k∘(t×Δ¹) = t∘π"] = tI.then(k).images == t_pi.images
    return RetractionData(n, m, J, F, s, t, u, h, k, cyl, checks)
