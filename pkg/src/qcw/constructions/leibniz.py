"""Leibniz (pushout-product style) constructions for join, fat join and product."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..kernel.limits import Product, Pushout, product_map
from ..kernel.maps import SimplicialMap, corestrict, identity_map
from ..kernel.standard import boundary_inclusion, horn_inclusion
from .fatjoin import FatJoin, fat_join_map
from .join import Join, join_map, ordinal_sum_map


@dataclass
class LeibnizResult:
    pushout: Pushout
    map: SimplicialMap
    codomain: object

    def is_mono(self) -> bool:
        return self.map.is_mono()


def _leibniz(i: SimplicialMap, j: SimplicialMap, build: Callable, apply: Callable) -> LeibnizResult:
    for name, f in (("first", i), ("second", j)):
        if not f.is_mono():
            raise ValueError(f"the {name} map is not a monomorphism")
    X, Y, U, V = i.source, i.target, j.source, j.target
    XU, YU, XV, YV = build(X, U), build(Y, U), build(X, V), build(Y, V)
    iU = apply(XU, YU, i, identity_map(U))
    Xj = apply(XU, XV, identity_map(X), j)
    P = Pushout(iU, Xj)
    out = P.copair(apply(YU, YV, identity_map(Y), j), apply(XV, YV, i, identity_map(V)))
    return LeibnizResult(P, out, YV)


def leibniz_join(i: SimplicialMap, j: SimplicialMap) -> LeibnizResult:
    return _leibniz(i, j, Join, join_map)


def leibniz_fat_join(i: SimplicialMap, j: SimplicialMap) -> LeibnizResult:
    return _leibniz(i, j, FatJoin, fat_join_map)


def leibniz_product(i: SimplicialMap, j: SimplicialMap) -> LeibnizResult:
    return _leibniz(i, j, Product, product_map)


def horn_join_iso(n: int, k: int, m: int, horn_first: bool = True) -> SimplicialMap:
    """The Leibniz join of a horn and a boundary, identified with a single horn.

    With ``horn_first`` the input is (Λⁿ,ᵏ ↪ Δⁿ, ∂Δᵐ ↪ Δᵐ) and the result
    lands in Λ^{n+m+1,k}; otherwise it is (∂Δⁿ ↪ Δⁿ, Λᵐ,ᵏ ↪ Δᵐ) landing in
    Λ^{n+m+1,n+k+1}.  Returns the corestricted map, which should be an iso.
    """
    if horn_first:
        res = leibniz_join(horn_inclusion(n, k), boundary_inclusion(m))
        target = horn_inclusion(n + m + 1, k)
    else:
        res = leibniz_join(boundary_inclusion(n), horn_inclusion(m, k))
        target = horn_inclusion(n + m + 1, n + k + 1)
    into_simplex = res.map.then(ordinal_sum_map(res.codomain))
    return corestrict(into_simplex, target)
