"""Bounded right-lifting-property checks with tri-state verdicts."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from .extensions import Budget, BudgetExceeded, enumerate_lifts, first_lift
from .maps import SimplicialMap, constant_map
from .sset import FiniteSimplicialSet, Simplex, known_level, render_label
from .standard import boundary_inclusion, horn_inclusion, iso_interval, standard_simplex

VERIFIED, REFUTED, INCONCLUSIVE = "verified", "refuted", "inconclusive"


@dataclass
class LiftingVerdict:
    status: str
    depth_checked: int
    counterexample: Optional[dict] = None
    squares_checked: int = 0
    note: str = ""

    @property
    def holds(self) -> Optional[bool]:
        return {VERIFIED: True, REFUTED: False}.get(self.status)

    @property
    def exit_code(self) -> int:
        return {VERIFIED: 0, REFUTED: 1}.get(self.status, 2)

    def to_json(self) -> dict:
        out = {"status": self.status, "depth_checked": self.depth_checked, "squares_checked": self.squares_checked}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.note:
            out["note"] = self.note
        return out


def _describe(X: FiniteSimplicialSet, s: Simplex) -> str:
    return X.describe(s)


def _counterexample(name: str, i: SimplicialMap, u: List[Simplex], v: List[Simplex], p: SimplicialMap) -> dict:
    S, T = i.source, i.target
    E, B = p.source, p.target
    return {
        "inclusion": name,
        "top": {render_label(S.labels[c]): _describe(E, u[c]) for c in range(len(S))},
        "bottom": {render_label(T.labels[c]): _describe(B, v[c]) for c in range(len(T))},
        "u": [tuple(x) for x in u],
        "v": [tuple(x) for x in v],
    }


def squares(p: SimplicialMap, i: SimplicialMap, budget: Budget):
    """Every commutative square from i to p, as image lists (u, v)."""
    S, T = i.source, i.target
    E, B = p.source, p.target
    for v in enumerate_lifts(T, B, None, None, budget):
        vm = SimplicialMap(T, B, v, check=False)
        vi = i.then(vm)
        for u in enumerate_lifts(S, E, None, (p, vi), budget):
            yield u, v


def has_diagonal(p: SimplicialMap, i: SimplicialMap, u, v, budget: Budget = None) -> Optional[List[Simplex]]:
    T, E = i.target, p.source
    fixed = {i.images[c].cell: u[c] for c in range(len(i.source))}
    vm = SimplicialMap(T, p.target, v, check=False)
    return first_lift(T, E, fixed, (p, vm), budget)


def check_square_independently(p: SimplicialMap, i: SimplicialMap, u, v) -> bool:
    """True iff the square has a diagonal, by scanning all maps T → E without pruning on u."""
    T, E = i.target, p.source
    for d in enumerate_lifts(T, E, None, None, Budget()):
        if all(p(d[c]) == v[c] for c in range(len(T))) and \
                all(d[i.images[c].cell] == u[c] for c in range(len(i.source))):
            return True
    return False


def has_rlp_family(p: SimplicialMap, family: Iterable[Tuple[str, SimplicialMap]], depth: int,
                   budget: Budget = None) -> LiftingVerdict:
    budget = budget or Budget()
    count = 0
    try:
        for name, i in family:
            if not i.is_mono():
                raise ValueError(f"{name} is not a monomorphism")
            for u, v in squares(p, i, budget):
                count += 1
                if has_diagonal(p, i, u, v, budget) is None:
                    return LiftingVerdict(REFUTED, depth, _counterexample(name, i, u, v, p), count)
    except BudgetExceeded as e:
        return LiftingVerdict(INCONCLUSIVE, depth, None, count, str(e))
    return LiftingVerdict(VERIFIED, depth, None, count)


def has_rlp(p: SimplicialMap, i: SimplicialMap, budget: Budget = None) -> LiftingVerdict:
    return has_rlp_family(p, [(i.source.name or "i", i)], i.target.dimension, budget)


def to_point(X: FiniteSimplicialSet) -> SimplicialMap:
    return constant_map(X, standard_simplex(0), 0)


def clamp_cap(cap: int, *sets) -> int:
    """Largest usable dimension: every set involved must be known that far."""
    level = min([known_level(X) for X in sets] + [cap])
    return int(level)


def horn_family(cap: int, inner_only: bool, low: int = 1):
    for n in range(max(low, 1), cap + 1):
        for k in range(n + 1):
            if inner_only and not 0 < k < n:
                continue
            yield f"Λ{n},{k}", horn_inclusion(n, k)


def boundary_family(cap: int):
    for n in range(cap + 1):
        yield f"∂Δ{n}", boundary_inclusion(n)


def is_quasicategory(X: FiniteSimplicialSet, cap: int, budget: Budget = None) -> LiftingVerdict:
    if cap < 2:
        raise ValueError("cap must be at least 2")
    d = clamp_cap(cap, X)
    return has_rlp_family(to_point(X), horn_family(d, True), d, budget)


def is_kan(X: FiniteSimplicialSet, cap: int, budget: Budget = None) -> LiftingVerdict:
    if cap < 2:
        raise ValueError("cap must be at least 2")
    d = clamp_cap(cap, X)
    return has_rlp_family(to_point(X), horn_family(d, False), d, budget)


def is_trivial_fibration(p: SimplicialMap, cap: int, budget: Budget = None) -> LiftingVerdict:
    if cap < 2:
        raise ValueError("cap must be at least 2")
    d = clamp_cap(cap, p.source, p.target)
    return has_rlp_family(p, boundary_family(d), d, budget)


def iso_endpoint(cap: int) -> SimplicialMap:
    I = iso_interval(cap)
    return SimplicialMap(standard_simplex(0), I, [Simplex(0, (0,))], check=False)


def is_isofibration(p: SimplicialMap, cap: int, budget: Budget = None) -> LiftingVerdict:
    """Inner horns up to the cap, then Δ⁰ ↪ sk_cap 𝕀."""
    if cap < 2:
        raise ValueError("cap must be at least 2")
    d = clamp_cap(cap, p.source, p.target)
    family = list(horn_family(d, True)) + [(f"Δ0→sk{d} I", iso_endpoint(d))]
    return has_rlp_family(p, family, d, budget)
