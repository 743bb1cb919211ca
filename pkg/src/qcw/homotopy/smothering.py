"""Smothering functors: surjective on objects, full and conservative."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List

from .categories import CatFunctor, fibre_category


@dataclass
class SmotheringReport:
    surjective_on_objects: bool
    missing_objects: List
    full: bool
    unfilled_arrows: List
    conservative: bool
    counterexamples: List
    fibres: Dict = field(default_factory=dict)

    @property
    def verdict(self) -> bool:
        return self.surjective_on_objects and self.full and self.conservative

    @property
    def fibres_ok(self) -> bool:
        return all(f["nonempty"] and f["connected"] and f["groupoid"] for f in self.fibres.values())

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "surjective_on_objects": self.surjective_on_objects,
            "missing_objects": [repr(x) for x in self.missing_objects],
            "full": self.full,
            "unfilled_arrows": [[repr(x) for x in a] for a in self.unfilled_arrows],
            "conservative": self.conservative,
            "counterexamples": [repr(a) for a in self.counterexamples],
            "fibres": {repr(k): v for k, v in self.fibres.items()},
        }


def smothering_check(F: CatFunctor, limit: int = 20) -> SmotheringReport:
    """Exhaustive scans; at most ``limit`` witnesses of each failure are kept."""
    S, T = F.source, F.target
    hit = set(F.on_objects.values())
    missing = [y for y in T.objects if y not in hit]
    unfilled = []
    for x in S.objects:
        for x2 in S.objects:
            images = {F.on_arrows[a] for a in S.hom(x, x2)}
            for g in T.hom(F.on_objects[x], F.on_objects[x2]):
                if g not in images and len(unfilled) < limit:
                    unfilled.append((x, x2, g))
    bad = [a for a in S.arrows if T.is_iso(F.on_arrows[a]) and not S.is_iso(a)][:limit]
    fibres = {}
    for y in T.objects:
        Fy = fibre_category(F, y)
        fibres[y] = {
            "objects": len(Fy.objects),
            "arrows": len(Fy.arrows),
            "nonempty": bool(Fy.objects),
            "connected": len(Fy.components()) <= 1,
            "groupoid": Fy.is_groupoid(),
        }
    return SmotheringReport(not missing, missing, not unfilled, unfilled, not bad, bad, fibres)
