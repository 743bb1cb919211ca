"""Simplicial maps between finite simplicial sets."""
from __future__ import annotations

from typing import List, Sequence

from .operators import face_values
from .sset import FiniteSimplicialSet, Simplex, render_label


class NaturalityError(ValueError):
    def __init__(self, message, cell=None, face=None):
        super().__init__(message)
        self.cell = cell
        self.face = face


class SimplicialMap:
    """Assignment of a target simplex to every nondegenerate source cell."""

    __slots__ = ("source", "target", "images", "name")

    def __init__(self, source: FiniteSimplicialSet, target: FiniteSimplicialSet,
                 images: Sequence[Simplex], check: bool = True, name: str = ""):
        self.source = source
        self.target = target
        self.images: List[Simplex] = list(images)
        self.name = name
        if len(self.images) != len(source):
            raise ValueError("a map needs one image per source cell")
        if check:
            self.validate()

    def validate(self):
        S, T = self.source, self.target
        for c, img in enumerate(self.images):
            n = S.dims[c]
            if img.dim != n:
                raise NaturalityError(f"cell {render_label(S.labels[c])} sent to a simplex of dimension {img.dim}", c)
            for j, f in enumerate(S.faces[c]):
                if T.act(img, face_values(n, j)) != self(f):
                    raise NaturalityError(
                        f"map does not commute with d{j} on cell {render_label(S.labels[c])}", c, j)
        return self

    def __call__(self, x: Simplex) -> Simplex:
        img = self.images[x.cell]
        if len(x.degen) == len(img.degen):
            return img
        return self.target.act(img, x.degen)

    def then(self, other: "SimplicialMap") -> "SimplicialMap":
        """other∘self."""
        if other.source is not self.target:
            raise ValueError("maps are not composable")
        return SimplicialMap(self.source, other.target, [other(y) for y in self.images], check=False)

    def __matmul__(self, other: "SimplicialMap") -> "SimplicialMap":
        return other.then(self)

    def on_cell(self, c: int) -> Simplex:
        return self.images[c]

    def is_mono(self) -> bool:
        seen = set()
        for img in self.images:
            if self.target.is_degenerate(img) or img.cell in seen:
                return False
            seen.add(img.cell)
        return True

    def is_iso(self) -> bool:
        return self.is_mono() and len(self.images) == len(self.target)

    def is_surjective(self) -> bool:
        hit = {img.cell for img in self.images}
        return len(hit) == len(self.target)

    def image_cells(self) -> List[int]:
        return sorted({img.cell for img in self.images})

    def key(self) -> tuple:
        return tuple(self.images)

    def __eq__(self, other):
        return (isinstance(other, SimplicialMap) and self.source is other.source
                and self.target is other.target and self.images == other.images)

    def __hash__(self):
        return hash(tuple(self.images))

    def __repr__(self):
        return f"<SimplicialMap {self.source.name or '?'} -> {self.target.name or '?'}>"


def identity_map(X: FiniteSimplicialSet) -> SimplicialMap:
    return SimplicialMap(X, X, [X.simplex(c) for c in range(len(X))], check=False)


def constant_map(X: FiniteSimplicialSet, A: FiniteSimplicialSet, vertex: int) -> SimplicialMap:
    return SimplicialMap(X, A, [Simplex(vertex, (0,) * (X.dims[c] + 1)) for c in range(len(X))],
                         check=False)


def empty_map(A: FiniteSimplicialSet) -> SimplicialMap:
    return SimplicialMap(EMPTY, A, [], check=False)


def vertex_map(A: FiniteSimplicialSet, vertex: int) -> SimplicialMap:
    """The map Δ⁰ → A picking a vertex."""
    from .standard import standard_simplex
    return SimplicialMap(standard_simplex(0), A, [Simplex(vertex, (0,))], check=False)


def maps_equal(f: SimplicialMap, g: SimplicialMap) -> bool:
    return f.images == g.images


def corestrict(f: SimplicialMap, sub: SimplicialMap) -> SimplicialMap:
    """Factor f through a monomorphism ``sub`` containing its image."""
    back = {img.cell: c for c, img in enumerate(sub.images)}
    out = []
    for img in f.images:
        if img.cell not in back:
            raise ValueError("map does not factor through the given subobject")
        out.append(Simplex(back[img.cell], img.degen))
    return SimplicialMap(f.source, sub.source, out, check=False)


EMPTY = FiniteSimplicialSet([], [], name="∅")
