"""Finite simplicial sets stored in Eilenberg–Zilber normal form.

A simplex is a pair ``(cell, degen)``: a nondegenerate cell id together with a
surjective operator.  Cells are numbered by dimension and then by insertion
order, which fixes every iteration order in the package.
"""
from __future__ import annotations

from typing import Callable, Dict, Hashable, Iterable, List, NamedTuple, Optional, Sequence

from .operators import (
    Values, compose, degeneracy_values, epi_mono, face_values, identity_values,
    is_surjective, surjections,
)


class Simplex(NamedTuple):
    cell: int
    degen: Values

    @property
    def dim(self) -> int:
        return len(self.degen) - 1


def render_label(label) -> str:
    """Compact text for a cell label: nested tuples without spaces."""
    if isinstance(label, tuple):
        return "(" + ",".join(render_label(x) for x in label) + ")"
    return str(label)


class SimplicialIdentityError(ValueError):
    """Raised when face data violates a simplicial identity."""

    def __init__(self, message, cell=None, operator=None):
        super().__init__(message)
        self.cell = cell
        self.operator = operator


class FiniteSimplicialSet:
    level: Optional[int] = None

    def __init__(self, labels: Sequence[Hashable], faces: Sequence[Sequence[Simplex]], name: str = ""):
        self.labels = list(labels)
        self.faces = [tuple(f) for f in faces]
        self.dims = [max(len(f) - 1, 0) for f in self.faces]
        if any(b < a for a, b in zip(self.dims, self.dims[1:])):
            raise ValueError("cells must be listed in order of dimension")
        self.name = name
        self.index = {}
        for c, lab in enumerate(self.labels):
            if lab in self.index:
                raise ValueError(f"duplicate cell label {lab!r}")
            self.index[lab] = c
        top = self.dims[-1] if self.dims else -1
        self.by_dim: List[List[int]] = [[] for _ in range(top + 1)]
        for c, d in enumerate(self.dims):
            self.by_dim[d].append(c)
        self._restrict_cache: Dict = {}
        self._total_cache: Dict[int, List[Simplex]] = {}
        self._boundary_index: Dict[int, Dict] = {}
        self._vertex_cache: Dict[int, tuple] = {}

    # -- basic shape ------------------------------------------------------
    @property
    def dimension(self) -> int:
        return len(self.by_dim) - 1

    def __len__(self):
        return len(self.labels)

    def cells(self, n: int) -> List[int]:
        return self.by_dim[n] if 0 <= n < len(self.by_dim) else []

    def counts(self) -> tuple:
        return tuple(len(c) for c in self.by_dim)

    def simplex(self, cell: int) -> Simplex:
        return Simplex(cell, identity_values(self.dims[cell]))

    def cell_of(self, label) -> Simplex:
        return self.simplex(self.index[label])

    def is_degenerate(self, x: Simplex) -> bool:
        return len(x.degen) != self.dims[x.cell] + 1

    def is_empty(self) -> bool:
        return not self.labels

    # -- the right action --------------------------------------------------
    def act(self, x: Simplex, alpha: Values) -> Simplex:
        """x·alpha, returned in normal form."""
        c, e = x
        if len(alpha) == len(e) and alpha == identity_values(len(e) - 1):
            return x
        epi, mono = epi_mono(compose(e, alpha))
        y = self._restrict(c, mono)
        if len(epi) == len(mono):
            return y
        return Simplex(y.cell, compose(y.degen, epi))

    def _restrict(self, c: int, mono: Values) -> Simplex:
        n = self.dims[c]
        if len(mono) == n + 1:
            return Simplex(c, mono)
        key = (c, mono)
        hit = self._restrict_cache.get(key)
        if hit is not None:
            return hit
        j = 0
        for v in mono:
            if v != j:
                break
            j += 1
        shifted = tuple(v if v < j else v - 1 for v in mono)
        res = self.act(self.faces[c][j], shifted)
        self._restrict_cache[key] = res
        return res

    def face(self, x: Simplex, j: int) -> Simplex:
        return self.act(x, face_values(x.dim, j))

    def degenerate(self, x: Simplex, j: int) -> Simplex:
        return Simplex(x.cell, compose(x.degen, degeneracy_values(x.dim - 1, j)))

    def boundary_of(self, x: Simplex) -> tuple:
        return tuple(self.face(x, j) for j in range(x.dim + 1)) if x.dim > 0 else ()

    def vertices(self, x: Simplex) -> tuple:
        vs = self._vertex_cache.get(x.cell)
        if vs is None:
            d = self.dims[x.cell]
            vs = tuple(self._restrict(x.cell, (i,)).cell for i in range(d + 1))
            self._vertex_cache[x.cell] = vs
        return tuple(vs[i] for i in x.degen)

    # -- enumeration of all simplices ---------------------------------------
    def total(self, n: int) -> List[Simplex]:
        """Every n-simplex, degenerate ones included, in canonical order."""
        hit = self._total_cache.get(n)
        if hit is None:
            hit = [Simplex(c, s) for k in range(min(n, self.dimension) + 1)
                   for c in self.cells(k) for s in surjections(n, k)]
            self._total_cache[n] = hit
        return hit

    def by_boundary(self, n: int) -> Dict[tuple, List[Simplex]]:
        """Index of the n-simplices (n ≥ 1) keyed by their tuple of faces."""
        hit = self._boundary_index.get(n)
        if hit is None:
            hit = {}
            for x in self.total(n):
                hit.setdefault(self.boundary_of(x), []).append(x)
            self._boundary_index[n] = hit
        return hit

    # -- validation ---------------------------------------------------------
    def validate(self):
        for c, fs in enumerate(self.faces):
            n = self.dims[c]
            if n == 0:
                continue
            if len(fs) != n + 1:
                raise SimplicialIdentityError(f"cell {self.labels[c]!r} has {len(fs)} faces", c)
            for j, f in enumerate(fs):
                if not 0 <= f.cell < len(self.labels):
                    raise SimplicialIdentityError(f"face {j} of {self.labels[c]!r} is unknown", c, j)
                if len(f.degen) != n or not is_surjective(f.degen, self.dims[f.cell]) \
                        or any(b < a for a, b in zip(f.degen, f.degen[1:])):
                    raise SimplicialIdentityError(
                        f"face {j} of {self.labels[c]!r} is not in normal form", c, j)
            if n < 2:
                continue
            x = self.simplex(c)
            for j in range(n + 1):
                for i in range(j):
                    lhs = self.face(self.face(x, j), i)
                    rhs = self.face(self.face(x, i), j - 1)
                    if lhs != rhs:
                        raise SimplicialIdentityError(
                            f"d{i}d{j} != d{j - 1}d{i} on cell {self.labels[c]!r}", c, (i, j))
        return self

    def describe(self, x: Simplex) -> str:
        lab = render_label(self.labels[x.cell])
        if self.is_degenerate(x):
            return f"{lab}·{list(x.degen)}"
        return lab

    def __repr__(self):
        tag = f" {self.name}" if self.name else ""
        lvl = "" if self.level is None else f", level={self.level}"
        return f"<FiniteSimplicialSet{tag} counts={self.counts()}{lvl}>"


class TruncatedSSet(FiniteSimplicialSet):
    """A finite window on a possibly infinite simplicial set.

    Levels above ``level`` are unknown.  ``complete`` records that the window is
    known to contain every nondegenerate simplex, in which case it is an
    honest finite simplicial set.
    """

    def __init__(self, labels, faces, level: int, complete: bool = False, name: str = ""):
        super().__init__(labels, faces, name)
        self.level = level
        self.complete = complete


def known_level(X: FiniteSimplicialSet) -> float:
    if X.level is None or getattr(X, "complete", False):
        return float("inf")
    return X.level


def truncate(X: FiniteSimplicialSet, level: int, complete=False) -> TruncatedSSet:
    keep = [c for c in range(len(X)) if X.dims[c] <= level]
    return TruncatedSSet([X.labels[c] for c in keep], [X.faces[c] for c in keep],
                         level, complete or X.dimension <= level, X.name)


class SSetBuilder:
    """Accumulates cells in order of dimension."""

    def __init__(self, name=""):
        self.labels = []
        self.faces = []
        self.index = {}
        self.name = name

    def add(self, label, faces: Sequence[Simplex] = ()) -> int:
        if self.faces and len(faces) < len(self.faces[-1]):
            raise ValueError("cells must be added in order of dimension")
        c = len(self.labels)
        self.labels.append(label)
        self.faces.append(tuple(faces))
        self.index[label] = c
        return c

    def build(self, level=None, complete=False) -> FiniteSimplicialSet:
        if level is None:
            return FiniteSimplicialSet(self.labels, self.faces, self.name)
        return TruncatedSSet(self.labels, self.faces, level, complete, self.name)


def ordered_complex(simplices: Iterable[tuple], name="") -> FiniteSimplicialSet:
    """Simplicial set of an ordered simplicial complex.

    ``simplices`` are strictly increasing tuples of vertex labels, closed under
    taking faces.  Labels of the cells are those tuples.
    """
    cells = sorted(dict.fromkeys(tuple(s) for s in simplices), key=len)
    b = SSetBuilder(name)
    for s in cells:
        faces = []
        if len(s) > 1:
            for j in range(len(s)):
                f = s[:j] + s[j + 1:]
                if f not in b.index:
                    raise ValueError(f"face {f} of {s} missing")
                faces.append(Simplex(b.index[f], identity_values(len(f) - 1)))
        b.add(s, faces)
    return b.build()


def sequence_simplex(X: FiniteSimplicialSet, seq: Sequence) -> Simplex:
    """Simplex of an ordered complex (or poset nerve) from its vertex sequence."""
    chain = []
    epi = []
    for v in seq:
        if not chain or chain[-1] != v:
            chain.append(v)
        epi.append(len(chain) - 1)
    return Simplex(X.index[tuple(chain)], tuple(epi))


def subcomplex(X: FiniteSimplicialSet, generators: Iterable[int], name=""):
    """The simplicial subset generated by the given cells, with its inclusion."""
    from .maps import SimplicialMap
    keep = set()
    stack = list(generators)
    while stack:
        c = stack.pop()
        if c in keep:
            continue
        keep.add(c)
        stack.extend(f.cell for f in X.faces[c])
    order = sorted(keep)
    new_id = {c: i for i, c in enumerate(order)}
    faces = [tuple(Simplex(new_id[f.cell], f.degen) for f in X.faces[c]) for c in order]
    Y = FiniteSimplicialSet([X.labels[c] for c in order], faces, name)
    inc = SimplicialMap(Y, X, [X.simplex(c) for c in order], check=False)
    return Y, inc


def realize(N: int, keys_at: Callable[[int], Iterable], face_key: Callable, degen_key: Callable,
            label: Callable = lambda k: k, name="", complete=False, budget=None):
    """Build a truncated simplicial set from a description of all its simplices.

    ``keys_at(n)`` lists every n-simplex (degenerate ones included) as hashable
    keys; ``face_key(k, j)`` and ``degen_key(k, j)`` implement d_j and s_j.
    Returns the set and the dictionary from keys to normal forms.
    """
    b = SSetBuilder(name)
    normal: Dict = {}
    for n in range(N + 1):
        for key in keys_at(n):
            if key in normal:
                continue
            if budget is not None:
                budget.spend_cell()
            if n == 0:
                normal[key] = Simplex(b.add(label(key)), (0,))
                continue
            fk = [face_key(key, j) for j in range(n + 1)]
            nf = None
            for j in range(n):
                if fk[j] == fk[j + 1] and degen_key(fk[j], j) == key:
                    y = normal[fk[j]]
                    nf = Simplex(y.cell, compose(y.degen, degeneracy_values(n - 1, j)))
                    break
            if nf is None:
                nf = Simplex(b.add(label(key), [normal[k] for k in fk]), identity_values(n))
            normal[key] = nf
    return b.build(level=N, complete=complete), normal
