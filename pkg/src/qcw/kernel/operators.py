"""Simplicial operators: monotone maps [m] -> [n].

Internally an operator is just the tuple of its values; ``SimplicialOperator``
wraps such a tuple together with its ranks for the public API.  Ranks may be
-1 (the empty ordinal), which only ever shows up for the empty operator.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Iterator, Tuple

Values = Tuple[int, ...]


class RankError(ValueError):
    pass


class SimplicialOperator:
    __slots__ = ("source_rank", "target_rank", "values")

    def __init__(self, values, target_rank=None):
        values = tuple(int(v) for v in values)
        if target_rank is None:
            target_rank = values[-1] if values else -1
        if any(b < a for a, b in zip(values, values[1:])):
            raise ValueError(f"operator values {values} are not monotone")
        if values and (values[0] < 0 or values[-1] > target_rank):
            raise ValueError(f"operator values {values} leave [{target_rank}]")
        self.source_rank = len(values) - 1
        self.target_rank = target_rank
        self.values = values

    @classmethod
    def identity(cls, n):
        return cls(range(n + 1), n)

    @classmethod
    def face(cls, n, j):
        """The elementary face operator [n-1] -> [n] omitting j."""
        return cls(face_values(n, j), n)

    @classmethod
    def degeneracy(cls, n, j):
        """The elementary degeneracy operator [n+1] -> [n] repeating j."""
        return cls(degeneracy_values(n, j), n)

    def __matmul__(self, other):
        return compose_operators(self, other)

    def __call__(self, i):
        return self.values[i]

    def __eq__(self, other):
        return (isinstance(other, SimplicialOperator)
                and self.values == other.values
                and self.target_rank == other.target_rank)

    def __hash__(self):
        return hash((self.values, self.target_rank))

    def __repr__(self):
        return f"SimplicialOperator({list(self.values)}, target_rank={self.target_rank})"

    @property
    def is_epi(self):
        return is_surjective(self.values, self.target_rank)

    @property
    def is_mono(self):
        return is_injective(self.values)

    @property
    def is_identity(self):
        return self.source_rank == self.target_rank and self.is_mono


def compose_operators(alpha: SimplicialOperator, beta: SimplicialOperator) -> SimplicialOperator:
    """Return alpha∘beta (first beta, then alpha)."""
    if alpha.source_rank != beta.target_rank:
        raise RankError(
            f"cannot compose: source rank {alpha.source_rank} != target rank {beta.target_rank}")
    return SimplicialOperator(compose(alpha.values, beta.values), alpha.target_rank)


def epi_mono_factor(alpha: SimplicialOperator):
    """Unique factorisation alpha = mono∘epi."""
    epi, mono = epi_mono(alpha.values)
    k = len(mono) - 1
    return SimplicialOperator(epi, k), SimplicialOperator(mono, alpha.target_rank)


# -- raw tuple helpers (hot paths use these directly) -----------------------

def compose(a: Values, b: Values) -> Values:
    return tuple([a[i] for i in b])


@lru_cache(maxsize=None)
def epi_mono(values: Values):
    """Split a monotone tuple into (epi, mono) with values = mono∘epi."""
    mono = []
    epi = []
    for v in values:
        if not mono or mono[-1] != v:
            mono.append(v)
        epi.append(len(mono) - 1)
    return tuple(epi), tuple(mono)


@lru_cache(maxsize=None)
def identity_values(n: int) -> Values:
    return tuple(range(n + 1))


@lru_cache(maxsize=None)
def face_values(n: int, j: int) -> Values:
    if not 0 <= j <= n:
        raise RankError(f"face index {j} out of range for [{n}]")
    return tuple(i if i < j else i + 1 for i in range(n))


@lru_cache(maxsize=None)
def degeneracy_values(n: int, j: int) -> Values:
    if not 0 <= j <= n:
        raise RankError(f"degeneracy index {j} out of range for [{n}]")
    return tuple(i if i <= j else i - 1 for i in range(n + 2))


def is_surjective(values: Values, target_rank: int) -> bool:
    return len(set(values)) == target_rank + 1


def is_injective(values: Values) -> bool:
    return all(b > a for a, b in zip(values, values[1:]))


def ordinal_sum(a: Values, a_target: int, b: Values) -> Values:
    """(a ⊕ b): [m]⊕[m'] -> [n]⊕[n'] with a: [m] -> [n]."""
    shift = a_target + 1
    return tuple(a) + tuple(v + shift for v in b)


@lru_cache(maxsize=None)
def monotone_maps(m: int, n: int) -> Tuple[Values, ...]:
    """All monotone maps [m] -> [n], lexicographically."""
    if m < 0:
        return ((),)
    return tuple(combinations_with_replacement(range(n + 1), m + 1))


@lru_cache(maxsize=None)
def surjections(m: int, n: int) -> Tuple[Values, ...]:
    """All monotone surjections [m] -> [n]."""
    if n > m:
        return ()
    out = []
    for jumps in combinations(range(1, m + 1), n):
        vals = []
        level = 0
        js = set(jumps)
        for i in range(m + 1):
            if i in js:
                level += 1
            vals.append(level)
        out.append(tuple(vals))
    return tuple(out)


@lru_cache(maxsize=None)
def injections(m: int, n: int) -> Tuple[Values, ...]:
    return tuple(combinations(range(n + 1), m + 1))


def iter_operators(max_rank: int) -> Iterator[SimplicialOperator]:
    for m in range(max_rank + 1):
        for n in range(max_rank + 1):
            for vals in monotone_maps(m, n):
                yield SimplicialOperator(vals, n)
