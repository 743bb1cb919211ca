"""Simplicial operators, finite simplicial sets, limits, exponentials, extensions."""
from .operators import SimplicialOperator, compose_operators, epi_mono_factor
from .sset import (FiniteSimplicialSet, Simplex, SimplicialIdentityError, TruncatedSSet,
                   ordered_complex, realize, sequence_simplex, subcomplex, truncate)
from .maps import EMPTY, NaturalityError, SimplicialMap, constant_map, identity_map, vertex_map
from .standard import (boundary, boundary_inclusion, horn, horn_inclusion, poset_nerve,
                       skeleton_inclusion, standard_simplex)
from .limits import (Coproduct, Product, Pullback, Pushout, Quotient, coproduct, product,
                     pullback, pushout, quotient)


def act(X, x, alpha):
    """x·alpha in X; ``alpha`` may be a SimplicialOperator or a tuple of values."""
    from .operators import RankError
    if isinstance(alpha, SimplicialOperator):
        if alpha.target_rank != x.dim:
            raise RankError(f"operator into [{alpha.target_rank}] applied to a {x.dim}-simplex")
        values = alpha.values
    else:
        values = tuple(alpha)
        if values and values[-1] > x.dim:
            raise RankError(f"operator values {values} leave [{x.dim}]")
    return X.act(x, values)
