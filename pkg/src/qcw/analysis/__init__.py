"""Bounded verification: lifting properties, terminal objects, adjunctions, limits."""
from ..kernel.lifting import (INCONCLUSIVE, REFUTED, VERIFIED, LiftingVerdict, has_rlp, has_rlp_family,
                              is_isofibration, is_kan, is_quasicategory, is_trivial_fibration)
from .terminal import (Refutation, TerminalWitness, VertexSearch, find_initial, find_terminal,
                       is_initial_vertex, is_terminal_vertex)
from .adjunction import (AdjunctionVerdict, AdjunctionWitness, search_adjunction, verify_adjunction,
                         verify_rari)
from .induction import InductionError, induce_by_search, isomorphic_over, one_cell_induction
from .pointwise import (AbsoluteLiftingReport, absolute_left_lifting_pointwise,
                        absolute_right_lifting_pointwise, check_lifting_candidate)
from .limits import LimitResult, find_colimit, find_limit
from .marked import marked_special_horn_check
from .fibred import verify_fibred_equivalence
