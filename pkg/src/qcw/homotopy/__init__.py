"""Finite categories, nerves, homotopy categories, markings and smothering checks."""
from .categories import (CatFunctor, CategoryError, FiniteCategory, arrow_category, chain_category,
                         comma_category, identity_functor, contractible_groupoid, discrete_category, poset_category,
                         product_category, pullback_category, terminal_category)
from .hcat import (HomotopyCategory, NotAQuasiCategory, hom_category, homotopy_category,
                   homotopy_relation, nerve, nerve_map)
from .marking import (MarkedSimplicialSet, flat, is_marked_map, marked_edge_in_exponential,
                      natural_marking, sharp)
from .smothering import SmotheringReport, smothering_check
from .comparisons import canonical_comparison, sliced_hom
