"""Joins, fat joins, Leibniz constructions, slices, comma objects and comparisons."""
from .join import Join, join, join_map, join_simplex_iso, ordinal_sum_map
from .fatjoin import FatJoin, FatJoinPushout, fat_join, fat_join_comparison, fat_join_map, fat_join_pushout
from .leibniz import LeibnizResult, horn_join_iso, leibniz_fat_join, leibniz_join, leibniz_product
from .comparison import RetractionData, comparison_map, comparison_s, retraction_data
from .slices import (SliceObject, fat_slice_over, fat_slice_under, slice_comparison, slice_over,
                     slice_under)
from .comma import CommaObject, comma
