"""Exact computation with finite simplicial sets and quasi-categories."""
__version__ = "0.1.0"
