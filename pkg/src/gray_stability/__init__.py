"""Exact stability and rigidity computations for homogeneous Gray manifolds."""

__version__ = "0.1.0"
