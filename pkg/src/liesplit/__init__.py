"""Exact-arithmetic toolkit for root-system combinatorics, line-bundle
cohomology on homogeneous quotients, fixed-point positivity certificates,
and Grassmannian reduction planning."""

__version__ = "0.1.0"
