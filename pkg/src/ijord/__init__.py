"""Inertial Jordan sets of cuspidal representations of p-adic symplectic groups, computed from finite descriptors."""

__version__ = "0.1.0"
