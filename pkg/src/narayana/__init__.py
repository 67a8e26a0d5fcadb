"""Exact-arithmetic toolkit for Dyck path statistics, q-Narayana numbers,
flag h-vectors of ideal lattices and shellability of their order complexes."""

__version__ = "0.1.0"
