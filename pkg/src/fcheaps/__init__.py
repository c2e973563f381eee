"""Fully commutative elements of classical Coxeter groups via heaps.

Subpackages cover the Coxeter graph family zoo, heap combinatorics, lattice
walk models and their bijections, generating functions (length and major
index, finite and affine), exhaustive enumeration with cross-validation, and
the reduction of heaps to cell representatives on affine type A graphs.
"""

__all__ = ["coxeter", "heaps", "walks", "qpoly", "genfunc", "enumerator", "cells"]
