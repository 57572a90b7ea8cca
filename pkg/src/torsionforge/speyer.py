"""Speyer's torsion family: a small integer matrix M(k) with determinant k
read off the binary expansion of k, and its triangulated disc complex.
The torsion of the complex has order k on O(log k) vertices.
"""

from __future__ import annotations

from .disc_complex import from_matrix
from .exactmat import IntMatrix
from .triangulation import SimplicialComplex2, triangulate_generic


def speyer_matrix(k: int) -> IntMatrix:
    """(m+1) x (m+1) matrix with det k, for k >= 2 with m = floor(log2 k).

    The first row alternates the signs of the binary digits of k (leading
    digit first); each lower row carries a 1 on the diagonal and a 2 just
    right of it.
    """
    if not isinstance(k, int) or k < 2:
        raise ValueError(f"k must be an integer >= 2, got {k}")
    digits = [int(c) for c in bin(k)[2:]]
    m = len(digits) - 1
    first = [(-1) ** i * d for i, d in enumerate(digits)]
    rows = [first]
    for r in range(1, m + 1):
        row = [0] * (m + 1)
        row[r - 1] = 1
        row[r] = 2
        rows.append(row)
    return IntMatrix.from_rows(rows)


def build_speyer_complex(k: int) -> SimplicialComplex2:
    """Triangulation of the disc complex of M(k), grouped edge-word order.

    Vertex count is at most 9*floor(log2 k) + 6; first homology has order k.
    """
    return triangulate_generic(from_matrix(speyer_matrix(k), "grouped"))
