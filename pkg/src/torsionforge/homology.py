"""Exact simplicial homology of pure 2-complexes via integer boundary
matrices and Smith normal form.

Simplices are oriented by ascending vertex id; homology is independent of
that convention (and the test suite checks so by relabeling).
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactmat import AbelianGroup, IntMatrix, free_group, group_from_factors, smith_normal_form
from .triangulation import SimplicialComplex2, validate_complex


@dataclass(frozen=True)
class HomologyResult:
    h0: AbelianGroup
    h1: AbelianGroup
    h2: AbelianGroup

    def as_tuple(self) -> tuple[AbelianGroup, AbelianGroup, AbelianGroup]:
        return (self.h0, self.h1, self.h2)

    def __str__(self):
        return f"H0 = {self.h0}; H1 = {self.h1}; H2 = {self.h2}"


def boundary_matrices(k: SimplicialComplex2) -> tuple[IntMatrix, IntMatrix]:
    """(edges x vertices, triangles x edges) boundary matrices.

    Row (a, b) of the first has -1 at a and +1 at b; row (a, b, c) of the
    second has +1 at (a,b), -1 at (a,c), +1 at (b,c).  Their composition
    vanishes.  Simplex indices follow the sorted orders of the complex.
    """
    report = validate_complex(k)
    if not report.ok:
        raise ValueError("invalid complex: " + "; ".join(report.problems[:5]))
    verts = sorted(k.labels)
    vindex = {v: i for i, v in enumerate(verts)}
    edges = sorted(tuple(sorted(e)) for e in k.edges)
    eindex = {e: i for i, e in enumerate(edges)}
    tris = sorted(tuple(sorted(t)) for t in k.triangles)

    d1_rows = []
    for a, b in edges:
        row = [0] * len(verts)
        row[vindex[a]] = -1
        row[vindex[b]] = 1
        d1_rows.append(row)
    d2_rows = []
    for a, b, c in tris:
        row = [0] * len(edges)
        row[eindex[(a, b)]] = 1
        row[eindex[(a, c)]] = -1
        row[eindex[(b, c)]] = 1
        d2_rows.append(row)
    return IntMatrix.from_rows(d1_rows), IntMatrix.from_rows(d2_rows)


def simplicial_homology(k: SimplicialComplex2) -> HomologyResult:
    """Integer homology: free ranks from the two boundary ranks, torsion
    from the invariant factors of the triangle boundary."""
    d1, d2 = boundary_matrices(k)
    n0, n1, n2 = d1.cols, d1.rows, d2.rows
    r1 = smith_normal_form(d1).rank
    snf2 = smith_normal_form(d2)
    r2 = snf2.rank
    torsion = [f for f in snf2.invariant_factors if f > 1]
    return HomologyResult(
        h0=free_group(n0 - r1),
        h1=group_from_factors(torsion, n1 - r1 - r2),
        h2=free_group(n2 - r2),
    )
