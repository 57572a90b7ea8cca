"""Pure 2-dimensional simplicial complexes and the generic disc-complex
triangulation: subdivide every cycle with two vertices, ring each disc with
an inner polygon of ceil(3s/2) fresh vertices, cone the annulus, fan the
inside.

Vertex ids are deterministic: 0, then the cycle subdivision vertices by
(cycle, copy), then disc-interior vertices by (disc, position).  Facet
output is therefore bit-exact across runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .disc_complex import DiscComplexSpec

Edge = tuple[int, int]
Triangle = tuple[int, int, int]


@dataclass
class SimplicialComplex2:
    """Vertex labels plus edge and triangle lists (ascending tuples).

    ``interior_claims`` records which construction unit (disc/digon) owns
    each interior edge; the validator uses it to certify that no two units
    share one.  Complexes loaded from facet files carry no claims.
    """

    labels: dict[int, str]
    edges: list[Edge]
    triangles: list[Triangle]
    interior_claims: tuple[tuple[Edge, str], ...] = ()

    @property
    def vertices(self) -> list[int]:
        return sorted(self.labels)

    def same_simplices(self, other: SimplicialComplex2) -> bool:
        return (
            sorted(self.labels) == sorted(other.labels)
            and sorted(self.edges) == sorted(other.edges)
            and sorted(self.triangles) == sorted(other.triangles)
        )


@dataclass(frozen=True)
class FaceVector:
    f0: int
    f1: int
    f2: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.f0, self.f1, self.f2)


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    problems: tuple[str, ...] = ()

    def __bool__(self):
        return self.ok


class ComplexBuilder:
    """Accumulates labeled vertices and triangles; rejects degenerate or
    duplicate simplices and conflicting interior-edge owners immediately."""

    def __init__(self):
        self.labels: dict[int, str] = {}
        self._edge_set: set[Edge] = set()
        self._tri_set: set[Triangle] = set()
        self._owners: dict[Edge, str] = {}
        self._claims: list[tuple[Edge, str]] = []

    def vertex(self, vid: int, label: str) -> int:
        if vid in self.labels:
            raise ValueError(f"vertex id {vid} assigned twice")
        self.labels[vid] = label
        return vid

    def triangle(self, a: int, b: int, c: int):
        if a > b:
            a, b = b, a
        if b > c:
            b, c = c, b
        if a > b:
            a, b = b, a
        if a == b or b == c:
            raise ValueError(f"degenerate triangle {(a, b, c)}")
        tri = (a, b, c)
        if tri in self._tri_set:
            raise ValueError(f"duplicate triangle {tri}")
        labels = self.labels
        if a not in labels or b not in labels or c not in labels:
            raise ValueError(f"triangle {tri} uses an unknown vertex")
        self._tri_set.add(tri)
        self._edge_set.update(((a, b), (a, c), (b, c)))

    def claim_interior(self, u: int, v: int, owner: str):
        if u > v:
            u, v = v, u
        e = (u, v)
        prev = self._owners.get(e)
        if prev is None:
            self._owners[e] = owner
            self._claims.append((e, owner))
        elif prev != owner:
            raise ValueError(f"interior edge {e} claimed by both {prev} and {owner}")

    def finish(self) -> SimplicialComplex2:
        return SimplicialComplex2(
            labels=dict(self.labels),
            edges=sorted(self._edge_set),
            triangles=sorted(self._tri_set),
            interior_claims=tuple(self._claims),
        )


def triangulate_generic(spec: DiscComplexSpec) -> SimplicialComplex2:
    """Triangulation of a disc-complex blueprint.

    Cycle j becomes the path 0 - v(j,1) - v(j,2) - 0.  A disc with word
    length s has boundary walk length 3s and gets an inner polygon of
    p = ceil(3s/2) vertices: vertex t of the polygon cones over walk
    positions 2t..2t+2 (the last one over just two when 3s is odd), a rung
    triangle joins consecutive polygon vertices, and the polygon interior is
    fanned from its first vertex.
    """
    n = spec.n_cycles
    b = ComplexBuilder()
    b.vertex(0, "0")
    for j in range(1, n + 1):
        b.vertex(2 * (j - 1) + 1, f"v{j}.1")
        b.vertex(2 * (j - 1) + 2, f"v{j}.2")
    nxt = 2 * n + 1

    for i, word in enumerate(spec.discs, start=1):
        owner = f"disc{i}"
        walk: list[int] = []
        for letter in word:
            j = abs(letter)
            v1, v2 = 2 * (j - 1) + 1, 2 * (j - 1) + 2
            walk.extend((0, v1, v2) if letter > 0 else (0, v2, v1))
        size = len(walk)  # 3s
        p = (size + 1) // 2  # ceil(3s/2)
        inner = []
        for t in range(p):
            inner.append(b.vertex(nxt, f"c{i}.{t + 1}"))
            nxt += 1

        for t in range(p):
            start = 2 * t
            steps = 1 if (size % 2 == 1 and t == p - 1) else 2
            for s_ in range(steps):
                u = walk[(start + s_) % size]
                w = walk[(start + s_ + 1) % size]
                b.triangle(inner[t], u, w)
                b.claim_interior(inner[t], u, owner)
                b.claim_interior(inner[t], w, owner)
            rung_v = walk[(start + steps) % size]
            b.triangle(inner[t], inner[(t + 1) % p], rung_v)
            b.claim_interior(inner[t], inner[(t + 1) % p], owner)
            b.claim_interior(inner[(t + 1) % p], rung_v, owner)
        for t in range(1, p - 1):
            b.triangle(inner[0], inner[t], inner[t + 1])
            b.claim_interior(inner[0], inner[t], owner)
            b.claim_interior(inner[0], inner[t + 1], owner)
            b.claim_interior(inner[t], inner[t + 1], owner)

    return b.finish()


def vertex_count_formula(spec: DiscComplexSpec) -> int:
    """1 + 2n + sum of ceil(3s_i/2); what triangulate_generic produces."""
    return 1 + 2 * spec.n_cycles + sum((3 * len(w) + 1) // 2 for w in spec.discs)


def validate_complex(k: SimplicialComplex2) -> ValidationReport:
    """Report-style check of all structural invariants.

    Covers loop-freeness, duplicate simplices, closure (triangle edges are
    present, every edge and vertex lies in a triangle), vertex-set
    consistency, and single ownership of claimed interior edges.
    """
    problems: list[str] = []
    vset = set(k.labels)

    norm_tris = []
    for t in k.triangles:
        if len(t) != 3 or len(set(t)) != 3:
            problems.append(f"degenerate triangle {t}")
            continue
        norm_tris.append(tuple(sorted(t)))
        for v in t:
            if v not in vset:
                problems.append(f"triangle {t} uses unknown vertex {v}")
    if len(set(norm_tris)) != len(norm_tris):
        seen = set()
        for t in norm_tris:
            if t in seen:
                problems.append(f"duplicate triangle {t}")
            seen.add(t)

    norm_edges = []
    for e in k.edges:
        if len(e) != 2 or e[0] == e[1]:
            problems.append(f"loop or malformed edge {e}")
            continue
        norm_edges.append(tuple(sorted(e)))
        for v in e:
            if v not in vset:
                problems.append(f"edge {e} uses unknown vertex {v}")
    eset = set(norm_edges)
    if len(norm_edges) != len(eset):
        problems.append("duplicate edges present")

    covered_edges = set()
    covered_vertices = set()
    for t in set(norm_tris):
        tri_edges = ((t[0], t[1]), (t[0], t[2]), (t[1], t[2]))
        for e in tri_edges:
            if e not in eset:
                problems.append(f"triangle {t} misses edge {e}")
        covered_edges.update(tri_edges)
        covered_vertices.update(t)
    for e in sorted(eset - covered_edges):
        problems.append(f"edge {e} lies in no triangle")
    for v in sorted(vset - covered_vertices):
        problems.append(f"vertex {v} lies in no triangle")

    owners: dict[Edge, set[str]] = {}
    for e, owner in k.interior_claims:
        owners.setdefault(e, set()).add(owner)
        if e not in eset:
            problems.append(f"claimed interior edge {e} is not an edge of the complex")
    for e, os in sorted(owners.items()):
        if len(os) > 1:
            problems.append(f"interior edge {e} shared by {sorted(os)}")

    return ValidationReport(not problems, tuple(problems))


def face_vector(k: SimplicialComplex2) -> FaceVector:
    return FaceVector(len(k.labels), len(k.edges), len(k.triangles))


def euler_characteristic(k: SimplicialComplex2) -> int:
    fv = face_vector(k)
    return fv.f0 - fv.f1 + fv.f2
