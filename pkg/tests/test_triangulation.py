import random

import pytest

from torsionforge.disc_complex import DiscComplexSpec, from_matrix
from torsionforge.exactmat import IntMatrix
from torsionforge.fileio import write_facets
from torsionforge.hadamard import walsh
from torsionforge.speyer import speyer_matrix
from torsionforge.triangulation import (
    SimplicialComplex2,
    euler_characteristic,
    face_vector,
    triangulate_generic,
    validate_complex,
    vertex_count_formula,
)

from .test_disc_complex import random_matrix_no_zero_lines

H2_FACETS = """0 1 5
0 1 8
0 2 6
0 2 9
0 3 6
0 3 10
0 4 7
0 4 9
0 5 7
0 8 10
1 2 5
1 2 8
2 5 6
2 8 9
3 4 7
3 4 10
3 6 7
4 9 10
5 6 7
8 9 10
"""


def complex_from_triangles(tris):
    edges = set()
    verts = set()
    tris = [tuple(sorted(t)) for t in tris]
    for a, b, c in tris:
        edges.update(((a, b), (a, c), (b, c)))
        verts.update((a, b, c))
    return SimplicialComplex2(
        labels={v: str(v) for v in sorted(verts)},
        edges=sorted(edges),
        triangles=sorted(tris),
    )


def tetrahedron():
    return complex_from_triangles([(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])


class TestVertexCounts:
    def test_speyer_11_has_29_vertices(self):
        k = triangulate_generic(from_matrix(speyer_matrix(11), "grouped"))
        assert face_vector(k).f0 == 29

    def test_two_two(self):
        k = triangulate_generic(from_matrix(IntMatrix.from_rows([[2, 2]]), "grouped"))
        assert face_vector(k).f0 == 1 + 4 + 6

    def test_walsh2(self):
        k = triangulate_generic(from_matrix(walsh(2), "grouped"))
        assert face_vector(k).f0 == 1 + 4 + 3 + 3

    def test_formula_and_bound(self):
        rng = random.Random(31337)
        for _ in range(40):
            m = random_matrix_no_zero_lines(rng)
            for ordering in ("grouped", "interleaved"):
                spec = from_matrix(m, ordering)
                k = triangulate_generic(spec)
                f0 = face_vector(k).f0
                assert f0 == vertex_count_formula(spec)
                total = sum(abs(x) for x in m.entries)
                assert 2 * f0 <= 2 * (2 * m.cols + m.rows + 1) + 3 * total


class TestGenericTriangulation:
    def test_facets_golden_walsh2(self):
        k = triangulate_generic(from_matrix(walsh(2), "grouped"))
        assert write_facets(k) == H2_FACETS

    def test_single_letter_disc(self):
        # one cycle traversed once: 5 vertices, 5 triangles, collapsed inner edge
        k = triangulate_generic(DiscComplexSpec(1, ((1,),)))
        assert face_vector(k).as_tuple() == (5, 9, 5)
        assert validate_complex(k).ok
        assert euler_characteristic(k) == 1

    def test_two_letter_disc(self):
        k = triangulate_generic(DiscComplexSpec(1, ((1, 1),)))
        assert face_vector(k).f0 == 1 + 2 + 3
        assert validate_complex(k).ok

    def test_generated_complexes_validate(self):
        rng = random.Random(777)
        for _ in range(25):
            m = random_matrix_no_zero_lines(rng)
            for ordering in ("grouped", "interleaved"):
                k = triangulate_generic(from_matrix(m, ordering))
                report = validate_complex(k)
                assert report.ok, report.problems

    def test_interior_edges_have_two_incident_triangles(self):
        rng = random.Random(555)
        for _ in range(15):
            m = random_matrix_no_zero_lines(rng)
            k = triangulate_generic(from_matrix(m, "grouped"))
            incidence = {}
            for t in k.triangles:
                for e in ((t[0], t[1]), (t[0], t[2]), (t[1], t[2])):
                    incidence[e] = incidence.get(e, 0) + 1
            for e, _owner in k.interior_claims:
                assert incidence[e] == 2, (m, e)

    def test_cone_walk_end_has_two_or_three_boundary_spokes(self):
        # odd boundary walk: the last inner vertex reaches only 2 boundary
        # vertices; even walk: 3
        for word, expected in (((1, 2, 2), 2), ((1, 1, 2, 2), 3)):
            spec = DiscComplexSpec(2, (word,))
            k = triangulate_generic(spec)
            n = spec.n_cycles
            last_inner = max(k.labels)
            boundary_neighbors = {
                (e[0] if e[1] == last_inner else e[1])
                for e in k.edges
                if last_inner in e and min(e) <= 2 * n
            }
            assert len(boundary_neighbors) == expected


class TestValidator:
    def test_generic_output_passes(self):
        k = triangulate_generic(from_matrix(walsh(2)))
        assert validate_complex(k).ok

    def test_duplicate_triangle_detected(self):
        k = tetrahedron()
        k.triangles.append((0, 1, 2))
        report = validate_complex(k)
        assert not report.ok
        assert any("duplicate triangle" in p for p in report.problems)

    def test_missing_edge_detected(self):
        k = tetrahedron()
        k.edges.remove((0, 1))
        report = validate_complex(k)
        assert not report.ok
        assert any("misses edge" in p for p in report.problems)

    def test_loop_detected(self):
        k = tetrahedron()
        k.edges.append((2, 2))
        report = validate_complex(k)
        assert not report.ok
        assert any("loop" in p for p in report.problems)

    def test_isolated_vertex_detected(self):
        k = tetrahedron()
        k.labels[9] = "stray"
        report = validate_complex(k)
        assert not report.ok
        assert any("vertex 9" in p for p in report.problems)

    def test_dangling_edge_detected(self):
        k = tetrahedron()
        k.edges.append((0, 9))
        k.labels[9] = "stray"
        report = validate_complex(k)
        assert not report.ok
        assert any("no triangle" in p for p in report.problems)

    def test_conflicting_interior_claims_detected(self):
        k = tetrahedron()
        k.interior_claims = (((0, 1), "disc1"), ((0, 1), "disc2"))
        report = validate_complex(k)
        assert not report.ok
        assert any("shared by" in p for p in report.problems)


class TestFaceVector:
    def test_tetrahedron(self):
        k = tetrahedron()
        assert face_vector(k).as_tuple() == (4, 6, 4)
        assert euler_characteristic(k) == 2

    def test_disc_complexes_have_euler_characteristic_from_matrix(self):
        # chi = 1 - n + m for an (m x n) blueprint, independent of words
        rng = random.Random(2718)
        for _ in range(20):
            m = random_matrix_no_zero_lines(rng)
            k = triangulate_generic(from_matrix(m, "grouped"))
            assert euler_characteristic(k) == 1 - m.cols + m.rows
