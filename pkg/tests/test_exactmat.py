import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torsionforge.exactmat import (
    AbelianGroup,
    IntMatrix,
    _smith_exact,
    det_bareiss,
    free_group,
    group_from_factors,
    smith_normal_form,
)
from torsionforge.hadamard import walsh
from torsionforge.speyer import speyer_matrix

from .oracles import det_cofactor, snf_factors_by_minor_gcds


def matrices(max_dim=6, lo=-5, hi=5):
    return st.integers(1, max_dim).flatmap(
        lambda r: st.integers(1, max_dim).flatmap(
            lambda c: st.lists(st.integers(lo, hi), min_size=r * c, max_size=r * c).map(
                lambda es: IntMatrix(r, c, tuple(es))
            )
        )
    )


class TestIntMatrix:
    def test_shape_validation(self):
        with pytest.raises(ValueError):
            IntMatrix(2, 2, (1, 2, 3))
        with pytest.raises(ValueError):
            IntMatrix(0, 1, ())
        with pytest.raises(ValueError):
            IntMatrix.from_rows([[1, 2], [3]])
        with pytest.raises(ValueError):
            IntMatrix.from_rows([[1.5]])

    def test_accessors(self):
        m = IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
        assert m[1, 2] == 6
        assert m.row(0) == (1, 2, 3)
        assert m.transpose().to_rows() == [[1, 4], [2, 5], [3, 6]]
        assert (m @ m.transpose()).to_rows() == [[14, 32], [32, 77]]

    def test_big_entries_survive(self):
        big = 2**300
        m = IntMatrix.from_rows([[big]])
        assert det_bareiss(m) == big


class TestDet:
    def test_identity(self):
        assert det_bareiss(IntMatrix.identity(3)) == 1

    def test_walsh4_attains_hadamard_bound(self):
        assert abs(det_bareiss(walsh(4))) == 16

    def test_speyer11(self):
        assert det_bareiss(speyer_matrix(11)) == 11

    def test_non_square_rejected(self):
        with pytest.raises(ValueError):
            det_bareiss(IntMatrix.from_rows([[1, 2]]))

    def test_singular(self):
        assert det_bareiss(IntMatrix.from_rows([[1, 2], [2, 4]])) == 0

    @settings(max_examples=60, deadline=None)
    @given(matrices(max_dim=5))
    def test_matches_cofactor_expansion(self, m):
        if not m.is_square:
            m = IntMatrix.from_rows([r[: min(m.rows, m.cols)] for r in m.to_rows()[: min(m.rows, m.cols)]])
        assert det_bareiss(m) == det_cofactor(m.to_rows())


class TestSmith:
    def test_row_vector(self):
        assert smith_normal_form(IntMatrix.from_rows([[2, 2]])).invariant_factors == (2,)

    def test_walsh2(self):
        assert smith_normal_form(walsh(2)).invariant_factors == (1, 2)

    def test_identity(self):
        for n in (1, 2, 5):
            assert smith_normal_form(IntMatrix.identity(n)).invariant_factors == (1,) * n

    def test_speyer11(self):
        assert smith_normal_form(speyer_matrix(11)).invariant_factors == (1, 1, 1, 11)

    def test_zero_matrix_convention(self):
        res = smith_normal_form(IntMatrix.zero(2, 3))
        assert res.invariant_factors == ()
        assert res.s == IntMatrix.identity(2)
        assert res.t == IntMatrix.identity(3)
        assert res.a == IntMatrix.zero(2, 3)

    def test_transforms_absent_by_default(self):
        res = smith_normal_form(walsh(2))
        assert res.s is None and res.t is None

    @settings(max_examples=80, deadline=None)
    @given(matrices())
    def test_sat_decomposition_exact(self, m):
        res = smith_normal_form(m, transforms=True)
        assert res.s @ res.a @ res.t == m
        assert det_bareiss(res.s) in (1, -1)
        assert det_bareiss(res.t) in (1, -1)
        diag = [res.a[i, i] for i in range(min(m.rows, m.cols))]
        assert all(d >= 0 for d in diag)
        nz = [d for d in diag if d]
        assert nz == list(res.invariant_factors)
        for x, y in zip(nz, nz[1:]):
            assert y % x == 0
        # off-diagonal must vanish
        for i in range(m.rows):
            for j in range(m.cols):
                if i != j:
                    assert res.a[i, j] == 0

    @settings(max_examples=60, deadline=None)
    @given(matrices(max_dim=4, lo=-5, hi=5))
    def test_matches_minor_gcd_oracle(self, m):
        expected = snf_factors_by_minor_gcds(m.to_rows())
        assert list(smith_normal_form(m).invariant_factors) == expected

    @settings(max_examples=50, deadline=None)
    @given(matrices(max_dim=5))
    def test_det_is_product_of_factors(self, m):
        if not m.is_square:
            return
        d = det_bareiss(m)
        factors = smith_normal_form(m).invariant_factors
        if d != 0:
            prod = 1
            for f in factors:
                prod *= f
            assert prod == abs(d)
        else:
            assert len(factors) < m.rows

    @settings(max_examples=50, deadline=None)
    @given(matrices(), st.randoms(use_true_random=False))
    def test_permutation_invariance(self, m, rng):
        rows = m.to_rows()
        rng.shuffle(rows)
        cols = list(range(m.cols))
        rng.shuffle(cols)
        shuffled = IntMatrix.from_rows([[r[j] for j in cols] for r in rows])
        assert (
            smith_normal_form(shuffled).invariant_factors
            == smith_normal_form(m).invariant_factors
        )

    @settings(max_examples=60, deadline=None)
    @given(matrices())
    def test_fast_path_agrees_with_exact(self, m):
        assert (
            smith_normal_form(m).invariant_factors
            == _smith_exact(m, transforms=False).invariant_factors
        )

    def test_sympy_cross_check(self):
        sympy = pytest.importorskip("sympy")
        from sympy.matrices.normalforms import smith_normal_form as sympy_snf

        rng = random.Random(20240)
        mats = [walsh(8), speyer_matrix(37)]
        for _ in range(15):
            r = rng.randint(2, 6)
            mats.append(
                IntMatrix.from_rows([[rng.randint(-7, 7) for _ in range(r)] for _ in range(r)])
            )
        for m in mats:
            if det_bareiss(m) == 0:
                continue
            diag = sympy_snf(sympy.Matrix(m.to_rows()))
            expected = sorted(abs(int(diag[i, i])) for i in range(m.rows))
            assert sorted(smith_normal_form(m).invariant_factors) == expected


class TestAbelianGroup:
    def test_normalizes_chain(self):
        g = group_from_factors([1, 2, 2, 4])
        assert g.invariant_factors == (2, 2, 4)
        assert g.primary_decomposition == (2, 2, 4)
        assert g.torsion_order == 16
        assert str(g) == "Z_2 x Z_2 x Z_4"

    def test_free(self):
        g = group_from_factors([], free_rank=1)
        assert g == free_group(1)
        assert str(g) == "Z"
        assert g.order is None

    def test_crt_split(self):
        g = group_from_factors([6])
        assert g.invariant_factors == (6,)
        assert g.primary_decomposition == (2, 3)

    def test_non_chain_input_reassembled(self):
        # Z_4 x Z_6 = Z_2 x Z_12
        g = group_from_factors([4, 6])
        assert g.invariant_factors == (2, 12)
        assert g.primary_decomposition == (2, 3, 4)

    def test_trivial(self):
        g = group_from_factors([1, 1])
        assert g.is_trivial
        assert str(g) == "0"
        assert g.order == 1

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            group_from_factors([0])
        with pytest.raises(ValueError):
            group_from_factors([-3])
        with pytest.raises(ValueError):
            group_from_factors([2], free_rank=-1)

    def test_invariants_enforced_on_construction(self):
        with pytest.raises(ValueError):
            AbelianGroup(0, (4, 2), (2, 4))
        with pytest.raises(ValueError):
            AbelianGroup(0, (2,), (4,))

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.integers(1, 600), max_size=6), st.integers(0, 3))
    def test_order_preserved_by_normalization(self, factors, rank):
        g = group_from_factors(factors, rank)
        prod = 1
        for f in factors:
            prod *= f
        assert g.torsion_order == prod
        assert g.free_rank == rank
        for x, y in zip(g.invariant_factors, g.invariant_factors[1:]):
            assert y % x == 0
