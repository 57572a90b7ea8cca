"""Exact integer matrix kernel: Bareiss determinant, Smith normal form,
and canonical finitely generated abelian groups.

Everything here is exact at any magnitude.  Smith reduction first tries the
int64 kernels in :mod:`torsionforge._kernels`; any matrix they cannot certify
is redone in Python big-int arithmetic, so results never depend on which
path ran.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import _kernels


@dataclass(frozen=True)
class IntMatrix:
    """Dense row-major matrix of arbitrary-precision integers."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError("matrix needs at least one row and one column")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )
        for e in self.entries:
            if not isinstance(e, int):
                raise ValueError(f"non-integer entry {e!r}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> IntMatrix:
        rows = [list(r) for r in rows]
        if not rows:
            raise ValueError("matrix needs at least one row")
        width = len(rows[0])
        for i, r in enumerate(rows):
            if len(r) != width:
                raise ValueError(f"ragged matrix: row {i + 1} has {len(r)} entries, expected {width}")
        flat = tuple(int(x) if isinstance(x, (int, np.integer)) else x for r in rows for x in r)
        return cls(len(rows), width, flat)

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zero(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index {(i, j)} out of range for {self.rows}x{self.cols} matrix")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> IntMatrix:
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        out = []
        orows = other.to_rows()
        for i in range(self.rows):
            srow = self.row(i)
            acc = [0] * other.cols
            for t, s in enumerate(srow):
                if s:
                    orow = orows[t]
                    for j in range(other.cols):
                        acc[j] += s * orow[j]
            out.append(acc)
        return IntMatrix.from_rows(out)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)

    def max_abs(self) -> int:
        return max(abs(e) for e in self.entries)

    def __str__(self):
        return "\n".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))


@dataclass(frozen=True)
class SnfResult:
    """Smith normal form ``original = s @ a @ t`` with unimodular s, t.

    ``s`` and ``t`` are only populated when transforms were requested;
    ``invariant_factors`` are the positive diagonal entries (zeros trimmed,
    unit factors kept), chain-divisible.
    """

    a: IntMatrix
    s: IntMatrix | None
    t: IntMatrix | None
    invariant_factors: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group in both canonical presentations.

    ``invariant_factors`` is the chain-divisible presentation with unit
    factors dropped; ``primary_decomposition`` the multiset of prime powers.
    Use :func:`group_from_factors` to build one from raw factors.
    """

    free_rank: int
    invariant_factors: tuple[int, ...]
    primary_decomposition: tuple[int, ...]

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank cannot be negative")
        for f in self.invariant_factors:
            if f <= 1:
                raise ValueError(f"invariant factor {f} must exceed 1")
        for a, b in zip(self.invariant_factors, self.invariant_factors[1:]):
            if b % a:
                raise ValueError(f"invariant factors not chain-divisible: {a} does not divide {b}")
        expected = tuple(sorted(pp for f in self.invariant_factors for pp in _prime_powers(f)))
        if tuple(sorted(self.primary_decomposition)) != expected:
            raise ValueError("primary decomposition does not match the invariant factors")

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    @property
    def torsion_order(self) -> int:
        out = 1
        for f in self.invariant_factors:
            out *= f
        return out

    @property
    def order(self) -> int | None:
        """Group order, or None for infinite groups."""
        return self.torsion_order if self.free_rank == 0 else None

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z_{f}" for f in self.invariant_factors)
        return " x ".join(parts) if parts else "0"


def _prime_powers(n: int) -> list[int]:
    """Prime-power factorization of n > 1, e.g. 12 -> [4, 3]."""
    out = []
    for p in _prime_factors(n):
        pe = 1
        while n % p == 0:
            n //= p
            pe *= p
        out.append(pe)
    return out


def _prime_factors(n: int) -> list[int]:
    ps = []
    m = n
    for p in (2, 3):
        if m % p == 0:
            ps.append(p)
            while m % p == 0:
                m //= p
    f = 5
    while f * f <= m:
        for p in (f, f + 2):
            if m % p == 0:
                ps.append(p)
                while m % p == 0:
                    m //= p
        f += 6
    if m > 1:
        ps.append(m)
    return ps


def group_from_factors(factors: Iterable[int], free_rank: int = 0) -> AbelianGroup:
    """Canonical AbelianGroup from arbitrary positive factors.

    Factors need not be chain-divisible; they are split into prime powers
    and reassembled.  Unit factors are dropped.  Non-positive factors are
    rejected.
    """
    if free_rank < 0:
        raise ValueError("free rank cannot be negative")
    exps: dict[int, list[int]] = {}
    for f in factors:
        f = int(f)
        if f <= 0:
            raise ValueError(f"group factor {f} must be positive")
        if f == 1:
            continue
        for pp in _prime_powers(f):
            p = _prime_factors(pp)[0]
            exps.setdefault(p, []).append(pp)
    depth = max((len(v) for v in exps.values()), default=0)
    for v in exps.values():
        v.sort(reverse=True)
    invariant = []
    for i in range(depth):
        x = 1
        for v in exps.values():
            if i < len(v):
                x *= v[i]
        invariant.append(x)
    invariant.reverse()
    primary = tuple(sorted(pp for v in exps.values() for pp in v))
    return AbelianGroup(free_rank, tuple(invariant), primary)


def free_group(rank: int) -> AbelianGroup:
    return AbelianGroup(rank, (), ())


def det_bareiss(m: IntMatrix) -> int:
    """Exact determinant by fraction-free elimination."""
    if not m.is_square:
        raise ValueError(f"determinant needs a square matrix, got {m.rows}x{m.cols}")
    n = m.rows
    a = m.to_rows()
    sign = 1
    prev = 1
    for t in range(n - 1):
        piv = None
        for i in range(t, n):
            if a[i][t]:
                piv = i
                break
        if piv is None:
            return 0
        if piv != t:
            a[t], a[piv] = a[piv], a[t]
            sign = -sign
        att = a[t][t]
        for i in range(t + 1, n):
            ait = a[i][t]
            arow = a[i]
            trow = a[t]
            for j in range(t + 1, n):
                arow[j] = (arow[j] * att - ait * trow[j]) // prev
            arow[t] = 0
        prev = att
    return sign * a[n - 1][n - 1]


def smith_normal_form(m: IntMatrix, transforms: bool = False) -> SnfResult:
    """Smith normal form with divisibility-ordered nonnegative diagonal.

    Transform matrices are only computed when ``transforms`` is set; without
    them the reduction may run on the guarded int64 fast path.  An all-zero
    matrix yields empty invariant factors with identity transforms.
    """
    if m.is_zero():
        return SnfResult(
            a=IntMatrix.zero(m.rows, m.cols),
            s=IntMatrix.identity(m.rows),
            t=IntMatrix.identity(m.cols),
            invariant_factors=(),
        )
    if not transforms and m.max_abs() <= _kernels.ENTRY_BOUND:
        arr = np.array(m.to_rows(), dtype=np.int64)
        diag = _kernels.smith_diagonal_int64(arr)
        if diag is not None:
            return SnfResult(
                a=_diag_matrix(m.rows, m.cols, diag),
                s=None,
                t=None,
                invariant_factors=tuple(diag),
            )
    return _smith_exact(m, transforms)


def _diag_matrix(rows: int, cols: int, diag: Sequence[int]) -> IntMatrix:
    flat = [0] * (rows * cols)
    for i, d in enumerate(diag):
        flat[i * cols + i] = int(d)
    return IntMatrix(rows, cols, tuple(flat))


def _smith_exact(matrix: IntMatrix, transforms: bool) -> SnfResult:
    """Big-int Smith reduction, maintaining original = S * A * T throughout."""
    m, n = matrix.rows, matrix.cols
    a = matrix.to_rows()
    s = [[int(i == j) for j in range(m)] for i in range(m)] if transforms else None
    t = [[int(i == j) for j in range(n)] for i in range(n)] if transforms else None

    def row_swap(i, k):
        a[i], a[k] = a[k], a[i]
        if s is not None:
            for r in range(m):
                s[r][i], s[r][k] = s[r][k], s[r][i]

    def row_submul(i, k, q):
        # a[i] -= q * a[k]  (undone in S by adding q * col i to col k)
        ai, ak = a[i], a[k]
        for j in range(n):
            ai[j] -= q * ak[j]
        if s is not None:
            for r in range(m):
                s[r][k] += q * s[r][i]

    def row_negate(i):
        ai = a[i]
        for j in range(n):
            ai[j] = -ai[j]
        if s is not None:
            for r in range(m):
                s[r][i] = -s[r][i]

    def col_swap(j, l):
        for i in range(m):
            a[i][j], a[i][l] = a[i][l], a[i][j]
        if t is not None:
            t[j], t[l] = t[l], t[j]

    def col_submul(j, l, q):
        # col j -= q * col l  (undone in T by adding q * row j to row l)
        for i in range(m):
            a[i][j] -= q * a[i][l]
        if t is not None:
            tl, tj = t[l], t[j]
            for c in range(n):
                tl[c] += q * tj[c]

    mind = min(m, n)
    k = 0
    while k < mind:
        bi = bj = -1
        bv = None
        for i in range(k, m):
            for j in range(k, n):
                v = abs(a[i][j])
                if v and (bv is None or v < bv):
                    bi, bj, bv = i, j, v
            if bv == 1:
                break
        if bi < 0:
            break
        if bi != k:
            row_swap(k, bi)
        if bj != k:
            col_swap(k, bj)
        while True:
            bi = k
            bv = abs(a[k][k])
            for i in range(k + 1, m):
                v = abs(a[i][k])
                if v and v < bv:
                    bi, bv = i, v
            if bi != k:
                row_swap(k, bi)
            dirty = False
            for i in range(k + 1, m):
                if a[i][k]:
                    q = a[i][k] // a[k][k]
                    if q:
                        row_submul(i, k, q)
                    if a[i][k]:
                        dirty = True
            if dirty:
                continue
            bj = k
            bv = abs(a[k][k])
            for j in range(k + 1, n):
                v = abs(a[k][j])
                if v and v < bv:
                    bj, bv = j, v
            if bj != k:
                col_swap(k, bj)
            dirty = False
            for j in range(k + 1, n):
                if a[k][j]:
                    q = a[k][j] // a[k][k]
                    if q:
                        col_submul(j, k, q)
                    if a[k][j]:
                        dirty = True
            if dirty:
                continue
            if any(a[i][k] for i in range(k + 1, m)):
                continue
            p = a[k][k]
            bad = -1
            for i in range(k + 1, m):
                if any(x % p for x in a[i][k + 1 :]):
                    bad = i
                    break
            if bad < 0:
                break
            row_submul(k, bad, -1)
        k += 1

    for i in range(min(m, n)):
        if a[i][i] < 0:
            row_negate(i)
    diag = [a[i][i] for i in range(min(m, n)) if a[i][i]]
    return SnfResult(
        a=IntMatrix.from_rows(a),
        s=IntMatrix.from_rows(s) if s is not None else None,
        t=IntMatrix.from_rows(t) if t is not None else None,
        invariant_factors=tuple(diag),
    )


def rank(m: IntMatrix) -> int:
    """Rank over the integers (= rank over Q)."""
    return smith_normal_form(m).rank
