"""CW blueprints from integer matrices: one base vertex, one edge cycle per
column, one polygonal disc per row whose boundary word spells out the row.

Homology of any such complex depends only on the matrix, so it is computed
directly from the Smith normal form without building geometry.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactmat import AbelianGroup, IntMatrix, free_group, group_from_factors, smith_normal_form

ORDERINGS = ("grouped", "interleaved")


@dataclass(frozen=True)
class DiscComplexSpec:
    """Boundary words of the discs, as signed 1-based cycle indices.

    A letter +j traverses cycle j forward, -j backward.  All occurrences of
    a cycle within one word must share orientation (they realize one matrix
    entry), and every cycle must be used by some disc.
    """

    n_cycles: int
    discs: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n_cycles < 1:
            raise ValueError("spec needs at least one cycle")
        if not self.discs:
            raise ValueError("spec needs at least one disc")
        used = set()
        for i, word in enumerate(self.discs, start=1):
            if not word:
                raise ValueError(f"disc {i} has an empty boundary word")
            signs: dict[int, int] = {}
            for letter in word:
                if not isinstance(letter, int) or letter == 0:
                    raise ValueError(f"disc {i}: letter {letter!r} is not a signed cycle index")
                j = abs(letter)
                if j > self.n_cycles:
                    raise ValueError(f"disc {i}: cycle {j} exceeds n_cycles={self.n_cycles}")
                sgn = 1 if letter > 0 else -1
                if signs.setdefault(j, sgn) != sgn:
                    raise ValueError(
                        f"disc {i}: cycle {j} appears with both orientations; "
                        "a word realizes one matrix entry per cycle"
                    )
                used.add(j)
        missing = sorted(set(range(1, self.n_cycles + 1)) - used)
        if missing:
            raise ValueError(f"cycle {missing[0]} is used by no disc (zero column)")

    def word_length(self, i: int) -> int:
        return len(self.discs[i])

    def induced_matrix(self) -> IntMatrix:
        """The matrix whose rows the boundary words realize."""
        rows = []
        for word in self.discs:
            row = [0] * self.n_cycles
            for letter in word:
                row[abs(letter) - 1] += 1 if letter > 0 else -1
            rows.append(row)
        return IntMatrix.from_rows(rows)


def from_matrix(m: IntMatrix, ordering: str = "grouped") -> DiscComplexSpec:
    """Boundary words for a matrix with no zero rows or columns.

    "grouped" emits all copies of column 1, then column 2, ...;
    "interleaved" deals one copy of each remaining column per round.
    """
    if ordering not in ORDERINGS:
        raise ValueError(f"ordering must be one of {ORDERINGS}, got {ordering!r}")
    for i in range(m.rows):
        if not any(m.row(i)):
            raise ValueError(f"row {i + 1} of the matrix is zero")
    for j in range(m.cols):
        if not any(m[i, j] for i in range(m.rows)):
            raise ValueError(f"column {j + 1} of the matrix is zero")
    words = []
    for i in range(m.rows):
        row = m.row(i)
        if ordering == "grouped":
            word = []
            for j, x in enumerate(row, start=1):
                word.extend([j if x > 0 else -j] * abs(x))
        else:
            remaining = [abs(x) for x in row]
            word = []
            while any(remaining):
                for j, x in enumerate(row, start=1):
                    if remaining[j - 1]:
                        word.append(j if x > 0 else -j)
                        remaining[j - 1] -= 1
        words.append(tuple(word))
    return DiscComplexSpec(m.cols, tuple(words))


def cellular_homology(m: IntMatrix) -> tuple[AbelianGroup, AbelianGroup, AbelianGroup]:
    """(H0, H1, H2) of every complex built on ``m``.

    The matrix itself is the boundary map from discs to cycles: H0 = Z,
    H1 has free rank cols - rank plus the torsion of the Smith diagonal,
    H2 is free of rank rows - rank.
    """
    for i in range(m.rows):
        if not any(m.row(i)):
            raise ValueError(f"row {i + 1} of the matrix is zero")
    for j in range(m.cols):
        if not any(m[i, j] for i in range(m.rows)):
            raise ValueError(f"column {j + 1} of the matrix is zero")
    snf = smith_normal_form(m)
    r = snf.rank
    torsion = [f for f in snf.invariant_factors if f > 1]
    return (
        free_group(1),
        group_from_factors(torsion, m.cols - r),
        free_group(m.rows - r),
    )
