"""Independent brute-force oracles.  Nothing here shares code with the
package: determinants come from cofactor expansion, invariant factors from
gcds of k x k minors, components from union-find, and sequence validity
from the direct quartic scan of the definition.
"""

from __future__ import annotations

from itertools import combinations
from math import gcd


def det_cofactor(rows) -> int:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * det_cofactor(minor)
    return total


def snf_factors_by_minor_gcds(rows) -> list[int]:
    """alpha_k = d_k / d_{k-1}, d_k = gcd of all k x k minors (d_0 = 1).

    Exponential; fine for the tiny matrices the tests feed it.
    """
    m, n = len(rows), len(rows[0])
    prev = 1
    out = []
    for k in range(1, min(m, n) + 1):
        g = 0
        for ris in combinations(range(m), k):
            for cjs in combinations(range(n), k):
                sub = [[rows[i][j] for j in cjs] for i in ris]
                g = gcd(g, det_cofactor(sub))
            if g == 1:
                # gcd over the remaining minors cannot shrink further
                break
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


def component_count(vertices, edges) -> int:
    parent = {v: v for v in vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return len({find(v) for v in vertices})


def check_valid_bruteforce(perms, mat_rows):
    """Mirror of the package checker, by the quartic definition scan.

    Returns ("ok",), ("cond1", disc), or ("cond2", (i1, j1, i2, j2)) with
    the lexicographically first ordered violation.
    """
    n = len(perms)
    want = list(range(1, n + 1))
    for i, p in enumerate(perms, start=1):
        if sorted(p) != want or p[0] != 1:
            return ("cond1", i)
    for i1 in range(1, n + 1):
        for j1 in range(1, n + 1):
            for i2 in range(1, n + 1):
                if i2 == i1:
                    continue
                for j2 in range(1, n + 1):
                    a1 = perms[i1 - 1][j1 - 1]
                    b1 = perms[i1 - 1][j1 % n]
                    a2 = perms[i2 - 1][j2 - 1]
                    b2 = perms[i2 - 1][j2 % n]
                    if a1 != a2 or b1 != b2:
                        continue
                    if (
                        mat_rows[i1 - 1][a1 - 1] == mat_rows[i2 - 1][a2 - 1]
                        and mat_rows[i1 - 1][b1 - 1] == mat_rows[i2 - 1][b2 - 1]
                    ):
                        return ("cond2", (i1, j1, i2, j2))
    return ("ok",)
