"""Integer Smith normal form and first homology.

Matrices here are tiny (hundreds of rows at most), so the arithmetic stays in
exact Python integers; no coefficient growth surprises, no float rank
estimates.
"""
from __future__ import annotations

import math
from dataclasses import dataclass


def smith_invariants(rows) -> list[int]:
    """Nonzero invariant factors of an integer matrix, as a divisibility chain.

    Classic pivot-and-reduce elimination: move a least-magnitude entry to the
    pivot, clear its row and column by division with remainder (remainders
    become smaller pivots), then normalize the diagonal multiset with
    gcd/lcm exchanges, which realizes diag(a, b) = diag(gcd, lcm).
    """
    A = [list(map(int, r)) for r in rows]
    m = len(A)
    n = len(A[0]) if m else 0
    diag = []
    t = 0
    while True:
        pivot = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                a = A[i][j]
                if a != 0 and (best is None or abs(a) < best):
                    best = abs(a)
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        A[t], A[pi] = A[pi], A[t]
        for row in A:
            row[t], row[pj] = row[pj], row[t]
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
        clean = False
        while not clean:
            clean = True
            p = A[t][t]
            for i in range(t + 1, m):
                q = A[i][t] // p
                if q:
                    A[i] = [x - q * y for x, y in zip(A[i], A[t])]
                if A[i][t] != 0:
                    # remainder is a strictly smaller pivot
                    A[t], A[i] = A[i], A[t]
                    if A[t][t] < 0:
                        A[t] = [-x for x in A[t]]
                    clean = False
                    break
            if not clean:
                continue
            for j in range(t + 1, n):
                q = A[t][j] // p
                if q:
                    for row in A:
                        row[j] -= q * row[t]
                if A[t][j] != 0:
                    for row in A:
                        row[t], row[j] = row[j], row[t]
                    if A[t][t] < 0:
                        A[t] = [-x for x in A[t]]
                    clean = False
                    break
        diag.append(A[t][t])
        t += 1
        if t >= m or t >= n:
            break
    # gcd/lcm passes impose the divisibility chain
    changed = True
    while changed:
        changed = False
        for i in range(len(diag)):
            for j in range(i + 1, len(diag)):
                a, b = diag[i], diag[j]
                if b % a != 0:
                    g = math.gcd(a, b)
                    diag[i], diag[j] = g, a // g * b
                    changed = True
    return diag


@dataclass(frozen=True)
class H1Structure:
    """First homology as free rank plus torsion invariant factors (> 1)."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"


def homology_from_boundaries(n_edges: int, d1, d2) -> H1Structure:
    """H1 = ker(d1) / im(d2) from the two integral boundary maps."""
    inv1 = smith_invariants(d1) if d1 and d1[0] else []
    inv2 = smith_invariants(d2) if d2 and d2[0] else []
    rank1 = len(inv1)
    rank2 = len(inv2)
    free = n_edges - rank1 - rank2
    torsion = tuple(d for d in inv2 if d > 1)
    return H1Structure(free, torsion)
