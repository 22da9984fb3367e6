"""Exact feasibility for ``A x >= b, x >= 0`` by a Phase I simplex.

Dense tableau over Fractions with Bland's rule, which cannot cycle.  Sizes in
this package are a few dozen rows, so nothing clever is needed.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def feasible_point(A: Sequence[Sequence], b: Sequence) -> list | None:
    """A rational ``x >= 0`` with ``A x >= b``, or ``None`` if infeasible."""
    m = len(A)
    if m == 0:
        return []
    n = len(A[0])
    # rows: A x - s + a = b  (after flipping rows with b < 0 so that b >= 0)
    # columns: x (n), s (m), a (m)
    ncol = n + 2 * m
    T = []
    for i in range(m):
        sign = 1 if b[i] >= 0 else -1
        row = [Fraction(sign * v) for v in A[i]]
        row += [Fraction(-sign if j == i else 0) for j in range(m)]
        row += [Fraction(1 if j == i else 0) for j in range(m)]
        row.append(Fraction(sign * b[i]))
        T.append(row)
    basis = [n + m + i for i in range(m)]
    # objective: minimise sum of artificials  ->  reduced costs row
    cost = [Fraction(0)] * (ncol + 1)
    for i in range(m):
        for j in range(ncol + 1):
            cost[j] -= T[i][j]
    for i in range(m):
        cost[n + m + i] += 1
    while True:
        enter = next((j for j in range(ncol) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            if T[i][enter] > 0:
                ratio = T[i][-1] / T[i][enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return None  # unbounded phase I cannot happen; treat defensively
        r = best[1]
        p = T[r][enter]
        T[r] = [v / p for v in T[r]]
        for i in range(m):
            if i != r and T[i][enter] != 0:
                f = T[i][enter]
                T[i] = [a - f * c for a, c in zip(T[i], T[r])]
        if cost[enter] != 0:
            f = cost[enter]
            cost = [a - f * c for a, c in zip(cost, T[r])]
        basis[r] = enter
    if -cost[-1] != 0:
        return None
    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            x[j] = T[i][-1]
    return x
