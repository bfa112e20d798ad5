"""
Exact dense linear algebra over the rationals.

Matrices are plain lists of rows whose entries are ints or
``fractions.Fraction``; everything here is exact, there is no floating
point anywhere.  Internally each row is scaled to integers (clear the
denominators, divide out the content) and elimination runs in
fraction-free integer arithmetic, which keeps the hot loops on machine
ints for the problem sizes this package meets.  Back substitution
reintroduces Fractions only at the end.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

Scalar = int | Fraction


def identity_matrix(k: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(k)] for i in range(k)]


def mat_mul(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]]) -> list[list[Scalar]]:
    if a and b and len(a[0]) != len(b):
        raise ValueError("inner dimensions do not match")
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a: Sequence[Sequence[Scalar]], v: Sequence[Scalar]) -> list[Scalar]:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def transpose(a: Sequence[Sequence[Scalar]]) -> list[list[Scalar]]:
    return [list(col) for col in zip(*a)]


def _integer_row(row: Sequence[Scalar]) -> list[int]:
    """Scale a row by the lcm of its denominators, then divide out the gcd."""
    denom = 1
    for x in row:
        if isinstance(x, Fraction):
            denom = denom * x.denominator // math.gcd(denom, x.denominator)
    ints = [int(x * denom) if isinstance(x, Fraction) else x * denom for x in row]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def _eliminate(rows: list[list[int]], ncols: int) -> list[tuple[int, int]]:
    """Forward elimination in place on the first ``ncols`` columns.

    Returns the pivot list [(row, col), ...].  Row combinations are
    fraction-free (pivot * row - factor * pivot_row) followed by division
    by the row content, so entries stay integral and small.
    """
    pivots: list[tuple[int, int]] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        # pick the nonzero entry of smallest magnitude to limit growth
        best = None
        for i in range(r, nrows):
            v = abs(rows[i][c])
            if v and (best is None or v < best[0]):
                best = (v, i)
                if v == 1:
                    break
        if best is None:
            continue
        i = best[1]
        rows[r], rows[i] = rows[i], rows[r]
        prow = rows[r]
        p = prow[c]
        for j in range(r + 1, nrows):
            f = rows[j][c]
            if not f:
                continue
            row = rows[j]
            new = [0] * c + [p * a - f * b for a, b in zip(row[c:], prow[c:])]
            g = 0
            for x in new:
                g = math.gcd(g, x)
                if g == 1:
                    break
            if g > 1:
                new = [x // g for x in new]
            rows[j] = new
        pivots.append((r, c))
        r += 1
    return pivots


class Echelon:
    """Row echelon form of a matrix, reusable across right-hand sides.

    Eliminates the augmented matrix [A | I], so each solve costs one
    matrix-vector product with the recorded row operations plus a back
    substitution, instead of a fresh elimination.
    """

    def __init__(self, matrix: Sequence[Sequence[Scalar]]):
        self.nrows = len(matrix)
        self.ncols = len(matrix[0]) if self.nrows else 0
        rows = [
            _integer_row(list(row) + [1 if j == i else 0 for j in range(self.nrows)])
            for i, row in enumerate(matrix)
        ]
        self.pivots = _eliminate(rows, self.ncols)
        self.rows = rows

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def solve(self, rhs: Sequence[Scalar]) -> list[Fraction] | None:
        """One exact solution of A x = rhs with free variables set to 0,
        or None when the system is inconsistent."""
        if len(rhs) != self.nrows:
            raise ValueError("right-hand side has the wrong length")
        nc = self.ncols
        transformed = [
            sum(e * b for e, b in zip(row[nc:], rhs) if b) for row in self.rows
        ]
        for r in range(self.rank, self.nrows):
            if transformed[r] != 0:
                return None
        x: list[Fraction] = [Fraction(0)] * nc
        for r, c in reversed(self.pivots):
            row = self.rows[r]
            acc = transformed[r] - sum(
                row[j] * x[j] for j in range(c + 1, nc) if x[j]
            )
            x[c] = Fraction(acc, row[c])
        return x

    @property
    def unique(self) -> bool:
        return self.rank == self.ncols


def rank(matrix: Sequence[Sequence[Scalar]]) -> int:
    """Rank over the rationals.

    >>> rank([[1, 2], [2, 4], [0, 1]])
    2
    """
    if not matrix:
        return 0
    rows = [_integer_row(row) for row in matrix]
    return len(_eliminate(rows, len(matrix[0])))


def solve(
    matrix: Sequence[Sequence[Scalar]], rhs: Sequence[Scalar]
) -> tuple[list[Fraction], bool] | None:
    """Solve A x = rhs exactly.

    Returns (solution, unique) when consistent -- with free variables set
    to 0 and ``unique`` false when the system is underdetermined -- and
    None when there is no solution.

    >>> solve([[1, 0], [0, 2]], [3, 5])
    ([Fraction(3, 1), Fraction(5, 2)], True)
    >>> solve([[1], [1]], [1, 2]) is None
    True
    """
    if len(matrix) != len(rhs):
        raise ValueError("matrix and right-hand side sizes do not match")
    ech = Echelon(matrix)
    x = ech.solve(rhs)
    if x is None:
        return None
    return x, ech.unique


def nullspace(matrix: Sequence[Sequence[Scalar]]) -> list[list[Fraction]]:
    """An exact basis of the right nullspace {x : A x = 0}.

    One basis vector per free column, with that free variable set to 1.

    >>> nullspace([[1, 1]])
    [[Fraction(-1, 1), Fraction(1, 1)]]
    """
    if not matrix:
        return []
    ncols = len(matrix[0])
    rows = [_integer_row(row) for row in matrix]
    pivots = _eliminate(rows, ncols)
    pivot_cols = [c for _, c in pivots]
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for f in free_cols:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for r, c in reversed(pivots):
            row = rows[r]
            acc = -sum(row[j] * x[j] for j in range(c + 1, ncols) if x[j])
            x[c] = Fraction(acc, row[c])
        basis.append(x)
    return basis
