"""Exact linear algebra over the rationals.

Vectors are tuples (ints where possible, fractions.Fraction at boundaries);
matrices are sequences of row vectors.  Nothing here ever rounds: every
operation is exact, and integer vectors are kept in primitive form (content 1)
wherever a scale-invariant object is represented.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

IntVec = tuple[int, ...]
RatVec = tuple[Fraction, ...]


def dot(u: Sequence, v: Sequence):
    assert len(u) == len(v)
    return sum(a * b for a, b in zip(u, v))


def vec_sub(u: Sequence, v: Sequence) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, u: Sequence) -> tuple:
    return tuple(c * a for a in u)


def content(v: Sequence[int]) -> int:
    g = 0
    for a in v:
        g = gcd(g, abs(a))
    return g


def primitive(v: Sequence[int]) -> IntVec:
    """Divide an integer vector by its content, keeping direction.

    The zero vector is returned unchanged; callers that must not see it are
    expected to filter first.
    """
    g = content(v)
    if g <= 1:
        return tuple(v)
    return tuple(a // g for a in v)


def integerize(v: Sequence[Fraction]) -> IntVec:
    """Scale a rational vector by a positive rational into primitive integer form."""
    lcm = 1
    for a in v:
        d = Fraction(a).denominator
        lcm = lcm // gcd(lcm, d) * d
    return primitive(tuple(int(a * lcm) for a in v))


def _echelon(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """In-place forward elimination; returns the nonzero rows."""
    if not rows:
        return []
    m, n = len(rows), len(rows[0])
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, m) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [a * inv for a in rows[r]]
        for i in range(m):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == m:
            break
    return rows[:r]


def rank(rows: Sequence[Sequence]) -> int:
    work = [[Fraction(a) for a in row] for row in rows]
    return len(_echelon(work))


def rref_int(rows: Sequence[Sequence[int]]) -> list[IntVec]:
    """Canonical basis of the row span: reduced echelon rows, primitive, pivots positive."""
    work = [[Fraction(a) for a in row] for row in rows]
    return [integerize(row) for row in _echelon(work)]


def kernel_basis(rows: Sequence[Sequence[int]], n: Optional[int] = None) -> list[IntVec]:
    """Canonical primitive basis of {x : row . x = 0 for every row}."""
    if n is None:
        if not rows:
            raise ValueError("kernel_basis needs rows or an explicit dimension")
        n = len(rows[0])
    reduced = rref_int(rows)
    pivots = []
    for row in reduced:
        pivots.append(next(j for j, a in enumerate(row) if a != 0))
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for j in free:
        x = [Fraction(0)] * n
        x[j] = Fraction(1)
        for row, pj in zip(reduced, pivots):
            x[pj] = -Fraction(row[j], row[pj])
        basis.append(integerize(x))
    return rref_int(basis)


def solve_linear(matrix: Sequence[Sequence], rhs: Sequence) -> Optional[RatVec]:
    """One exact solution of matrix . x = rhs (free variables set to 0), or None."""
    m = len(matrix)
    if m == 0:
        return ()
    n = len(matrix[0])
    aug = [[Fraction(a) for a in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    reduced = _echelon(aug)
    x = [Fraction(0)] * n
    for row in reduced:
        pivot = next((j for j, a in enumerate(row) if a != 0), None)
        if pivot is None:
            continue
        if pivot == n:
            return None
        x[pivot] = row[n] / row[pivot]
    return tuple(x)


def barycentric_coords(vertices: Sequence[Sequence[int]], point: Sequence) -> Optional[RatVec]:
    """Affine weights of `point` w.r.t. affinely independent `vertices`.

    Returns the unique rationals lam with sum(lam) = 1 and
    sum(lam_i * vertices_i) = point, or None when the point lies outside the
    affine span.  Raises ValueError if the vertices are affinely dependent.
    """
    if not vertices:
        raise ValueError("no vertices")
    n = len(vertices[0])
    k = len(vertices)
    homog = [tuple(v) + (1,) for v in vertices]
    if rank(homog) < k:
        raise ValueError("vertices are affinely dependent")
    matrix = [[Fraction(v[i]) for v in vertices] for i in range(n)]
    matrix.append([Fraction(1)] * k)
    rhs = [Fraction(a) for a in point] + [Fraction(1)]
    lam = solve_linear(matrix, rhs)
    if lam is None:
        return None
    return lam
