"""Exact rational phase-one simplex for conic hull membership.

Decides whether a target vector lies in the nonnegative span of given
integer rows, and on failure produces a Farkas certificate: a vector
nonnegative against every row but negative against the target.  Dantzig
pricing with a switch to Bland's rule after an iteration budget keeps the
method fast in practice and immune to cycling.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .linalg import IntVec

_ZERO = Fraction(0)
_ONE = Fraction(1)


def nonneg_combination(
    rows: Sequence[Sequence[int]], target: Sequence[int]
) -> tuple[bool, Optional[tuple[Fraction, ...]]]:
    """Membership of target in cone(rows).

    Returns (True, None) when some nonnegative rational combination of the
    rows equals the target, else (False, w) with <w, row> >= 0 for every
    row and <w, target> < 0.
    """
    m = len(target)
    if m == 0:
        raise ValueError("empty ambient dimension")
    n = len(rows)
    sign = [1 if t >= 0 else -1 for t in target]
    # tableau over the basis of artificial variables; row i is scaled so
    # that the i-th artificial column is the i-th unit vector
    tab = [
        [Fraction(sign[i] * row[i]) for row in rows]
        + [_ONE if k == i else _ZERO for k in range(m)]
        + [Fraction(sign[i] * target[i])]
        for i in range(m)
    ]
    # reduced costs: objective is the sum of the artificials, all basic
    obj = [
        -sum(tab[i][j] for i in range(m)) + (_ONE if j >= n else _ZERO)
        for j in range(n + m)
    ]
    obj.append(-sum(tab[i][-1] for i in range(m)))
    basis = list(range(n, n + m))
    budget = 8 * (n + m)
    it = 0
    while True:
        it += 1
        if it <= budget:
            enter, best = -1, _ZERO
            for j, c in enumerate(obj[:-1]):
                if c < best:
                    enter, best = j, c
        else:
            enter = next((j for j, c in enumerate(obj[:-1]) if c < 0), -1)
        if enter < 0:
            break
        leave, ratio = -1, None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                r = tab[i][-1] / a
                if ratio is None or r < ratio or (r == ratio and basis[i] < basis[leave]):
                    leave, ratio = i, r
        if leave < 0:
            raise ArithmeticError("phase-one objective unbounded below")
        prow = tab[leave]
        piv = prow[enter]
        if piv != 1:
            for j in range(n + m + 1):
                prow[j] /= piv
        for vec in tab + [obj]:
            if vec is prow:
                continue
            f = vec[enter]
            if f:
                for j in range(n + m + 1):
                    if prow[j]:
                        vec[j] -= f * prow[j]
        basis[leave] = enter
    if obj[-1] == 0:
        return True, None
    w = tuple(sign[i] * (obj[n + i] - _ONE) for i in range(m))
    return False, w


def valid_on_system(rows: Sequence[IntVec], normal: Sequence[int]):
    """Whether <normal, h> >= 0 follows from the system <row, h> >= 0.

    Returns (True, None) or (False, h) with h satisfying every row but
    <normal, h> < 0.
    """
    ok, w = nonneg_combination(rows, normal)
    if ok:
        return True, None
    assert w is not None
    viol = sum(Fraction(c) * x for c, x in zip(normal, w))
    assert viol < 0, "certificate does not violate the normal"
    for row in rows:
        assert sum(Fraction(c) * x for c, x in zip(row, w)) >= 0, (
            "certificate violates the system"
        )
    return False, w
