"""Cones of convex and midpoint-convex functions on a finite support.

For a point configuration A in Z^n and a partial order cone C, the two
function cones in R^A are:

* kind "K": functions h with sum(l_i h(a_i)) >= h(b) for every convex
  combination sum(l_i a_i) with sum(l_i a_i) - b in C.  Computed as the
  tropical conical hull of the evaluation image of the dual cone of C,
  so its facets are exactly the irredundant binomial certificates.
* kind "M": the midpoint relaxation, keeping only the constraints
  h(a1) + h(a2) >= 2 h(b) over configuration triples a1 + a2 = 2b and
  h(a1) >= h(a2) over pairs with a1 - a2 in C.
* kind "K_even": convexity constraints of the almost-empty simplices
  whose vertices are all even.

K is always contained in M.  Coordinates of all function cones follow the
order of the configuration points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .cones import Cone, tropical_hull
from .errors import PreconditionError
from .lattice import (
    AlmostEmptySimplex,
    MidpointTriple,
    PointConfig,
    almost_empty_simplices,
    graded_lex_sorted,
    mediated_set,
    midpoint_triples,
)
from .linalg import IntVec, dot, primitive


@dataclass(frozen=True)
class GeneralizedConvexityCone:
    """A cone of functions on a configuration, coordinates in support order.

    ``defining_ineqs`` is the literal inequality system the cone is defined
    by: the facet list for kind K, the full midpoint plus order system for
    kind M (the ``cone`` may be built from an equivalent irredundant
    subsystem), and the even-simplex system for kind K_even.
    """

    kind: str
    support: PointConfig
    partial_order_cone: Optional[Cone]
    cone: Cone
    defining_ineqs: tuple[IntVec, ...]

    def facet_normals(self) -> tuple[IntVec, ...]:
        return self.cone.ineqs


def _cleared_weights(s: AlmostEmptySimplex) -> tuple[tuple[int, ...], int]:
    """Barycentric weights of the interior point as integers (c_1..c_k, L)
    with c_i / L = weight_i; gcd(c_1, .., c_k, L) = 1."""
    lcm = 1
    for w in s.weights:
        lcm = lcm * w.denominator // math.gcd(lcm, w.denominator)
    c = [int(w * lcm) for w in s.weights]
    g = math.gcd(lcm, *c)
    return tuple(x // g for x in c), lcm // g


def _simplex_normals(
    a: PointConfig, simplices: Sequence[AlmostEmptySimplex]
) -> list[IntVec]:
    out = []
    for s in simplices:
        normal = [0] * len(a)
        c, total = _cleared_weights(s)
        for v, ci in zip(s.vertices, c):
            normal[a.index(v)] = ci
        normal[a.index(s.interior)] = -total
        out.append(primitive(tuple(normal)))
    return out


def cone_K(a: PointConfig, c: Cone) -> GeneralizedConvexityCone:
    """The cone of C-convex functions on the configuration.

    The dual cone of C is mapped through u -> (<a, u>)_{a in A}; the result
    is the tropical conical hull of the image, with minimal facet system.
    """
    if c.dim != a.n:
        raise ValueError("order cone dimension does not match the configuration")
    cd = c.dual()
    image = lambda u: tuple(dot(p, u) for p in a.points)
    y = Cone.from_vrep(
        len(a), [image(u) for u in cd.rays], [image(l) for l in cd.lineality]
    )
    hull = tropical_hull(y)
    return GeneralizedConvexityCone("K", a, c, hull, hull.ineqs)


def cone_K_facets_via_simplices(a: PointConfig) -> tuple[IntVec, ...]:
    """One inequality sum(c_i h(v_i)) >= L h(b) per almost-empty simplex.

    Independent route to the plain convexity cone: the returned system
    generates a cone equal to cone_K(a, {0}).
    """
    return tuple(_simplex_normals(a, almost_empty_simplices(a)))


def cone_K_even(a: PointConfig) -> GeneralizedConvexityCone:
    """Convexity constraints of the all-even almost-empty simplices.

    This is the tropicalization of the moment cone of measures on all of
    R^n, where only even powers certify nonnegativity.
    """
    normals = _simplex_normals(a, almost_empty_simplices(a, even_only=True))
    cone = Cone.from_hrep(len(a), normals)
    return GeneralizedConvexityCone("K_even", a, None, cone, tuple(normals))


def _cover_pairs(points: Sequence[IntVec], c: Cone) -> list[tuple[int, int]]:
    """Index pairs (i, j) with p_i - p_j in C and no configuration point
    strictly between them in the C-order; transitivity recovers the rest."""
    rel = {
        (i, j)
        for i, p in enumerate(points)
        for j, q in enumerate(points)
        if i != j and c.contains_point(tuple(x - y for x, y in zip(p, q)))
    }
    return sorted(
        (i, j)
        for i, j in rel
        if not any(
            k != i and k != j and (i, k) in rel and (k, j) in rel
            for k in range(len(points))
        )
    )


def cone_M(a: PointConfig, c: Cone) -> GeneralizedConvexityCone:
    """The midpoint relaxation of cone_K: only the constraints from
    configuration midpoint triples and from C-comparable pairs.

    The defining system lists every triple and every comparable pair; the
    cone itself is built from the comparable pairs' covering relation,
    which generates the same cone by transitivity.
    """
    if c.dim != a.n:
        raise ValueError("order cone dimension does not match the configuration")
    m = len(a)
    pts = a.points

    def e(i: int, j: int, coeff_i: int, coeff_j: int, k: int = -1, coeff_k: int = 0):
        v = [0] * m
        v[i] += coeff_i
        v[j] += coeff_j
        if k >= 0:
            v[k] += coeff_k
        return tuple(v)

    mids = [
        e(a.index(t.a1), a.index(t.a2), 1, 1, a.index(t.b), -2)
        for t in midpoint_triples(a)
    ]
    dec_all = [
        e(i, j, 1, -1)
        for i, p in enumerate(pts)
        for j, q in enumerate(pts)
        if i != j and c.contains_point(tuple(x - y for x, y in zip(p, q)))
    ]
    dec_cover = [e(i, j, 1, -1) for i, j in _cover_pairs(pts, c)]
    cone = Cone.from_hrep(m, mids + dec_cover)
    return GeneralizedConvexityCone("M", a, c, cone, tuple(mids + dec_all))


def _segment_members(a: PointConfig, p: IntVec, q: IntVec) -> list[IntVec]:
    """Configuration points on the closed segment from p to q."""
    d = tuple(x - y for x, y in zip(q, p))
    j = next(k for k, x in enumerate(d) if x)
    out = []
    for x in a:
        r = tuple(u - v for u, v in zip(x, p))
        if all(r[k] * d[j] == r[j] * d[k] for k in range(len(d))):
            t = Fraction(r[j], d[j])
            if 0 <= t <= 1:
                out.append(x)
    return out


def is_midpoint_facet(a: PointConfig, t: MidpointTriple) -> bool:
    """Whether the midpoint inequality of the triple is irredundant in the
    midpoint-only cone of the configuration.

    Among the configuration points on the segment [a1, a2], the largest
    subset S is computed in which every point other than the endpoints is
    the midpoint of two distinct members forming a pair other than
    {a1, a2}; deleting all violators of the current set each pass reaches
    the greatest such S regardless of order.  The triple is a facet iff b
    drops out.
    """
    if t not in set(midpoint_triples(a)):
        raise PreconditionError("triple is not a midpoint triple of the configuration")
    ends = {t.a1, t.a2}
    s = set(_segment_members(a, t.a1, t.a2))
    while True:
        drop = []
        for x in s:
            if x in ends:
                continue
            for y in s:
                if y == x:
                    continue
                z = tuple(2 * u - v for u, v in zip(x, y))
                if z in s and {y, z} != ends:
                    break
            else:
                drop.append(x)
        if not drop:
            return t.b not in s
        s.difference_update(drop)


def projection_equality_KM(a: PointConfig) -> bool:
    """True when every almost-empty-simplex interior point belongs to the
    mediated set of its vertices; then midpoint constraints on any lattice
    superset of the hull project exactly onto the convexity cone."""
    return all(
        s.interior in mediated_set(s.vertices)
        for s in almost_empty_simplices(a)
    )
