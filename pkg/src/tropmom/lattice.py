"""Finite point configurations in the nonnegative integer lattice.

A PointConfig is an ordered tuple of distinct nonnegative integer vectors;
the order fixes the coordinate order of every function cone built on top of
it.  Sets produced by enumeration (lattice points of a polytope, boxes,
degree truncations, extension supports) are returned in graded
lexicographic order: by coordinate sum first, lexicographically within a
degree.

Convex hull membership is decided exactly by homogenizing: a point p lies
in conv(V) iff (p, 1) lies in the cone spanned by {(v, 1) : v in V}.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence

from .cones import Cone
from .errors import PreconditionError
from .linalg import IntVec, barycentric_coords, dot, rank

_glex = lambda p: (sum(p), p)


def graded_lex_sorted(points: Iterable[Sequence[int]]) -> list[IntVec]:
    return sorted({tuple(int(a) for a in p) for p in points}, key=_glex)


@dataclass(frozen=True)
class PointConfig:
    """Ordered distinct points in Z^n with nonnegative coordinates."""

    points: tuple[IntVec, ...]

    def __init__(self, points: Iterable[Sequence[int]]):
        pts = tuple(tuple(int(a) for a in p) for p in points)
        if not pts:
            raise ValueError("a point configuration must be nonempty")
        n = len(pts[0])
        if n == 0:
            raise ValueError("points must have at least one coordinate")
        for p in pts:
            if len(p) != n:
                raise ValueError("points of mixed dimension")
            if any(a < 0 for a in p):
                raise ValueError(f"negative coordinate in point {p}")
        if len(set(pts)) != len(pts):
            raise ValueError("points must be distinct")
        object.__setattr__(self, "points", pts)

    @property
    def n(self) -> int:
        return len(self.points[0])

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p) -> bool:
        return tuple(p) in set(self.points)

    def index(self, p) -> int:
        return self.points.index(tuple(p))


class MidpointTriple(NamedTuple):
    a1: IntVec
    a2: IntVec
    b: IntVec


class AlmostEmptySimplex(NamedTuple):
    vertices: tuple[IntVec, ...]
    interior: IntVec
    weights: tuple[Fraction, ...]


def _hull_cone(vertices: Sequence[IntVec]) -> Cone:
    return Cone.from_vrep(len(vertices[0]) + 1, [tuple(v) + (1,) for v in vertices])


def _in_hull(hull: Cone, p: Sequence[int]) -> bool:
    return hull.contains_point(tuple(p) + (1,))


def lattice_points(vertices: Sequence[Sequence[int]]) -> PointConfig:
    """All integer points of conv(vertices), graded-lex."""
    verts = [tuple(int(a) for a in v) for v in vertices]
    hull = _hull_cone(verts)
    n = len(verts[0])
    lo = [min(v[i] for v in verts) for i in range(n)]
    hi = [max(v[i] for v in verts) for i in range(n)]
    found = [
        p
        for p in itertools.product(*(range(l, h + 1) for l, h in zip(lo, hi)))
        if _in_hull(hull, p)
    ]
    return PointConfig(graded_lex_sorted(found))


def midpoint_triples(cfg: PointConfig) -> tuple[MidpointTriple, ...]:
    """Triples (a1, a2, b) of configuration points with a1 + a2 = 2b, a1 != a2.

    Each unordered pair appears once, with a1 before a2 in graded-lex order;
    the list is sorted by (b, a1).
    """
    pts = graded_lex_sorted(cfg.points)
    members = set(pts)
    out = []
    for i, a1 in enumerate(pts):
        for a2 in pts[i + 1 :]:
            s = tuple(x + y for x, y in zip(a1, a2))
            if any(c % 2 for c in s):
                continue
            b = tuple(c // 2 for c in s)
            if b in members:
                out.append(MidpointTriple(a1, a2, b))
    out.sort(key=lambda t: (_glex(t.b), _glex(t.a1), _glex(t.a2)))
    return tuple(out)


def almost_empty_simplices(
    cfg: PointConfig, even_only: bool = False
) -> tuple[AlmostEmptySimplex, ...]:
    """Simplices on configuration points whose hull meets the configuration
    in exactly the vertices plus one relative-interior point.

    With even_only, only simplices with all-even vertex coordinates are
    reported (the interior point is unrestricted).
    """
    pts = graded_lex_sorted(cfg.points)
    n = cfg.n
    out = []
    for size in range(2, min(len(pts), n + 1) + 1):
        for verts in itertools.combinations(pts, size):
            if even_only and any(c % 2 for v in verts for c in v):
                continue
            if rank([v + (1,) for v in verts]) < size:
                continue
            hull = _hull_cone(verts)
            inside = [p for p in pts if p not in verts and _in_hull(hull, p)]
            if len(inside) != 1:
                continue
            b = inside[0]
            weights = barycentric_coords(verts, b)
            if weights is None or any(w <= 0 for w in weights):
                continue
            out.append(AlmostEmptySimplex(verts, b, weights))
    out.sort(key=lambda s: (len(s.vertices), s.vertices, s.interior))
    return tuple(out)


def mediated_set(vertices: Sequence[Sequence[int]]) -> PointConfig:
    """Largest subset S of conv(vertices) cap Z^n with every non-vertex
    point of S a midpoint of two distinct points of S.

    Computed by discarding, from all lattice points of the hull, the
    non-vertex points that are not midpoints, until nothing changes.
    """
    verts = [tuple(int(a) for a in v) for v in vertices]
    if rank([v + (1,) for v in verts]) < len(verts):
        raise PreconditionError("mediated_set requires affinely independent vertices")
    vset = set(verts)
    current = set(lattice_points(verts).points)
    while True:
        mids = set()
        for s, t in itertools.combinations(current, 2):
            tot = tuple(x + y for x, y in zip(s, t))
            if not any(c % 2 for c in tot):
                mids.add(tuple(c // 2 for c in tot))
        nxt = vset | (current & mids)
        if nxt == current:
            return PointConfig(graded_lex_sorted(current))
        current = nxt


def cubical_hull(cfg: PointConfig) -> PointConfig:
    """Lattice points of the smallest coordinate box containing the configuration."""
    n = cfg.n
    lo = [min(p[i] for p in cfg) for i in range(n)]
    hi = [max(p[i] for p in cfg) for i in range(n)]
    return PointConfig(
        graded_lex_sorted(
            itertools.product(*(range(l, h + 1) for l, h in zip(lo, hi)))
        )
    )


def delta_simplex(n: int, d: int) -> PointConfig:
    """Nonnegative integer vectors in n coordinates with coordinate sum <= d."""
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    pts = [
        p for p in itertools.product(range(d + 1), repeat=n) if sum(p) <= d
    ]
    return PointConfig(graded_lex_sorted(pts))


def a_hat(cfg: PointConfig, order_cone: Cone) -> PointConfig:
    """Finite extension support for configurations monotone against a cone
    whose negative strictly contains the nonnegative orthant.

    K is the intersection of the translates a - C over configuration
    points a; the result collects W = (Z^n_{>=0} \\ K) union the
    configuration, closes W under completing midpoint pairs (2b - a), and
    intersects with the nonnegative orthant.
    """
    n = cfg.n
    if order_cone.dim != n:
        raise ValueError("order cone dimension does not match the configuration")
    if order_cone.eqs or not order_cone.is_pointed():
        raise PreconditionError(
            "stabilization hypothesis fails: -C does not strictly contain "
            "the nonnegative orthant"
        )
    normals = order_cone.ineqs
    for i in range(n):
        e = tuple(1 if j == i else 0 for j in range(n))
        if any(dot(a, e) >= 0 for a in normals):
            raise PreconditionError(
                "stabilization hypothesis fails: -C does not strictly contain "
                "the nonnegative orthant"
            )
    bounds = [min(dot(a, p) for p in cfg) for a in normals]
    in_k = lambda x: all(dot(a, x) <= b for a, b in zip(normals, bounds))
    m = max(1, max(c for p in cfg for c in p))
    while True:
        shell = [
            p
            for p in itertools.product(range(m + 1), repeat=n)
            if max(p) == m
        ]
        if all(in_k(p) for p in shell):
            break
        m *= 2
        if m > 1 << 20:
            raise PreconditionError("extension support does not close up")
    w = {
        p
        for p in itertools.product(range(m + 1), repeat=n)
        if not in_k(p)
    } | set(cfg.points)
    hat = {
        tuple(2 * bb - aa for aa, bb in zip(a, b))
        for a in w
        for b in w
    }
    hat = {p for p in hat if all(c >= 0 for c in p)}
    return PointConfig(graded_lex_sorted(hat))
