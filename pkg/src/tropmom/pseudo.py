"""Tropicalization of truncated pseudo-moment cones.

The degree-d pseudo-moment relaxation of a binomial-defined set S
tropicalizes to a polyhedral cone cut out on the monomials of degree at
most d by midpoint inequalities h(a1) + h(a2) >= 2h(b) and monotonicity
inequalities h(a) >= h(b) for a - b in the order cone of S.  Restricting
to a support A means projecting that cone onto the A-coordinates; the
projection is computed by the certified-oracle method, never by ray
enumeration of the high-dimensional cone.

Three stabilized constructions bypass the degree parameter: the cubical
hull (cube), the finite extension support A-hat (sets whose negated order
cone strictly surrounds the nonnegative orthant), and even-pair midpoints
on the convex hull (global sums of squares).  A scan over degrees reports
where the truncated cones stop changing, and the gap report lists the
binomial moment inequalities that no sum-of-squares certificate of any
degree can reach.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .cones import Cone, cone_equal, project_hrep
from .errors import PreconditionError, ResourceLimitError
from .funcones import GeneralizedConvexityCone, _cover_pairs, cone_M
from .lattice import PointConfig, a_hat, cubical_hull, delta_simplex, lattice_points, midpoint_triples
from .linalg import IntVec, dot
from .moments import BinomialIneq, SemialgSpec, order_cone, render_binomial, trop_moment_cone

_TRUNCATED_KINDS = ("orthant", "cube", "binomials")


@dataclass(frozen=True)
class PseudoMomentTrop:
    """A tropicalized pseudo-moment cone on a support.

    ``cone`` lives in R^A with coordinates in the order of ``support``;
    ``extension_support`` records the larger configuration E the
    constraints were written on before projecting.  ``degree`` is None for
    the stabilized constructions, which hold for every sufficiently large
    truncation degree.
    """

    support: PointConfig
    spec: SemialgSpec
    degree: Optional[int]
    stabilized: bool
    cone: Cone
    extension_support: PointConfig


@dataclass(frozen=True)
class ScanReport:
    """Degree-by-degree truncation results and the observed stabilization.

    ``first_stable`` is the smallest scanned degree whose cone equals
    every later scanned cone; ``matches_closed_form`` compares that final
    cone against the stabilized construction when one exists for the set
    kind (None otherwise).
    """

    support: PointConfig
    spec: SemialgSpec
    d_min: int
    d_max: int
    results: tuple[PseudoMomentTrop, ...]
    first_stable: int
    closed_form: Optional[PseudoMomentTrop]
    matches_closed_form: Optional[bool]


def _constraint_rows(e: PointConfig, c: Cone) -> list[IntVec]:
    """Midpoint and monotonicity inequality normals on R^E.

    Monotone pairs enter through their covering relation; transitivity
    makes the generated cone equal to the one from all comparable pairs.
    """
    rows = []
    for t in midpoint_triples(e):
        row = [0] * len(e)
        row[e.index(t.a1)] += 1
        row[e.index(t.a2)] += 1
        row[e.index(t.b)] -= 2
        rows.append(tuple(row))
    for i, j in _cover_pairs(e.points, c):
        row = [0] * len(e)
        row[i] += 1
        row[j] -= 1
        rows.append(tuple(row))
    return rows


def _guard_extension(e: PointConfig, limit: int) -> PointConfig:
    if len(e) > limit:
        raise ResourceLimitError(
            f"extension support has {len(e)} points, exceeding the limit "
            f"of {limit}; raise max_extension_points to proceed"
        )
    return e


def _projected(a: PointConfig, e: PointConfig, c: Cone) -> Cone:
    return project_hrep(len(e), _constraint_rows(e, c), [e.index(p) for p in a])


def f_s_d(spec: SemialgSpec, d: int) -> GeneralizedConvexityCone:
    """The degree-d pseudo-moment constraint cone on all monomials of
    degree at most d: midpoint-convexity plus order-cone monotonicity."""
    if spec.kind not in _TRUNCATED_KINDS:
        raise PreconditionError(
            f"no degree-truncated pseudo-moment cone for set kind {spec.kind!r}"
        )
    return cone_M(delta_simplex(spec.n, d), order_cone(spec))


def trop_pseudomoment(
    a: PointConfig,
    spec: SemialgSpec,
    d: int,
    max_extension_points: int = 40,
) -> PseudoMomentTrop:
    """Projection of the degree-d constraint cone onto the A-coordinates."""
    if spec.kind not in _TRUNCATED_KINDS:
        raise PreconditionError(
            f"no degree-truncated pseudo-moment cone for set kind {spec.kind!r}"
        )
    if spec.n != a.n:
        raise ValueError("set specification dimension does not match the support")
    for p in a:
        if sum(p) > d:
            raise PreconditionError(
                f"support point {p} has total degree {sum(p)}, above the "
                f"truncation degree {d}"
            )
    e = _guard_extension(delta_simplex(a.n, d), max_extension_points)
    cone = _projected(a, e, order_cone(spec))
    return PseudoMomentTrop(a, spec, d, False, cone, e)


def trop_pseudomoment_cube_stable(
    a: PointConfig, max_extension_points: int = 40
) -> PseudoMomentTrop:
    """Stabilized pseudo-moment tropicalization over the unit cube: the
    truncated cones coincide with this one for every large enough degree,
    with the cubical hull of A as the extension support."""
    e = _guard_extension(cubical_hull(a), max_extension_points)
    cone = _projected(a, e, Cone.nonpos_orthant(a.n))
    return PseudoMomentTrop(a, SemialgSpec.cube(a.n), None, True, cone, e)


def clamp_extension(box: PointConfig, values: Sequence, alpha: Sequence[int]):
    """Extension off a coordinate box of a midpoint-convex, coordinate
    nonincreasing function: read the value at the nearest box point below,
    clamping each coordinate to the box maximum."""
    if len(values) != len(box):
        raise ValueError("one value per box point required")
    hi = [max(p[i] for p in box) for i in range(box.n)]
    phi = tuple(min(int(x), h) for x, h in zip(alpha, hi))
    return values[box.index(phi)]


def trop_pseudomoment_stable(
    a: PointConfig, spec: SemialgSpec, max_extension_points: int = 40
) -> PseudoMomentTrop:
    """Stabilized pseudo-moment tropicalization for sets whose negated
    order cone strictly surrounds the nonnegative orthant; the extension
    support is the finite midpoint-completion A-hat."""
    if spec.kind == "toric_cube":
        raise PreconditionError(
            "no stabilized pseudo-moment construction for set kind 'toric_cube'"
        )
    if spec.n != a.n:
        raise ValueError("set specification dimension does not match the support")
    c = order_cone(spec)
    for i in range(a.n):
        ei = tuple(1 if j == i else 0 for j in range(a.n))
        neg = tuple(-x for x in ei)
        if c.eqs or not c.is_pointed() or not all(dot(nu, neg) > 0 for nu in c.ineqs):
            raise PreconditionError(
                f"stabilization hypothesis fails: basis vector {ei} is not "
                "in the interior of the negated order cone"
            )
    e = _guard_extension(a_hat(a, c), max_extension_points)
    cone = _projected(a, e, c)
    return PseudoMomentTrop(a, spec, None, True, cone, e)


def sigma_dual_trop(
    a: PointConfig, max_extension_points: int = 40
) -> PseudoMomentTrop:
    """Tropicalized dual of the sums-of-squares cone on A, for measures on
    all of R^n: midpoint inequalities between even points of the lattice
    hull of A, projected to the A-coordinates."""
    e = _guard_extension(lattice_points(a.points), max_extension_points)
    rows = []
    pts = e.points
    for i, v in enumerate(pts):
        if any(x % 2 for x in v):
            continue
        for w in pts[i + 1 :]:
            if any(x % 2 for x in w):
                continue
            mid = tuple((x + y) // 2 for x, y in zip(v, w))
            if mid not in e:
                continue
            row = [0] * len(pts)
            row[e.index(v)] += 1
            row[e.index(w)] += 1
            row[e.index(mid)] -= 2
            rows.append(tuple(row))
    cone = project_hrep(len(e), rows, [e.index(p) for p in a])
    return PseudoMomentTrop(
        a, SemialgSpec.full_space(a.n), None, True, cone, e
    )


def stabilized_pseudomoment(
    a: PointConfig, spec: SemialgSpec, max_extension_points: int = 40
) -> PseudoMomentTrop:
    """The stabilized construction appropriate to the set kind."""
    if spec.kind == "cube":
        return trop_pseudomoment_cube_stable(a, max_extension_points)
    if spec.kind == "binomials":
        return trop_pseudomoment_stable(a, spec, max_extension_points)
    if spec.kind == "full_space":
        return sigma_dual_trop(a, max_extension_points)
    raise PreconditionError(
        f"no stabilized pseudo-moment construction for set kind {spec.kind!r}"
    )


def stabilization_scan(
    a: PointConfig,
    spec: SemialgSpec,
    d_max: int,
    max_extension_points: int = 40,
) -> ScanReport:
    """Truncated cones from the support degree up to d_max, the first
    degree whose cone persists through the end of the scan, and agreement
    with the stabilized construction when the kind has one."""
    d_min = max(sum(p) for p in a)
    if d_max < d_min:
        raise PreconditionError(
            f"d_max = {d_max} is below the support degree {d_min}"
        )
    results = tuple(
        trop_pseudomoment(a, spec, d, max_extension_points)
        for d in range(d_min, d_max + 1)
    )
    first = d_max
    for k in range(len(results) - 1, -1, -1):
        if cone_equal(results[k].cone, results[-1].cone):
            first = d_min + k
        else:
            break
    closed: Optional[PseudoMomentTrop] = None
    if spec.kind == "cube":
        closed = trop_pseudomoment_cube_stable(a, max_extension_points)
    elif spec.kind == "binomials":
        try:
            closed = trop_pseudomoment_stable(a, spec, max_extension_points)
        except PreconditionError:
            closed = None
    matches = (
        None if closed is None else cone_equal(results[-1].cone, closed.cone)
    )
    return ScanReport(a, spec, d_min, d_max, results, first, closed, matches)


def normal_valid_on(cone: Cone, normal: Sequence[int]) -> bool:
    """Whether <normal, x> >= 0 holds for every x in the cone."""
    return all(dot(normal, r) >= 0 for r in cone.rays) and all(
        dot(normal, l) == 0 for l in cone.lineality
    )


def gap_report(
    a: PointConfig, spec: SemialgSpec, max_extension_points: int = 40
) -> tuple[BinomialIneq, ...]:
    """Facets of the tropicalized moment cone that fail on the stabilized
    pseudo-moment cone: binomial moment inequalities with no
    sum-of-squares certificate at any degree."""
    moment = trop_moment_cone(a, spec)
    facets = moment.cone.ineqs
    if not facets:
        return ()
    pseudo = stabilized_pseudomoment(a, spec, max_extension_points)
    gaps = [nu for nu in facets if not normal_valid_on(pseudo.cone, nu)]
    return tuple(render_binomial(a, nu) for nu in gaps)
