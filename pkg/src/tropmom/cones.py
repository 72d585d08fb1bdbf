"""Rational polyhedral cones with exact dual representations.

A cone is stored in up to two representations:

* H-rep: facet inequalities ``<a, x> >= 0`` and equations ``<e, x> = 0``,
  with primitive integer normals;
* V-rep: extreme rays (primitive integer vectors, reduced modulo the
  lineality space) plus a lineality basis in integer reduced row echelon
  form.

Either representation is computed from the other on demand by the double
description method; all arithmetic is integer/rational and exact.  Both
representations are minimal and canonically ordered once computed, so two
equal cones built the same way print identically.  Equality of cones as
sets is decided by mutual generator containment, never by string
comparison.

The tropical hull of a cone Y is computed from its definition as the
intersection of the Minkowski sums Y + V_i, where V_i is the cone of
vectors whose i-th coordinate is minimal; the dual route sums the slices
of the dual cone over the opposite orthant sectors.  Both routes are kept
because they check each other.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .linalg import IntVec, dot, integerize, kernel_basis, primitive, rank, rref_int

Rows = tuple[IntVec, ...]


def _unit(n: int, i: int) -> IntVec:
    return tuple(1 if j == i else 0 for j in range(n))


def _clean_rows(rows: Iterable[Sequence[int]]) -> list[IntVec]:
    """Primitive, nonzero, deduplicated, original order."""
    seen = set()
    out = []
    for row in rows:
        v = primitive(tuple(int(a) for a in row))
        if any(v) and v not in seen:
            seen.add(v)
            out.append(v)
    return out


def _pivot_col(row: Sequence[int]) -> int:
    return next(j for j, a in enumerate(row) if a != 0)


def _reduce_mod(basis: Sequence[IntVec], vec: Sequence[int]) -> IntVec:
    """Canonical representative of vec modulo the span of RREF basis rows.

    Every elimination step rescales by a positive integer, so for rays the
    direction is preserved.
    """
    v = list(vec)
    for row in basis:
        p = _pivot_col(row)
        if v[p] != 0:
            a, c = row[p], v[p]
            if a < 0:
                a, row = -a, tuple(-x for x in row)
            v = [a * x - c * y for x, y in zip(v, row)]
    return primitive(v)


def double_description(
    dim: int, ineqs: Sequence[IntVec], eqs: Sequence[IntVec]
) -> tuple[list[IntVec], list[IntVec]]:
    """V-representation of {x : ineqs . x >= 0, eqs . x = 0}.

    Returns (rays, lineality_basis), both primitive; rays are extreme and
    pairwise distinct modulo lineality but not yet canonically reduced.

    Inequalities are inserted in the order given (after deduplication);
    intermediate ray counts, and hence running time, can depend heavily on
    that order, so callers with structured systems should order them so
    successive partial cones stay close to the final one.
    """
    lin: list[IntVec] = [_unit(dim, i) for i in range(dim)]
    for a in _clean_rows(eqs):
        vals = [dot(a, b) for b in lin]
        j = next((i for i, t in enumerate(vals) if t != 0), None)
        if j is None:
            continue
        b0, s = lin[j], vals[j]
        if s < 0:
            b0, s = tuple(-x for x in b0), -s
        lin = [
            primitive(tuple(s * x - t * y for x, y in zip(b, b0)))
            for b, t in zip(lin, vals)
            if b is not lin[j]
        ]
        lin = [b for b in lin if any(b)]

    constraints = _clean_rows(ineqs)
    rays: list[list] = []  # [vector, tight-bitmask over constraint indices]
    for k, a in enumerate(constraints):
        bit = 1 << k
        vals = [dot(a, b) for b in lin]
        j = next((i for i, t in enumerate(vals) if t != 0), None)
        if j is not None:
            b0, s = lin[j], vals[j]
            if s < 0:
                b0, s = tuple(-x for x in b0), -s
            lin = [
                primitive(tuple(s * x - t * y for x, y in zip(b, b0)))
                for b, t in zip(lin, vals)
                if b is not lin[j]
            ]
            lin = [b for b in lin if any(b)]
            for entry in rays:
                t = dot(a, entry[0])
                if t:
                    entry[0] = primitive(
                        tuple(s * x - t * y for x, y in zip(entry[0], b0))
                    )
                entry[1] |= bit
            # the pivot itself survives on the strict side of the cut;
            # as former lineality it is tight for every earlier constraint
            rays.append([b0, bit - 1])
            continue
        pos, zero, neg = [], [], []
        for entry in rays:
            t = dot(a, entry[0])
            if t > 0:
                pos.append((entry, t))
            elif t < 0:
                neg.append((entry, t))
            else:
                entry[1] |= bit
                zero.append(entry)
        if not neg:
            rays = [e for e, _ in pos] + zero
            continue
        current = rays
        combos = []
        for pe, tp in pos:
            for ne, tn in neg:
                meet = pe[1] & ne[1]
                for other in current:
                    if other is not pe and other is not ne and meet & other[1] == meet:
                        break
                else:
                    vec = primitive(
                        tuple(tp * x - tn * y for x, y in zip(ne[0], pe[0]))
                    )
                    combos.append([vec, meet | bit])
        rays = [e for e, _ in pos] + zero + combos

    # canonical reduction + safety net: drop anything not on a minimal face
    lin = rref_int(lin)
    by_vec: dict[IntVec, int] = {}
    for vec, mask in rays:
        red = _reduce_mod(lin, vec)
        if any(red):
            by_vec.setdefault(red, mask)
    items = list(by_vec.items())
    out = [
        v
        for i, (v, m) in enumerate(items)
        if not any(i != j and m & mj == m for j, (_, mj) in enumerate(items))
    ]
    return sorted(out), lin


class Cone:
    """An exact rational polyhedral cone in R^dim."""

    __slots__ = ("dim", "_ineqs", "_eqs", "_rays", "_lin", "_h_min", "_v_min")

    def __init__(self, dim: int):
        if dim < 0:
            raise ValueError("dimension must be nonnegative")
        self.dim = dim
        self._ineqs: Optional[Rows] = None
        self._eqs: Optional[Rows] = None
        self._rays: Optional[Rows] = None
        self._lin: Optional[Rows] = None
        self._h_min = False
        self._v_min = False

    # -- construction -------------------------------------------------

    @classmethod
    def from_hrep(
        cls, dim: int, ineqs: Iterable[Sequence[int]], eqs: Iterable[Sequence[int]] = ()
    ) -> "Cone":
        c = cls(dim)
        c._ineqs = tuple(_clean_rows(ineqs))
        c._eqs = tuple(_clean_rows(eqs))
        for row in c._ineqs + c._eqs:
            if len(row) != dim:
                raise ValueError("normal vector of wrong length")
        return c

    @classmethod
    def from_vrep(
        cls, dim: int, rays: Iterable[Sequence[int]], lineality: Iterable[Sequence[int]] = ()
    ) -> "Cone":
        c = cls(dim)
        c._rays = tuple(_clean_rows(rays))
        c._lin = tuple(_clean_rows(lineality))
        for row in c._rays + c._lin:
            if len(row) != dim:
                raise ValueError("generator of wrong length")
        return c

    @classmethod
    def full_space(cls, dim: int) -> "Cone":
        return cls.from_vrep(dim, (), [_unit(dim, i) for i in range(dim)])

    @classmethod
    def origin(cls, dim: int) -> "Cone":
        return cls.from_vrep(dim, (), ())

    @classmethod
    def nonneg_orthant(cls, dim: int) -> "Cone":
        return cls.from_hrep(dim, [_unit(dim, i) for i in range(dim)])

    @classmethod
    def nonpos_orthant(cls, dim: int) -> "Cone":
        return cls.from_hrep(
            dim, [tuple(-x for x in _unit(dim, i)) for i in range(dim)]
        )

    # -- representation completion ------------------------------------

    def _compute_v(self) -> None:
        rays, lin = double_description(self.dim, self._ineqs, self._eqs)
        self._rays = tuple(rays)
        self._lin = tuple(lin)
        self._v_min = True

    def _compute_h(self) -> None:
        normals, eq_basis = double_description(self.dim, self._rays, self._lin)
        self._ineqs = tuple(normals)
        self._eqs = tuple(eq_basis)
        self._h_min = True

    def _minimal_v(self) -> None:
        if self._v_min:
            return
        if self._rays is None:
            self._compute_v()
            return
        # generators may be redundant: pass through the dual and back
        self._minimal_h()
        self._compute_v()

    def _minimal_h(self) -> None:
        if self._h_min:
            return
        if self._ineqs is None:
            self._compute_h()
            return
        if not self._v_min and self._rays is None:
            self._compute_v()
            self._v_min = True
        self._compute_h()

    @property
    def rays(self) -> Rows:
        self._minimal_v()
        return self._rays

    @property
    def lineality(self) -> Rows:
        self._minimal_v()
        return self._lin

    @property
    def ineqs(self) -> Rows:
        self._minimal_h()
        return self._ineqs

    @property
    def eqs(self) -> Rows:
        self._minimal_h()
        return self._eqs

    # -- basic queries -------------------------------------------------

    def cone_dim(self) -> int:
        return rank(self.rays + self.lineality)

    def is_pointed(self) -> bool:
        return not self.lineality

    def is_full_dimensional(self) -> bool:
        return self.cone_dim() == self.dim

    def contains_point(self, vec: Sequence) -> bool:
        """Membership of a rational vector, from the H-representation."""
        return all(dot(a, vec) >= 0 for a in self.ineqs) and all(
            dot(e, vec) == 0 for e in self.eqs
        )

    def contains_point_interior(self, vec: Sequence) -> bool:
        """Strict membership: interior relative to the full ambient space."""
        return not self.eqs and all(dot(a, vec) > 0 for a in self.ineqs)

    def contains_cone(self, other: "Cone") -> bool:
        if self.dim != other.dim:
            raise ValueError("ambient dimension mismatch")
        for r in other.rays:
            if not self.contains_point(r):
                return False
        for l in other.lineality:
            if any(dot(a, l) != 0 for a in self.ineqs):
                return False
            if any(dot(e, l) != 0 for e in self.eqs):
                return False
        return True

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cone):
            return NotImplemented
        return self.contains_cone(other) and other.contains_cone(self)

    def __hash__(self):
        return hash((self.dim, self.rays, self.lineality))

    def __repr__(self) -> str:
        return (
            f"Cone(dim={self.dim}, rays={len(self.rays)}, "
            f"lineality={len(self.lineality)}, facets={len(self.ineqs)})"
        )

    # -- operations -----------------------------------------------------

    def dual(self) -> "Cone":
        """The cone of linear functionals nonnegative on this cone."""
        self._minimal_v()
        self._minimal_h()
        c = Cone(self.dim)
        c._ineqs, c._eqs = self._rays, self._lin
        c._rays, c._lin = self._ineqs, self._eqs
        c._h_min = c._v_min = True
        return c

    def intersect(self, other: "Cone") -> "Cone":
        if self.dim != other.dim:
            raise ValueError("ambient dimension mismatch")
        return Cone.from_hrep(
            self.dim, self.ineqs + other.ineqs, self.eqs + other.eqs
        )

    def minkowski_sum(self, other: "Cone") -> "Cone":
        if self.dim != other.dim:
            raise ValueError("ambient dimension mismatch")
        return Cone.from_vrep(
            self.dim, self.rays + other.rays, self.lineality + other.lineality
        )

    def project(self, coords: Sequence[int]) -> "Cone":
        """Image under the coordinate projection x -> (x[c] for c in coords)."""
        for c in coords:
            if not 0 <= c < self.dim:
                raise ValueError("projection coordinate out of range")
        take = lambda v: tuple(v[c] for c in coords)
        return Cone.from_vrep(
            len(coords), [take(r) for r in self.rays], [take(l) for l in self.lineality]
        )


def cone_equal(a: Cone, b: Cone) -> bool:
    return a == b


def tropical_hull(y: Cone) -> Cone:
    """Smallest tropically convex closed cone containing y.

    Intersection over coordinates i of y + V_i, where V_i is the cone of
    vectors with minimal i-th coordinate (generated by the unit vectors
    away from i together with the all-ones line).
    """
    n = y.dim
    if n == 0:
        return Cone.origin(0)
    ones = tuple(1 for _ in range(n))
    pieces = []
    for i in range(n):
        vi = Cone.from_vrep(
            n, [_unit(n, j) for j in range(n) if j != i], [ones]
        )
        pieces.append(y.minkowski_sum(vi))
    ineqs: list[IntVec] = []
    eqs: list[IntVec] = []
    for p in pieces:
        ineqs.extend(p.ineqs)
        eqs.extend(p.eqs)
    return Cone.from_hrep(n, ineqs, eqs)


def tropical_hull_dual(y: Cone) -> Cone:
    """Dual of the tropical hull, assembled without computing the hull.

    Sums, over coordinates i, the slice of the dual of y lying in the
    sector of vectors with sole negative coordinate i and coordinate
    sum zero.
    """
    n = y.dim
    if n == 0:
        return Cone.origin(0)
    ydual = y.dual()
    ones = tuple(1 for _ in range(n))
    total: Optional[Cone] = None
    for i in range(n):
        sector = Cone.from_hrep(
            n,
            [
                tuple(-x for x in _unit(n, i)) if j == i else _unit(n, j)
                for j in range(n)
            ],
            [ones],
        )
        piece = ydual.intersect(sector)
        total = piece if total is None else total.minkowski_sum(piece)
    total._minimal_v()
    return total


def fourier_motzkin_project(cone: Cone, coords: Sequence[int]) -> Cone:
    """Coordinate projection computed by Fourier-Motzkin elimination.

    Cross-check oracle for the generator-based Cone.project; quadratic
    blowup per eliminated variable restricts it to small ambient
    dimension (<= 12).
    """
    n = cone.dim
    if n > 12:
        raise ValueError("fourier_motzkin_project is limited to dimension <= 12")
    keep = list(coords)
    ineqs = [list(a) for a in cone.ineqs]
    eqs = [list(e) for e in cone.eqs]
    for j in range(n):
        if j in keep:
            continue
        pivot = next((e for e in eqs if e[j] != 0), None)
        if pivot is not None:
            s = pivot[j]
            sign = 1 if s > 0 else -1
            mag = abs(s)
            eqs = [
                [mag * x - sign * e[j] * y for x, y in zip(e, pivot)]
                for e in eqs
                if e is not pivot
            ]
            ineqs = [
                [mag * x - sign * a[j] * y for x, y in zip(a, pivot)]
                for a in ineqs
            ]
        else:
            pos = [a for a in ineqs if a[j] > 0]
            neg = [a for a in ineqs if a[j] < 0]
            zero = [a for a in ineqs if a[j] == 0]
            ineqs = zero + [
                [p[j] * x - q[j] * y for x, y in zip(q, p)]
                for p in pos
                for q in neg
            ]
        ineqs = [list(v) for v in dict.fromkeys(primitive(a) for a in ineqs if any(a))]
        eqs = [list(v) for v in dict.fromkeys(primitive(e) for e in eqs if any(e))]
    take = lambda v: tuple(v[c] for c in keep)
    return Cone.from_hrep(len(keep), [take(a) for a in ineqs], [take(e) for e in eqs])


def project_hrep(dim: int, ineqs: Iterable[Sequence[int]], coords: Sequence[int]) -> Cone:
    """Exact coordinate projection of {h : <row, h> >= 0 for every row},
    computed without enumerating the rays of the source cone.

    Grows a certified inner approximation of the image: each candidate
    facet or span normal of the approximation is tested for validity on
    the source system by exact linear programming; a failed test yields a
    member of the source cone whose image strictly enlarges the
    approximation, and when every candidate passes, the approximation and
    the image coincide.  Suited to sources of high ambient dimension whose
    image is small, where double description on the source is infeasible.
    """
    from ._simplex import valid_on_system

    rows = tuple(_clean_rows(ineqs))
    coords = list(coords)
    if len(set(coords)) != len(coords):
        raise ValueError("projection coordinates must be distinct")
    for c in coords:
        if not 0 <= c < dim:
            raise ValueError("projection coordinate out of range")
    k = len(coords)
    take = lambda v: tuple(v[c] for c in coords)
    if not rows:
        return Cone.full_space(k)
    if k == dim:
        # a permutation of coordinates transports the H-rep directly
        return Cone.from_hrep(k, [take(a) for a in rows])
    lins = [take(v) for v in kernel_basis(rows, dim)]
    rays: list[IntVec] = []
    certified: set[IntVec] = set()
    members: set[IntVec] = set()
    for _ in range(100000):
        approx = Cone.from_vrep(k, rays, lins)
        candidates = list(approx.ineqs)
        for e in approx.eqs:
            candidates.append(e)
            candidates.append(tuple(-x for x in e))
        grew = False
        for nu in candidates:
            if nu in certified:
                continue
            lift = [0] * dim
            for j, c in enumerate(coords):
                lift[c] = nu[j]
            ok, w = valid_on_system(rows, tuple(lift))
            if ok:
                certified.add(nu)
                continue
            y = integerize(take(w))
            if not any(y):
                raise ArithmeticError("projection certificate vanished")
            if y in members:
                # a certificate can repeat within a round once the cone
                # has already grown past the stale candidate
                if not grew:
                    raise ArithmeticError("projection oracle made no progress")
                continue
            members.add(y)
            rays.append(y)
            grew = True
        if not grew:
            return approx
    raise ArithmeticError("projection oracle did not converge")
