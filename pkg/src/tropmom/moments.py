"""Tropicalization of truncated moment cones over binomial-defined sets.

A set specification names one of the built-in semialgebraic sets (positive
orthant, unit cube, all of R^n, a toric cube) or lists pure binomial
inequalities x^a >= x^b directly.  Its tropicalization is the cone cut out
by the exponent differences, and the dual of that cone is the order cone C
that drives the function-cone constructions: the tropicalized moment cone
of a support A equals the C-convexity cone on A.

Facet normals translate back to inequalities between moments through
exponentiation: positive coefficients become left factors, negated
negative coefficients right factors.
"""

from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .cones import Cone
from .errors import PreconditionError
from .funcones import (
    GeneralizedConvexityCone,
    _cleared_weights,
    cone_K,
    cone_K_even,
)
from .lattice import AlmostEmptySimplex, PointConfig
from .linalg import IntVec, dot, primitive

_KINDS = ("orthant", "cube", "toric_cube", "binomials", "full_space")


class RegularSupportWarning(UserWarning):
    """The binomial system cuts out a lower-dimensional cone, so the
    tropicalization of the set may be strictly smaller than the cone of
    the exponent differences."""


def _intvec(v: Sequence[int]) -> IntVec:
    return tuple(int(x) for x in v)


@dataclass(frozen=True)
class SemialgSpec:
    """A semialgebraic set given by pure binomial inequalities.

    ``generators`` holds exponent pairs (a, b) meaning x^a - x^b >= 0; the
    cube, which is the system 1 >= x_i, carries the pairs (0, e_i), while
    the orthant and full space carry none.  ``q_matrix`` (rows are the d
    coordinates, columns the per-variable exponent vectors) parametrizes a
    toric cube x_j = t^{col_j} over t in [0, 1]^d.
    """

    n: int
    kind: str
    generators: tuple[tuple[IntVec, IntVec], ...] = ()
    q_matrix: Optional[tuple[IntVec, ...]] = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("ambient dimension must be positive")
        if self.kind not in _KINDS:
            raise ValueError(f"unknown set kind {self.kind!r}")
        gens = tuple(
            (_intvec(a), _intvec(b)) for a, b in self.generators
        )
        if self.kind == "cube" and not gens:
            gens = tuple(
                ((0,) * self.n, tuple(1 if j == i else 0 for j in range(self.n)))
                for i in range(self.n)
            )
        object.__setattr__(self, "generators", gens)
        if self.kind in ("orthant", "full_space") and gens:
            raise ValueError(f"{self.kind} takes no generators")
        if self.kind == "binomials" and not gens:
            raise ValueError("binomials kind requires at least one generator pair")
        for a, b in gens:
            if len(a) != self.n or len(b) != self.n:
                raise ValueError("generator exponent of wrong length")
            if any(x < 0 for x in a + b):
                raise ValueError("generator exponents must be nonnegative")
            if a == b:
                raise ValueError("generator pair with equal exponents")
        if self.kind == "toric_cube":
            if self.q_matrix is None:
                raise ValueError("toric_cube requires an exponent matrix")
            q = tuple(_intvec(row) for row in self.q_matrix)
            if not q or any(len(row) != self.n for row in q):
                raise ValueError("exponent matrix must have n columns")
            if any(x < 0 for row in q for x in row):
                raise ValueError("exponent matrix entries must be nonnegative")
            if any(all(row[j] == 0 for row in q) for j in range(self.n)):
                raise ValueError("exponent matrix has a zero column")
            object.__setattr__(self, "q_matrix", q)
        elif self.q_matrix is not None:
            raise ValueError("only toric_cube takes an exponent matrix")

    @classmethod
    def orthant(cls, n: int) -> "SemialgSpec":
        return cls(n, "orthant")

    @classmethod
    def cube(cls, n: int) -> "SemialgSpec":
        return cls(n, "cube")

    @classmethod
    def full_space(cls, n: int) -> "SemialgSpec":
        return cls(n, "full_space")

    @classmethod
    def toric_cube(cls, q: Sequence[Sequence[int]]) -> "SemialgSpec":
        q = tuple(_intvec(row) for row in q)
        if not q:
            raise ValueError("exponent matrix must be nonempty")
        return cls(len(q[0]), "toric_cube", q_matrix=q)

    @classmethod
    def binomials(
        cls, n: int, gens: Sequence[tuple[Sequence[int], Sequence[int]]]
    ) -> "SemialgSpec":
        return cls(n, "binomials", tuple((_intvec(a), _intvec(b)) for a, b in gens))

    def exponent_differences(self) -> tuple[IntVec, ...]:
        return tuple(
            tuple(x - y for x, y in zip(a, b)) for a, b in self.generators
        )


@dataclass(frozen=True)
class BinomialIneq:
    """A pure binomial inequality between moments, prod m_a^{p_a} >=
    prod m_b^{q_b}, with disjoint supports and coprime exponents."""

    plus: tuple[tuple[IntVec, int], ...]
    minus: tuple[tuple[IntVec, int], ...]

    def __post_init__(self):
        if not self.plus and not self.minus:
            raise ValueError("binomial inequality with both sides empty")
        if any(k <= 0 for _, k in self.plus + self.minus):
            raise ValueError("exponents must be positive")
        ps = {p for p, _ in self.plus}
        if len(ps) != len(self.plus) or len({p for p, _ in self.minus}) != len(self.minus):
            raise ValueError("repeated point on one side")
        if ps & {p for p, _ in self.minus}:
            raise ValueError("sides must have disjoint supports")
        if math.gcd(*(k for _, k in self.plus + self.minus)) != 1:
            raise ValueError("exponents must be coprime")

    def __str__(self) -> str:
        def side(entries):
            if not entries:
                return "1"
            return "*".join(
                "m(%s)%s" % (",".join(map(str, p)), f"^{k}" if k >= 2 else "")
                for p, k in entries
            )

        return f"{side(self.plus)} >= {side(self.minus)}"


def render_binomial(support: PointConfig, normal: Sequence[int]) -> BinomialIneq:
    """The binomial inequality of a valid inequality normal on R^A."""
    if len(normal) != len(support):
        raise ValueError("normal length does not match the support")
    v = primitive(_intvec(normal))
    if not any(v):
        raise ValueError("the zero vector has no binomial form")
    plus = tuple((p, c) for p, c in zip(support.points, v) if c > 0)
    minus = tuple((p, -c) for p, c in zip(support.points, v) if c < 0)
    return BinomialIneq(plus, minus)


def trop_of_set(s: SemialgSpec) -> Cone:
    """The cone cut out by the exponent differences of the generators.

    Equals the logarithmic limit set of the positive part when that cone
    is full dimensional; otherwise a RegularSupportWarning is emitted and
    the returned cone is only an upper bound.
    """
    if s.kind == "toric_cube":
        raise PreconditionError(
            "a toric cube tropicalizes through its pullback; use order_cone"
        )
    if s.kind == "full_space":
        return Cone.full_space(s.n)
    cone = Cone.from_hrep(s.n, s.exponent_differences())
    if not cone.is_full_dimensional():
        warnings.warn(
            RegularSupportWarning(
                "exponent differences span a lower-dimensional cone; the "
                "tropicalization may be strictly smaller"
            ),
            stacklevel=2,
        )
    return cone


def order_cone(s: SemialgSpec) -> Cone:
    """The dual of the set tropicalization: the cone generated by the
    exponent differences (for a toric cube, by the negated columns of the
    exponent matrix, placed in the parameter space R^d)."""
    if s.kind == "toric_cube":
        d = len(s.q_matrix)
        return Cone.from_vrep(
            d, [tuple(-row[j] for row in s.q_matrix) for j in range(s.n)]
        )
    return Cone.from_vrep(s.n, s.exponent_differences())


def _positive_functional(c: Cone) -> IntVec:
    # sum of the facet normals of a pointed cone is strictly positive on it
    phi = [0] * c.dim
    for a in c.ineqs:
        phi = [x + y for x, y in zip(phi, a)]
    return tuple(phi)


def semigroup_generation_check(s: SemialgSpec) -> bool:
    """Whether the exponent differences generate the full semigroup of
    lattice points of the order cone.

    Brute force: enumerate the Hilbert basis inside a bounding box and test
    each element for reachability.  Only ambient dimension <= 3 is
    supported, and the order cone must be pointed.
    """
    if s.kind == "toric_cube":
        raise PreconditionError(
            "semigroup generation is checked on the pullback of a toric cube"
        )
    n = s.n
    if n > 3:
        raise PreconditionError(
            "semigroup generation check supports ambient dimension <= 3 "
            "only; assert the hypothesis manually to skip it"
        )
    vs = [v for v in dict.fromkeys(s.exponent_differences())]
    if not vs:
        return True
    c = Cone.from_vrep(n, vs)
    if not c.is_pointed():
        raise PreconditionError(
            "semigroup generation check requires a pointed order cone"
        )
    radius = n * max(abs(x) for v in tuple(vs) + c.rays for x in v)
    box = [
        p
        for p in itertools.product(range(-radius, radius + 1), repeat=n)
        if any(p) and c.contains_point(p)
    ]
    members = set(box)
    hilbert = [
        z
        for z in box
        if not any(
            u != z and tuple(x - y for x, y in zip(z, u)) in members for u in box
        )
    ]
    phi = _positive_functional(c)
    vals = {v: dot(phi, v) for v in vs}

    def reachable(t: IntVec, seen: dict) -> bool:
        if not any(t):
            return True
        if t in seen:
            return seen[t]
        seen[t] = False
        budget = dot(phi, t)
        for v in vs:
            if vals[v] <= budget and reachable(
                tuple(x - y for x, y in zip(t, v)), seen
            ):
                seen[t] = True
                break
        return seen[t]

    seen: dict = {}
    return all(reachable(z, seen) for z in hilbert)


def trop_moment_cone(a: PointConfig, s: SemialgSpec) -> GeneralizedConvexityCone:
    """The tropicalized moment cone of the support over the specified set.

    Measures on all of R^n only certify through even powers, so the full
    space routes through the even-simplex cone; a toric cube pulls the
    support back through its exponent matrix and relabels the cube answer;
    every other kind is the order-cone convexity cone on the support.
    """
    if s.kind != "toric_cube" and s.n != a.n:
        raise ValueError("set specification dimension does not match the support")
    if s.kind == "full_space":
        return cone_K_even(a)
    if s.kind == "toric_cube":
        q = s.q_matrix
        d = len(q)
        image = [tuple(dot(row, p) for row in q) for p in a.points]
        if len(set(image)) != len(image):
            raise PreconditionError(
                "exponent matrix maps two support points to the same monomial"
            )
        pulled = PointConfig(image)
        inner = cone_K(pulled, Cone.nonpos_orthant(d))
        perm = [pulled.index(v) for v in image]
        relabel = lambda vec: tuple(vec[j] for j in perm)
        cone = Cone.from_hrep(
            len(a),
            [relabel(v) for v in inner.cone.ineqs],
            [relabel(v) for v in inner.cone.eqs],
        )
        return GeneralizedConvexityCone(
            "K", a, Cone.nonpos_orthant(d), cone, cone.ineqs
        )
    return cone_K(a, order_cone(s))


def binomial_facets(gc: GeneralizedConvexityCone) -> tuple[BinomialIneq, ...]:
    """The facets of a function cone as binomial moment inequalities."""
    return tuple(render_binomial(gc.support, v) for v in gc.cone.ineqs)


def amgm_moment_cone(t: AlmostEmptySimplex) -> BinomialIneq:
    """The binomial inequality describing the moment cone of an
    almost-empty simplex exactly: the weighted arithmetic-geometric mean
    inequality with cleared denominators."""
    c, total = _cleared_weights(t)
    plus = tuple(zip(t.vertices, c))
    minus = ((t.interior, total),)
    return BinomialIneq(plus, minus)
