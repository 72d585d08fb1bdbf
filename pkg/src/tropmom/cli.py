"""Command-line front end.

JSON problem files in, canonical JSON (or plain-text inequality lists)
out.  A problem file names a support, a semialgebraic set, an optional
truncation degree, and options; each subcommand runs one top-level
computation.  Output field order and sorting are fixed so that identical
inputs produce byte-identical output.

Exit codes: 0 success, 2 input or schema error, 3 mathematical
precondition failure, 4 resource guard tripped.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings
from fractions import Fraction
from typing import Any, NamedTuple, Optional, Sequence

from .cones import Cone
from .errors import PreconditionError, ResourceLimitError, SchemaError
from .lattice import PointConfig, lattice_points, mediated_set
from .linalg import IntVec, integerize, primitive, rref_int
from .moments import (
    SemialgSpec,
    render_binomial,
    semigroup_generation_check,
    trop_moment_cone,
)
from .pseudo import (
    normal_valid_on,
    stabilization_scan,
    stabilized_pseudomoment,
    trop_pseudomoment,
)

_SET_KINDS = ("orthant", "cube", "full_space", "toric_cube", "binomials")
_DEFAULT_EXTENSION_LIMIT = 40


class Problem(NamedTuple):
    support: PointConfig
    spec: SemialgSpec
    degree: Optional[int]
    assume_generated: bool
    max_extension_points: int


def _bad(path: str, want: str) -> SchemaError:
    return SchemaError(f"{path}: expected {want}")


def _as_int(value: Any, path: str, positive: bool = False) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise _bad(path, "an integer")
    if positive and value < 1:
        raise _bad(path, "a positive integer")
    return value


def _as_vector(value: Any, path: str, length: int) -> tuple[int, ...]:
    if not isinstance(value, list):
        raise _bad(path, "a list of integers")
    vec = tuple(_as_int(x, f"{path}[{i}]") for i, x in enumerate(value))
    if len(vec) != length:
        raise _bad(path, f"a vector of length {length}")
    return vec


def _check_keys(doc: Any, path: str, allowed: set, required: set) -> None:
    if not isinstance(doc, dict):
        raise _bad(path, "an object")
    for key in doc:
        if key not in allowed:
            raise SchemaError(f"{path}.{key}: unknown field")
    for key in sorted(required):
        if key not in doc:
            raise SchemaError(f"{path}.{key}: missing field")


def _parse_set(doc: Any, n: int) -> SemialgSpec:
    if not isinstance(doc, dict):
        raise _bad("problem.set", "an object")
    kind = doc.get("kind")
    if kind not in _SET_KINDS:
        raise SchemaError(
            "problem.set.kind: expected one of " + ", ".join(_SET_KINDS)
        )
    extra = {"toric_cube": {"Q"}, "binomials": {"gens"}}.get(kind, set())
    _check_keys(doc, "problem.set", {"kind"} | extra, {"kind"} | extra)
    try:
        if kind == "orthant":
            return SemialgSpec.orthant(n)
        if kind == "cube":
            return SemialgSpec.cube(n)
        if kind == "full_space":
            return SemialgSpec.full_space(n)
        if kind == "toric_cube":
            q = doc["Q"]
            if not isinstance(q, list) or not q:
                raise _bad("problem.set.Q", "a non-empty list of rows")
            rows = [
                _as_vector(r, f"problem.set.Q[{i}]", n) for i, r in enumerate(q)
            ]
            return SemialgSpec.toric_cube(rows)
        gens = doc["gens"]
        if not isinstance(gens, list) or not gens:
            raise _bad("problem.set.gens", "a non-empty list of generators")
        pairs = []
        for i, g in enumerate(gens):
            _check_keys(
                g, f"problem.set.gens[{i}]", {"plus", "minus"}, {"plus", "minus"}
            )
            pairs.append(
                (
                    _as_vector(g["plus"], f"problem.set.gens[{i}].plus", n),
                    _as_vector(g["minus"], f"problem.set.gens[{i}].minus", n),
                )
            )
        return SemialgSpec.binomials(n, pairs)
    except SchemaError:
        raise
    except ValueError as exc:
        raise SchemaError(f"problem.set: {exc}") from None


def parse_problem(doc: Any) -> Problem:
    """Validate a problem document and build the typed inputs.

    Unknown fields are rejected at every level; a typo in an exponent
    vector should fail loudly, not define a different set.
    """
    _check_keys(
        doc,
        "problem",
        {"ambient_dim", "support", "set", "degree", "options"},
        {"ambient_dim", "support", "set"},
    )
    n = _as_int(doc["ambient_dim"], "problem.ambient_dim", positive=True)
    raw = doc["support"]
    if not isinstance(raw, list) or not raw:
        raise _bad("problem.support", "a non-empty list of integer vectors")
    points = [
        _as_vector(v, f"problem.support[{i}]", n) for i, v in enumerate(raw)
    ]
    try:
        support = PointConfig(points)
    except ValueError as exc:
        raise SchemaError(f"problem.support: {exc}") from None
    spec = _parse_set(doc["set"], n)
    degree = None
    if "degree" in doc:
        degree = _as_int(doc["degree"], "problem.degree", positive=True)
    assume = False
    limit = _DEFAULT_EXTENSION_LIMIT
    if "options" in doc:
        opts = doc["options"]
        _check_keys(
            opts,
            "problem.options",
            {"assume_semigroup_generated", "max_extension_points"},
            set(),
        )
        if "assume_semigroup_generated" in opts:
            if not isinstance(opts["assume_semigroup_generated"], bool):
                raise _bad(
                    "problem.options.assume_semigroup_generated", "a boolean"
                )
            assume = opts["assume_semigroup_generated"]
        if "max_extension_points" in opts:
            limit = _as_int(
                opts["max_extension_points"],
                "problem.options.max_extension_points",
                positive=True,
            )
    return Problem(support, spec, degree, assume, limit)


def _load(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc.strerror or exc}") from None
    except json.JSONDecodeError as exc:
        raise SchemaError(
            f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}"
        ) from None


def reduced_rays(cone: Cone) -> list[IntVec]:
    """Extreme rays in a canonical gauge: each ray is reduced modulo the
    lineality space by zeroing the pivot coordinates of its row-reduced
    basis, then made primitive and lex-sorted."""
    basis = rref_int(cone.lineality)
    pivots = [next(i for i, x in enumerate(b) if x) for b in basis]
    out = []
    for r in cone.rays:
        vec = [Fraction(x) for x in r]
        for b, j in zip(basis, pivots):
            if vec[j]:
                f = Fraction(vec[j], b[j])
                vec = [x - f * Fraction(y) for x, y in zip(vec, b)]
        out.append(primitive(integerize(vec)))
    out.sort()
    return out


def _facet_entries(support: PointConfig, normals: Sequence[IntVec]) -> list:
    return [
        {
            "normal": list(nu),
            "binomial": str(render_binomial(support, nu)),
        }
        for nu in sorted(normals)
    ]


def _result(
    support: PointConfig,
    cone: Cone,
    notes: Sequence[str],
    stabilized_at: Optional[int],
) -> dict:
    return {
        "facets": _facet_entries(support, cone.ineqs),
        "extreme_rays_mod_lineality": [list(r) for r in reduced_rays(cone)],
        "lineality_dim": len(cone.lineality),
        "warnings": list(notes),
        "stabilized_at": stabilized_at,
    }


def _collect(record) -> list[str]:
    return [str(w.message) for w in record]


def _require_generated(spec: SemialgSpec, assume: bool, notes: list) -> None:
    """Gate the stabilized route for binomial sets on the semigroup
    hypothesis, unless the caller asserts it."""
    if spec.kind != "binomials":
        return
    if assume:
        notes.append("semigroup generation assumed, not checked")
        return
    if not semigroup_generation_check(spec):
        raise PreconditionError(
            "the exponent differences do not generate the lattice points of "
            "their cone as a semigroup; pass --assume-semigroup-generated to "
            "proceed anyway"
        )


def _resolve_limit(args, prob: Problem) -> int:
    if args.max_extension_points is None:
        return prob.max_extension_points
    if args.max_extension_points < 1:
        raise SchemaError("--max-extension-points: expected a positive integer")
    return args.max_extension_points


def _cmd_moment(args) -> dict:
    prob = parse_problem(_load(args.file))
    with warnings.catch_warnings(record=True) as rec:
        warnings.simplefilter("always")
        gc = trop_moment_cone(prob.support, prob.spec)
    return _result(prob.support, gc.cone, _collect(rec), None)


def _cmd_pseudomoment(args) -> dict:
    prob = parse_problem(_load(args.file))
    degree = args.degree if args.degree is not None else prob.degree
    if degree is not None and degree < 1:
        raise SchemaError("--degree: expected a positive integer")
    limit = _resolve_limit(args, prob)
    assume = args.assume_semigroup_generated or prob.assume_generated
    notes: list[str] = []
    with warnings.catch_warnings(record=True) as rec:
        warnings.simplefilter("always")
        if degree is not None:
            pm = trop_pseudomoment(prob.support, prob.spec, degree, limit)
        else:
            _require_generated(prob.spec, assume, notes)
            pm = stabilized_pseudomoment(prob.support, prob.spec, limit)
            notes.append("stable (closed form)")
    return _result(prob.support, pm.cone, _collect(rec) + notes, None)


def _cmd_gap(args) -> dict:
    prob = parse_problem(_load(args.file))
    limit = _resolve_limit(args, prob)
    assume = args.assume_semigroup_generated or prob.assume_generated
    notes: list[str] = []
    with warnings.catch_warnings(record=True) as rec:
        warnings.simplefilter("always")
        moment = trop_moment_cone(prob.support, prob.spec)
        facets = moment.cone.ineqs
        pseudo = None
        bad: list[IntVec] = []
        if facets:
            _require_generated(prob.spec, assume, notes)
            pseudo = stabilized_pseudomoment(prob.support, prob.spec, limit)
            bad = [
                nu for nu in facets if not normal_valid_on(pseudo.cone, nu)
            ]
        else:
            notes.append(
                "moment cone has no facets; pseudo-moment side not computed"
            )
    return {
        "facets": _facet_entries(prob.support, bad),
        "extreme_rays_mod_lineality": (
            [list(r) for r in reduced_rays(pseudo.cone)] if pseudo else []
        ),
        "lineality_dim": len(pseudo.cone.lineality) if pseudo else 0,
        "warnings": _collect(rec) + notes,
        "stabilized_at": None,
    }


def _cmd_scan(args) -> dict:
    prob = parse_problem(_load(args.file))
    limit = _resolve_limit(args, prob)
    with warnings.catch_warnings(record=True) as rec:
        warnings.simplefilter("always")
        report = stabilization_scan(prob.support, prob.spec, args.dmax, limit)
    notes = []
    if report.closed_form is not None:
        notes.append(
            "stabilized formula matches the scan result"
            if report.matches_closed_form
            else "stabilized formula does not match the scan result"
        )
    stable = report.results[-1].cone
    return _result(prob.support, stable, _collect(rec) + notes, report.first_stable)


def _parse_vertices(text: str) -> list[tuple[int, ...]]:
    chunks = [c.strip() for c in text.split(";") if c.strip()]
    if not chunks:
        raise SchemaError('--vertices: expected points like "0,0;1,2;2,1"')
    out = []
    for c in chunks:
        try:
            out.append(tuple(int(t.strip()) for t in c.split(",")))
        except ValueError:
            raise SchemaError(f"--vertices: bad point {c!r}") from None
    if len({len(p) for p in out}) != 1:
        raise SchemaError("--vertices: points have mixed dimensions")
    if any(x < 0 for p in out for x in p):
        raise SchemaError("--vertices: coordinates must be nonnegative")
    if len(set(out)) != len(out):
        raise SchemaError("--vertices: points must be distinct")
    return out


def _cmd_mediated(args) -> dict:
    verts = _parse_vertices(args.vertices)
    med = mediated_set(verts)
    hull = lattice_points(verts)
    discarded = [p for p in hull if p not in med]
    return {
        "mediated": [list(p) for p in med],
        "discarded": [list(p) for p in discarded],
    }


def _text_lines(doc: dict) -> list[str]:
    if "mediated" in doc:
        lines = [",".join(map(str, p)) for p in doc["mediated"]]
        lines += [
            "discarded: " + ",".join(map(str, p)) for p in doc["discarded"]
        ]
        return lines
    return [entry["binomial"] for entry in doc["facets"]]


def _emit(doc: dict, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
        return
    for note in doc.get("warnings", ()):
        print(f"warning: {note}", file=sys.stderr)
    for line in _text_lines(doc):
        sys.stdout.write(line + "\n")


def _configure_threads() -> None:
    raw = os.environ.get("TROPMOM_THREADS")
    if raw is None:
        return
    try:
        k = int(raw)
    except ValueError:
        k = 0
    if k < 1:
        raise SchemaError(
            f"TROPMOM_THREADS: expected a positive integer, got {raw!r}"
        )
    # All kernels run sequentially; any positive cap is honored as 1.


def _common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--format", choices=("json", "text"), default="json",
        help="output as canonical JSON or one inequality per line",
    )
    p.add_argument(
        "--assume-semigroup-generated", action="store_true",
        help="skip the semigroup generation check for binomial sets",
    )
    p.add_argument(
        "--max-extension-points", type=int, default=None, metavar="N",
        help="resource guard on the pre-projection support size",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tropmom",
        description=(
            "Tropicalized moment and pseudo-moment cones of finite supports "
            "over sets cut out by pure binomial inequalities."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    moment = sub.add_parser(
        "moment", help="facets of the tropicalized moment cone"
    )
    moment.add_argument("file", help="problem file (JSON)")
    _common_flags(moment)
    moment.set_defaults(handler=_cmd_moment)

    pseudo = sub.add_parser(
        "pseudomoment",
        help="tropicalized pseudo-moment cone, truncated or stabilized",
    )
    pseudo.add_argument("file", help="problem file (JSON)")
    pseudo.add_argument(
        "--degree", type=int, default=None, metavar="D",
        help="truncation degree; omit for the stabilized cone",
    )
    _common_flags(pseudo)
    pseudo.set_defaults(handler=_cmd_pseudomoment)

    gap = sub.add_parser(
        "gap",
        help="moment facets with no sum-of-squares certificate at any degree",
    )
    gap.add_argument("file", help="problem file (JSON)")
    _common_flags(gap)
    gap.set_defaults(handler=_cmd_gap)

    mediated = sub.add_parser(
        "mediated", help="maximal mediated set of a simplex"
    )
    mediated.add_argument(
        "--vertices", required=True, metavar="PTS",
        help='affinely independent lattice points, e.g. "0,0;2,4;4,2"',
    )
    mediated.add_argument(
        "--format", choices=("json", "text"), default="json",
        help="output as canonical JSON or one point per line",
    )
    mediated.set_defaults(handler=_cmd_mediated)

    scan = sub.add_parser(
        "scan", help="truncated cones by degree and the stabilization point"
    )
    scan.add_argument("file", help="problem file (JSON)")
    scan.add_argument(
        "--dmax", type=int, required=True, metavar="D",
        help="largest truncation degree to scan",
    )
    _common_flags(scan)
    scan.set_defaults(handler=_cmd_scan)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        _configure_threads()
        doc = args.handler(args)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    _emit(doc, args.format)
    return 0


if __name__ == "__main__":
    sys.exit(main())
