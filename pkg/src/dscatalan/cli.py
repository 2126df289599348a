"""Deterministic command-line interface.

Every subcommand prints a single machine-readable document to stdout (JSON
by default, CSV only for ``matrix``) and uses the exit-code contract
0 = success, 1 = domain error, 2 = usage error.  Integers whose magnitude
exceeds the 53-bit safe range are serialized as decimal strings so exact
values survive any JSON consumer; exact rationals appear as "p/q" strings.
Identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from itertools import combinations

from . import dyck, face_vectors, matroids, positroid, reconstruct, routing
from .linalg import determinant
from .errors import (
    BadCardinalityError,
    InconsistentConventionError,
    NotADSBasisError,
    WrongArityError,
)

JSON_SAFE_MAX = 2**53 - 1


def _encode(value):
    """Make a payload JSON-ready while keeping every value exact."""
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return value if abs(value) <= JSON_SAFE_MAX else str(value)
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return _encode(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, dict):
        return {k: _encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_encode(v) for v in value]
    return value


def _dump(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _emit(payload) -> None:
    sys.stdout.write(_dump(_encode(payload)))


def _parse_int_list(text: str, parser: argparse.ArgumentParser) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok != ""]
    except ValueError:
        parser.error(f"expected a comma-separated integer list, got {text!r}")


def _parse_known(text: str, parser: argparse.ArgumentParser) -> dict[int, int]:
    known: dict[int, int] = {}
    for item in text.split(","):
        if "=" not in item:
            parser.error(f"expected label=value pairs, got {item!r}")
        left, right = item.split("=", 1)
        try:
            label, value = int(left), int(right)
        except ValueError:
            parser.error(f"expected integer label=value, got {item!r}")
        if label in known:
            parser.error(f"duplicate label {label}")
        known[label] = value
    if not known:
        parser.error("no label=value pairs given")
    return known


def _domain_error(command: str, code: str, message: str, **details) -> int:
    payload = {"command": command, "error": {"code": code, "message": message}}
    if details:
        payload["error"]["details"] = details
    _emit(payload)
    return 1


def _cmd_matrix(args, parser) -> int:
    if args.d < 0:
        parser.error("--d must be >= 0")
    m = face_vectors.ds_matrix(args.d)
    if args.format == "csv":
        lines = ["," + ",".join(str(j) for j in range(1, m.cols + 1))]
        for i in range(m.rows):
            lines.append(str(i) + "," + ",".join(str(v) for v in m.row(i)))
        sys.stdout.write("\n".join(lines) + "\n")
        return 0
    _emit(
        {
            "command": "matrix",
            "d": args.d,
            "row_count": m.rows,
            "column_labels": list(range(1, m.cols + 1)),
            "rows": m.to_lists(),
        }
    )
    return 0


def _bases_by_method(d: int, method: str) -> list[tuple[int, ...]]:
    if method == "dyck":
        return reconstruct.dehn_sommerville_bases(d)
    if method == "minors":
        return list(matroids.from_matrix(face_vectors.ds_matrix(d)).bases)
    g = routing.build_ds_graph(d)
    return [
        b
        for b in combinations(range(1, d + 2), g.num_sources)
        if routing.routing_exists(g, b)
    ]


def _cmd_bases(args, parser) -> int:
    if args.d < 1:
        parser.error("--d must be >= 1")
    bases = _bases_by_method(args.d, args.method)
    payload = {
        "command": "bases",
        "d": args.d,
        "method": args.method,
        "count": len(bases),
    }
    if not args.count_only:
        payload["bases"] = [list(b) for b in bases]
    _emit(payload)
    return 0


def _cmd_is_basis(args, parser) -> int:
    if args.d < 0:
        parser.error("--d must be >= 0")
    labels = _parse_int_list(args.set, parser)
    _emit(
        {
            "command": "is-basis",
            "d": args.d,
            "set": sorted(labels),
            "is_basis": reconstruct.is_ds_basis(args.d, labels),
        }
    )
    return 0


def _cmd_reconstruct(args, parser) -> int:
    if args.d < 0:
        parser.error("--d must be >= 0")
    known = _parse_known(args.known, parser)
    if any(not 1 <= label <= args.d + 1 for label in known):
        parser.error(f"labels must lie in [1, {args.d + 1}]")
    assignment = reconstruct.PartialFAssignment.from_mapping(args.d, known)
    try:
        report = reconstruct.reconstruct(assignment)
    except WrongArityError as exc:
        return _domain_error("reconstruct", "wrong-arity", str(exc), d=args.d)
    except InconsistentConventionError as exc:
        return _domain_error("reconstruct", "inconsistent-convention", str(exc), d=args.d)
    except NotADSBasisError as exc:
        details = {
            "d": args.d,
            "labels": list(exc.labels),
            "determinant": 0,
            "completions": (
                [list(c) for c in exc.completions] if exc.completions else None
            ),
        }
        return _domain_error("reconstruct", "not-a-ds-basis", str(exc), **details)
    _emit(
        {
            "command": "reconstruct",
            "d": args.d,
            "known": {str(l): v for l, v in assignment.known},
            "basis": list(report.basis_used),
            "f": list(report.f.entries),
            "h": list(report.h.entries),
            "g": list(report.g.entries),
            "flags": {
                "integral": report.integral,
                "nonnegative": report.nonnegative,
                "m_sequence": report.m_sequence,
            },
        }
    )
    return 0


def _vector_of(kind: str, d: int, values: list[int]):
    cls = {
        "f": face_vectors.FVector,
        "h": face_vectors.HVector,
        "g": face_vectors.GVector,
    }[kind]
    return cls(d, tuple(values))


def _cmd_transform(args, parser) -> int:
    if args.d < 0:
        parser.error("--d must be >= 0")
    values = _parse_int_list(args.values, parser)
    expected = args.d // 2 + 1 if getattr(args, "src") == "g" else args.d + 1
    if len(values) != expected:
        parser.error(
            f"a {args.src}-vector for d={args.d} needs {expected} entries, got {len(values)}"
        )
    vec = _vector_of(args.src, args.d, values)
    paths = {
        ("f", "h"): lambda v: face_vectors.f_to_h(v),
        ("f", "g"): lambda v: face_vectors.h_to_g(face_vectors.f_to_h(v)),
        ("h", "f"): lambda v: face_vectors.h_to_f(v),
        ("h", "g"): lambda v: face_vectors.h_to_g(v),
        ("g", "f"): lambda v: face_vectors.g_to_f(v),
        ("g", "h"): lambda v: face_vectors.g_to_h(v),
        ("f", "f"): lambda v: v,
        ("h", "h"): lambda v: v,
        ("g", "g"): lambda v: v,
    }
    out = paths[(args.src, args.dst)](vec)
    _emit(
        {
            "command": "transform",
            "d": args.d,
            "from": args.src,
            "to": args.dst,
            "input": values,
            "output": list(out.entries),
        }
    )
    return 0


def _cmd_validate(args, parser) -> int:
    values = _parse_int_list(args.f, parser)
    if not values:
        parser.error("--f must be non-empty")
    d = len(values) - 1
    f = face_vectors.FVector(d, tuple(values))
    h = face_vectors.f_to_h(f)
    g = face_vectors.h_to_g(h)
    _emit(
        {
            "command": "validate",
            "d": d,
            "f": list(f.entries),
            "h": list(h.entries),
            "g": list(g.entries),
            "linear": {
                "starts_with_one": f.entries[0] == 1,
                "dehn_sommerville": face_vectors.check_dehn_sommerville(h),
            },
            "g_theorem": {
                "nonnegative": all(x >= 0 for x in f.entries),
                "m_sequence": face_vectors.is_m_sequence(g),
            },
        }
    )
    return 0


def _cmd_catalan(args, parser) -> int:
    if args.n < 0:
        parser.error("--n must be >= 0")
    payload = {
        "command": "catalan",
        "n": args.n,
        "count": dyck.catalan_number(args.n),
    }
    if not args.count_only:
        paths = dyck.enumerate_dyck(args.n)
        payload["paths"] = [
            {"steps": p.steps, "upsteps": list(p.upsteps)} for p in paths
        ]
    _emit(payload)
    return 0


def _cmd_positroid(args, parser) -> int:
    if args.d < 1:
        parser.error("--d must be >= 1")
    m = matroids.from_matrix(face_vectors.ds_matrix(args.d))
    necklace = positroid.grassmann_necklace(m)
    perm = positroid.decorated_permutation(m)
    decorations = {str(i): "coloop" for i in sorted(perm.coloop_fixed)}
    decorations.update({str(i): "loop" for i in sorted(perm.loop_fixed)})
    _emit(
        {
            "command": "positroid",
            "d": args.d,
            "ground_size": m.ground_size,
            "necklace": [list(s) for s in necklace.sets],
            "decorated_permutation": {
                "one_line": list(perm.one_line),
                "decorations": decorations,
                "text": str(perm),
            },
        }
    )
    return 0


def _cmd_check(args, parser) -> int:
    if args.d_min < 1 or args.d_max < args.d_min:
        parser.error("need 1 <= d-min <= d-max")
    agreement = []
    all_ok = True
    for d in range(args.d_min, args.d_max + 1):
        m = face_vectors.ds_matrix(d)
        g = routing.build_ds_graph(d)
        ok = True
        total = 0
        for b in combinations(range(1, d + 2), g.num_sources):
            total += 1
            by_minor = (
                matroids.determinant(m.column_submatrix([j - 1 for j in b])) != 0
            )
            by_routing = routing.routing_exists(g, b)
            by_inequalities = routing.ds_basis_predicate(b, d)
            if not by_minor == by_routing == by_inequalities:
                ok = False
        agreement.append({"d": d, "subsets": total, "ok": ok})
        all_ok &= ok
    theorem = []
    for n in range(1, max(2, args.d_max // 2) + 1):
        ok = reconstruct.verify_main_theorem(n)
        theorem.append({"n": n, "ok": ok})
        all_ok &= ok
    _emit(
        {
            "command": "check",
            "d_range": [args.d_min, args.d_max],
            "oracle_agreement": agreement,
            "main_theorem": theorem,
            "ok": all_ok,
        }
    )
    return 0 if all_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dscatalan",
        description="Exact f/h/g-vector transforms, determining entry subsets, "
        "and the Catalan matroid correspondence.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("matrix", help="print the coefficient matrix for dimension d")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--format", choices=["json", "csv"], default="json")

    p = sub.add_parser("bases", help="list the determining label sets")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--method", choices=["dyck", "minors", "routing"], default="dyck")
    p.add_argument("--count-only", action="store_true")

    p = sub.add_parser("is-basis", help="test one label set")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--set", type=str, required=True, help="comma-separated labels")

    p = sub.add_parser("reconstruct", help="recover f, h, g from known entries")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--known", type=str, required=True, help="label=value pairs, comma-separated")

    p = sub.add_parser("transform", help="convert among f-, h- and g-vectors")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--from", dest="src", choices=["f", "h", "g"], required=True)
    p.add_argument("--to", dest="dst", choices=["f", "h", "g"], required=True)
    p.add_argument("--values", type=str, required=True)

    p = sub.add_parser("validate", help="symmetry and g-theorem flags of an f-vector")
    p.add_argument("--f", type=str, required=True, help="comma-separated entries, starting at f_{-1}")

    p = sub.add_parser("catalan", help="Dyck paths and the Catalan count")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count-only", action="store_true")

    p = sub.add_parser("positroid", help="Grassmann necklace and decorated permutation")
    p.add_argument("--d", type=int, required=True)

    p = sub.add_parser("check", help="cross-verify the three basis characterizations")
    p.add_argument("--d-min", type=int, default=1)
    p.add_argument("--d-max", type=int, default=4)

    return parser


_HANDLERS = {
    "matrix": _cmd_matrix,
    "bases": _cmd_bases,
    "is-basis": _cmd_is_basis,
    "reconstruct": _cmd_reconstruct,
    "transform": _cmd_transform,
    "validate": _cmd_validate,
    "catalan": _cmd_catalan,
    "positroid": _cmd_positroid,
    "check": _cmd_check,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = _HANDLERS[args.command]
    try:
        return handler(args, parser)
    except (BadCardinalityError, ValueError) as exc:
        return _domain_error(args.command, "domain-error", str(exc))


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
