"""Command-line front end. Every subcommand prints a single JSON document
(or JSON lines for ``enumerate``) on standard output; all diagnostics go
to standard error.

Exit codes: 0 success, 1 domain error (with a JSON error object on
stdout), 2 usage error, 3 verification found a counterexample.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .census import (
    CensusConfig,
    _report_to_line,
    build_report,
    enumerate_classes,
    store_read,
    store_write,
    verify_theorems,
)
from .errors import FanoError
from .families import make_ke_triangle, make_smn
from .invariants import cone_types, surface_invariants
from .polygon import (
    FanoPolygon,
    are_equivalent,
    barycenter,
    dual,
    is_kahler_einstein,
    polygon_from_json_dict,
)
from .symmetry import automorphisms


def _emit(doc) -> None:
    sys.stdout.write(json.dumps(doc) + "\n")


def _parse_polygon_text(text: str) -> FanoPolygon:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FanoError("bad_polygon_json", f"invalid JSON: {exc}")
    if isinstance(obj, list):
        obj = {"vertices": obj}
    return polygon_from_json_dict(obj)


def _read_polygon(args, inline_attr="vertices", file_attr="file", allow_stdin=True) -> FanoPolygon:
    inline = getattr(args, inline_attr, None)
    path = getattr(args, file_attr, None)
    if inline is not None:
        return _parse_polygon_text(inline)
    if path is not None:
        with open(path, "r", encoding="utf-8") as fh:
            return _parse_polygon_text(fh.read())
    if allow_stdin:
        return _parse_polygon_text(sys.stdin.read())
    raise FanoError("no_input", "no polygon given")


def _add_polygon_input(sub, what="the polygon"):
    sub.add_argument(
        "--vertices",
        help=f"inline JSON for {what}: [[x,y],...] or {{\"vertices\": [[x,y],...]}}",
    )
    sub.add_argument("--file", help=f"path to a JSON file holding {what}")


def _cmd_analyze(args) -> int:
    report = build_report(_read_polygon(args))
    _emit(report.to_json_dict())
    return 0


def _cmd_dual(args) -> int:
    d = dual(_read_polygon(args))
    _emit({"vertices": [[str(x), str(y)] for x, y in d.vertices]})
    return 0


def _cmd_barycenter(args) -> int:
    P = _read_polygon(args)
    b = barycenter(dual(P)) if args.dual else barycenter(P)
    _emit({"barycenter": [str(b[0]), str(b[1])]})
    return 0


def _cmd_ke(args) -> int:
    _emit({"ke": is_kahler_einstein(_read_polygon(args))})
    return 0


def _cmd_aut(args) -> int:
    _emit(automorphisms(_read_polygon(args)).to_json_dict())
    return 0


def _cmd_sing(args) -> int:
    types = cone_types(_read_polygon(args))
    _emit(
        {
            "singularities": [[t.n, t.k] for t in types],
            "labels": [t.label() for t in types],
        }
    )
    return 0


def _cmd_invariants(args) -> int:
    _emit(surface_invariants(_read_polygon(args)).to_json_dict())
    return 0


def _cmd_smn(args) -> int:
    _emit(make_smn(args.m, args.n).to_json_dict())
    return 0


def _cmd_ke_triangle(args) -> int:
    _emit(make_ke_triangle(args.a, args.b).to_json_dict())
    return 0


def _cmd_equiv(args) -> int:
    P = _read_polygon(args)
    if args.other is not None:
        Q = _parse_polygon_text(args.other)
    elif args.other_file is not None:
        with open(args.other_file, "r", encoding="utf-8") as fh:
            Q = _parse_polygon_text(fh.read())
    else:
        raise FanoError("no_input", "equiv needs --other or --other-file")
    witness = are_equivalent(P, Q)
    _emit(
        {
            "equivalent": witness is not None,
            "witness": witness.rows() if witness is not None else None,
        }
    )
    return 0


def _cmd_enumerate(args) -> int:
    config = CensusConfig(
        bound=args.bound,
        max_index=args.max_index,
        workers=args.workers,
        allow_large=os.environ.get("FANO_SOFT_LIMIT_OVERRIDE") == "1",
    )
    reports = enumerate_classes(config)
    if args.out is not None:
        store_write(reports, args.out)
    else:
        for report in reports:
            sys.stdout.write(_report_to_line(report) + "\n")
    return 0


def _cmd_verify(args) -> int:
    reports = store_read(args.census)
    verdict = verify_theorems(reports, census_bound=args.bound)
    doc = verdict.to_json_dict()
    if args.out is not None:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(doc) + "\n")
    _emit(doc)
    return 0 if verdict.passed else 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fano",
        description="Exact computations with Fano polygons: duals, barycenters, "
        "the Kahler-Einstein test, symmetry, singularities, and a bounded "
        "exhaustive census with a theorem-verification harness.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("analyze", help="full class report for one polygon")
    _add_polygon_input(sub)
    sub.set_defaults(func=_cmd_analyze)

    sub = subs.add_parser("dual", help="vertices of the dual polygon")
    _add_polygon_input(sub)
    sub.set_defaults(func=_cmd_dual)

    sub = subs.add_parser("barycenter", help="exact barycenter")
    _add_polygon_input(sub)
    sub.add_argument("--dual", action="store_true", help="barycenter of the dual polygon")
    sub.set_defaults(func=_cmd_barycenter)

    sub = subs.add_parser("ke", help="Kahler-Einstein test (dual barycenter at the origin)")
    _add_polygon_input(sub)
    sub.set_defaults(func=_cmd_ke)

    sub = subs.add_parser("aut", help="automorphism group in GL(2,Z)")
    _add_polygon_input(sub)
    sub.set_defaults(func=_cmd_aut)

    sub = subs.add_parser("sing", help="singularity type of every boundary cone")
    _add_polygon_input(sub)
    sub.set_defaults(func=_cmd_sing)

    sub = subs.add_parser("invariants", help="index, Picard number, e_orb, K^2, defect")
    _add_polygon_input(sub)
    sub.set_defaults(func=_cmd_invariants)

    sub = subs.add_parser("smn", help="mirror quadrilateral family member")
    sub.add_argument("--m", type=int, required=True)
    sub.add_argument("--n", type=int, required=True)
    sub.set_defaults(func=_cmd_smn)

    sub = subs.add_parser("ke-triangle", help="Kahler-Einstein triangle family member")
    sub.add_argument("--a", type=int, required=True)
    sub.add_argument("--b", type=int, required=True)
    sub.set_defaults(func=_cmd_ke_triangle)

    sub = subs.add_parser("equiv", help="unimodular equivalence with witness")
    _add_polygon_input(sub, what="the first polygon")
    sub.add_argument("--other", help="inline JSON for the second polygon")
    sub.add_argument("--other-file", help="path to the second polygon")
    sub.set_defaults(func=_cmd_equiv)

    sub = subs.add_parser("enumerate", help="census of classes within a vertex box")
    sub.add_argument("--bound", type=int, required=True, help="vertices confined to [-B,B]^2")
    sub.add_argument("--max-index", type=int, default=None, help="keep only index <= this")
    sub.add_argument("--workers", type=int, default=1)
    sub.add_argument("--out", default=None, help="write JSON lines here instead of stdout")
    sub.set_defaults(func=_cmd_enumerate)

    sub = subs.add_parser("verify", help="run the theorem checks over a census store")
    sub.add_argument("census", help="path to a census JSON-lines store")
    sub.add_argument("--bound", type=int, default=None, help="box bound the store was built with")
    sub.add_argument("--out", default=None, help="also write the report here")
    sub.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FanoError as exc:
        _emit({"error": exc.code, "detail": exc.detail})
        return 1
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
