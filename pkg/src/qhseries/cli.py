"""Command-line front end.

Subcommands: classify, roots, series, oracle, verify. Exit codes are a
stable contract: 0 success, 1 input error, 2 monomial cap exceeded,
3 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import matrices
from .classify import classify, nakayama_matrix, root_data
from .errors import DegreeOverflow, QHSeriesError
from .fields import WeightVector, parse_field
from .formulas import (
    ALGEBRA_KINDS,
    default_truncation,
    derived_preprojective_series,
    derived_qha_series,
    path_algebra_series,
    preprojective_series,
    qha_series,
)
from .matrices import Matrix
from .oracle import graded_quotient_dims
from .presentation import PresentationKind, build_presentation
from .quiver import Quiver, parse_quiver
from .series import MatrixPowerSeries

DEFAULT_VERIFY_FIELDS = "q,fp:2,fp:3,fp:5,fp:7"


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exit code 2 is reserved for the cap
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _fmt_matrix(m: Matrix) -> str:
    return "[" + ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in m) + "]"


def _load_quiver(path: str) -> Quiver:
    return parse_quiver(Path(path).read_text(encoding="utf-8"))


def _resolve_degree(q: Quiver, degree: int | None) -> int:
    if degree is not None:
        if degree < 0:
            raise ValueError("--degree must be nonnegative")
        return degree
    default = default_truncation(q)
    if default is None:
        raise ValueError("--degree is required for non-Dynkin quivers")
    return default


def _parse_force_p(spec: str, r: int) -> Matrix:
    if spec.strip().lower() == "identity":
        return matrices.identity(r)
    try:
        images = [int(x) for x in spec.split(",")]
    except ValueError:
        raise ValueError(f"--force-p expects 'identity' or a permutation, got {spec!r}") from None
    if len(images) != r:
        raise ValueError(f"--force-p permutation needs {r} entries")
    return matrices.permutation_matrix(images)


def _parse_weights(args, q: Quiver, field) -> WeightVector | None:
    if args.v is None:
        return None
    return WeightVector.parse(args.v, field, q.vertex_count)


def _emit_series(series: MatrixPowerSeries, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(series.to_jsonable()))
        return
    print(f"r: {series.size}")
    print(f"truncation: {series.order}")
    for n in range(series.order + 1):
        print(f"deg {n}: {_fmt_matrix(series.coeff(n))}")


def cmd_classify(args) -> int:
    q = _load_quiver(args.quiver)
    cls = classify(q)
    if args.format == "json":
        print(json.dumps({
            "verdict": cls.verdict,
            "type": cls.dynkin_type,
            "relabeling": list(cls.relabeling) if cls.relabeling else None,
        }))
        return 0
    print(cls.verdict)
    if cls.is_dynkin:
        print(f"type: {cls.dynkin_type}")
        print("relabeling:", " ".join(str(x) for x in cls.relabeling))
    return 0


def cmd_roots(args) -> int:
    q = _load_quiver(args.quiver)
    cls = classify(q)
    rd = root_data(q)
    nk = nakayama_matrix(q)
    roots = sorted(rd.positive_roots)
    if args.format == "json":
        print(json.dumps({
            "type": cls.dynkin_type,
            "positive_roots": [list(d) for d in roots],
            "coxeter_number": rd.coxeter_number,
            "nakayama_permutation": list(nk.permutation),
            "nakayama_matrix": [list(row) for row in nk.matrix],
        }))
        return 0
    print(f"type: {cls.dynkin_type}")
    print(f"positive roots ({len(roots)}):")
    for d in roots:
        print("  (" + ", ".join(str(x) for x in d) + ")")
    print(f"coxeter number: {rd.coxeter_number}")
    print("nakayama permutation:", " ".join(str(x) for x in nk.permutation))
    print(f"nakayama matrix: {_fmt_matrix(nk.matrix)}")
    return 0


def _closed_form(q: Quiver, algebra: str, degree: int, v: WeightVector | None,
                 force_p: Matrix | None) -> MatrixPowerSeries:
    if force_p is not None and algebra != "preproj":
        raise ValueError("--force-p only applies to the preprojective algebra")
    if force_p is not None and not classify(q).is_dynkin:
        raise ValueError("--force-p only applies to Dynkin quivers")
    if algebra == "path":
        return path_algebra_series(q, degree)
    if algebra == "preproj":
        return preprojective_series(q, degree, nakayama_override=force_p)
    if algebra == "dpreproj":
        return derived_preprojective_series(q, degree)
    if algebra == "qha":
        return qha_series(q, v, degree)
    if algebra == "dqha":
        return derived_qha_series(q, degree)
    raise ValueError(f"unknown algebra {algebra!r}")


def cmd_series(args) -> int:
    q = _load_quiver(args.quiver)
    degree = _resolve_degree(q, args.degree)
    field = parse_field(args.field)
    v = _parse_weights(args, q, field)
    force_p = _parse_force_p(args.force_p, q.vertex_count) if args.force_p else None
    series = _closed_form(q, args.algebra, degree, v, force_p)
    _emit_series(series, args.format)
    return 0


def _build_oracle_presentation(q: Quiver, algebra: str, presentation: str,
                               field, v: WeightVector | None):
    if algebra == "preproj":
        return build_presentation(PresentationKind.PREPROJECTIVE, q, field=field)
    if algebra == "qha":
        kind = PresentationKind.QHA_ETA if presentation == "eta" else PresentationKind.QHA_Z
        return build_presentation(kind, q, v=v)
    raise ValueError(f"algebra {algebra!r} has no oracle presentation (use preproj or qha)")


def cmd_oracle(args) -> int:
    q = _load_quiver(args.quiver)
    degree = _resolve_degree(q, args.degree)
    field = parse_field(args.field)
    v = _parse_weights(args, q, field)
    pres = _build_oracle_presentation(q, args.algebra, args.presentation, field, v)
    dims = graded_quotient_dims(pres, degree)
    _emit_series(MatrixPowerSeries(q.vertex_count, tuple(dims)), args.format)
    return 0


def cmd_verify(args) -> int:
    q = _load_quiver(args.quiver)
    degree = _resolve_degree(q, args.degree)
    if args.algebra not in ("preproj", "qha"):
        raise ValueError("verify needs an algebra with both a closed form and "
                         "a presentation (preproj or qha)")
    force_p = _parse_force_p(args.force_p, q.vertex_count) if args.force_p else None
    fields = [parse_field(spec) for spec in args.fields.split(",")]
    checked = []
    mismatch = None
    for field in fields:
        v = _parse_weights(args, q, field)
        formula = _closed_form(q, args.algebra, degree, v, force_p)
        pres = _build_oracle_presentation(q, args.algebra, "z", field, v)
        dims = graded_quotient_dims(pres, degree)
        for n in range(degree + 1):
            want = formula.coeff(n)
            got = dims[n]
            if want != got:
                block = next(
                    (i + 1, j + 1)
                    for i in range(q.vertex_count)
                    for j in range(q.vertex_count)
                    if want[i][j] != got[i][j])
                mismatch = {
                    "field": field.label,
                    "degree": n,
                    "block": list(block),
                    "oracle": got[block[0] - 1][block[1] - 1],
                    "formula": want[block[0] - 1][block[1] - 1],
                }
                break
        checked.append(field.label)
        if mismatch:
            break
    if args.format == "json":
        print(json.dumps({
            "algebra": args.algebra,
            "degree": degree,
            "fields": checked,
            "match": mismatch is None,
            "mismatch": mismatch,
        }))
    elif mismatch is None:
        for label in checked:
            print(f"field {label}: ok (degrees 0..{degree})")
        print("all coefficients match")
    else:
        print(f"field {mismatch['field']}: MISMATCH at degree {mismatch['degree']} "
              f"block ({mismatch['block'][0]}, {mismatch['block'][1]}): "
              f"oracle={mismatch['oracle']} formula={mismatch['formula']}")
    return 0 if mismatch is None else 3


def _build_parser() -> _Parser:
    parser = _Parser(prog="qhseries", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, algebra_choices=None, with_field=True):
        p.add_argument("--quiver", required=True, help="path to a quiver file")
        p.add_argument("--format", choices=("text", "json"), default="text")
        if algebra_choices:
            p.add_argument("--algebra", required=True, choices=algebra_choices)
            p.add_argument("--degree", type=int, default=None,
                           help="truncation degree (default max(2h, 12) on Dynkin input)")
            p.add_argument("--v", default=None, help="comma-separated weight vector")
        if with_field:
            p.add_argument("--field", default="q", help="q or fp:<prime> (default q)")

    p = sub.add_parser("classify", help="Dynkin / extended Dynkin / wild verdict")
    common(p, with_field=False)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("roots", help="positive roots, Coxeter number, Nakayama data")
    common(p, with_field=False)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("series", help="closed-form Hilbert series")
    common(p, algebra_choices=ALGEBRA_KINDS)
    p.add_argument("--force-p", default=None,
                   help="test hook: override the Nakayama permutation "
                        "('identity' or comma-separated images)")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("oracle", help="brute-force graded quotient dimensions")
    common(p, algebra_choices=("preproj", "qha"))
    p.add_argument("--presentation", choices=("z", "eta"), default="z",
                   help="which QHA presentation to quotient by (default z)")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="compare the oracle against the closed form")
    common(p, algebra_choices=("preproj", "qha"), with_field=False)
    p.add_argument("--fields", default=DEFAULT_VERIFY_FIELDS,
                   help=f"comma-separated field list (default {DEFAULT_VERIFY_FIELDS})")
    p.add_argument("--force-p", default=None,
                   help="test hook: override the Nakayama permutation")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DegreeOverflow as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (QHSeriesError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
