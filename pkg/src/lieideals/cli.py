"""Command-line surface: load or build algebras, run the computations and
theorem suites, and emit human- or machine-readable reports.

Exit codes: 0 all checks pass, 1 at least one theorem check failed,
2 input rejected (parse or associativity), 3 budget exceeded,
4 subspace is not a Lie ideal, 5 algebra outside a command's scope.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace

import numpy as np

from .algebra import Algebra, load_algebra
from .classify import classify_lie_ideal, is_exceptional, is_prime, is_semiprime, is_simple
from .enumeration import all_ideals, all_lie_ideals
from .errors import (
    BudgetExceededError,
    InvalidDefinitionError,
    LieIdealsError,
    NotLieIdealError,
    UnsupportedAlgebraError,
)
from .finite_linalg import Subspace, span
from .report import element_obj
from .subspace_calc import center, commutator_space, dim_over_c
from .verify import SUITES, VerifyConfig, reports_to_jsonl, run_all, run_suite

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_NOT_LIE_IDEAL = 4
EXIT_UNSUPPORTED = 5


class _CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _load(spec: str) -> Algebra:
    try:
        return load_algebra(spec)
    except (InvalidDefinitionError, OSError, json.JSONDecodeError, ValueError) as exc:
        raise _CliError(EXIT_INPUT, f"cannot load algebra {spec!r}: {exc}")


def _err(code: int, message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _parse_subspace(r: Algebra, text: str) -> Subspace:
    rows = []
    text = text.strip()
    if text:
        for part in text.split(";"):
            coords = [int(x) for x in part.split(",")]
            if len(coords) != r.dim:
                raise ValueError(f"vector {part!r} has {len(coords)} coordinates, need {r.dim}")
            rows.append(np.array(coords, dtype=np.int64))
    return span(r.field, rows, r.dim)


def _optional_flag(fn, *args):
    """Evaluate a predicate, returning None when it refuses or over budget."""
    try:
        return fn(*args)
    except (UnsupportedAlgebraError, BudgetExceededError):
        return None


def cmd_info(args) -> int:
    r = _load(args.algebra)
    z = center(r)
    simple = _optional_flag(is_simple, r)
    info = {
        "name": r.name,
        "dim": r.dim,
        "char": r.field.p,
        "unital": r.unity is not None,
        "unity": r.unity.coords.tolist() if r.unity is not None else None,
        "commutative": r.is_commutative(),
        "semiprime": _optional_flag(is_semiprime, r),
        "prime": _optional_flag(is_prime, r),
        "simple": simple,
        "exceptional": _optional_flag(is_exceptional, r),
        "center_basis": z.basis.tolist(),
        "dim_over_center": (
            dim_over_c(r, r.full_space()) if simple and r.unity is not None else None
        ),
        "commutator_dim": commutator_space(r).dim,
        "definition": r.to_definition(),
    }
    if args.format == "json":
        print(json.dumps(info, sort_keys=True))
    else:
        for key in (
            "name dim char unital commutative semiprime prime simple "
            "exceptional dim_over_center commutator_dim".split()
        ):
            print(f"{key}: {info[key]}")
        print(f"unity: {info['unity']}")
        print(f"center basis: {info['center_basis']}")
    return EXIT_PASS


def cmd_enumerate(args) -> int:
    r = _load(args.algebra)
    fn = all_lie_ideals if args.kind == "lie-ideals" else all_ideals
    subs = fn(r, limit=args.limit)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "algebra": r.name,
                    "kind": args.kind,
                    "count": len(subs),
                    "subspaces": [{"dim": s.dim, "basis": s.basis.tolist()} for s in subs],
                },
                sort_keys=True,
            )
        )
    else:
        print(f"{len(subs)} {args.kind} of {r.name}")
        for s in subs:
            rows = ";".join(",".join(str(x) for x in row) for row in s.basis.tolist())
            print(f"  dim {s.dim}: {rows if rows else '0'}")
    return EXIT_PASS


def cmd_classify(args) -> int:
    r = _load(args.algebra)
    try:
        l = _parse_subspace(r, args.lie_ideal)
    except ValueError as exc:
        return _err(EXIT_INPUT, f"bad subspace: {exc}")
    try:
        cls = classify_lie_ideal(r, l)
    except NotLieIdealError as exc:
        return _err(
            EXIT_NOT_LIE_IDEAL,
            f"not a Lie ideal: bracket violation witness {json.dumps(exc.witness, sort_keys=True)}",
        )
    except UnsupportedAlgebraError as exc:
        return _err(EXIT_UNSUPPORTED, str(exc))
    witness = (
        element_obj(cls.plane_witness.coords) if cls.plane_witness is not None else None
    )
    if args.format == "json":
        print(
            json.dumps(
                {
                    "algebra": r.name,
                    "dim": l.dim,
                    "flags": sorted(cls.flags),
                    "plane_witness": witness,
                },
                sort_keys=True,
            )
        )
    else:
        print(f"flags: {', '.join(sorted(cls.flags))}")
        if witness is not None:
            print(f"plane witness: {witness['coords']}")
    return EXIT_PASS


def cmd_verify(args) -> int:
    r = _load(args.algebra)
    cfg = VerifyConfig(
        max_power=args.max_power,
        max_factors=args.max_factors,
        samples=args.samples,
        seed=args.seed,
        limit=args.limit,
    )
    if args.suite == "all":
        reports = run_all(r, cfg)
    else:
        reports = run_suite(r, args.suite, cfg)
    if args.format == "json":
        sys.stdout.write(reports_to_jsonl(reports))
    else:
        for rep in reports:
            line = (
                f"{rep.status.upper():7s} {rep.check_id:24s} {rep.algebra}"
                f"  tested={rep.instances_tested} vacuous={rep.instances_vacuous}"
                f" skipped={rep.instances_skipped}"
            )
            print(line)
            if rep.witness is not None:
                print(f"        witness: {json.dumps(rep.witness, sort_keys=True)}")
    return EXIT_FAIL if any(rep.status == "fail" for rep in reports) else EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lieideals",
        description="Exact Lie-ideal computations for finite-dimensional algebras over GF(p).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("algebra", help="builtin:<spec> or a JSON definition file")
        p.add_argument("--format", choices=["text", "json"], default="text")

    p_info = sub.add_parser("info", help="print algebra invariants and flags")
    add_common(p_info)
    p_info.set_defaults(fn=cmd_info)

    p_enum = sub.add_parser("enumerate", help="list all Lie ideals or two-sided ideals")
    add_common(p_enum)
    p_enum.add_argument("--kind", choices=["lie-ideals", "ideals"], default="lie-ideals")
    p_enum.add_argument("--limit", type=int, default=100000)
    p_enum.set_defaults(fn=cmd_enumerate)

    p_cls = sub.add_parser("classify", help="classify a Lie ideal given by spanning vectors")
    add_common(p_cls)
    p_cls.add_argument(
        "--lie-ideal",
        required=True,
        help="spanning vectors 'a1,...,an;b1,...,bn;...' (empty string for 0)",
    )
    p_cls.set_defaults(fn=cmd_classify)

    p_ver = sub.add_parser("verify", help="run theorem suites")
    add_common(p_ver)
    p_ver.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    p_ver.add_argument("--max-power", type=int, default=3)
    p_ver.add_argument("--max-factors", type=int, default=3)
    p_ver.add_argument("--samples", type=int, default=200)
    p_ver.add_argument("--limit", type=int, default=100000)
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.set_defaults(fn=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except _CliError as exc:
        return _err(exc.code, str(exc))
    except BudgetExceededError as exc:
        return _err(EXIT_BUDGET, str(exc))
    except NotLieIdealError as exc:
        return _err(EXIT_NOT_LIE_IDEAL, f"not a Lie ideal: {exc}")
    except UnsupportedAlgebraError as exc:
        return _err(EXIT_UNSUPPORTED, str(exc))
    except LieIdealsError as exc:
        return _err(EXIT_INPUT, str(exc))


if __name__ == "__main__":
    sys.exit(main())
