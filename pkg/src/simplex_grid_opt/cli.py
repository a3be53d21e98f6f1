"""Command-line front end.

Verbs: grid-min, grid-max, expect, bounds, converge, verify, stable-set,
enclose.  Exact values are printed as reduced fractions; decimal renderings
are advisory (20 significant digits, round-half-even).  CSV output starts
with the version comment line "# simplex-grid-opt v1".

Exit codes: 0 success, 2 invalid configuration or parse failure, 3 grid size
guard tripped, 4 verification failure.  Output is byte-identical for any
--threads value.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import random
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import bounds as bounds_mod
from . import identities as ident_mod
from .combin import composition_count
from .grid import (
    DEFAULT_GRID_GUARD,
    GridTooLargeError,
    grid_maximize,
    grid_minimize,
)
from .hypergeom import HypergeomParams, bernstein_approximation, expectation
from .poly import HomogeneousPolynomial, load_polynomial, random_polynomial
from .rational import as_rational, decimal_str, fraction_str
from .stableset import alpha_lower_bound, load_graph

CSV_VERSION_LINE = "# simplex-grid-opt v1"
CSV_DECIMAL_NOTE = "# decimal columns are advisory: 20 significant digits, round-half-even"

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_SIZE_GUARD = 3
EXIT_VERIFY_FAILED = 4


@dataclass(frozen=True)
class RunConfig:
    """Shared, resolved options for one CLI invocation."""

    verb: str
    fmt: str
    threads: int
    guard: "int | None"  # None disables the grid size guard


def _resolve_config(args: argparse.Namespace) -> RunConfig:
    threads = getattr(args, "threads", 1)
    if threads < 1:
        raise ValueError("--threads must be at least 1")
    guard: "int | None" = DEFAULT_GRID_GUARD
    env = os.environ.get("SGO_MAX_GRID")
    if env is not None:
        try:
            guard = int(env)
        except ValueError as exc:
            raise ValueError(f"SGO_MAX_GRID must be an integer, got {env!r}") from exc
    if getattr(args, "force", False):
        guard = None
    return RunConfig(verb=args.verb, fmt=getattr(args, "format", "json"),
                     threads=threads, guard=guard)


# --- small parsers -------------------------------------------------------------


def _parse_range(text: str) -> "list[int]":
    """Accept "7" or "2:16" (inclusive)."""
    parts = text.split(":")
    try:
        if len(parts) == 1:
            return [int(parts[0])]
        if len(parts) == 2:
            lo, hi = int(parts[0]), int(parts[1])
            if lo > hi:
                raise ValueError
            return list(range(lo, hi + 1))
    except ValueError:
        pass
    raise ValueError(f"expected an integer or 'lo:hi' range, got {text!r}")


def _parse_counts(text: str) -> "tuple[int, ...]":
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ValueError(f"expected comma-separated integers, got {text!r}") from exc


def _parse_point(text: str) -> "tuple[Fraction, ...]":
    return tuple(as_rational(tok) for tok in text.split(","))


def _point_str(alpha: "tuple[int, ...]", r: int) -> str:
    return ",".join(str(Fraction(a, r)) for a in alpha)


def _load_poly(args: argparse.Namespace) -> HomogeneousPolynomial:
    return load_polynomial(args.poly, homogenize_terms=getattr(args, "homogenize", False))


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def _emit_csv(header: "list[str]", rows: "list[list]", *, decimal_note: bool = False) -> None:
    print(CSV_VERSION_LINE)
    if decimal_note:
        print(CSV_DECIMAL_NOTE)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


# --- verbs ---------------------------------------------------------------------


def cmd_grid_extremum(args: argparse.Namespace) -> int:
    config = _resolve_config(args)
    f = _load_poly(args)
    op = grid_minimize if args.verb == "grid-min" else grid_maximize
    result = op(f, args.r, threads=config.threads, max_points=config.guard)
    points = [_point_str(alpha, args.r) for alpha in result.minimizers]
    if config.fmt == "json":
        _emit_json(
            {
                "command": args.verb,
                "n": f.n,
                "degree": f.d,
                "r": args.r,
                "value": fraction_str(result.value),
                "value_decimal": decimal_str(result.value),
                "tie_count": result.tie_count,
                "evaluations": result.evaluations,
                "minimizers": points,
            }
        )
    else:
        _emit_csv(
            ["r", "value", "value_decimal", "tie_count", "evaluations", "minimizers"],
            [[args.r, fraction_str(result.value), decimal_str(result.value),
              result.tie_count, result.evaluations, ";".join(points)]],
            decimal_note=True,
        )
    return EXIT_OK


def cmd_expect(args: argparse.Namespace) -> int:
    config = _resolve_config(args)
    f = _load_poly(args)
    urn_mode = args.m is not None or args.counts is not None
    if urn_mode and (args.m is None or args.counts is None):
        raise ValueError("--m and --counts must be given together")
    if not urn_mode and not args.bernstein:
        raise ValueError("nothing to compute: give --m/--counts, or --bernstein with --x")
    row: dict = {"command": "expect", "r": args.r}
    if urn_mode:
        params = HypergeomParams(m=args.m, counts=_parse_counts(args.counts), r=args.r)
        value = expectation(f, params)
        row.update(
            m=args.m,
            counts=list(params.counts),
            expectation=fraction_str(value),
            expectation_decimal=decimal_str(value),
        )
    if args.bernstein:
        if args.x is not None:
            point = _parse_point(args.x)
        elif urn_mode:
            point = params.mean_point()
        else:
            raise ValueError("--bernstein needs --x when no urn is given")
        bval = bernstein_approximation(f, point, args.r)
        row.update(
            bernstein_point=",".join(str(v) for v in point),
            bernstein=fraction_str(bval),
            bernstein_decimal=decimal_str(bval),
        )
    if config.fmt == "json":
        _emit_json(row)
    else:
        header = [k for k in row if k != "command"]
        _emit_csv(
            header,
            [[";".join(map(str, row[k])) if isinstance(row[k], list) else row[k] for k in header]],
            decimal_note=True,
        )
    return EXIT_OK


def cmd_bounds(args: argparse.Namespace) -> int:
    config = _resolve_config(args)
    r_values = _parse_range(args.r_range)
    m_values: "list[int | None]" = [None] if args.m_range is None else list(_parse_range(args.m_range))
    reports = bounds_mod.bound_table(args.d, r_values, m_values)
    rows = [
        [
            report.kind.value,
            report.d,
            report.r,
            "" if report.m is None else report.m,
            "" if report.k is None else report.k,
            "" if report.coefficient is None else fraction_str(report.coefficient),
            str(report.applicable).lower(),
            report.reason,
        ]
        for report in reports
    ]
    if config.fmt == "json":
        _emit_json(
            [
                {
                    "kind": row[0], "d": row[1], "r": row[2],
                    "m": row[3] or None, "k": row[4] or None,
                    "coefficient": row[5] or None,
                    "applicable": row[6] == "true", "reason": row[7],
                }
                for row in rows
            ]
        )
    else:
        _emit_csv(["kind", "d", "r", "m", "k", "coefficient", "applicable", "reason"], rows)
    return EXIT_OK


def cmd_converge(args: argparse.Namespace) -> int:
    config = _resolve_config(args)
    f = _load_poly(args)
    assumptions = bounds_mod.RangeAssumptions(
        elevation=args.elevation,
        grid=args.grid,
        assume_min_denominator=args.assume_min_denominator,
        assume_max_denominator=args.assume_max_denominator,
    )
    m_for_kinds = args.assume_min_denominator
    kind_names = [kind.value for kind in bounds_mod.ALL_KINDS]
    header = ["r", "grid_min", "grid_min_decimal", "rho_lo", "rho_hi"] + kind_names
    rows = []
    for r in _parse_range(args.r_range):
        value = grid_minimize(f, r, threads=config.threads, max_points=config.guard).value
        try:
            rho = bounds_mod.rho_interval(
                f, r, assumptions, threads=config.threads, max_points=config.guard
            )
            rho_lo, rho_hi = fraction_str(rho.lo), fraction_str(rho.hi)
        except bounds_mod.DegenerateRangeError:
            rho_lo = rho_hi = "degenerate"
        row = [r, fraction_str(value), decimal_str(value), rho_lo, rho_hi]
        for kind in bounds_mod.ALL_KINDS:
            report = bounds_mod.bound_coefficient(kind, d=f.d, r=r, m=m_for_kinds)
            row.append("" if report.coefficient is None else fraction_str(report.coefficient))
        rows.append(row)
    if config.fmt == "json":
        _emit_json([dict(zip(header, row)) for row in rows])
    else:
        _emit_csv(header, rows, decimal_note=True)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    config = _resolve_config(args)
    checks = []
    if args.max_n >= 1 and args.max_d >= 1 and args.max_m >= 1:
        checks = ident_mod.run_default_sweeps(
            max_n=args.max_n,
            max_d=args.max_d,
            max_m=args.max_m,
            max_k=args.max_k,
            max_r=args.max_r,
            samples=args.samples,
            seed=args.seed,
        )
    rows = [
        ["identity", check.name, check.params_str(), fraction_str(check.lhs),
         fraction_str(check.rhs), check.relation, str(check.holds).lower()]
        for check in checks
    ]
    witnesses = _bound_witnesses(args)
    rows += [
        ["bound-witness", w.kind.value, f"d={w.d};r={w.r};m={w.m}",
         fraction_str(w.lhs), fraction_str(w.rhs), "le", str(w.holds).lower()]
        for w in witnesses
    ]
    if args.inject_fault:
        rows.append(["identity", "INJECTED_FAULT", "", "0", "1", "eq", "false"])
    if not rows:
        raise ValueError("no checks run: sweep ranges are empty")
    failures = sum(1 for row in rows if row[6] != "true")
    if config.fmt == "json":
        _emit_json(
            {
                "checks": [
                    dict(zip(["check", "name", "params", "lhs", "rhs", "relation", "holds"], row))
                    for row in rows
                ],
                "total": len(rows),
                "failures": failures,
            }
        )
    else:
        _emit_csv(["check", "name", "params", "lhs", "rhs", "relation", "holds"], rows)
    if failures:
        print(f"verification failed: {failures} of {len(rows)} checks", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def _bound_witnesses(args: argparse.Namespace) -> "list[bounds_mod.BoundWitness]":
    if min(args.max_n, args.max_d, args.max_m) < 1:
        return []
    rng = random.Random(args.seed)
    out = []
    for _ in range(args.witness_polys):
        n = rng.randint(1, min(3, args.max_n))
        d = rng.randint(1, min(3, args.max_d))
        f = random_polynomial(rng, n, d)
        for m in range(1, min(5, args.max_m) + 1):
            for r in range(1, m + 1):
                for kind in bounds_mod.ALL_KINDS:
                    witness = bounds_mod.check_bound(f, kind, r, m)
                    if witness.applicable:
                        out.append(witness)
    return out


def cmd_stable_set(args: argparse.Namespace) -> int:
    config = _resolve_config(args)
    graph = load_graph(args.graph)
    bound = alpha_lower_bound(graph, args.r, threads=config.threads, max_points=config.guard)
    obj = {
        "command": "stable-set",
        "n": graph.n,
        "edges": len(graph.edges),
        "r": args.r,
        "grid_value": fraction_str(bound.grid_value),
        "grid_value_decimal": decimal_str(bound.grid_value),
        "alpha_lb": bound.alpha_lb,
        "evaluations": bound.evaluations,
    }
    if config.fmt == "json":
        _emit_json(obj)
    else:
        header = [k for k in obj if k != "command"]
        _emit_csv(header, [[obj[k] for k in header]], decimal_note=True)
    return EXIT_OK


def cmd_enclose(args: argparse.Namespace) -> int:
    config = _resolve_config(args)
    f = _load_poly(args)
    total = composition_count(f.n, args.r)
    if config.guard is not None and total > config.guard:
        raise GridTooLargeError(f"grid has {total} points, budget is {config.guard}")
    assumptions = bounds_mod.RangeAssumptions(elevation=args.elevation)
    lo_enc = bounds_mod.min_enclosure(f, args.r, assumptions,
                                      threads=config.threads, max_points=config.guard)
    hi_enc = bounds_mod.max_enclosure(f, args.r, assumptions,
                                      threads=config.threads, max_points=config.guard)
    obj = {
        "command": "enclose",
        "r": args.r,
        "elevation": args.elevation,
        "fmin": {"lo": fraction_str(lo_enc.lo), "hi": fraction_str(lo_enc.hi),
                 "lo_decimal": decimal_str(lo_enc.lo), "hi_decimal": decimal_str(lo_enc.hi)},
        "fmax": {"lo": fraction_str(hi_enc.lo), "hi": fraction_str(hi_enc.hi),
                 "lo_decimal": decimal_str(hi_enc.lo), "hi_decimal": decimal_str(hi_enc.hi)},
    }
    if config.fmt == "json":
        _emit_json(obj)
    else:
        _emit_csv(
            ["quantity", "lo", "hi", "lo_decimal", "hi_decimal"],
            [["fmin", obj["fmin"]["lo"], obj["fmin"]["hi"],
              obj["fmin"]["lo_decimal"], obj["fmin"]["hi_decimal"]],
             ["fmax", obj["fmax"]["lo"], obj["fmax"]["hi"],
              obj["fmax"]["lo_decimal"], obj["fmax"]["hi_decimal"]]],
            decimal_note=True,
        )
    return EXIT_OK


# --- parser --------------------------------------------------------------------


def _add_common(sub: argparse.ArgumentParser, *, poly: bool = False, r: bool = False) -> None:
    sub.add_argument("--format", choices=("json", "csv"), default="json")
    sub.add_argument("--threads", type=int, default=1,
                     help="worker threads for grid sweeps; never changes the output")
    sub.add_argument("--force", action="store_true",
                     help="bypass the grid size guard (SGO_MAX_GRID, default 1e8)")
    if poly:
        sub.add_argument("--poly", required=True, help="polynomial JSON file")
        sub.add_argument("--homogenize", action="store_true",
                         help="raise lower-degree terms to the stated degree")
    if r:
        sub.add_argument("--r", type=int, required=True, help="grid denominator")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sgo",
        description="Exact minimization of homogeneous polynomials over simplex grids, "
        "with certified error bounds and identity verification.",
    )
    subs = parser.add_subparsers(dest="verb", required=True)

    for verb in ("grid-min", "grid-max"):
        sub = subs.add_parser(verb, help=f"exact grid {verb.split('-')[1]}imum")
        _add_common(sub, poly=True, r=True)
        sub.set_defaults(func=cmd_grid_extremum)

    sub = subs.add_parser("expect", help="urn-model expectation of f, and the "
                          "with-replacement comparison value")
    _add_common(sub, poly=True, r=True)
    sub.add_argument("--m", type=int, help="total balls in the urn")
    sub.add_argument("--counts", help="comma-separated balls per color, summing to m")
    sub.add_argument("--bernstein", action="store_true",
                     help="also compute the order-r with-replacement value")
    sub.add_argument("--x", help="simplex point for --bernstein, e.g. 7/16,9/16")
    sub.set_defaults(func=cmd_expect)

    sub = subs.add_parser("bounds", help="table of error-bound coefficients")
    _add_common(sub)
    sub.add_argument("--d", type=int, required=True, help="polynomial degree")
    sub.add_argument("--r-range", required=True, help="grid denominator(s), e.g. 2 or 1:16")
    sub.add_argument("--m-range", help="reference denominator(s), e.g. 4 or 2:8")
    sub.set_defaults(func=cmd_bounds)

    sub = subs.add_parser("converge", help="grid values, normalized-error intervals, "
                          "and bound coefficients over a range of r")
    _add_common(sub, poly=True)
    sub.add_argument("--r-range", required=True)
    sub.add_argument("--elevation", type=int, default=0)
    sub.add_argument("--grid", type=int, help="extra enclosure grid denominator")
    sub.add_argument("--assume-min-denominator", type=int,
                     help="assert the simplex minimum is attained at this denominator")
    sub.add_argument("--assume-max-denominator", type=int,
                     help="assert the simplex maximum is attained at this denominator")
    sub.set_defaults(func=cmd_converge)

    sub = subs.add_parser("verify", help="run identity sweeps and bound witnesses; "
                          "exit 4 on any failure")
    _add_common(sub)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--samples", type=int, default=25,
                     help="random integer points for the polynomial identities")
    sub.add_argument("--witness-polys", type=int, default=8,
                     help="random polynomials for bound witnesses")
    sub.add_argument("--max-n", type=int, default=3)
    sub.add_argument("--max-d", type=int, default=4)
    sub.add_argument("--max-m", type=int, default=8)
    sub.add_argument("--max-k", type=int, default=4)
    sub.add_argument("--max-r", type=int, default=30)
    sub.add_argument("--inject-fault", action="store_true",
                     help="append a deliberately failing check (harness self-test)")
    sub.set_defaults(func=cmd_verify)

    sub = subs.add_parser("stable-set", help="certified stability-number lower bound")
    _add_common(sub)
    sub.add_argument("--graph", required=True, help="edge list file, one 'u v' per line")
    sub.add_argument("--r", type=int, required=True)
    sub.set_defaults(func=cmd_stable_set)

    sub = subs.add_parser("enclose", help="certified enclosures of the simplex extrema")
    _add_common(sub, poly=True, r=True)
    sub.add_argument("--elevation", type=int, default=0)
    sub.set_defaults(func=cmd_enclose)

    return parser


def main(argv: "list[str] | None" = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GridTooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE_GUARD
    except (ValueError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
