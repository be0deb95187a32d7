"""Command-line front end: compute one coefficient table and print it."""

import argparse
import json
import sys
from dataclasses import dataclass

from .kepler import NonConvergenceError
from .sampling import evaluate_signals, write_grid_csv
from .series import HansenRequest, HansenTable, table_from_grid
from .statistics import DegenerateFitError, FitStatistics, ParsevalMismatchError

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERICAL = 3


@dataclass(frozen=True)
class BodyPreset:
    """Named eccentricity preset."""

    name: str
    e: float


BODY_PRESETS = {
    body.name: body
    for body in (
        BodyPreset("earth", 0.016708617),
        BodyPreset("pluto", 0.249050),
        BodyPreset("ceres", 0.078),
        BodyPreset("sekhmet", 0.296),
        BodyPreset("wild2", 0.541),
        BodyPreset("lexell", 0.786),
    )
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hansen",
        description=(
            "Compute Hansen coefficients A_k, B_k of the elliptic-motion "
            "expansions (r/a)^n cos(mv) and (r/a)^n sin(mv) in mean-anomaly "
            "harmonics."
        ),
    )
    parser.add_argument(
        "--body",
        help=f"named eccentricity preset ({', '.join(sorted(BODY_PRESETS))})",
    )
    parser.add_argument(
        "--eccentricity", type=float, help="orbit eccentricity in [0, 1)"
    )
    parser.add_argument(
        "--n", type=int, required=True, help="integer exponent of r/a"
    )
    parser.add_argument(
        "--m", type=int, required=True, help="non-negative multiple of the true anomaly"
    )
    parser.add_argument(
        "--samples", type=int, default=100, help="grid size l (default 100)"
    )
    parser.add_argument(
        "--tol", type=float, default=1e-6, help="order-selection tolerance (default 1e-6)"
    )
    parser.add_argument(
        "--eps1", type=float, default=1e-8, help="Kepler solver tolerance (default 1e-8)"
    )
    parser.add_argument(
        "--max-order", type=int, default=None, help="cap on the truncation order"
    )
    parser.add_argument(
        "--format",
        choices=("table", "csv", "json"),
        default="table",
        help="output format (default table)",
    )
    parser.add_argument(
        "--dump-grid",
        metavar="PATH",
        default=None,
        help="also write the sampled grid as CSV to PATH",
    )
    return parser


def _resolve_eccentricity(parser: argparse.ArgumentParser, args) -> float:
    if args.body is not None and args.eccentricity is not None:
        parser.error("--body and --eccentricity are mutually exclusive")
    if args.body is not None:
        preset = BODY_PRESETS.get(args.body.lower())
        if preset is None:
            parser.error(
                f"unknown body {args.body!r}; choose from {', '.join(sorted(BODY_PRESETS))}"
            )
        return preset.e
    if args.eccentricity is None:
        parser.error("one of --body or --eccentricity is required")
    return args.eccentricity


def _stats_fields(stats: FitStatistics) -> dict:
    return {
        "delta_sq": stats.delta_sq,
        "sigma_sq": stats.sigma_sq,
        "pe_fit": stats.pe_fit,
        "sigma_coeff": stats.sigma_coeff,
        "pe_coeff": stats.pe_coeff,
        "q_dist": stats.q_dist,
    }


def format_json(table: HansenTable) -> str:
    payload = {
        "e": table.request.e,
        "n": table.request.n,
        "m": table.request.m,
        "l": table.request.l,
        "s": table.order,
        "A": [float(a) for a in table.A],
        "B": [float(b) for b in table.B],
        "stats_A": _stats_fields(table.stats_A),
        "stats_B": _stats_fields(table.stats_B),
    }
    return json.dumps(payload)


def format_csv(table: HansenTable) -> str:
    lines = ["k,A_k,B_k"]
    for k in range(table.order + 1):
        b_cell = "" if k == 0 else repr(float(table.B[k - 1]))
        lines.append(f"{k},{float(table.A[k])!r},{b_cell}")
    for side, stats in (("A", table.stats_A), ("B", table.stats_B)):
        lines.append(f"delta2_{side},{stats.delta_sq!r}")
        lines.append(f"sigma_coeff_{side},{stats.sigma_coeff!r}")
        lines.append(f"Q_{side},{stats.q_dist!r}")
    return "\n".join(lines) + "\n"


def format_table(table: HansenTable) -> str:
    req = table.request
    lines = [
        f"Hansen coefficients  e={req.e:.9g}  n={req.n}  m={req.m}  "
        f"(l={req.l}, s={table.order})",
        "",
        f"{'k':>4}  {'A_k':>14}  {'B_k':>14}",
    ]
    for k in range(table.order + 1):
        b_cell = "" if k == 0 else f"{float(table.B[k - 1]):>14.6g}"
        lines.append(f"{k:>4}  {float(table.A[k]):>14.6g}  {b_cell}".rstrip())
    lines.append("")
    for side, stats in (("A", table.stats_A), ("B", table.stats_B)):
        lines.append(
            f"delta2_{side} = {stats.delta_sq:.6g}   "
            f"sigma_coeff_{side} = {stats.sigma_coeff:.6g}   "
            f"Q_{side} = {stats.q_dist:.6g}"
        )
    return "\n".join(lines) + "\n"


_FORMATTERS = {"table": format_table, "csv": format_csv, "json": format_json}


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    e = _resolve_eccentricity(parser, args)

    try:
        request = HansenRequest(
            e=e,
            n=args.n,
            m=args.m,
            l=args.samples,
            tol=args.tol,
            eps1=args.eps1,
            max_order=args.max_order,
        )
    except ValueError as exc:
        parser.error(str(exc))

    try:
        grid = evaluate_signals(request.e, request.n, request.m, request.l, request.eps1)
        table = table_from_grid(request, grid)
    except (NonConvergenceError, DegenerateFitError, ParsevalMismatchError) as exc:
        print(f"hansen: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL

    if args.dump_grid is not None:
        write_grid_csv(grid, args.dump_grid)

    sys.stdout.write(_FORMATTERS[args.format](table))
    return EXIT_OK


def main() -> None:
    sys.exit(run())
