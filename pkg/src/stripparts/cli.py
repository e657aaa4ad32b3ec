"""Command line interface.

Subcommands: series, gf, expect, oracle, selfcheck.  Output is plain text
by default; --format json emits machine-readable documents in which every
polynomial coefficient rides as a decimal string, and --format latex
emits display math.  Exit codes: 0 success, 1 failed check or verification,
2 usage error, 3 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .errors import ResourceLimitError
from .genfun import (
    DegenerateGFError,
    GFVerificationError,
    RecurrenceNotFoundError,
    expected_size,
    rational_gf,
)
from .graphs import GraphSpecError, parse_graph_spec
from .oracle import DEFAULT_ORACLE_BUDGET, oracle_distribution
from .polynomials import XYPoly, YPoly
from .selfcheck import run_all
from .transfer import DEFAULT_STATE_CAP, series

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


@dataclass
class RunConfig:
    """Everything one invocation needs, assembled from parsed flags."""

    graph_spec: str | None = None
    colors: int = 0
    n: int | None = None
    n_max: int | None = None
    fmt: str = "text"
    oracle_budget: int = DEFAULT_ORACLE_BUDGET
    state_cap: int = DEFAULT_STATE_CAP


# === rendering helpers ===


def _latex_x(power: int) -> str:
    if power == 1:
        return "x"
    return f"x^{{{power}}}"


def _series_latex(terms: list[YPoly]) -> str:
    parts = []
    for n, p in enumerate(terms):
        if n == 0 or p.is_zero():
            continue
        parts.append(f"\\left({p.format(latex=True)}\\right) {_latex_x(n)}")
    return " + ".join(parts) if parts else "0"


# === subcommand handlers ===


def cmd_series(cfg: RunConfig) -> int:
    graph = parse_graph_spec(cfg.graph_spec)
    terms = series(graph, cfg.colors, cfg.n_max, state_cap=cfg.state_cap)
    if cfg.fmt == "json":
        doc = {
            "graph": cfg.graph_spec,
            "k": cfg.colors,
            "terms": [terms[n].to_decimal_strings() for n in range(1, cfg.n_max + 1)],
        }
        print(json.dumps(doc))
    elif cfg.fmt == "latex":
        print(_series_latex(terms))
    else:
        for n in range(1, cfg.n_max + 1):
            print(f"x^{n}: {terms[n].format()}")
    return EXIT_OK


def cmd_gf(cfg: RunConfig) -> int:
    graph = parse_graph_spec(cfg.graph_spec)
    gf = rational_gf(graph, cfg.colors, state_cap=cfg.state_cap)
    if cfg.fmt == "json":
        doc = {
            "graph": cfg.graph_spec,
            "k": cfg.colors,
            "numerator": gf.numerator.to_decimal_arrays(),
            "denominator": gf.denominator.to_decimal_arrays(),
        }
        print(json.dumps(doc))
    elif cfg.fmt == "latex":
        print(
            f"\\frac{{{gf.numerator.format(latex=True)}}}"
            f"{{{gf.denominator.format(latex=True)}}}"
        )
    else:
        print(f"numerator: {gf.numerator.format()}")
        print(f"denominator: {gf.denominator.format()}")
    return EXIT_OK


def cmd_expect(cfg: RunConfig) -> int:
    graph = parse_graph_spec(cfg.graph_spec)
    value = expected_size(graph, cfg.colors, cfg.n, state_cap=cfg.state_cap)
    if cfg.fmt == "json":
        doc = {
            "graph": cfg.graph_spec,
            "k": cfg.colors,
            "n": cfg.n,
            "expected_size": str(value),
        }
        print(json.dumps(doc))
    elif cfg.fmt == "latex":
        if value.denominator == 1:
            print(str(value.numerator))
        else:
            print(f"\\frac{{{value.numerator}}}{{{value.denominator}}}")
    else:
        print(str(value))
    return EXIT_OK


def cmd_oracle(cfg: RunConfig) -> int:
    graph = parse_graph_spec(cfg.graph_spec)
    dist = oracle_distribution(graph, cfg.colors, cfg.n, budget=cfg.oracle_budget)
    if cfg.fmt == "json":
        doc = {
            "graph": cfg.graph_spec,
            "k": cfg.colors,
            "n": cfg.n,
            "coefficients": dist.to_decimal_strings(),
        }
        print(json.dumps(doc))
    elif cfg.fmt == "latex":
        print(dist.format(latex=True))
    else:
        print(dist.format())
    return EXIT_OK


def cmd_selfcheck(cfg: RunConfig) -> int:
    results = run_all(oracle_budget=cfg.oracle_budget, state_cap=cfg.state_cap)
    failed = sum(1 for r in results if r.status == "FAIL")
    if cfg.fmt == "json":
        doc = {
            "checks": [
                {"name": r.name, "status": r.status, "detail": r.detail} for r in results
            ],
            "failed": failed,
        }
        print(json.dumps(doc))
    else:
        for r in results:
            line = f"[{r.status}] {r.name}"
            if r.detail:
                line += f": {r.detail}"
            print(line)
        passed = sum(1 for r in results if r.status == "PASS")
        skipped = sum(1 for r in results if r.status == "SKIP")
        print(f"summary: {passed} passed, {failed} failed, {skipped} skipped")
    return EXIT_CHECK_FAILED if failed else EXIT_OK


# === argument parsing ===


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stripparts",
        description="Exact counting of k-colored partitions of strip products G x P_n.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_flags(sp: argparse.ArgumentParser) -> None:
        sp.add_argument(
            "--graph",
            required=True,
            help="base graph: path:m, cycle:m, complete:m or file:PATH",
        )
        sp.add_argument(
            "--colors", type=_positive_int, required=True, help="number of colors k"
        )

    def add_format_flag(sp: argparse.ArgumentParser, choices=("text", "json", "latex")) -> None:
        sp.add_argument("--format", choices=choices, default="text", dest="fmt")

    sp = sub.add_parser("series", help="counting polynomials for lengths 1..n-max")
    add_graph_flags(sp)
    sp.add_argument("--n-max", type=_positive_int, required=True, dest="n_max")
    sp.add_argument("--state-cap", type=_positive_int, default=DEFAULT_STATE_CAP)
    add_format_flag(sp)
    sp.set_defaults(handler=cmd_series)

    sp = sub.add_parser("gf", help="reconstructed rational generating function")
    add_graph_flags(sp)
    sp.add_argument("--state-cap", type=_positive_int, default=DEFAULT_STATE_CAP)
    add_format_flag(sp)
    sp.set_defaults(handler=cmd_gf)

    sp = sub.add_parser("expect", help="expected piece count at one length")
    add_graph_flags(sp)
    sp.add_argument("--n", type=_positive_int, required=True)
    sp.add_argument("--state-cap", type=_positive_int, default=DEFAULT_STATE_CAP)
    add_format_flag(sp)
    sp.set_defaults(handler=cmd_expect)

    sp = sub.add_parser("oracle", help="exhaustive-enumeration distribution at one length")
    add_graph_flags(sp)
    sp.add_argument("--n", type=_positive_int, required=True)
    sp.add_argument("--oracle-budget", type=_positive_int, default=DEFAULT_ORACLE_BUDGET)
    add_format_flag(sp)
    sp.set_defaults(handler=cmd_oracle)

    sp = sub.add_parser("selfcheck", help="run every built-in verification")
    sp.add_argument("--oracle-budget", type=_positive_int, default=DEFAULT_ORACLE_BUDGET)
    sp.add_argument("--state-cap", type=_positive_int, default=DEFAULT_STATE_CAP)
    add_format_flag(sp, choices=("text", "json"))
    sp.set_defaults(handler=cmd_selfcheck)

    return parser


def _config_from(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        graph_spec=getattr(args, "graph", None),
        colors=getattr(args, "colors", 0),
        n=getattr(args, "n", None),
        n_max=getattr(args, "n_max", None),
        fmt=getattr(args, "fmt", "text"),
        oracle_budget=getattr(args, "oracle_budget", DEFAULT_ORACLE_BUDGET),
        state_cap=getattr(args, "state_cap", DEFAULT_STATE_CAP),
    )


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage or help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.handler(_config_from(args))
    except GraphSpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (DegenerateGFError, GFVerificationError, RecurrenceNotFoundError) as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
