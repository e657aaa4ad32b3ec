"""Built-in verification: every exit criterion, runnable from the CLI.

Each check compares an engine result against frozen expected values or
against an independent code path.  Checks that need the exhaustive oracle
honor the enumeration budget: combinations over budget are skipped with a
notice, never silently dropped and never counted as failures.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct

from .errors import BudgetExceededError
from .genfun import (
    GRID_GF,
    TRIANGLE_GF,
    RationalGF,
    eval_gf_at_y1,
    gf_equiv,
    guess_recurrence,
    matches_series,
    rational_gf,
    triangle_expected_size,
)
from .graphs import BaseGraph
from .oracle import DEFAULT_ORACLE_BUDGET, oracle_distribution
from .polynomials import XYPoly, YPoly
from .transfer import DEFAULT_STATE_CAP, series


@dataclass
class CheckResult:
    name: str
    status: str  # PASS, FAIL or SKIP
    detail: str = ""


# the standard verification grid: small bases, up to 3 colors, 4 columns
TEST_GRID: tuple[tuple[str, BaseGraph], ...] = (
    ("path:1", BaseGraph.path(1)),
    ("path:2", BaseGraph.path(2)),
    ("path:3", BaseGraph.path(3)),
    ("complete:3", BaseGraph.complete(3)),
    ("complete:4", BaseGraph.complete(4)),
    ("cycle:4", BaseGraph.cycle(4)),
)
COLOR_RANGE = (1, 2, 3)
LENGTH_RANGE = (1, 2, 3, 4)

# frozen two-color series terms (coefficients by piece count, y^0 first)
TRIANGLE_SERIES = (
    (0, 2, 6),
    (0, 2, 44, 12, 6),
    (0, 2, 178, 218, 84, 24, 6),
    (0, 2, 600, 1674, 1100, 528, 150, 36, 6),
)
GRID_SERIES = (
    (0, 2, 2),
    (0, 2, 12, 0, 2),
    (0, 2, 30, 18, 12, 0, 2),
    (0, 2, 56, 102, 56, 24, 14, 0, 2),
)

TRIANGLE = BaseGraph.complete(3)
GRID2 = BaseGraph.path(2)
SINGLE = BaseGraph.path(1)


def _worker_configs() -> tuple[int, ...]:
    return tuple(sorted({1, 2, os.cpu_count() or 1}))


class _Runner:
    """Caches series/oracle results shared between checks."""

    def __init__(self, oracle_budget: int, state_cap: int):
        self.oracle_budget = oracle_budget
        self.state_cap = state_cap
        self._series: dict = {}
        self._oracle: dict = {}

    def series(self, label: str, graph: BaseGraph, k: int, n_max: int, workers: int = 1):
        key = (label, k, n_max, workers)
        if key not in self._series:
            self._series[key] = series(
                graph, k, n_max, state_cap=self.state_cap, workers=workers
            )
        return self._series[key]

    def oracle(self, label: str, graph: BaseGraph, k: int, n: int, workers: int = 1):
        key = (label, k, n, workers)
        if key not in self._oracle:
            self._oracle[key] = oracle_distribution(
                graph, k, n, budget=self.oracle_budget, workers=workers
            )
        return self._oracle[key]


# === the individual checks ===


def _check_triangle_series(r: _Runner) -> CheckResult:
    got = r.series("complete:3", TRIANGLE, 2, 4)
    for n, expect in enumerate(TRIANGLE_SERIES, start=1):
        if got[n] != YPoly(expect):
            return CheckResult(
                "triangle-series", "FAIL", f"n={n}: got {got[n]}, expected {YPoly(expect)}"
            )
    return CheckResult("triangle-series", "PASS", "lengths 1..4 match the closed expansion")


def _check_grid_series(r: _Runner) -> CheckResult:
    got = r.series("path:2", GRID2, 2, 4)
    for n, expect in enumerate(GRID_SERIES, start=1):
        if got[n] != YPoly(expect):
            return CheckResult(
                "grid-series", "FAIL", f"n={n}: got {got[n]}, expected {YPoly(expect)}"
            )
    if got[3].coefficient(4) != 12:
        return CheckResult("grid-series", "FAIL", "size-4 count at length 3 is off")
    return CheckResult("grid-series", "PASS", "lengths 1..4 match, incl. 12 size-4 pieces at n=3")


def _check_triangle_size6(r: _Runner) -> CheckResult:
    got = r.series("complete:3", TRIANGLE, 2, 4)[3].coefficient(6)
    if got != 6:
        return CheckResult("triangle-size6", "FAIL", f"got {got}, expected 6")
    return CheckResult("triangle-size6", "PASS", "6 partitions of size 6 at length 3")


def _check_gf_reconstruction(r: _Runner) -> CheckResult:
    details = []
    for label, graph, reference in (
        ("complete:3", TRIANGLE, TRIANGLE_GF),
        ("path:2", GRID2, GRID_GF),
    ):
        got = rational_gf(graph, 2, state_cap=r.state_cap)
        if not gf_equiv(got, reference):
            return CheckResult(
                "gf-reconstruction", "FAIL", f"{label}: reconstructed form differs"
            )
        details.append(label)
    return CheckResult(
        "gf-reconstruction", "PASS", f"{' and '.join(details)} match the known closed forms"
    )


def _check_totals(r: _Runner) -> CheckResult:
    got = eval_gf_at_y1(TRIANGLE_GF, 5)
    want = [8**n for n in range(1, 6)]
    if got != want:
        return CheckResult("totals-identity", "FAIL", f"GF totals {got} != {want}")
    for (label, graph), k in iproduct(TEST_GRID, COLOR_RANGE):
        ser = r.series(label, graph, k, 4)
        for n in LENGTH_RANGE:
            if ser[n].eval_at_one() != k ** (graph.vertex_count * n):
                return CheckResult(
                    "totals-identity", "FAIL", f"{label} k={k} n={n}: series total is off"
                )
    return CheckResult("totals-identity", "PASS", "8^n via GF and k^(mn) across the grid")


def _check_expected_size(r: _Runner) -> CheckResult:
    ser = r.series("complete:3", TRIANGLE, 2, 8)
    for n in range(1, 9):
        got = Fraction(ser[n].derivative_at_one(), 8**n)
        if got != triangle_expected_size(n):
            return CheckResult(
                "expected-size", "FAIL",
                f"n={n}: got {got}, expected {triangle_expected_size(n)}",
            )
    return CheckResult("expected-size", "PASS", "(37+19n)/32 for n=1..8")


def _check_oracle_agreement(r: _Runner) -> CheckResult:
    skipped: list[str] = []
    for (label, graph), k in iproduct(TEST_GRID, COLOR_RANGE):
        ser = r.series(label, graph, k, 4)
        for n in LENGTH_RANGE:
            try:
                got = r.oracle(label, graph, k, n)
            except BudgetExceededError:
                skipped.append(f"{label} k={k} n={n}")
                continue
            if got != ser[n]:
                return CheckResult(
                    "oracle-agreement", "FAIL", f"{label} k={k} n={n}: engines disagree"
                )
    if skipped:
        return CheckResult(
            "oracle-agreement", "SKIP",
            f"{len(skipped)} combinations over budget: {', '.join(skipped[:4])}"
            + ("..." if len(skipped) > 4 else ""),
        )
    return CheckResult("oracle-agreement", "PASS", "oracle matches the engine on the full grid")


def _check_recurrence(r: _Runner) -> CheckResult:
    ser = r.series("path:1", SINGLE, 2, 5)
    den = guess_recurrence(ser, 2)
    want = XYPoly((YPoly((1,)), YPoly((-1, -1))))
    if den != want:
        return CheckResult(
            "recurrence-minimality", "FAIL", f"single-row denominator {den} != {want}"
        )
    for label, graph in (("path:1", SINGLE), ("path:2", GRID2), ("complete:3", TRIANGLE)):
        gf = rational_gf(graph, 2, state_cap=r.state_cap)
        order = gf.denominator.degree
        terms = r.series(label, graph, 2, 3 * order + 1)
        if not matches_series(gf, terms):
            return CheckResult(
                "recurrence-minimality", "FAIL", f"{label}: re-expansion mismatch"
            )
    return CheckResult(
        "recurrence-minimality", "PASS",
        "order-1 single-row recurrence and clean re-expansions",
    )


def _check_determinism(r: _Runner) -> CheckResult:
    configs = _worker_configs()
    skipped: list[str] = []
    for (label, graph), k in iproduct(TEST_GRID, COLOR_RANGE):
        results = [r.series(label, graph, k, 4, workers=w) for w in configs]
        if any(res != results[0] for res in results[1:]):
            return CheckResult(
                "parallel-determinism", "FAIL", f"series({label}, k={k}) varies with workers"
            )
        for n in LENGTH_RANGE:
            outs = []
            try:
                for w in configs:
                    outs.append(r.oracle(label, graph, k, n, workers=w))
            except BudgetExceededError:
                skipped.append(f"{label} k={k} n={n}")
                continue
            if any(o != outs[0] for o in outs[1:]):
                return CheckResult(
                    "parallel-determinism", "FAIL",
                    f"oracle({label}, k={k}, n={n}) varies with workers",
                )
    if skipped:
        return CheckResult(
            "parallel-determinism", "SKIP",
            f"series part verified; {len(skipped)} oracle combinations over budget",
        )
    return CheckResult(
        "parallel-determinism", "PASS",
        f"identical results for worker counts {configs}",
    )


def run_all(
    *,
    oracle_budget: int = DEFAULT_ORACLE_BUDGET,
    state_cap: int = DEFAULT_STATE_CAP,
) -> list[CheckResult]:
    """Run every check; returns one result per criterion, in order."""
    runner = _Runner(oracle_budget, state_cap)
    checks = (
        _check_triangle_series,
        _check_grid_series,
        _check_triangle_size6,
        _check_gf_reconstruction,
        _check_totals,
        _check_expected_size,
        _check_oracle_agreement,
        _check_recurrence,
        _check_determinism,
    )
    out = []
    for fn in checks:
        try:
            out.append(fn(runner))
        except Exception as exc:  # a crash inside a check is a failure, not an abort
            name = fn.__name__.replace("_check_", "").replace("_", "-")
            out.append(CheckResult(name, "FAIL", f"{type(exc).__name__}: {exc}"))
    return out
