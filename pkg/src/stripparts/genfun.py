"""Rational generating function reconstruction and derived statistics.

The series produced by the transfer engine satisfies a linear recurrence
in the strip length with polynomial-in-y coefficients, because it comes
from powers of a fixed transfer matrix.  The functions here recover the
minimal such recurrence by exact linear solving over rational functions
in y, package the result as a ratio of bivariate polynomials, and derive
totals and expected piece counts from it.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .graphs import BaseGraph
from .polynomials import XYPoly, YPoly, poly_lcm, solve_linear_system
from .transfer import DEFAULT_STATE_CAP, series, transfer_matrix

logger = logging.getLogger(__name__)


class RecurrenceNotFoundError(RuntimeError):
    """No linear recurrence of the allowed order fits the series."""


class DegenerateGFError(ValueError):
    """A generating function violates a normalization it is relied on for."""


class GFVerificationError(RuntimeError):
    """Re-expansion of a reconstructed form disagrees with the series."""


@dataclass(frozen=True)
class RationalGF:
    """Ratio of bivariate polynomials; the denominator has constant term 1."""

    numerator: XYPoly
    denominator: XYPoly


# === recurrence guessing ===


def guess_recurrence(series_terms: Sequence[YPoly], max_order: int) -> XYPoly | None:
    """Smallest-order recurrence denominator fitting the series, or None.

    series_terms[n] must be the strip-length-n polynomial, with the
    constant 1 at index 0.  For each candidate order d the linear system
    demanding sum_j a_j(y) * s[n-j] = 0 (a_0 = 1) over the window
    n = d+1 .. 2d is solved exactly over rational functions in y; a
    solution is accepted only if it also annihilates every later term.
    The returned denominator sum_j a_j x^j is cleared to integer
    coefficients, content-reduced and normalized to constant term +1.
    """
    if max_order < 1:
        raise ValueError(f"max order must be positive, got {max_order}")
    if len(series_terms) < 2 * max_order + 2:
        raise ValueError(
            f"need at least {2 * max_order + 2} series terms for max order "
            f"{max_order}, got {len(series_terms)}"
        )
    s = list(series_terms)
    for order in range(1, max_order + 1):
        window = range(order + 1, 2 * order + 1)
        matrix = [[s[n - j] for j in range(1, order + 1)] for n in window]
        rhs = [-s[n] for n in window]
        solution = solve_linear_system(matrix, rhs)
        if solution is None:
            continue
        common = YPoly.one()
        for _, den in solution:
            common = poly_lcm(common, den)
        coeffs = [common]
        for num, den in solution:
            coeffs.append(num * common.exact_div(den))
        candidate = XYPoly(coeffs)
        content = candidate.content()
        if content > 1:
            candidate = XYPoly(
                YPoly(tuple(v // content for v in c.coeffs)) for c in candidate.coeffs
            )
        ok = True
        for n in range(order + 1, len(s)):
            acc = YPoly.zero()
            for j in range(0, order + 1):
                c = candidate.coefficient(j)
                if not c.is_zero():
                    acc = acc + c * s[n - j]
            if not acc.is_zero():
                ok = False
                break
        if not ok:
            # the window solution is spurious; a genuine order-d recurrence
            # would have satisfied the window, so no order-d recurrence exists
            continue
        lead = candidate.coefficient(0).coefficient(0)
        if lead < 0:
            candidate = -candidate
            lead = -lead
        if lead != 1:
            raise DegenerateGFError(
                "recurrence denominator cannot be normalized to constant term 1"
            )
        return candidate
    return None


# === rational form reconstruction ===


def matches_series(gf: RationalGF, series_terms: Sequence[YPoly]) -> bool:
    """Does the power-series expansion of gf agree with every given term?

    series_terms uses the same convention as the engine output: index n
    holds the strip-length-n polynomial and index 0 is ignored (the
    rational form has no constant term).
    """
    d = gf.denominator.degree
    for m in range(len(series_terms)):
        acc = YPoly.zero()
        for j in range(0, min(d, m) + 1):
            i = m - j
            if i >= 1:
                c = gf.denominator.coefficient(j)
                if not c.is_zero():
                    acc = acc + c * series_terms[i]
        if acc != gf.numerator.coefficient(m):
            return False
    return True


def rational_gf(
    graph: BaseGraph,
    k: int,
    *,
    state_cap: int = DEFAULT_STATE_CAP,
    workers: int = 1,
) -> RationalGF:
    """Reconstruct the closed rational form of the counting series.

    The search bound for the recurrence order is the reachable state count
    of the transfer matrix.  The reconstructed form is re-expanded and
    checked against at least 2*order series terms beyond the numerator.
    """
    states, _, _, _ = transfer_matrix(graph, k, state_cap=state_cap)
    max_order = len(states)
    terms = series(graph, k, 2 * max_order + 1, state_cap=state_cap, workers=workers)
    denominator = guess_recurrence(terms, max_order)
    if denominator is None:
        raise RecurrenceNotFoundError(
            f"no linear recurrence of order <= {max_order} fits the series"
        )
    order = denominator.degree
    need = 3 * order + 2  # numerator degree <= order, then 2*order zero checks
    if len(terms) < need:
        terms = series(graph, k, need - 1, state_cap=state_cap, workers=workers)
    product: list[YPoly] = []
    for m in range(len(terms)):
        acc = YPoly.zero()
        for j in range(0, min(order, m) + 1):
            i = m - j
            if i >= 1:
                c = denominator.coefficient(j)
                if not c.is_zero():
                    acc = acc + c * terms[i]
        product.append(acc)
    top = max(i for i, p in enumerate(product) if not p.is_zero())
    if top > order:
        if len(product) - 1 - top >= 2 * order:
            logger.warning(
                "numerator degree %d exceeds recurrence order %d; keeping the larger numerator",
                top,
                order,
            )
        else:
            raise GFVerificationError(
                f"series terms beyond degree {order} do not vanish under the recurrence"
            )
    gf = RationalGF(XYPoly(product[: top + 1]), denominator)
    if not matches_series(gf, terms):
        raise GFVerificationError(
            "re-expansion of the reconstructed form disagrees with the series"
        )
    return gf


def gf_equiv(a: RationalGF, b: RationalGF) -> bool:
    """Equality as rational functions, by cross-multiplication."""
    return a.numerator * b.denominator == b.numerator * a.denominator


# === derived quantities ===


def eval_gf_at_y1(gf: RationalGF, n_max: int) -> list[int]:
    """Coefficients of x^1..x^n_max after substituting y = 1."""
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    num = gf.numerator.eval_y1()
    den = gf.denominator.eval_y1()
    if not den or den[0] == 0:
        raise DegenerateGFError("denominator has zero constant term at y = 1")
    d0 = den[0]
    coeffs: list[Fraction] = []
    for m in range(n_max + 1):
        acc = Fraction(num[m] if m < len(num) else 0)
        for j in range(1, min(len(den) - 1, m) + 1):
            acc -= den[j] * coeffs[m - j]
        coeffs.append(acc / d0)
    out: list[int] = []
    for c in coeffs[1:]:
        if c.denominator != 1:
            raise DegenerateGFError("series coefficient at y = 1 is not an integer")
        out.append(int(c))
    return out


def expected_size(
    graph: BaseGraph,
    k: int,
    n: int,
    *,
    state_cap: int = DEFAULT_STATE_CAP,
    workers: int = 1,
) -> Fraction:
    """Average piece count over all k-colorings of G x P_n, exactly."""
    if n < 1:
        raise ValueError(f"strip length must be positive, got {n}")
    terms = series(graph, k, n, state_cap=state_cap, workers=workers)
    p = terms[n]
    return Fraction(p.derivative_at_one(), k ** (graph.vertex_count * n))


# === benchmark closed forms ===
# Known rational forms for two strip families with two colors, kept in the
# factored shape they are usually quoted in and expanded at import time.


def _y(*cs: int) -> YPoly:
    return YPoly(cs)

def _c(p: YPoly) -> XYPoly:
    return XYPoly((p,))

_X = XYPoly((YPoly.zero(), YPoly.one()))
_2XY = XYPoly((YPoly.zero(), _y(0, 2)))

# triangle strip: base graph K_3, two colors
TRIANGLE_GF = RationalGF(
    numerator=_2XY * (_c(_y(1, 3)) - _X * _c(_y(3, -7, 4))),
    denominator=_c(_y(1)) - _X * _c(_y(4, 3, 1)) + _X * _X * _c(_y(3, -7, 3, 1)),
)

# two-row grid strip: base graph P_2, two colors
GRID_GF = RationalGF(
    numerator=_2XY * (_c(_y(1, 1)) - _X * _c(_y(1, -1) * _y(1, -2))),
    denominator=_c(_y(1))
    - _X * _c(_y(2, 1, 1))
    + _X * _X * _c(_y(1, -1) * (_y(1, 0, -5) - _y(0, 2) * _y(1, -2))),
)


def triangle_expected_size(n: int) -> Fraction:
    """Closed form for the average piece count on the two-colored triangle strip."""
    if n < 1:
        raise ValueError(f"strip length must be positive, got {n}")
    return Fraction(37 + 19 * n, 32)
