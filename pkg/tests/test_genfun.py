"""Tests for recurrence guessing, rational forms, and derived statistics."""

from fractions import Fraction

import pytest

from stripparts.genfun import (
    GRID_GF,
    TRIANGLE_GF,
    DegenerateGFError,
    RationalGF,
    eval_gf_at_y1,
    expected_size,
    gf_equiv,
    guess_recurrence,
    matches_series,
    rational_gf,
    triangle_expected_size,
)
from stripparts.graphs import BaseGraph
from stripparts.polynomials import XYPoly, YPoly
from stripparts.transfer import series

K3 = BaseGraph.complete(3)
P1 = BaseGraph.path(1)
P2 = BaseGraph.path(2)
P3 = BaseGraph.path(3)
C4 = BaseGraph.cycle(4)

ONE_MINUS_X_1PY = XYPoly((YPoly([1]), YPoly([-1, -1])))


# === recurrence guessing ===


def test_guess_single_row():
    ser = series(P1, 2, 6)
    assert guess_recurrence(ser, 2) == ONE_MINUS_X_1PY


@pytest.mark.parametrize("k", [2, 3])
def test_single_row_closed_form(k):
    # independent route: one row splits at each of the n-1 gaps or not,
    # so the length-n polynomial is k*y*(1+(k-1)*y)^(n-1)
    ser = series(P1, k, 6)
    base = YPoly([1, k - 1])
    expect = YPoly([0, k])
    for n in range(1, 7):
        assert ser[n] == expect
        expect = expect * base


def test_guess_triangle_denominator():
    ser = series(K3, 2, 8)
    assert guess_recurrence(ser, 3) == TRIANGLE_GF.denominator


def test_guess_grid_denominator():
    ser = series(P2, 2, 8)
    assert guess_recurrence(ser, 3) == GRID_GF.denominator


def test_guess_needs_enough_terms():
    ser = series(P1, 2, 4)
    with pytest.raises(ValueError):
        guess_recurrence(ser, 2)  # needs 6 terms, got 5
    with pytest.raises(ValueError):
        guess_recurrence(ser, 0)


def test_guess_rejects_factorials():
    fact = [YPoly([v]) for v in (1, 1, 2, 6, 24, 120)]
    assert guess_recurrence(fact, 2) is None


# === rational reconstruction ===


def test_rational_gf_single_row():
    gf = rational_gf(P1, 2)
    assert gf.numerator == XYPoly((YPoly.zero(), YPoly([0, 2])))
    assert gf.denominator == ONE_MINUS_X_1PY


def test_rational_gf_triangle():
    gf = rational_gf(K3, 2)
    assert gf.numerator == TRIANGLE_GF.numerator
    assert gf.denominator == TRIANGLE_GF.denominator


def test_rational_gf_grid():
    gf = rational_gf(P2, 2)
    assert gf.numerator == GRID_GF.numerator
    assert gf.denominator == GRID_GF.denominator


@pytest.mark.parametrize("graph,k", [(P3, 2), (C4, 2), (P1, 3)])
def test_rational_gf_reexpands(graph, k):
    gf = rational_gf(graph, k)
    ser = series(graph, k, gf.denominator.degree + 5)
    assert matches_series(gf, ser)


def test_gf_equiv():
    two = XYPoly((YPoly([0, 2]),))  # the scalar 2y
    scaled = RationalGF(TRIANGLE_GF.numerator * two, TRIANGLE_GF.denominator * two)
    assert gf_equiv(scaled, TRIANGLE_GF)
    assert gf_equiv(TRIANGLE_GF, scaled)
    assert not gf_equiv(TRIANGLE_GF, GRID_GF)


def test_matches_series_detects_perturbation():
    ser = series(K3, 2, 6)
    assert matches_series(TRIANGLE_GF, ser)
    bad = list(ser)
    bad[4] = bad[4] + YPoly([0, 1])
    assert not matches_series(TRIANGLE_GF, bad)


# === totals at y = 1 ===


def test_eval_gf_at_y1_references():
    assert eval_gf_at_y1(TRIANGLE_GF, 5) == [8**n for n in range(1, 6)]
    assert eval_gf_at_y1(GRID_GF, 5) == [4**n for n in range(1, 6)]
    assert eval_gf_at_y1(rational_gf(P1, 2), 6) == [2**n for n in range(1, 7)]
    assert eval_gf_at_y1(TRIANGLE_GF, 0) == []


def test_eval_gf_at_y1_degenerate():
    vanishing = RationalGF(
        numerator=XYPoly((YPoly.zero(), YPoly.one())),
        denominator=XYPoly((YPoly([1, -1]),)),  # 1 - y dies at y = 1
    )
    with pytest.raises(DegenerateGFError):
        eval_gf_at_y1(vanishing, 3)
    halved = RationalGF(
        numerator=XYPoly((YPoly.zero(), YPoly.one())),
        denominator=XYPoly((YPoly([2]),)),
    )
    with pytest.raises(DegenerateGFError):
        eval_gf_at_y1(halved, 2)  # x/2 has no integer coefficients


# === expected piece counts ===


def test_expected_size_examples():
    assert expected_size(K3, 2, 1) == Fraction(7, 4)
    assert expected_size(K3, 2, 2) == Fraction(75, 32)
    assert expected_size(P2, 2, 1) == Fraction(3, 2)


@pytest.mark.parametrize("n", range(1, 9))
def test_triangle_expected_closed_form(n):
    assert expected_size(K3, 2, n) == triangle_expected_size(n)
    assert triangle_expected_size(n) == Fraction(37 + 19 * n, 32)


def test_triangle_expected_validation():
    with pytest.raises(ValueError):
        triangle_expected_size(0)
    with pytest.raises(ValueError):
        expected_size(K3, 2, 0)


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def test_expected_size_against_gf_derivative():
    """Differentiate the closed triangle form in y, set y = 1, re-expand."""
    num, den = TRIANGLE_GF.numerator, TRIANGLE_GF.denominator
    top_a = _poly_mul(num.derivative_y().eval_y1(), den.eval_y1())
    top_b = _poly_mul(num.eval_y1(), den.derivative_y().eval_y1())
    top = [x - y for x, y in zip(top_a, top_b)]
    bot = _poly_mul(den.eval_y1(), den.eval_y1())
    assert bot[0] == 1
    coeffs = []
    for m in range(7):
        acc = Fraction(top[m] if m < len(top) else 0)
        for j in range(1, min(len(bot) - 1, m) + 1):
            acc -= bot[j] * coeffs[m - j]
        coeffs.append(acc)
    for n in range(1, 7):
        assert expected_size(K3, 2, n) == coeffs[n] / 8**n, f"n={n}"


@pytest.mark.parametrize("graph,k", [(P1, 2), (P2, 2), (K3, 2), (P2, 3), (C4, 2)])
def test_expected_size_increases_with_length(graph, k):
    values = [expected_size(graph, k, n) for n in range(1, 6)]
    assert all(a < b for a, b in zip(values, values[1:]))
