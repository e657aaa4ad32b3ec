"""Exact polynomial arithmetic for the partition counting engines.

Everything here works over Python integers or exact integer polynomial
ratios; no floating point anywhere.  Rational scalars are plain
``fractions.Fraction`` values (always reduced, positive denominator).
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

# === univariate polynomials in y ===


class YPoly:
    """Dense integer polynomial in one variable, written ``y``.

    Canonical form: the coefficient tuple never ends in a zero, so equal
    polynomial values always compare equal.  The zero polynomial is the
    empty tuple.  Instances are immutable and hashable.
    """

    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name: str, value) -> None:
        raise AttributeError("YPoly is immutable")

    # ---- constructors ----

    @classmethod
    def zero(cls) -> "YPoly":
        return cls()

    @classmethod
    def one(cls) -> "YPoly":
        return cls((1,))

    @classmethod
    def monomial(cls, coeff: int, power: int) -> "YPoly":
        """coeff * y**power."""
        if power < 0:
            raise ValueError("power must be nonnegative")
        return cls((0,) * power + (coeff,))

    # ---- basic queries ----

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coefficient(self, power: int) -> int:
        """Coefficient of y**power (0 beyond the stored degree)."""
        if power < 0:
            raise ValueError("power must be nonnegative")
        if power >= len(self.coeffs):
            return 0
        return self.coeffs[power]

    def __eq__(self, other) -> bool:
        if isinstance(other, YPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == (YPoly((other,))).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"YPoly({list(self.coeffs)!r})"

    # ---- ring operations ----

    def __add__(self, other: "YPoly") -> "YPoly":
        if not isinstance(other, YPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return YPoly(out)

    def __neg__(self) -> "YPoly":
        return YPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "YPoly") -> "YPoly":
        if not isinstance(other, YPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "YPoly":
        if isinstance(other, int):
            if other == 0:
                return YPoly()
            return YPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, YPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return YPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return YPoly(out)

    __rmul__ = __mul__

    def shift(self, power: int) -> "YPoly":
        """Multiply by y**power."""
        if power < 0:
            raise ValueError("power must be nonnegative")
        if not self.coeffs:
            return self
        return YPoly((0,) * power + self.coeffs)

    # ---- evaluation and calculus ----

    def eval_at_one(self) -> int:
        return sum(self.coeffs)

    def eval_at(self, point):
        """Evaluate exactly at an int or Fraction point (Horner)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def derivative(self) -> "YPoly":
        return YPoly(tuple(i * c for i, c in enumerate(self.coeffs))[1:])

    def derivative_at_one(self) -> int:
        return sum(i * c for i, c in enumerate(self.coeffs))

    # ---- integer content and exact division ----

    def content(self) -> int:
        """gcd of all coefficients (0 for the zero polynomial)."""
        return math.gcd(*(abs(c) for c in self.coeffs)) if self.coeffs else 0

    def primitive(self) -> "YPoly":
        c = self.content()
        if c in (0, 1):
            return self
        return YPoly(tuple(v // c for v in self.coeffs))

    def exact_div(self, other: "YPoly") -> "YPoly":
        """Quotient self / other when the division is exact; raises otherwise."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return YPoly()
        dd = other.degree
        dlead = other.coeffs[-1]
        rem = list(self.coeffs)
        qlen = len(rem) - dd
        if qlen <= 0:
            raise ArithmeticError("inexact polynomial division")
        quot = [0] * qlen
        for pos in range(qlen - 1, -1, -1):
            c = rem[pos + dd]
            if c == 0:
                continue
            qc, r = divmod(c, dlead)
            if r:
                raise ArithmeticError("inexact polynomial division")
            quot[pos] = qc
            for j, oc in enumerate(other.coeffs):
                rem[pos + j] -= qc * oc
        if any(rem):
            raise ArithmeticError("inexact polynomial division")
        return YPoly(quot)

    # ---- serialization ----

    def to_decimal_strings(self) -> list[str]:
        """Coefficients as decimal strings, least degree first."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_decimal_strings(cls, items: Sequence[str]) -> "YPoly":
        return cls(int(s, 10) for s in items)

    # ---- rendering ----

    def format(self, var: str = "y", latex: bool = False) -> str:
        """Human-readable form, low powers first: ``2y + 6y^2``."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for power, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                if power == 1:
                    v = var
                elif latex:
                    v = f"{var}^{{{power}}}"
                else:
                    v = f"{var}^{power}"
                if mag == 1:
                    body = v
                elif latex:
                    body = f"{mag} {v}"
                else:
                    body = f"{mag}{v}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.format()


# === gcd helpers over Z[y] ===


def _pseudo_rem(a: YPoly, b: YPoly) -> YPoly:
    """Remainder of a scalar multiple of a modulo b (sign-insensitive)."""
    db = b.degree
    lb = b.coeffs[-1]
    rem = list(a.coeffs)
    while True:
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < db:
            return YPoly(rem)
        lead = rem[-1]
        shiftn = len(rem) - 1 - db
        rem = [c * lb for c in rem]
        for j, oc in enumerate(b.coeffs):
            rem[shiftn + j] -= lead * oc


def poly_gcd(a: YPoly, b: YPoly) -> YPoly:
    """gcd over the integers (content included), leading coefficient > 0."""
    if a.is_zero() and b.is_zero():
        return YPoly()
    if a.is_zero():
        a, b = b, a
    if b.is_zero():
        return a if a.coeffs[-1] > 0 else -a
    cont = math.gcd(a.content(), b.content())
    pa, pb = a.primitive(), b.primitive()
    while not pb.is_zero():
        pa, pb = pb, _pseudo_rem(pa, pb).primitive()
    g = pa * cont
    return g if g.coeffs[-1] > 0 else -g


def poly_lcm(a: YPoly, b: YPoly) -> YPoly:
    """lcm over the integers, leading coefficient > 0."""
    if a.is_zero() or b.is_zero():
        return YPoly()
    out = (a * b).exact_div(poly_gcd(a, b))
    return out if out.coeffs[-1] > 0 else -out


# === fraction-free linear solving over the field of y-fractions ===


def _as_ypoly(v) -> YPoly:
    if isinstance(v, YPoly):
        return v
    if isinstance(v, int):
        return YPoly((v,))
    raise TypeError(f"expected YPoly or int, got {type(v).__name__}")


def solve_linear_system(
    matrix: Sequence[Sequence[YPoly]], rhs: Sequence[YPoly]
) -> list[tuple[YPoly, YPoly]] | None:
    """Solve A x = b exactly over rational functions in y.

    A must be square.  Returns one (numerator, denominator) pair per
    unknown, each reduced with a positive-leading-coefficient denominator,
    or None when the system is singular or inconsistent.  Elimination is
    fraction-free (Bareiss/Montante): every intermediate entry is a minor
    of the input, and every division is exact by construction.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix must be square")
    if len(rhs) != n:
        raise ValueError("right-hand side length must match the matrix")
    if n == 0:
        return []
    work = [[_as_ypoly(v) for v in row] + [_as_ypoly(rhs[i])] for i, row in enumerate(matrix)]
    prev = YPoly.one()
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if not work[r][col].is_zero()), None)
        if pivot_row is None:
            return None
        if pivot_row != col:
            work[col], work[pivot_row] = work[pivot_row], work[col]
        pivot = work[col][col]
        for r in range(n):
            if r == col:
                continue
            row = work[r]
            factor = row[col]
            for c in range(n + 1):
                if c == col:
                    continue
                row[c] = (pivot * row[c] - factor * work[col][c]).exact_div(prev)
            row[col] = YPoly.zero()
        prev = pivot
    # after the full sweep every diagonal entry equals the same determinant
    out: list[tuple[YPoly, YPoly]] = []
    for r in range(n):
        num, den = work[r][n], work[r][r]
        g = poly_gcd(num, den)
        if not g.is_zero() and g != YPoly.one():
            num, den = num.exact_div(g), den.exact_div(g)
        if den.coeffs[-1] < 0:
            num, den = -num, -den
        out.append((num, den))
    return out


# === bivariate polynomials: x on the outside, YPoly coefficients ===


class XYPoly:
    """Polynomial in x whose coefficients are integer polynomials in y.

    Canonical form mirrors YPoly: no trailing zero coefficients in x.
    """

    __slots__ = ("coeffs",)

    coeffs: tuple[YPoly, ...]

    def __init__(self, coeffs: Iterable[YPoly | int] = ()):
        cs = [_as_ypoly(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name: str, value) -> None:
        raise AttributeError("XYPoly is immutable")

    @classmethod
    def zero(cls) -> "XYPoly":
        return cls()

    @classmethod
    def one(cls) -> "XYPoly":
        return cls((YPoly.one(),))

    @property
    def degree(self) -> int:
        """Degree in x, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coefficient(self, power: int) -> YPoly:
        """YPoly coefficient of x**power."""
        if power < 0:
            raise ValueError("power must be nonnegative")
        if power >= len(self.coeffs):
            return YPoly.zero()
        return self.coeffs[power]

    def __eq__(self, other) -> bool:
        if isinstance(other, XYPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"XYPoly({[list(c.coeffs) for c in self.coeffs]!r})"

    def __add__(self, other: "XYPoly") -> "XYPoly":
        if not isinstance(other, XYPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return XYPoly(out)

    def __neg__(self) -> "XYPoly":
        return XYPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "XYPoly") -> "XYPoly":
        if not isinstance(other, XYPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "XYPoly":
        if isinstance(other, (int, YPoly)):
            scale = _as_ypoly(other)
            return XYPoly(tuple(c * scale for c in self.coeffs))
        if not isinstance(other, XYPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return XYPoly()
        out = [YPoly.zero()] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca.is_zero():
                continue
            for j, cb in enumerate(b):
                if not cb.is_zero():
                    out[i + j] = out[i + j] + ca * cb
        return XYPoly(out)

    __rmul__ = __mul__

    def shift_x(self, power: int) -> "XYPoly":
        """Multiply by x**power."""
        if power < 0:
            raise ValueError("power must be nonnegative")
        if not self.coeffs:
            return self
        return XYPoly((YPoly.zero(),) * power + self.coeffs)

    # ---- evaluation and calculus ----

    def eval_y1(self) -> list[int]:
        """Substitute y = 1, giving plain integer coefficients in x."""
        return [c.eval_at_one() for c in self.coeffs]

    def derivative_y(self) -> "XYPoly":
        """Partial derivative with respect to y."""
        return XYPoly(tuple(c.derivative() for c in self.coeffs))

    def content(self) -> int:
        vals = [abs(v) for c in self.coeffs for v in c.coeffs]
        return math.gcd(*vals) if vals else 0

    # ---- serialization ----

    def to_decimal_arrays(self) -> list[list[str]]:
        """Nested decimal strings: outer index x power, inner y power."""
        return [c.to_decimal_strings() for c in self.coeffs]

    @classmethod
    def from_decimal_arrays(cls, items: Sequence[Sequence[str]]) -> "XYPoly":
        return cls(YPoly.from_decimal_strings(row) for row in items)

    # ---- rendering ----

    def format(self, latex: bool = False) -> str:
        """Sum of per-power terms, low powers of x first."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        sep = " " if latex else ""
        for power, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            inner = c.format(latex=latex)
            if power == 0:
                parts.append(inner)
                continue
            if power == 1:
                xpart = "x"
            elif latex:
                xpart = f"x^{{{power}}}"
            else:
                xpart = f"x^{power}"
            if c.degree == 0:
                # pure integer coefficient: no parentheses needed
                if c.coeffs[0] == 1:
                    parts.append(xpart)
                elif c.coeffs[0] == -1:
                    parts.append(f"-{xpart}")
                else:
                    parts.append(f"{inner}{sep}{xpart}")
            else:
                parts.append(f"({inner}){sep}{xpart}")
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.format()
