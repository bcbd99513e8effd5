"""Arbitrary-precision integer matrices, polynomials and exact characteristic polynomials.

Everything here is exact: Python integers throughout, no floating point
anywhere.  The characteristic polynomial has two independent implementations,

* `char_poly` -- Faddeev-LeVerrier, whose division by k at step k is provably
  exact over the integers, and
* `char_poly_interpolation` -- fraction-free Bareiss determinants of xI - M at
  n+1 integer points combined by Lagrange interpolation with a single exact
  division by n! at the end.

Their exact agreement is asserted by the test suite, not re-checked at runtime.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from operator import mul
from typing import Iterable, Sequence


class DegenerateQuadratic(ValueError):
    """Leading coefficient of a quadratic is zero."""


@dataclass(frozen=True)
class IntMatrix:
    """Dense square matrix of arbitrary-precision integers."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.rows)
        if any(len(r) != n for r in self.rows):
            raise ValueError("matrix must be square")

    @property
    def n(self) -> int:
        return len(self.rows)

    @staticmethod
    def from_rows(rows: Iterable[Iterable[int]]) -> "IntMatrix":
        return IntMatrix(tuple(tuple(int(x) for x in r) for r in rows))

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.n))

    def mat_vec(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.n:
            raise ValueError("vector length must equal matrix order")
        return tuple(sum(map(mul, row, v)) for row in self.rows)


class IntPolynomial:
    """Polynomial with arbitrary-precision integer coefficients, ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    def __reduce__(self):
        return (IntPolynomial, (self.coeffs,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPolynomial":
        if k < 0:
            raise ValueError("negative polynomial power")
        result = IntPolynomial((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod_monic(self, divisor: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Quotient and remainder for a monic divisor; stays in integers."""
        if not divisor.is_monic:
            raise ValueError("divisor must be monic")
        d = divisor.degree
        rem = list(self.coeffs)
        if len(rem) <= d:
            return IntPolynomial(), self
        quot = [0] * (len(rem) - d)
        for i in reversed(range(len(quot))):
            c = rem[i + d]
            if c:
                quot[i] = c
                for j, dc in enumerate(divisor.coeffs):
                    rem[i + j] -= c * dc
        return IntPolynomial(quot), IntPolynomial(rem[:d])

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for k in reversed(range(len(self.coeffs))):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                xk = "x" if k == 1 else f"x^{k}"
                body = xk if mag == 1 else f"{mag}*{xk}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms)

    @staticmethod
    def x_minus(c: int) -> "IntPolynomial":
        return IntPolynomial((-c, 1))

    @staticmethod
    def constant(c: int) -> "IntPolynomial":
        return IntPolynomial((c,))


POLY_ONE = IntPolynomial((1,))
POLY_X = IntPolynomial((0, 1))


def poly_mul(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p * q


def poly_pow(p: IntPolynomial, k: int) -> IntPolynomial:
    return p**k


def poly_eq(p: IntPolynomial, q: IntPolynomial) -> bool:
    return p == q


def _mat_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    bt = tuple(zip(*b))
    return [[sum(map(mul, row, col)) for col in bt] for row in a]


def char_poly(matrix: IntMatrix) -> IntPolynomial:
    """det(xI - M), monic of degree n, by the Faddeev-LeVerrier recurrence.

    The trace divided at step k is always a multiple of k for integer input;
    this is asserted rather than trusted.
    """
    n = matrix.n
    if n == 0:
        return POLY_ONE
    base = [list(r) for r in matrix.rows]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    work = [row[:] for row in base]
    for k in range(1, n + 1):
        if k > 1:
            shift = coeffs[n - k + 1]
            for i in range(n):
                work[i][i] += shift
            work = _mat_mul(base, work)
        t = sum(work[i][i] for i in range(n))
        q, r = divmod(-t, k)
        if r:
            raise ArithmeticError(f"inexact division by {k} in Faddeev-LeVerrier")
        coeffs[n - k] = q
    return IntPolynomial(coeffs)


def bareiss_determinant(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free Gaussian elimination."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    if any(len(r) != n for r in a):
        raise ValueError("matrix must be square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            head = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - head * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def char_poly_interpolation(matrix: IntMatrix) -> IntPolynomial:
    """det(xI - M) by Bareiss evaluation at n+1 points plus interpolation.

    Independent cross-check for `char_poly`.  The Lagrange combination is done
    over a common denominator n!, whose final division is exact because the
    characteristic polynomial has integer coefficients.
    """
    n = matrix.n
    if n == 0:
        return POLY_ONE
    points = [i - n // 2 for i in range(n + 1)]
    values = []
    for x in points:
        shifted = [
            [
                (x if i == j else 0) - matrix.rows[i][j]
                for j in range(n)
            ]
            for i in range(n)
        ]
        values.append(bareiss_determinant(shifted))
    linear = [IntPolynomial.x_minus(p) for p in points]
    prefix = [POLY_ONE]
    for lin in linear:
        prefix.append(prefix[-1] * lin)
    suffix = [POLY_ONE]
    for lin in reversed(linear):
        suffix.append(suffix[-1] * lin)
    suffix.reverse()
    total = IntPolynomial()
    for i in range(n + 1):
        weight = values[i] * math.comb(n, i)
        if (n - i) % 2:
            weight = -weight
        if weight:
            total = total + weight * (prefix[i] * suffix[i + 1])
    fact = math.factorial(n)
    out = []
    for c in total.coeffs:
        q, r = divmod(c, fact)
        if r:
            raise ArithmeticError("interpolated polynomial is not integral")
        out.append(q)
    return IntPolynomial(out)


def is_perfect_square(v: int) -> int | None:
    """The nonnegative integer square root of v, or None if v is not a square."""
    if v < 0:
        return None
    r = math.isqrt(v)
    return r if r * r == v else None


def rational_roots_of_quadratic(
    a: int, b: int, c: int
) -> tuple[Fraction, Fraction] | None:
    """Both roots of a*x^2 + b*x + c when rational, smaller root first."""
    if a == 0:
        raise DegenerateQuadratic("leading coefficient is zero")
    disc = b * b - 4 * a * c
    s = is_perfect_square(disc)
    if s is None:
        return None
    r1 = Fraction(-b - s, 2 * a)
    r2 = Fraction(-b + s, 2 * a)
    return (r1, r2) if r1 <= r2 else (r2, r1)
