"""Closed-form summation of polynomial values over 1..m.

For a polynomial f of degree n, the sum g(m) = f(1) + f(2) + ... + f(m) is
itself a polynomial of degree n+1.  It is assembled from the rising-factorial
expansion of f together with the telescoping identity

    sum_{x=1..m} x(x+1)...(x+i-1) = m(m+1)...(m+i) / (i+1),

giving  g(m) = m*f(0) + sum_{i=1..n} c_i/(i+1) * m(m+1)...(m+i).

Every closed form has zero constant term (g is divisible by m), and
brute_force_sum is the literal term-by-term reference the closed forms are
tested against.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .basis import to_rising_basis
from .poly import Polynomial, rising_factorial_basis_poly

__all__ = [
    "ClosedFormSum",
    "sum_rising_factorial",
    "sum_polynomial",
    "sum_range",
    "brute_force_sum",
]


@dataclass(frozen=True)
class ClosedFormSum:
    """The polynomial g with g(m) = sum of the summand at x = 1..m.

    poly has zero constant term and degree source_degree + 1 for a nonzero
    summand; source_degree is 0 by convention when the summand is zero.
    """

    poly: Polynomial
    source_degree: int

    def value_at(self, m: int, *, extend: bool = False) -> Fraction:
        """Exact value of the sum for m >= 1; m = 0 gives the empty sum 0.

        Negative m has no summation meaning; pass extend=True to evaluate
        the polynomial there anyway.
        """
        if m < 0 and not extend:
            raise ValueError(
                f"m must be >= 0 (got {m}); use extend=True for polynomial extension"
            )
        return self.poly(m)


def sum_rising_factorial(i: int) -> Polynomial:
    """Closed form of sum_{x=1..m} x(x+1)...(x+i-1), expanded in m.

    Equals m(m+1)...(m+i)/(i+1): the length-(i+1) rising factorial starting
    at m, scaled by 1/(i+1).
    """
    if i < 1:
        raise ValueError(f"rising factorial length must be >= 1 (got {i})")
    return rising_factorial_basis_poly(i + 1).scale(Fraction(1, i + 1))


def sum_polynomial(f: Polynomial) -> ClosedFormSum:
    """Closed form for sum_{x=1..m} f(x), for arbitrary polynomial f."""
    expansion = to_rising_basis(f)
    g = Polynomial((0, expansion.constant))  # m * f(0)
    for i, c in enumerate(expansion.coeffs, start=1):
        if c == 0:
            continue
        g = g + rising_factorial_basis_poly(i + 1).scale(c / (i + 1))
    degree = int(f.degree) if f else 0
    return ClosedFormSum(g, degree)


def sum_range(f: Polynomial, lo: int, hi: int) -> Fraction:
    """Exact value of sum_{x=lo..hi} f(x), computed as g(hi) - g(lo-1).

    For lo >= 1 this is the plain closed-form difference; bounds at or
    below zero are evaluated by polynomial extension of g, an extension of
    the 1..m semantics.
    """
    if lo > hi:
        raise ValueError(f"empty range: lo={lo} > hi={hi}")
    g = sum_polynomial(f).poly
    return g(hi) - g(lo - 1)


def brute_force_sum(f: Polynomial, m: int) -> Fraction:
    """Literal f(1) + f(2) + ... + f(m); the reference every closed form is
    tested against."""
    if m < 1:
        raise ValueError(f"brute-force sum requires m >= 1 (got {m})")
    total = Fraction(0)
    for x in range(1, m + 1):
        total += f(x)
    return total
