"""Closed forms for power sums S_n(m) = 1^n + 2^n + ... + m^n.

The expanded form is built without Bernoulli numbers:

    S_n(m) = (-1)^n * sum_{i=1..n} a_i * m(m+1)(m+2)...(m+i),

    a_i = 1/(i+1) * sum_{k=1..i} (-1)^k * k^n / (k! * (i-k)!),

with the shortcuts a_1 = -1/2 and a_n = (-1)^n/(n+1) (the latter follows
from the principal term m^{n+1}/(n+1) and is cheaper than the defining sum;
strict mode recomputes it and checks agreement).  For n >= 3 the common
factor m(m+1) can be pulled out, giving the factored form

    S_n(m) = (-1)^n * m(m+1) * (-1/2 + sum_{i=2..n} a_i (m+2)(m+3)...(m+i)).

The classical Bernoulli-number formula is also implemented, purely as an
independent cross-check oracle for the forms above.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import binomial, factorial
from .poly import Polynomial, rising_factorial_basis_poly

__all__ = [
    "PowerSumCoefficients",
    "FactoredPowerSum",
    "coefficients",
    "coefficient_from_sum",
    "power_sum_closed_form",
    "power_sum_factored_form",
    "power_sum_value",
    "double_sum_closed_form",
    "bernoulli_numbers",
    "faulhaber_bernoulli_oracle",
    "alternating_binomial_power_sum",
]


@dataclass(frozen=True)
class PowerSumCoefficients:
    """Weights a_1..a_n of the rising-factorial expansion of S_n.

    coeffs[i-1] = a_i multiplies m(m+1)...(m+i).  Always a_1 = -1/2 and
    a_n = (-1)^n/(n+1).
    """

    n: int
    coeffs: tuple[Fraction, ...]

    def coefficient(self, i: int) -> Fraction:
        """a_i, 1-based, for 1 <= i <= n."""
        if not 1 <= i <= self.n:
            raise ValueError(f"coefficient index must be in 1..{self.n} (got {i})")
        return self.coeffs[i - 1]


def coefficient_from_sum(n: int, i: int) -> Fraction:
    """a_i by its defining sum, without the a_n shortcut:
    1/(i+1) * sum_{k=1..i} (-1)^k k^n / (k!(i-k)!)."""
    if n < 1:
        raise ValueError(f"exponent must be >= 1 (got {n})")
    if not 1 <= i <= n:
        raise ValueError(f"coefficient index must be in 1..{n} (got {i})")
    total = Fraction(0)
    for k in range(1, i + 1):
        term = Fraction(k**n, factorial(k) * factorial(i - k))
        total += -term if k % 2 else term
    return total / (i + 1)


def coefficients(n: int, *, strict: bool = False) -> PowerSumCoefficients:
    """All weights a_1..a_n for the exponent n.

    a_n is taken from the shortcut (-1)^n/(n+1) by default; strict=True
    also evaluates the defining sum at i=n and raises if they disagree,
    turning the simplification into a permanent self-check.
    """
    if n < 1:
        raise ValueError(f"exponent must be >= 1 (got {n})")
    coeffs = [coefficient_from_sum(n, i) for i in range(1, n)]
    shortcut = Fraction((-1) ** n, n + 1)
    if strict:
        full = coefficient_from_sum(n, n)
        if full != shortcut:
            raise ArithmeticError(
                f"a_n shortcut disagrees with the defining sum for n={n}: "
                f"{shortcut} != {full}"
            )
    coeffs.append(shortcut)
    return PowerSumCoefficients(n, tuple(coeffs))


@functools.lru_cache(maxsize=None)
def power_sum_closed_form(n: int) -> Polynomial:
    """S_n(m) expanded in the monomial basis of m.

    Degree n+1, leading coefficient 1/(n+1), divisible by m(m+1).  Cached;
    results are immutable, so concurrent use is safe.
    """
    if n < 1:
        raise ValueError(f"exponent must be >= 1 (got {n})")
    a = coefficients(n)
    total = Polynomial()
    for i in range(1, n + 1):
        total = total + rising_factorial_basis_poly(i + 1).scale(a.coefficient(i))
    if n % 2:
        total = -total
    return total


@dataclass(frozen=True)
class FactoredPowerSum:
    """S_n for n >= 3 in the factored shape
    sign * m(m+1) * (inner_constant + sum a_i (m+2)...(m+i))."""

    n: int
    sign: int
    prefactor: Polynomial
    inner_constant: Fraction
    inner_coeffs: tuple[tuple[int, Fraction], ...]  # (i, a_i) for i = 2..n

    def inner_polynomial(self) -> Polynomial:
        inner = Polynomial.constant(self.inner_constant)
        for i, c in self.inner_coeffs:
            inner = inner + rising_factorial_basis_poly(i - 1, shift=2).scale(c)
        return inner

    def expand(self) -> Polynomial:
        """Multiply the factored shape out; equals power_sum_closed_form(n)."""
        return (self.prefactor * self.inner_polynomial()).scale(self.sign)

    def render(self, var: str = "m") -> str:
        """Display form keeping the factored structure, e.g. for n=3:
        -m*(m+1)*(-1/2 + (m+2) - 1/4*(m+2)*(m+3))."""
        parts: list[tuple[bool, str]] = [
            (self.inner_constant < 0, str(abs(self.inner_constant)))
        ]
        for i, c in self.inner_coeffs:
            if c == 0:
                continue
            product = "*".join(f"({var}+{off})" for off in range(2, i + 1))
            mag = abs(c)
            body = product if mag == 1 else f"{mag}*{product}"
            parts.append((c < 0, body))
        inner = ("-" if parts[0][0] else "") + parts[0][1]
        for negative, body in parts[1:]:
            inner += (" - " if negative else " + ") + body
        sign = "-" if self.sign < 0 else ""
        return f"{sign}{var}*({var}+1)*({inner})"


def power_sum_factored_form(n: int) -> FactoredPowerSum:
    """The factored representation of S_n; requires n >= 3 (for smaller n
    there is no inner sum to factor)."""
    if n < 3:
        raise ValueError(f"factored form requires n >= 3 (got {n})")
    a = coefficients(n)
    return FactoredPowerSum(
        n=n,
        sign=-1 if n % 2 else 1,
        prefactor=Polynomial((0, 1, 1)),  # m*(m+1)
        inner_constant=Fraction(-1, 2),
        inner_coeffs=tuple((i, a.coefficient(i)) for i in range(2, n + 1)),
    )


def power_sum_value(n: int, m: int) -> int:
    """Exact integer S_n(m), by evaluating the expanded closed form.

    m = 0 gives the empty sum 0.  The closed form always takes integer
    values at integers; a non-integer result would mean the construction
    itself is broken, so it raises rather than rounding.
    """
    if n < 1:
        raise ValueError(f"exponent must be >= 1 (got {n})")
    if m < 0:
        raise ValueError(f"m must be >= 0 (got {m})")
    value = power_sum_closed_form(n)(m)
    if value.denominator != 1:
        raise ArithmeticError(
            f"closed form for n={n} returned non-integer {value} at m={m}"
        )
    return value.numerator


def double_sum_closed_form(n: int) -> Polynomial:
    """S_n(m) assembled literally from the binomial double sum

        sum_{i=1..n} sum_{k=1..i} (-1)^(k+n) k^n C(i,k) / (i+1)!
                                  * m(m+1)...(m+i).

    An alternative route to the same polynomial, kept for equivalence
    testing against power_sum_closed_form.
    """
    if n < 1:
        raise ValueError(f"exponent must be >= 1 (got {n})")
    total = Polynomial()
    for i in range(1, n + 1):
        base = rising_factorial_basis_poly(i + 1)
        for k in range(1, i + 1):
            coef = Fraction(k**n * binomial(i, k), factorial(i + 1))
            if (k + n) % 2:
                coef = -coef
            total = total + base.scale(coef)
    return total


def bernoulli_numbers(count: int) -> tuple[Fraction, ...]:
    """B_0..B_count, with the B_1 = -1/2 convention, from the recurrence
    sum_{j=0..k} C(k+1, j) B_j = 0."""
    if count < 0:
        raise ValueError(f"count must be >= 0 (got {count})")
    table: list[Fraction] = [Fraction(1)]
    for k in range(1, count + 1):
        acc = Fraction(0)
        for j in range(k):
            acc += binomial(k + 1, j) * table[j]
        table.append(-acc / (k + 1))
    return tuple(table)


def faulhaber_bernoulli_oracle(n: int) -> Polynomial:
    """S_n(m) by the classical Bernoulli-number formula

        S_n(m) = 1/(n+1) * sum_{j=0..n} (-1)^j C(n+1, j) B_j m^(n+1-j).

    Independent of the rising-factorial route; used only to cross-check it.
    """
    if n < 1:
        raise ValueError(f"exponent must be >= 1 (got {n})")
    bern = bernoulli_numbers(n)
    coeffs = [Fraction(0)] * (n + 2)
    for j in range(n + 1):
        c = binomial(n + 1, j) * bern[j]
        coeffs[n + 1 - j] = -c if j % 2 else c
    return Polynomial(coeffs).scale(Fraction(1, n + 1))


def alternating_binomial_power_sum(n: int) -> int:
    """sum_{k=1..n} (-1)^k C(n,k) k^n, which always equals (-1)^n n!."""
    if n < 1:
        raise ValueError(f"exponent must be >= 1 (got {n})")
    total = 0
    for k in range(1, n + 1):
        term = binomial(n, k) * k**n
        total += -term if k % 2 else term
    return total
