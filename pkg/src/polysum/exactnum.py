"""Exact integer and rational arithmetic.

Python's ``int`` is already an arbitrary-precision integer and
``fractions.Fraction`` is already the canonical reduced rational (positive
denominator, coprime parts, zero as 0/1, reduction enforced at construction),
so this module does not wrap them.  It supplies the combinatorial helpers the
rest of the package needs, plus the wire format used by the CLI.

The rational arithmetic suite (add, sub, mul, div, neg, pow, compare,
is-zero) is the operator set on ``Fraction``; division by zero raises
``ZeroDivisionError``.  The test suite checks those operators against an
independent numerator/denominator reference model.
"""

from __future__ import annotations

import math
from fractions import Fraction

__all__ = ["factorial", "binomial", "format_rational"]


def factorial(k: int) -> int:
    """Return k! exactly; k must be nonnegative."""
    if k < 0:
        raise ValueError(f"factorial is undefined for negative k (got {k})")
    return math.factorial(k)


def binomial(n: int, k: int) -> int:
    """Return the binomial coefficient C(n, k) for n >= 0.

    Out-of-range k (k < 0 or k > n) yields 0 rather than an error, so
    summation loops need no boundary guards.
    """
    if n < 0:
        raise ValueError(f"binomial requires n >= 0 (got n={n})")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def format_rational(q: Fraction | int) -> str:
    """Serialize a rational as "num/den" in base 10, or "num" when den == 1.

    Examples: Fraction(-1, 2) -> "-1/2", Fraction(14) -> "14".
    """
    return str(Fraction(q))
