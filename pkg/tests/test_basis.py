from __future__ import annotations

import random
from fractions import Fraction

import pytest

from conftest import random_polynomial
from polysum.basis import (
    RisingFactorialPoly,
    from_rising_basis,
    solve_interpolation_system,
    to_rising_basis,
)
from polysum.exactnum import binomial
from polysum.poly import Polynomial, rising_factorial_basis_poly

X_SQUARED = Polynomial((0, 0, 1))


def test_to_rising_basis_x_squared():
    # by hand: c1 = f(0) - f(-1) = -1; c2 = f(0)/2 - f(-1) + f(-2)/2 = 0 - 1 + 2 = 1
    r = to_rising_basis(X_SQUARED)
    assert r.constant == 0
    assert r.coeffs == (Fraction(-1), Fraction(1))


def test_to_rising_basis_constant():
    r = to_rising_basis(Polynomial.constant(Fraction(7, 3)))
    assert r == RisingFactorialPoly(Fraction(7, 3), ())


def test_to_rising_basis_identity_poly():
    r = to_rising_basis(Polynomial((0, 1)))
    assert r == RisingFactorialPoly(Fraction(0), (Fraction(1),))


def test_to_rising_basis_zero():
    assert to_rising_basis(Polynomial()) == RisingFactorialPoly(Fraction(0), ())


def test_basis_products_are_fixed_points():
    for i in range(1, 8):
        r = to_rising_basis(rising_factorial_basis_poly(i))
        assert r.constant == 0
        assert r.coeffs == (Fraction(0),) * (i - 1) + (Fraction(1),)


def test_from_rising_basis_examples():
    assert from_rising_basis(RisingFactorialPoly(Fraction(0), (Fraction(-1), Fraction(1)))) == X_SQUARED
    assert from_rising_basis(RisingFactorialPoly(Fraction(5), ())) == Polynomial((5,))
    r = RisingFactorialPoly(Fraction(0), (Fraction(0), Fraction(0), Fraction(1)))
    assert from_rising_basis(r) == Polynomial((0, 2, 3, 1))


def test_solve_interpolation_system_examples():
    assert solve_interpolation_system(X_SQUARED) == to_rising_basis(X_SQUARED)
    assert solve_interpolation_system(Polynomial()) == RisingFactorialPoly(Fraction(0), ())
    expanded = rising_factorial_basis_poly(3)
    assert solve_interpolation_system(expanded) == RisingFactorialPoly(
        Fraction(0), (Fraction(0), Fraction(0), Fraction(1))
    )


def test_roundtrip_random_polynomials():
    rng = random.Random(20240810)
    for _ in range(100):
        f = random_polynomial(rng, max_degree=12)
        assert from_rising_basis(to_rising_basis(f)) == f


def test_closed_form_agrees_with_interpolation_system():
    rng = random.Random(20240811)
    for _ in range(100):
        f = random_polynomial(rng, max_degree=12)
        assert to_rising_basis(f) == solve_interpolation_system(f)


def test_pointwise_agreement_at_interpolation_points_and_beyond():
    rng = random.Random(20240812)
    for _ in range(30):
        f = random_polynomial(rng, max_degree=10)
        g = from_rising_basis(to_rising_basis(f))
        n = int(f.degree) if f else 0
        for x in range(-n, n + 1):
            assert f(x) == g(x)


def test_alternating_binomial_sum_vanishes():
    # the cancellation that makes the triangular system solvable
    for k in range(1, 31):
        total = sum((-1) ** j * binomial(k, j) for j in range(k + 1))
        assert total == 0


def test_coefficient_accessor():
    r = to_rising_basis(X_SQUARED)
    assert r.coefficient(1) == -1
    assert r.coefficient(2) == 1
    assert r.coefficient(5) == 0  # beyond the stored bound
    with pytest.raises(ValueError):
        r.coefficient(0)
