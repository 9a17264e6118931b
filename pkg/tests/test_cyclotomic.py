import random
from fractions import Fraction
from math import gcd

import pytest

from ramcount.cyclotomic import (
    CycNum,
    cyclotomic_polynomial,
    euler_phi,
    galois_apply,
    root_of_unity,
)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_root_of_unity_basics():
    assert root_of_unity(1, 0) == CycNum.from_rational(1)
    z3 = root_of_unity(3)
    assert z3 + z3 * z3 == CycNum.from_rational(-1)
    z4 = root_of_unity(4)
    assert z4 * z4 == CycNum.from_rational(-1)


def test_conj_and_products():
    z5 = root_of_unity(5)
    assert z5.conj() == root_of_unity(5, 4)
    z6 = root_of_unity(6)
    assert z6 * root_of_unity(6, 5) == CycNum.from_rational(1)
    x = CycNum.from_rational(1) + root_of_unity(4)
    assert x / x == CycNum.from_rational(1)


def test_galois_apply():
    z5 = root_of_unity(5)
    assert galois_apply(z5, 2) == root_of_unity(5, 2)
    q = CycNum.from_rational(Fraction(7, 3))
    assert galois_apply(q.lift(12), 5) == q
    x = root_of_unity(7) + 3 * root_of_unity(7, 3)
    assert galois_apply(galois_apply(x, 2), 3) == galois_apply(x, 6)


def test_galois_requires_coprime():
    with pytest.raises(ValueError):
        root_of_unity(6).galois(2)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        root_of_unity(5) / CycNum.from_rational(0)


def test_cross_level_equality():
    # zeta_6^2 = zeta_3 even though levels differ
    assert root_of_unity(6, 2) == root_of_unity(3, 1)
    assert root_of_unity(4, 2) == CycNum.from_rational(-1)
    assert root_of_unity(2, 1) == CycNum.from_rational(-1)


def _random_elem(rng, n):
    phi = euler_phi(n)
    return CycNum(
        n,
        [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(phi)],
    )


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 8, 12, 15, 24, 30, 45, 60])
def test_field_axioms_randomized(n):
    rng = random.Random(1000 + n)
    one = CycNum.from_rational(1)
    for _ in range(8):
        a, b, c = (_random_elem(rng, n) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a
        if not a.is_zero():
            assert a * a.inverse() == one
            assert (b / a) * a == b


@pytest.mark.parametrize("n", [3, 5, 8, 12, 30, 60])
def test_galois_is_ring_hom(n):
    rng = random.Random(2000 + n)
    units = [k for k in range(1, n + 1) if gcd(k, n) == 1]
    for _ in range(6):
        a, b = _random_elem(rng, n), _random_elem(rng, n)
        k = rng.choice(units)
        kp = rng.choice(units)
        assert galois_apply(a + b, k) == galois_apply(a, k) + galois_apply(b, k)
        assert galois_apply(a * b, k) == galois_apply(a, k) * galois_apply(b, k)
        assert galois_apply(galois_apply(a, k), kp) == galois_apply(a, k * kp)


def test_norm_like_positivity():
    # conj(x) * x is a nonnegative rational for x = q * root of unity
    for n in (3, 5, 8, 12):
        for j in range(n):
            x = Fraction(-3, 2) * root_of_unity(n, j)
            y = x.conj() * x
            assert y.is_rational() and y.as_rational() >= 0


def test_json_roundtrip():
    x = CycNum(12, [Fraction(1, 2), 0, Fraction(-3), 0])
    assert CycNum.from_json(x.to_json()) == x
    assert x.to_json()["coeffs"] == ["1/2", "0", "-3", "0"]
