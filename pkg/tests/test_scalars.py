from fractions import Fraction
import random

import pytest

from polargroup.scalars import (Qi, ZERO, ONE, I, conj, norm_sq, hilbert90,
                                circle_location, half_plane_location,
                                format_scalar, INSIDE, ON, OUTSIDE,
                                UPPER, REAL, LOWER)
from polargroup.exprparse import parse_scalar


def test_field_axioms_spot():
    rng = random.Random(1)
    for _ in range(50):
        a = Qi(Fraction(rng.randint(-5, 5), rng.randint(1, 4)),
               Fraction(rng.randint(-5, 5), rng.randint(1, 4)))
        b = Qi(rng.randint(-3, 3), rng.randint(-3, 3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b).conj() == a.conj() + b.conj()
        assert (a * b).conj() == a.conj() * b.conj()
        if not a.is_zero():
            assert a * a.inverse() == ONE
            assert a ** 3 * a ** -3 == ONE


def test_basic_values():
    assert I * I == Qi(-1)
    assert (Qi(1, 1) * Qi(1, -1)) == Qi(2)
    assert Qi(3, 4).norm_sq() == 25
    assert norm_sq(Qi(Fraction(3, 5), Fraction(4, 5))) == 1
    assert conj(Qi(2, -7)) == Qi(2, 7)
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_locations():
    assert circle_location(Qi(Fraction(1, 2))) == INSIDE
    assert circle_location(I) == ON
    assert circle_location(Qi(2, 1)) == OUTSIDE
    assert half_plane_location(I) == UPPER
    assert half_plane_location(Qi(7)) == REAL
    assert half_plane_location(-I) == LOWER


def test_hilbert90():
    # conj(u)/u = w for any norm-1 w, including the exceptional point -1
    w = Qi(Fraction(3, 5), Fraction(4, 5))
    u = hilbert90(w)
    assert u.conj() / u == w
    assert hilbert90(w) == Qi(Fraction(8, 5), Fraction(-4, 5))
    u = hilbert90(Qi(-1))
    assert u.conj() / u == Qi(-1)
    with pytest.raises(ValueError):
        hilbert90(Qi(2))


def test_format_round_trip():
    rng = random.Random(2)
    for _ in range(100):
        z = Qi(Fraction(rng.randint(-9, 9), rng.randint(1, 7)),
               Fraction(rng.randint(-9, 9), rng.randint(1, 7)))
        assert parse_scalar(format_scalar(z)) == z
    assert format_scalar(Qi(Fraction(3, 5), Fraction(4, 5))) == "(3+4*i)/5"
    assert format_scalar(Qi(0, Fraction(1, 2))) == "i/2"
    assert format_scalar(Qi(-2)) == "-2"
