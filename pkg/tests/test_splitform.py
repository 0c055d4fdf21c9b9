from fractions import Fraction
import random

import pytest

from polargroup.scalars import Qi, ONE, I
from polargroup.poly import Poly, Laurent, RatFunc, as_ratfunc
from polargroup.splitform import (SplitForm, UnsplitReport, UnsplittableError,
                                  find_roots, split, split_fully, assemble,
                                  assemble_laurent)


def test_root_multiplicities_verified_by_expansion():
    # (x - i)^2 (x + i) expands to x^3 - i x^2 + x - i; check that first
    f = Poly([-I, 1]) ** 2 * Poly([I, 1])
    assert f == Poly([-I, ONE, -I, ONE])
    roots, residual = find_roots(f)
    assert roots == {I: 2, -I: 1}
    assert residual.is_constant() and residual.constant() == ONE


def test_rootless_certification():
    roots, residual = find_roots(Poly([Qi(-2), Qi(0), ONE]))
    assert roots == {} and residual == Poly([Qi(-2), Qi(0), ONE])
    s = split(Poly([Qi(-2), Qi(0), ONE]))
    assert isinstance(s, UnsplitReport)
    with pytest.raises(UnsplittableError):
        split_fully(Poly([Qi(-2), Qi(0), ONE]))
    # a degree-1 residual is impossible: linear factors always split
    s2 = split(Poly([Qi(-2), Qi(0), ONE]) * Poly([-I, 1]))
    assert isinstance(s2, UnsplitReport)
    assert s2.residual.degree() == 2
    assert s2.split_part.root_dict() == {I: 1}


def test_split_assemble_round_trip():
    rng = random.Random(21)
    for _ in range(50):
        table = {}
        for _ in range(rng.randint(1, 3)):
            z = Qi(Fraction(rng.randint(-3, 3), rng.choice([1, 2])),
                   Fraction(rng.randint(-3, 3), rng.choice([1, 2])))
            if z.is_zero():
                continue  # zero roots hoist into t_exp; covered separately
            e = rng.choice([-2, -1, 1, 2])
            table[z] = table.get(z, 0) + e
        unit = Qi(rng.randint(1, 3), rng.randint(-2, 2))
        s = SplitForm(unit, rng.randint(-2, 2), table)
        v = assemble(s)
        s2 = split_fully(as_ratfunc(v))
        assert s2 == s
        assert as_ratfunc(assemble(s2)) == as_ratfunc(v)


def test_zero_root_hoisting_and_laurent():
    f = Laurent(-2, Poly([Qi(0), Qi(0), ONE]) * Poly([-I, 1]))
    s = split_fully(f)
    assert s.t_exp == 0 and s.root_dict() == {I: 1}
    back = assemble_laurent(s)
    assert as_ratfunc(back) == as_ratfunc(f)


def test_group_ops():
    a = SplitForm(Qi(2), 1, {I: 1})
    b = SplitForm(I, -1, {I: 1, -I: 2})
    p = a * b
    assert p.unit == Qi(0, 2) and p.t_exp == 0
    assert p.root_dict() == {I: 2, -I: 2}
    assert (a * a.inverse()).root_dict() == {}
    c = a.conj()
    assert c.unit == Qi(2) and c.root_dict() == {-I: 1}


def test_json_shape():
    s = SplitForm(Qi(Fraction(3, 5), Fraction(4, 5)), 2, {I: -1})
    j = s.to_json()
    assert j == {"unit": "(3+4*i)/5", "t_exp": 2, "roots": [{"z": "i", "e": -1}]}


def test_ratfunc_split():
    r = RatFunc(Poly([-I, 1]), Poly([ONE, 1]) ** 2)
    s = split_fully(r)
    assert s.root_dict() == {I: 1, -ONE: -2}
