import random

import pytest

from polargroup.scalars import Qi, ONE, I
from polargroup.poly import Poly, as_ratfunc
from polargroup.exprparse import (ExprError, Num, ImagUnit, Var, Neg, BinOp,
                                  Pow, parse, print_expr, evaluate,
                                  parse_value, parse_scalar, parse_ring)
from polargroup import contexts


def test_grammar_examples():
    v = evaluate(parse("(x-i)*(x+i)", "x"))
    assert v == as_ratfunc(Poly([ONE, Qi(0), ONE]))
    circle = contexts.circle_form()
    w = parse_value("t^-1 + i", circle)  # (1 + i*t)/t
    assert w == as_ratfunc(Poly([ONE, I])) / as_ratfunc(Poly([Qi(0), ONE]))
    with pytest.raises(ExprError):
        parse("x^(1/2)", "x")


def test_wrong_variable_is_an_error():
    with pytest.raises(ExprError):
        parse("t + 1", "x")
    with pytest.raises(ExprError):
        parse("y", "x")


def test_zero_and_syntax_errors():
    with pytest.raises(ExprError):
        parse_value("x - x", contexts.affine_line())
    with pytest.raises(ExprError):
        parse("(x + ", "x")
    with pytest.raises(ExprError):
        evaluate(parse("1/(x-x)", "x"))


def test_scalar_literals():
    from fractions import Fraction
    assert parse_scalar("(3+4*i)/5") == Qi(Fraction(3, 5), Fraction(4, 5))
    assert parse_scalar("-i/2") == Qi(0, Fraction(-1, 2))
    assert parse_scalar("-2") == Qi(-2)
    with pytest.raises(ExprError):
        parse_scalar("x + 1")


def _rand_ast(rng, depth):
    if depth == 0:
        return rng.choice([Num(rng.randint(0, 9)), ImagUnit(), Var("x")])
    kind = rng.randrange(6)
    if kind == 0:
        return Num(rng.randint(0, 9))
    if kind == 1:
        return ImagUnit()
    if kind == 2:
        return Var("x")
    if kind == 3:
        return Neg(_rand_ast(rng, depth - 1))
    if kind == 4:
        base = _rand_ast(rng, depth - 1)
        while isinstance(base, Pow):
            base = _rand_ast(rng, depth - 1)
        return Pow(base, rng.randint(-5, 9))
    return BinOp(rng.choice("+-*/"), _rand_ast(rng, depth - 1),
                 _rand_ast(rng, depth - 1))


def test_print_parse_round_trip():
    rng = random.Random(51)
    for _ in range(1000):
        node = _rand_ast(rng, rng.randint(1, 4))
        assert parse(print_expr(node), "x") == node


def test_ring_dsl():
    assert parse_ring("line") == contexts.affine_line()
    assert parse_ring("line[inv=0]") == contexts.affine_line([0])
    assert parse_ring("line[inv=(x^2+1)]") == contexts.affine_line([I, -I])
    assert parse_ring("line[inv=i,-i]") == contexts.affine_line([I, -I])
    assert parse_ring("prime-local[i]") == contexts.prime_local(I)
    assert parse_ring("circle") == contexts.circle_form()
    assert parse_ring("icircle") == contexts.imaginary_circle_form()
    assert parse_ring("proj-line") == contexts.projective_line()
    assert parse_ring("conic") == contexts.projective_conic()
    assert parse_ring("cusp") == contexts.cusp_cubic()
    with pytest.raises(ExprError):
        parse_ring("torus")
    with pytest.raises(ExprError):
        parse_ring("line[inv=(x^2-2)]")   # does not split over Q(i)
    with pytest.raises(ExprError):
        parse_ring("prime-local[3]")      # not in the upper half plane
