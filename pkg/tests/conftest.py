"""Shared random generators for the property suites.

All randomness is seeded per test, so runs are reproducible.  Elements
are built from linear factors so every generated value splits over Q(i).
"""

from fractions import Fraction
import random

import pytest

from polargroup.scalars import Qi, ONE
from polargroup.poly import Poly, Laurent, RatFunc, as_ratfunc
from polargroup import contexts


def rand_fraction(rng, span=2, dens=(1, 2)):
    return Fraction(rng.randint(-span, span), rng.choice(dens))


def rand_qi(rng, span=2):
    return Qi(rand_fraction(rng, span), rand_fraction(rng, span))


def rand_nonzero_qi(rng, span=2):
    while True:
        z = rand_qi(rng, span)
        if not z.is_zero():
            return z


def rand_point(rng, span=2):
    """A random potential root; avoids zero so Laurent bodies stay legal."""
    return rand_nonzero_qi(rng, span)


def pythagorean_point(rng) -> Qi:
    """A non-real rational point on the unit circle, via m > n >= 1."""
    while True:
        m = rng.randint(1, 9)
        n = rng.randint(1, 9)
        if m == n:
            continue
        m, n = max(m, n), min(m, n)
        d = m * m + n * n
        z = Qi(Fraction(m * m - n * n, d), Fraction(2 * m * n, d))
        if rng.random() < 0.5:
            z = z.conj()
        return z


def rand_element(rng, ctx, max_factors=2) -> RatFunc:
    """Random element of the context's fraction-field domain."""
    r = as_ratfunc(Poly.const(rand_nonzero_qi(rng)))
    for _ in range(rng.randint(1, max_factors)):
        z = rand_point(rng)
        e = rng.choice([-1, 1])
        r = r * as_ratfunc(Poly([-z, 1])) ** e
    if ctx.kind in (contexts.CIRCLE, contexts.ICIRCLE, contexts.CONIC):
        k = rng.randint(-1, 1)
        r = r * as_ratfunc(Laurent.t(k))
    if ctx.kind == contexts.PROJ_LINE:
        # balance the degree with a class-neutral real factor
        k = r.den.degree() - r.num.degree()
        w = Qi(rng.randint(4, 9))  # real, so it never collides with rand_point
        r = r * as_ratfunc(Poly([-w, 1])) ** k
    if r.is_zero():
        return rand_element(rng, ctx, max_factors)
    ctx.require_domain(r)
    return r


def rand_unit(rng, ctx) -> RatFunc:
    """Random unit of the context's coordinate ring B."""
    u = as_ratfunc(Poly.const(rand_nonzero_qi(rng)))
    if ctx.kind == contexts.LINE:
        for p in ctx.inverted:
            u = u * as_ratfunc(Poly([-p, 1])) ** rng.randint(-1, 1)
    elif ctx.kind == contexts.PRIME_LOCAL:
        while True:
            w = rand_point(rng)
            if w != ctx.point and w != ctx.point.conj():
                break
        u = u * as_ratfunc(Poly([-w, 1])) ** rng.randint(-1, 1)
    elif ctx.kind in (contexts.CIRCLE, contexts.ICIRCLE):
        u = u * as_ratfunc(Laurent.t(rng.randint(-1, 1)))
    return u


def rand_trivial_multiplier(rng, ctx) -> RatFunc:
    """A random element of B* K*: unit times h * sigma(h)."""
    h = rand_element(rng, ctx, max_factors=1)
    fixed = h * as_ratfunc(ctx.sigma(h))
    return rand_unit(rng, ctx) * fixed


def rand_ring_element(rng, ctx, max_factors=3):
    """Random element of B itself (for factorization and delta tests)."""
    if ctx.kind in (contexts.CIRCLE, contexts.ICIRCLE):
        body = Poly.const(rand_nonzero_qi(rng))
        for _ in range(rng.randint(1, max_factors)):
            body = body * Poly([-rand_point(rng), 1]) ** rng.randint(1, 2)
        return Laurent(rng.randint(-2, 2), body)
    f = Poly.const(rand_nonzero_qi(rng))
    for _ in range(rng.randint(1, max_factors)):
        f = f * Poly([-rand_point(rng), 1]) ** rng.randint(1, 2)
    if ctx.kind == contexts.LINE and ctx.inverted:
        p = rng.choice(sorted(ctx.inverted, key=lambda z: (z.re, z.im)))
        return as_ratfunc(f) * as_ratfunc(Poly([-p, 1])) ** rng.randint(-2, 0)
    return f


@pytest.fixture
def rng():
    return random.Random(20260823)
