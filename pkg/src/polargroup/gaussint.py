"""Gaussian integers Z[i]: exact division, gcd, factorization, divisors.

Factorization works through the integer norm (trial division; desk scale)
and the classical splitting of rational primes: 2 ramifies as -i*(1+i)^2,
p = 1 mod 4 splits into a conjugate pair, p = 3 mod 4 stays inert.
Primes are canonicalized to the first-quadrant associate (a > 0, b >= 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .scalars import Qi


@dataclass(frozen=True)
class Zi:
    """The Gaussian integer a + b*i."""

    a: int
    b: int

    def __mul__(self, other: "Zi") -> "Zi":
        return Zi(self.a * other.a - self.b * other.b,
                  self.a * other.b + self.b * other.a)

    def __add__(self, other: "Zi") -> "Zi":
        return Zi(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "Zi") -> "Zi":
        return Zi(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "Zi":
        return Zi(-self.a, -self.b)

    def conj(self) -> "Zi":
        return Zi(self.a, -self.b)

    def norm(self) -> int:
        return self.a * self.a + self.b * self.b

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_unit(self) -> bool:
        return self.norm() == 1

    def to_qi(self) -> Qi:
        return Qi(self.a, self.b)

    def __str__(self) -> str:
        return str(self.to_qi())


UNITS = (Zi(1, 0), Zi(-1, 0), Zi(0, 1), Zi(0, -1))


def exact_div(n: Zi, d: Zi) -> Zi | None:
    """n / d when d divides n exactly in Z[i], else None."""
    nd = d.norm()
    if nd == 0:
        raise ZeroDivisionError("division by zero in Z[i]")
    p = n * d.conj()
    if p.a % nd or p.b % nd:
        return None
    return Zi(p.a // nd, p.b // nd)


def _nearest_div(n: Zi, d: Zi) -> Zi:
    nd = d.norm()
    p = n * d.conj()
    # round both coordinates to the nearest integer
    qa = (2 * p.a + nd) // (2 * nd) if p.a >= 0 else -((-2 * p.a + nd) // (2 * nd))
    qb = (2 * p.b + nd) // (2 * nd) if p.b >= 0 else -((-2 * p.b + nd) // (2 * nd))
    return Zi(qa, qb)


def gauss_gcd(x: Zi, y: Zi) -> Zi:
    """A gcd in Z[i] via the Euclidean algorithm (up to units)."""
    while not y.is_zero():
        q = _nearest_div(x, y)
        x, y = y, x - q * y
    return x


def canonical_associate(z: Zi) -> Zi:
    """First-quadrant associate: a > 0 and b >= 0 (zero stays zero)."""
    if z.is_zero():
        return z
    for u in UNITS:
        w = z * u
        if w.a > 0 and w.b >= 0:
            return w
    raise AssertionError("unreachable")


def _factor_int(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _sqrt_minus_one(p: int) -> int:
    # p = 1 mod 4; a quadratic nonresidue r gives r^((p-1)/4) = sqrt(-1)
    for r in range(2, p):
        x = pow(r, (p - 1) // 4, p)
        if (x * x) % p == p - 1:
            return x
    raise ValueError(f"{p} is not a split prime")


def _prime_above(p: int) -> Zi:
    """A Gaussian prime dividing the rational prime p (p = 2 or 1 mod 4)."""
    if p == 2:
        return Zi(1, 1)
    x = _sqrt_minus_one(p)
    return canonical_associate(gauss_gcd(Zi(p, 0), Zi(x, 1)))


def factor_gaussian(n: Zi) -> tuple[Zi, list[tuple[Zi, int]]]:
    """Factor n into (unit, [(prime, exponent), ...]).

    The unit times the product of prime powers equals n exactly.  Primes
    are first-quadrant canonical and sorted by (norm, a, b).
    """
    if n.is_zero():
        raise ValueError("cannot factor 0")
    factors: dict[Zi, int] = {}
    rem = n
    for p, _ in sorted(_factor_int(n.norm()).items()):
        if p % 4 == 3:
            cands = [Zi(p, 0)]
        else:
            g = _prime_above(p)
            cands = [g] if p == 2 else [g, canonical_associate(g.conj())]
        for c in cands:
            while True:
                q = exact_div(rem, c)
                if q is None:
                    break
                factors[c] = factors.get(c, 0) + 1
                rem = q
    assert rem.is_unit(), "norm factorization must exhaust the input"
    items = sorted(factors.items(), key=lambda kv: (kv[0].norm(), kv[0].a, kv[0].b))
    return rem, items


def divisors_up_to_units(n: Zi) -> Iterator[Zi]:
    """All divisors of n in Z[i], one per associate class."""
    _, primes = factor_gaussian(n)

    def rec(i: int, acc: Zi) -> Iterator[Zi]:
        if i == len(primes):
            yield acc
            return
        p, e = primes[i]
        cur = acc
        for _ in range(e + 1):
            yield from rec(i + 1, cur)
            cur = cur * p

    seen: set[Zi] = set()
    for d in rec(0, Zi(1, 0)):
        c = canonical_associate(d)
        if c not in seen:
            seen.add(c)
            yield c


def qi_to_zi_pair(z: Qi) -> tuple[Zi, int]:
    """Write a Gaussian rational as (numerator in Z[i], positive integer den)."""
    from math import lcm

    den = lcm(z.re.denominator, z.im.denominator)
    a = z.re.numerator * (den // z.re.denominator)
    b = z.im.numerator * (den // z.im.denominator)
    return Zi(a, b), den
