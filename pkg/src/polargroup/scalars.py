"""Exact arithmetic in Q(i): the scalar field for everything else.

All values are immutable and hashable.  A scalar is a pair of
``fractions.Fraction`` (real and imaginary part); equality, conjugation and
the square norm are exact, so geometric predicates (on/inside/outside the
unit circle, upper/lower half plane) are decidable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rat = Fraction

ScalarLike = Union["Qi", Fraction, int]

INSIDE = "inside"
ON = "on"
OUTSIDE = "outside"

UPPER = "upper"
REAL = "real"
LOWER = "lower"


@dataclass(frozen=True)
class Qi:
    """A Gaussian rational a + b*i with a, b in Q."""

    re: Fraction
    im: Fraction

    def __init__(self, re: ScalarLike = 0, im=0):
        if isinstance(re, Qi):
            if im != 0:
                raise TypeError("cannot combine Qi with extra imaginary part")
            object.__setattr__(self, "re", re.re)
            object.__setattr__(self, "im", re.im)
            return
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    @classmethod
    def _fast(cls, re: Fraction, im: Fraction) -> "Qi":
        """Internal constructor: re and im must already be Fractions."""
        out = object.__new__(cls)
        object.__setattr__(out, "re", re)
        object.__setattr__(out, "im", im)
        return out

    # -- ring operations -------------------------------------------------

    def __add__(self, other: ScalarLike) -> "Qi":
        o = other if isinstance(other, Qi) else Qi(other)
        a, b = self.re, o.re
        c, d = self.im, o.im
        re = Fraction(a.numerator * b.denominator + b.numerator * a.denominator,
                      a.denominator * b.denominator)
        im = Fraction(c.numerator * d.denominator + d.numerator * c.denominator,
                      c.denominator * d.denominator)
        return Qi._fast(re, im)

    __radd__ = __add__

    def __neg__(self) -> "Qi":
        return Qi._fast(-self.re, -self.im)

    def __sub__(self, other: ScalarLike) -> "Qi":
        o = other if isinstance(other, Qi) else Qi(other)
        return self + Qi._fast(-o.re, -o.im)

    def __rsub__(self, other: ScalarLike) -> "Qi":
        return Qi(other) + (-self)

    def __mul__(self, other: ScalarLike) -> "Qi":
        o = other if isinstance(other, Qi) else Qi(other)
        a, b = self.re, o.re
        c, d = self.im, o.im
        cn, dn = c.numerator, d.numerator
        if cn == 0 and dn == 0:
            return Qi._fast(Fraction(a.numerator * b.numerator,
                                     a.denominator * b.denominator), c)
        an, ad = a.numerator, a.denominator
        bn, bd = b.numerator, b.denominator
        cd, dd = c.denominator, d.denominator
        re = Fraction(an * bn * cd * dd - cn * dn * ad * bd,
                      ad * bd * cd * dd)
        im = Fraction(an * dn * bd * cd + cn * bn * ad * dd,
                      ad * bd * cd * dd)
        return Qi._fast(re, im)

    __rmul__ = __mul__

    def inverse(self) -> "Qi":
        n = self.norm_sq()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return Qi._fast(self.re / n, -self.im / n)

    def __truediv__(self, other: ScalarLike) -> "Qi":
        return self * Qi(other).inverse()

    def __rtruediv__(self, other: ScalarLike) -> "Qi":
        return Qi(other) * self.inverse()

    def __pow__(self, n: int) -> "Qi":
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- structure -------------------------------------------------------

    def conj(self) -> "Qi":
        return Qi._fast(self.re, -self.im)

    def norm_sq(self) -> Fraction:
        """z * conj(z), an exact nonnegative rational."""
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Qi(other)
        if not isinstance(other, Qi):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    # -- printing --------------------------------------------------------

    def __str__(self) -> str:
        return format_scalar(self)

    def __repr__(self) -> str:
        return f"Qi({self.re!r}, {self.im!r})"


ZERO = Qi(0)
ONE = Qi(1)
I = Qi(0, 1)


def conj(z: ScalarLike) -> Qi:
    return Qi(z).conj()


def norm_sq(z: ScalarLike) -> Fraction:
    return Qi(z).norm_sq()


def circle_location(z: ScalarLike) -> str:
    """Classify z against the unit circle: INSIDE, ON or OUTSIDE."""
    n = Qi(z).norm_sq()
    if n < 1:
        return INSIDE
    if n == 1:
        return ON
    return OUTSIDE


def half_plane_location(z: ScalarLike) -> str:
    """Classify z against the real axis: UPPER, REAL or LOWER."""
    im = Qi(z).im
    if im > 0:
        return UPPER
    if im == 0:
        return REAL
    return LOWER


def hilbert90(w: ScalarLike) -> Qi:
    """Solve conj(u)/u = w for a scalar w of square norm 1.

    Uses u = 1 + conj(w), which works whenever w != -1; the exceptional
    point -1 is handled by u = i.
    """
    w = Qi(w)
    if w.norm_sq() != 1:
        raise ValueError(f"hilbert90 requires square norm 1, got {w.norm_sq()}")
    if w == Qi(-1):
        return I
    return ONE + w.conj()


def _format_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(z: ScalarLike) -> str:
    """Render in the CLI literal syntax, e.g. ``(3+4*i)/5`` or ``-1/2``."""
    z = Qi(z)
    if z.im == 0:
        return _format_fraction(z.re)
    if z.re == 0:
        return _format_imag(z.im)
    # pull out a common denominator so mixed values stay readable
    from math import lcm

    den = lcm(z.re.denominator, z.im.denominator)
    a = z.re.numerator * (den // z.re.denominator)
    b = z.im.numerator * (den // z.im.denominator)
    sign = "+" if b > 0 else "-"
    babs = abs(b)
    imag = "i" if babs == 1 else f"{babs}*i"
    core = f"({a}{sign}{imag})"
    return core if den == 1 else f"{core}/{den}"


def _format_imag(b: Fraction) -> str:
    if b == 1:
        return "i"
    if b == -1:
        return "-i"
    if b.denominator == 1:
        return f"{b.numerator}*i"
    if b.numerator == 1:
        return f"i/{b.denominator}"
    if b.numerator == -1:
        return f"-i/{b.denominator}"
    return f"{b.numerator}*i/{b.denominator}"


def scalar_sort_key(z: Qi):
    """Deterministic ordering used for canonical printing and JSON."""
    return (z.re, z.im)
