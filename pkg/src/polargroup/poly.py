"""Univariate polynomials, Laurent polynomials and rational functions over Q(i).

Dense coefficient storage (degrees here are desk scale).  All three types
are immutable; arithmetic is exact.  ``RatFunc`` is kept eagerly reduced
with a monic denominator, so equality is plain structural equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .scalars import Qi, ScalarLike, ONE, ZERO, I


def _coerce(c) -> Qi:
    return c if isinstance(c, Qi) else Qi(c)


@dataclass(frozen=True)
class Poly:
    """Polynomial with coefficient tuple indexed by degree."""

    coeffs: tuple[Qi, ...]

    def __init__(self, coeffs: Iterable[ScalarLike] = ()):
        cs = [_coerce(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- constructors ----------------------------------------------------

    @staticmethod
    def const(c: ScalarLike) -> "Poly":
        return Poly([c])

    @staticmethod
    def var() -> "Poly":
        return Poly([0, 1])

    @staticmethod
    def monomial(k: int, c: ScalarLike = 1) -> "Poly":
        return Poly([0] * k + [c])

    @staticmethod
    def from_roots(roots: Iterable[ScalarLike], lead: ScalarLike = 1) -> "Poly":
        out = Poly.const(lead)
        for r in roots:
            out = out * Poly([-_coerce(r), 1])
        return out

    # -- basic queries ---------------------------------------------------

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_real(self) -> bool:
        return all(c.is_real() for c in self.coeffs)

    def constant(self) -> Qi:
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return self.coeffs[0] if self.coeffs else ZERO

    def lead(self) -> Qi:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> Qi:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other) -> "Poly":
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self.coeff(k) + other.coeff(k) for k in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other) -> "Poly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "Poly":
        return self._lift(other) + (-self)

    def __mul__(self, other) -> "Poly":
        other = self._lift(other)
        if self.is_zero() or other.is_zero():
            return Poly()
        if other.is_constant():
            c = other.coeffs[0]
            return Poly([a * c for a in self.coeffs])
        if self.is_constant():
            c = self.coeffs[0]
            return Poly([a * c for a in other.coeffs])
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for j, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for k, b in enumerate(other.coeffs):
                out[j + k] = out[j + k] + a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other) -> tuple["Poly", "Poly"]:
        d = self._lift(other)
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        dn = d.degree()
        if self.degree() < dn:
            return Poly(), self
        r = list(self.coeffs)
        q: list[Qi] = [ZERO] * (len(r) - dn)
        inv_lead = d.lead().inverse()
        body = d.coeffs[:-1]
        for k in range(len(r) - 1, dn - 1, -1):
            c = r[k] * inv_lead
            if c.is_zero():
                continue
            q[k - dn] = c
            base = k - dn
            for j, dc in enumerate(body):
                if not dc.is_zero():
                    r[base + j] = r[base + j] - dc * c
        return Poly(q), Poly(r[:dn])

    def __floordiv__(self, other) -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Poly":
        return divmod(self, other)[1]

    def exact_div(self, other) -> "Poly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError("division is not exact")
        return q

    @staticmethod
    def _lift(v) -> "Poly":
        if isinstance(v, Poly):
            return v
        return Poly.const(v)

    # -- structure -------------------------------------------------------

    def conj(self) -> "Poly":
        """Coefficient-wise conjugation (the variable stays fixed)."""
        return Poly([c.conj() for c in self.coeffs])

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        inv = self.lead().inverse()
        return Poly([c * inv for c in self.coeffs])

    def __call__(self, z: ScalarLike) -> Qi:
        z = _coerce(z)
        out = ZERO
        for c in reversed(self.coeffs):
            out = out * z + c
        return out

    def derivative(self) -> "Poly":
        return Poly([self.coeffs[k] * k for k in range(1, len(self.coeffs))])

    def reversed_coeffs(self, signs: bool = False) -> "Poly":
        """x^deg * f(1/x), or x^deg * f(-1/x) when ``signs`` is set."""
        cs = list(self.coeffs)
        if signs:
            cs = [c if k % 2 == 0 else -c for k, c in enumerate(cs)]
        return Poly(tuple(reversed(cs)))

    def order_at_zero(self) -> int:
        if self.is_zero():
            raise ValueError("zero polynomial")
        for k, c in enumerate(self.coeffs):
            if not c.is_zero():
                return k
        raise AssertionError

    def order_at(self, z: ScalarLike) -> int:
        """Multiplicity of z as a root (0 when not a root)."""
        z = _coerce(z)
        lin = Poly([-z, 1])
        n = 0
        f = self
        while True:
            q, r = divmod(f, lin)
            if not r.is_zero():
                return n
            n += 1
            f = q

    def __str__(self) -> str:
        return self.render("x")

    def render(self, var: str) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree(), -1, -1):
            c = self.coeff(k)
            if c.is_zero():
                continue
            if k == 0:
                parts.append(str(c))
            else:
                xk = var if k == 1 else f"{var}^{k}"
                if c == Qi(1):
                    parts.append(xk)
                elif c == Qi(-1):
                    parts.append(f"-{xk}")
                else:
                    cs = str(c)
                    if ("+" in cs[1:] or "-" in cs[1:]) and not cs.startswith("("):
                        cs = f"({cs})"
                    parts.append(f"{cs}*{xk}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


X = Poly.var()


def gcd_monic(f: Poly, g: Poly) -> Poly:
    """Monic gcd via the Euclidean algorithm; errors when both are zero."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    # renormalizing each remainder keeps the coefficients from blowing up
    while not g.is_zero():
        f, g = g.monic(), f % g
    return f.monic()


@dataclass(frozen=True)
class Laurent:
    """Nonzero Laurent polynomial t^order * body, body(0) != 0."""

    order: int
    body: Poly

    def __init__(self, order: int = 0, body: Poly | None = None):
        body = Poly.const(1) if body is None else body
        if body.is_zero():
            raise ValueError("zero is not representable as a Laurent polynomial")
        shift = body.order_at_zero()
        if shift:
            body = Poly(body.coeffs[shift:])
            order += shift
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "body", body)

    @staticmethod
    def from_poly(p: Poly) -> "Laurent":
        return Laurent(0, p)

    @staticmethod
    def t(k: int = 1) -> "Laurent":
        return Laurent(k, Poly.const(1))

    def __mul__(self, other) -> "Laurent":
        other = self._lift(other)
        return Laurent(self.order + other.order, self.body * other.body)

    __rmul__ = __mul__

    def __add__(self, other):
        other = self._lift(other)
        lo = min(self.order, other.order)
        s = (Poly.monomial(self.order - lo) * self.body
             + Poly.monomial(other.order - lo) * other.body)
        if s.is_zero():
            raise ValueError("Laurent sum is zero")
        return Laurent(lo, s)

    def __neg__(self) -> "Laurent":
        return Laurent(self.order, -self.body)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __pow__(self, n: int) -> "Laurent":
        if n >= 0:
            return Laurent(self.order * n, self.body ** n)
        raise ValueError("negative power of a Laurent polynomial is not a Laurent polynomial")

    @staticmethod
    def _lift(v) -> "Laurent":
        if isinstance(v, Laurent):
            return v
        if isinstance(v, Poly):
            return Laurent.from_poly(v)
        return Laurent(0, Poly.const(v))

    def conj(self) -> "Laurent":
        return Laurent(self.order, self.body.conj())

    def is_unit(self) -> bool:
        """Unit of C[t, 1/t]: a scalar times a power of t."""
        return self.body.is_constant()

    def __call__(self, z: ScalarLike) -> Qi:
        z = _coerce(z)
        if z.is_zero():
            raise ZeroDivisionError("Laurent polynomial evaluated at 0")
        return self.body(z) * z ** self.order

    def __str__(self) -> str:
        return self.render("t")

    def render(self, var: str) -> str:
        terms = []
        for k, c in enumerate(self.body.coeffs):
            if c.is_zero():
                continue
            e = k + self.order
            if e == 0:
                terms.append(str(c))
                continue
            te = var if e == 1 else f"{var}^{e}"
            if c == Qi(1):
                terms.append(te)
            elif c == Qi(-1):
                terms.append(f"-{te}")
            else:
                cs = str(c)
                if ("+" in cs[1:] or "-" in cs[1:]) and not cs.startswith("("):
                    cs = f"({cs})"
                terms.append(f"{cs}*{te}")
        terms.reverse()
        out = terms[0]
        for p in terms[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


ElementValue = Union[Poly, Laurent, "RatFunc"]


@dataclass(frozen=True)
class RatFunc:
    """Reduced rational function num/den, den monic and coprime to num."""

    num: Poly
    den: Poly

    def __init__(self, num, den=None):
        num = Poly._lift(num) if not isinstance(num, (Poly, Laurent, RatFunc)) else num
        if den is None:
            den = Poly.const(1)
        den = Poly._lift(den) if not isinstance(den, (Poly, Laurent, RatFunc)) else den
        n_num, n_den = _as_frac(num)
        d_num, d_den = _as_frac(den)
        num_p = n_num * d_den
        den_p = n_den * d_num
        if den_p.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num_p.is_zero():
            object.__setattr__(self, "num", Poly())
            object.__setattr__(self, "den", Poly.const(1))
            return
        # gcd only matters when both sides are nonconstant
        if not num_p.is_constant() and not den_p.is_constant():
            g = gcd_monic(num_p, den_p)
            if g.degree() > 0:
                num_p = num_p.exact_div(g)
                den_p = den_p.exact_div(g)
        lead_inv = den_p.lead().inverse()
        object.__setattr__(self, "num", num_p * lead_inv)
        object.__setattr__(self, "den", den_p.monic())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant(self) -> Qi:
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.num.constant()

    def __add__(self, other) -> "RatFunc":
        o = as_ratfunc(other)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __sub__(self, other) -> "RatFunc":
        return self + (-as_ratfunc(other))

    def __rsub__(self, other) -> "RatFunc":
        return as_ratfunc(other) + (-self)

    def __mul__(self, other) -> "RatFunc":
        o = as_ratfunc(other)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        o = as_ratfunc(other)
        if o.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other) -> "RatFunc":
        return as_ratfunc(other) / self

    def __pow__(self, n: int) -> "RatFunc":
        if n < 0:
            return (RatFunc(self.den, self.num)) ** (-n)
        return RatFunc(self.num ** n, self.den ** n)

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num)

    def conj(self) -> "RatFunc":
        return RatFunc(self.num.conj(), self.den.conj())

    def subst_recip(self, negate: bool = False) -> "RatFunc":
        """f(1/x), or f(-1/x) when ``negate`` is set, as a reduced RatFunc."""
        n, d = self.num, self.den
        rn = n.reversed_coeffs(signs=negate)
        rd = d.reversed_coeffs(signs=negate)
        k = d.degree() - n.degree()
        if k >= 0:
            return RatFunc(rn * Poly.monomial(k), rd)
        return RatFunc(rn, rd * Poly.monomial(-k))

    def order_at(self, z: ScalarLike) -> int:
        """Order of vanishing at z (negative at a pole)."""
        if self.is_zero():
            raise ValueError("zero function")
        return self.num.order_at(z) - self.den.order_at(z)

    def __call__(self, z: ScalarLike) -> Qi:
        d = self.den(z)
        if d.is_zero():
            raise ZeroDivisionError("pole")
        return self.num(z) / d

    def __str__(self) -> str:
        return self.render("x")

    def render(self, var: str) -> str:
        if self.den.is_constant():
            return self.num.render(var)
        n = self.num.render(var)
        d = self.den.render(var)
        if self.num.degree() > 0 or " " in n:
            n = f"({n})"
        if self.den.degree() > 0 or " " in d:
            d = f"({d})"
        return f"{n}/{d}"


def _as_frac(v) -> tuple[Poly, Poly]:
    if isinstance(v, Poly):
        return v, Poly.const(1)
    if isinstance(v, Laurent):
        if v.order >= 0:
            return Poly.monomial(v.order) * v.body, Poly.const(1)
        return v.body, Poly.monomial(-v.order)
    if isinstance(v, RatFunc):
        return v.num, v.den
    return Poly._lift(v), Poly.const(1)


def as_ratfunc(v) -> RatFunc:
    if isinstance(v, RatFunc):
        return v
    n, d = _as_frac(v)
    return RatFunc(n, d)


def as_laurent(v) -> Laurent:
    """Convert to a Laurent polynomial; fails when the denominator is not t^k."""
    if isinstance(v, Laurent):
        return v
    if isinstance(v, Poly):
        return Laurent.from_poly(v)
    r = as_ratfunc(v)
    if r.is_zero():
        raise ValueError("zero is not a Laurent polynomial")
    k = r.den.order_at_zero()
    if k != r.den.degree():
        raise ValueError(f"{r} is not a Laurent polynomial")
    return Laurent(-k, r.num)


def conj_poly(f: ElementValue) -> ElementValue:
    """Coefficient-wise conjugation for any of the three kinds."""
    return f.conj()


def real_imag_split(f: ElementValue) -> tuple[ElementValue, ElementValue]:
    """f = f1 + i*f2 with f1, f2 real-coefficient, via (f +- conj)/2.

    The components are returned in the same representation kind as the
    input (a zero Laurent component degrades to the zero polynomial).
    """
    if isinstance(f, Poly):
        fb = f.conj()
        f1 = (f + fb) * Qi(Fraction(1, 2))
        f2 = (f - fb) * (I.inverse() * Qi(Fraction(1, 2)))
        return f1, f2
    if isinstance(f, Laurent):
        r1, r2 = real_imag_split(as_ratfunc(f))
        return (_laurent_or_zero(r1), _laurent_or_zero(r2))
    fb = f.conj()
    half = Qi(Fraction(1, 2))
    return (f + fb) * half, (f - fb) * (half * I.inverse())


def _laurent_or_zero(r: RatFunc):
    if r.is_zero():
        return Poly()
    return as_laurent(r)


def norm_trace(f: ElementValue) -> tuple[ElementValue, ElementValue]:
    """(f * conj(f), 2*f1): determinant and trace of the 2x2 matrix form."""
    f1, _ = real_imag_split(f)
    norm = f * f.conj()
    two_f1 = f1 * Qi(2) if not (isinstance(f1, Poly) and f1.is_zero()) else Poly()
    return norm, two_f1
