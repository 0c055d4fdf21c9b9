"""The catalog of ring contexts: which B, which conjugation, which units.

Each context fixes a complex coordinate ring B, an involution sigma
extending complex conjugation, and B's unit group.  Everything downstream
(membership in the trivial class, normal forms) is phrased against these.

The triviality test is representation independent: f is a unit times a
sigma-fixed element iff the functional equation sigma(u)/u = sigma(f)/f
has a solution u among the units, and that is decidable shape-by-shape
with a constructive Hilbert-90 step for the scalar part.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .scalars import Qi, ONE, ZERO, I, format_scalar, scalar_sort_key
from .poly import (Poly, Laurent, RatFunc, ElementValue, as_ratfunc,
                   as_laurent, gcd_monic)
from .splitform import split, SplitForm, UnsplitReport, UnsplittableError

LINE = "line"
PRIME_LOCAL = "prime-local"
CIRCLE = "circle"
ICIRCLE = "icircle"
PROJ_LINE = "proj-line"
CONIC = "conic"
CUSP = "cusp"

_LAURENT_KINDS = (CIRCLE, ICIRCLE, CONIC)


class DomainError(ValueError):
    """Value does not lie in the element domain of the context."""


@dataclass(frozen=True)
class RingContext:
    kind: str
    inverted: frozenset[Qi] = frozenset()   # LINE only
    point: Qi = I                           # PRIME_LOCAL only

    def __post_init__(self):
        if self.kind == LINE:
            for p in self.inverted:
                if p.conj() not in self.inverted:
                    raise ValueError("inverted set must be closed under conjugation")
        if self.kind == PRIME_LOCAL and not self.point.im > 0:
            raise ValueError("localization point must lie in the upper half plane")

    # -- descriptors -----------------------------------------------------

    @property
    def var(self) -> str:
        return "t" if self.kind in _LAURENT_KINDS else "x"

    @property
    def is_projective(self) -> bool:
        return self.kind in (PROJ_LINE, CONIC)

    def tag(self) -> str:
        """The DSL spelling of this context."""
        if self.kind == LINE:
            if not self.inverted:
                return "line"
            pts = ",".join(format_scalar(p)
                           for p in sorted(self.inverted, key=scalar_sort_key))
            return f"line[inv={pts}]"
        if self.kind == PRIME_LOCAL:
            return f"prime-local[{format_scalar(self.point)}]"
        return self.kind

    def __str__(self) -> str:
        return self.tag()

    # -- conjugation -----------------------------------------------------

    def sigma(self, f: ElementValue) -> ElementValue:
        """Apply the context conjugation; an involutive ring homomorphism."""
        if self.kind not in _LAURENT_KINDS:
            return f.conj()
        r = as_ratfunc(f).conj().subst_recip(negate=self.kind != CIRCLE)
        if isinstance(f, (Poly, Laurent)):
            return as_laurent(r)
        return r

    def is_sigma_fixed(self, f: ElementValue) -> bool:
        return as_ratfunc(self.sigma(f)) == as_ratfunc(f)

    def fixed_decomposition(self, f: ElementValue) -> tuple[ElementValue, ElementValue]:
        """f = f1 + i*f2 with both parts sigma-fixed."""
        sf = as_ratfunc(self.sigma(f))
        rf = as_ratfunc(f)
        half = Qi(Fraction(1, 2))
        f1 = (rf + sf) * half
        f2 = (rf - sf) * (half * I.inverse())
        return self._repack(f, f1), self._repack(f, f2)

    @staticmethod
    def _repack(template: ElementValue, r: RatFunc) -> ElementValue:
        if isinstance(template, Poly) and r.den.is_constant():
            return r.num
        if isinstance(template, (Poly, Laurent)):
            try:
                return as_laurent(r) if not r.is_zero() else Poly()
            except ValueError:
                return r
        return r

    # -- element domain --------------------------------------------------

    def in_domain(self, f: ElementValue) -> bool:
        """Membership in the unit group of fractions this context works in."""
        r = as_ratfunc(f)
        if r.is_zero():
            return False
        if self.kind == PROJ_LINE:
            return r.num.degree() == r.den.degree()
        return True

    def in_ring(self, f: ElementValue) -> bool:
        """Membership in B' (the nonzero ring elements) of this context."""
        r = as_ratfunc(f)
        if r.is_zero():
            return False
        if self.kind == LINE:
            return self._den_supported_on(r.den, self.inverted)
        if self.kind == PRIME_LOCAL:
            return not r.den(self.point).is_zero() and not r.den(self.point.conj()).is_zero()
        if self.kind in (CIRCLE, ICIRCLE):
            k = r.den.order_at_zero()
            return k == r.den.degree()  # denominator is a power of t
        if self.kind == CUSP:
            return r.den.is_constant() and r.num.coeff(1).is_zero()
        # projective contexts: B0 = C (conic) resp. constants (proj-line)
        return self.in_domain(f)

    @staticmethod
    def _den_supported_on(den: Poly, points: frozenset[Qi]) -> bool:
        if den.is_constant():
            return True
        for p in points:
            o = den.order_at(p)
            if o:
                den = den.exact_div(Poly([-p, 1]) ** o)
        return den.is_constant()

    def require_ring(self, f: ElementValue) -> None:
        if not self.in_ring(f):
            raise DomainError(f"{as_ratfunc(f).render(self.var)} is not in the ring of {self.tag()}")

    def require_domain(self, f: ElementValue) -> None:
        if not self.in_domain(f):
            raise DomainError(f"{as_ratfunc(f).render(self.var)} is not in the domain of {self.tag()}")

    # -- unit-ratio test and oracle --------------------------------------

    def unit_ratio_test(self, q: ElementValue) -> bool:
        """Decide whether q = sigma(u)/u for some unit u of this context."""
        q = as_ratfunc(q)
        if q.is_zero():
            raise ValueError("unit ratio of zero")
        if self.kind in (CIRCLE, ICIRCLE):
            # units are c*t^m; the ratio is a norm-1 scalar times an even t-power
            if len([c for c in q.num.coeffs if not c.is_zero()]) != 1:
                return False
            if q.den.order_at_zero() != q.den.degree():
                return False
            a = q.num.order_at_zero()
            b = q.den.degree()
            c = q.num.coeffs[-1]
            return (a - b) % 2 == 0 and c.norm_sq() == 1
        if self.kind == PRIME_LOCAL:
            # units have order 0 at the localization point pair
            nq = q * as_ratfunc(self.sigma(q))
            return (nq.is_constant() and nq.constant() == ONE
                    and q.order_at(self.point) == 0)
        if self.kind == LINE and self.inverted:
            orders: dict[Qi, int] = {}
            rest = q
            for p in self.inverted:
                o = rest.order_at(p)
                if o:
                    orders[p] = o
                    rest = rest / as_ratfunc(Poly([-p, 1])) ** o
            if not rest.is_constant():
                return False
            for p, o in orders.items():
                if orders.get(p.conj(), 0) != -o:
                    return False
            return rest.constant().norm_sq() == 1
        # remaining contexts have scalar units only
        return q.is_constant() and q.constant().norm_sq() == 1

    def triviality_oracle(self, f: ElementValue) -> bool:
        """Ground truth: is [f] the identity of the polar group?

        True iff f = u * k with u a unit of the context and k sigma-fixed.
        Never consults normal forms.
        """
        r = as_ratfunc(f)
        if r.is_zero():
            raise ValueError("oracle input must be nonzero")
        self.require_domain(f)
        q = as_ratfunc(self.sigma(r)) / r
        return self.unit_ratio_test(q)

    def m_membership(self, f: ElementValue) -> bool:
        """f in M = B* . A' (triviality restricted to ring elements)."""
        self.require_ring(f)
        return self.triviality_oracle(f)


@dataclass(frozen=True)
class Element:
    """A context element: a value known to lie in the context's ring."""

    value: ElementValue
    ctx: RingContext

    def __post_init__(self):
        self.ctx.require_ring(self.value)

    def sigma(self) -> "Element":
        return Element(self.ctx.sigma(self.value), self.ctx)

    def is_sigma_fixed(self) -> bool:
        return self.ctx.is_sigma_fixed(self.value)


# -- context constructors ------------------------------------------------

def affine_line(inverted=()) -> RingContext:
    return RingContext(LINE, inverted=frozenset(Qi(p) for p in inverted))

def prime_local(point=I) -> RingContext:
    return RingContext(PRIME_LOCAL, point=Qi(point))

def circle_form() -> RingContext:
    return RingContext(CIRCLE)

def imaginary_circle_form() -> RingContext:
    return RingContext(ICIRCLE)

def projective_line() -> RingContext:
    return RingContext(PROJ_LINE)

def projective_conic() -> RingContext:
    return RingContext(CONIC)

def cusp_cubic() -> RingContext:
    return RingContext(CUSP)


# -- fixed-ring presentations --------------------------------------------

@dataclass(frozen=True)
class FixedRingPresentation:
    generators: tuple[tuple[str, ElementValue], ...]
    relation: str
    verified: bool
    unhalved: tuple[tuple[str, ElementValue], ...] = ()


def fixed_ring_generators(ctx: RingContext) -> FixedRingPresentation:
    """Halved generator pairs for the fixed ring, with a checked relation.

    The halved convention makes X^2 + Y^2 = +-1 hold on the nose; the
    unhalved pairs (t + 1/t, i(t - 1/t) and friends) are also reported.
    """
    half = Qi(Fraction(1, 2))
    t = Laurent.t(1)
    tinv = Laurent.t(-1)
    if ctx.kind == LINE and not ctx.inverted:
        return FixedRingPresentation(
            generators=(("X", Poly.var()),), relation="(none)", verified=True)
    if ctx.kind == LINE and ctx.inverted == frozenset({ZERO}):
        x = Poly.var()
        xinv = RatFunc(1, x)
        prod = as_ratfunc(x) * xinv
        ok = prod.is_constant() and prod.constant() == ONE
        return FixedRingPresentation(
            generators=(("X", x), ("Y", xinv)), relation="X*Y = 1", verified=ok)
    if ctx.kind == CIRCLE:
        gx = (t + tinv) * half
        gy = (t - tinv) * (half * I.inverse())
        lhs = as_ratfunc(gx) * as_ratfunc(gx) + as_ratfunc(gy) * as_ratfunc(gy)
        ok = lhs.is_constant() and lhs.constant() == ONE
        ok = ok and ctx.is_sigma_fixed(gx) and ctx.is_sigma_fixed(gy)
        return FixedRingPresentation(
            generators=(("X", gx), ("Y", gy)), relation="X^2 + Y^2 = 1", verified=ok,
            unhalved=(("X'", t + tinv), ("Y'", (t - tinv) * I)))
    if ctx.kind == ICIRCLE:
        gx = (t - tinv) * half
        gy = (t + tinv) * (half * I.inverse())
        lhs = as_ratfunc(gx) * as_ratfunc(gx) + as_ratfunc(gy) * as_ratfunc(gy)
        ok = lhs.is_constant() and lhs.constant() == Qi(-1)
        ok = ok and ctx.is_sigma_fixed(gx) and ctx.is_sigma_fixed(gy)
        return FixedRingPresentation(
            generators=(("X", gx), ("Y", gy)), relation="X^2 + Y^2 = -1", verified=ok,
            unhalved=(("X'", t - tinv), ("Y'", (t + tinv) * I)))
    raise ValueError(f"no generator presentation for context {ctx.tag()}")
