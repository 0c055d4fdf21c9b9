"""Polar classes: normal forms, factorization, group structure, homomorphisms.

A ``PolarClass`` is the canonical form of [f] in the quotient of the
fraction-field units by (units of B) * (units of the fixed field).  The
normal form is computed from the divisor-level split of f by context
rewrite rules; its soundness contract -- equal classes exactly when the
triviality oracle accepts the ratio -- is enforced by the test suite,
never assumed.

Boundary classes in the circle context all coincide: for unit-circle
points z and w, (t-z)(t-w) is a unit times the real chord line through z
and w (Hilbert 90 supplies the unit).  The torsion part of a circle class
is therefore a single parity bit, rendered as the class of t-1.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .scalars import Qi, ZERO, ONE, I, hilbert90, format_scalar, scalar_sort_key
from .poly import (Poly, Laurent, RatFunc, ElementValue, as_ratfunc,
                   as_laurent, gcd_monic)
from .splitform import (split, split_fully, SplitForm, UnsplitReport,
                        UnsplittableError, assemble)
from .contexts import (RingContext, DomainError, LINE, PRIME_LOCAL, CIRCLE,
                       ICIRCLE, PROJ_LINE, CONIC, CUSP, affine_line,
                       imaginary_circle_form)

CIRCLE_TORSION_REP = ONE  # every boundary class equals [t - 1]


@dataclass(frozen=True)
class PolarClass:
    ctx: RingContext
    free: tuple[tuple[Qi, int], ...] = ()
    torsion_parity: int = 0   # circle context only
    t0: int = 0               # conic: exponent of [t]; prime-local: e in [x-z0]^e

    def __init__(self, ctx, free=(), torsion_parity=0, t0=0):
        if isinstance(free, dict):
            free = free.items()
        acc: dict[Qi, int] = {}
        for z, e in free:
            z = Qi(z)
            acc[z] = acc.get(z, 0) + e
        items = tuple(sorted(((z, e) for z, e in acc.items() if e != 0),
                             key=lambda kv: scalar_sort_key(kv[0])))
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "free", items)
        object.__setattr__(self, "torsion_parity", torsion_parity % 2)
        object.__setattr__(self, "t0", t0)

    # -- group structure -------------------------------------------------

    def is_identity(self) -> bool:
        return not self.free and self.torsion_parity == 0 and self.t0 == 0

    def __mul__(self, other: "PolarClass") -> "PolarClass":
        if self.ctx != other.ctx:
            raise ValueError("cannot multiply classes from different contexts")
        return PolarClass(self.ctx, list(self.free) + list(other.free),
                          self.torsion_parity + other.torsion_parity,
                          self.t0 + other.t0)

    def inverse(self) -> "PolarClass":
        return PolarClass(self.ctx, [(z, -e) for z, e in self.free],
                          self.torsion_parity, -self.t0)

    def __pow__(self, n: int) -> "PolarClass":
        return PolarClass(self.ctx, [(z, e * n) for z, e in self.free],
                          self.torsion_parity * n, self.t0 * n)

    def order(self):
        """1, 2 or infinity; 2 happens only for circle pure torsion."""
        if self.is_identity():
            return 1
        if not self.free and self.t0 == 0 and self.torsion_parity:
            return 2
        return float("inf")

    def free_table(self) -> dict[Qi, int]:
        return dict(self.free)

    # -- rendering -------------------------------------------------------

    def to_json(self) -> dict:
        out: dict = {"ctx": self.ctx.tag()}
        out["free"] = [{"z": format_scalar(z), "e": e} for z, e in self.free]
        if self.ctx.kind == CIRCLE:
            out["torsion"] = ([format_scalar(CIRCLE_TORSION_REP)]
                              if self.torsion_parity else [])
        if self.ctx.kind in (CONIC, PRIME_LOCAL):
            out["t0"] = self.t0
        return out

    def render(self) -> str:
        var = self.ctx.var
        parts = []
        if self.ctx.kind == PRIME_LOCAL:
            z0 = format_scalar(self.ctx.point)
            if self.t0:
                parts.append(_pow_str(f"[{var} - {z0}]", self.t0))
        elif self.t0:
            parts.append(_pow_str(f"[{var}]", self.t0))
        if self.torsion_parity:
            parts.append(f"[{var} - 1]")
        for z, e in self.free:
            parts.append(_pow_str(f"[{var} - {format_scalar(z)}]", e))
        return " * ".join(parts) if parts else "1"


def _pow_str(base: str, e: int) -> str:
    return base if e == 1 else f"{base}^{e}"


def class_mul(a: PolarClass, b: PolarClass) -> PolarClass:
    return a * b


def class_inv(a: PolarClass) -> PolarClass:
    return a.inverse()


def class_pow(a: PolarClass, n: int) -> PolarClass:
    return a ** n


def class_order(a: PolarClass):
    return a.order()


# -- normal forms --------------------------------------------------------

def class_of(f: ElementValue, ctx: RingContext) -> PolarClass:
    """Canonical polar class of f; requires f fully splittable over Q(i)."""
    r = as_ratfunc(f)
    if r.is_zero():
        raise ValueError("class of zero is undefined")
    ctx.require_domain(r)
    s = split_fully(r)
    if ctx.kind in (LINE, PROJ_LINE):
        inverted = ctx.inverted if ctx.kind == LINE else frozenset()
        return PolarClass(ctx, _fold_upper_half(s, inverted))
    if ctx.kind == CUSP:
        # classes of the polynomial curve live inside the affine-line group
        return PolarClass(ctx, _fold_upper_half(s, frozenset()))
    if ctx.kind == PRIME_LOCAL:
        e = r.order_at(ctx.point) - r.order_at(ctx.point.conj())
        return PolarClass(ctx, t0=e)
    if ctx.kind == CIRCLE:
        table: dict[Qi, int] = {}
        parity = 0
        for z, e in s.roots:
            n = z.norm_sq()
            if n > 1:
                w = z.conj().inverse()
                table[w] = table.get(w, 0) - e
            elif n == 1:
                parity += e
            else:
                table[z] = table.get(z, 0) + e
        return PolarClass(ctx, table, torsion_parity=parity)
    if ctx.kind in (ICIRCLE, CONIC):
        table: dict[Qi, int] = {}
        t0 = s.t_exp if ctx.kind == CONIC else 0
        for z, e in s.roots:
            n = z.norm_sq()
            if n > 1:
                # [t - z] = [t - (-conj(z)^-1)]^-1, picking up [t] for the conic
                w = -(z.conj().inverse())
                if ctx.kind == CONIC:
                    t0 += e
                table[w] = table.get(w, 0) - e
            elif n == 1 and not _icircle_boundary_canonical(z):
                w = -z
                if ctx.kind == CONIC:
                    t0 += e
                table[w] = table.get(w, 0) - e
            else:
                table[z] = table.get(z, 0) + e
        return PolarClass(ctx, table, t0=t0)
    raise ValueError(f"no normal form for context {ctx.tag()}")


def _icircle_boundary_canonical(z: Qi) -> bool:
    return z.im > 0 or (z.im == 0 and z.re > 0)


def _fold_upper_half(s: SplitForm, inverted: frozenset[Qi]) -> dict[Qi, int]:
    table: dict[Qi, int] = {}
    for z, e in s.roots:
        if z.is_real() or z in inverted:
            continue
        if z.im > 0:
            table[z] = table.get(z, 0) + e
        else:
            w = z.conj()
            table[w] = table.get(w, 0) - e
    return table


# -- no-real-divisor membership and polar factorization ------------------

@dataclass(frozen=True)
class PolarFactorization:
    real_part: ElementValue
    delta_part: ElementValue


def _realize_denominator(f: ElementValue, ctx: RingContext) -> tuple[Poly, RatFunc]:
    """Write f = g * w with g a polynomial and w a sigma-fixed unit ratio."""
    r = as_ratfunc(f)
    den = r.den
    if den.is_constant():
        return r.num, as_ratfunc(Poly.const(1))
    sden = den.conj()  # coefficient conjugation: these contexts fix the variable
    g = r.num * sden
    w = RatFunc(Poly.const(1), den * sden)
    return g, w


def delta_membership(f: ElementValue, ctx: RingContext) -> bool:
    """Exact membership in the no-real-divisor set of the context."""
    ctx.require_ring(f)
    if ctx.kind == CIRCLE:
        s = split(as_laurent(f).body)
        if isinstance(s, UnsplitReport):
            raise UnsplittableError("circle delta test needs a fully split input")
        roots = s.root_dict()
        boundary_mult = 0
        for z, e in roots.items():
            n = z.norm_sq()
            if n == 1:
                boundary_mult += e
            elif roots.get(z.conj().inverse(), 0) > 0 and n > 1:
                return False
        return boundary_mult <= 1
    if ctx.kind == CUSP:
        return delta_T_membership(f)
    if ctx.kind == ICIRCLE:
        body = as_laurent(f).body
        f1, f2 = ctx.fixed_decomposition(Laurent.from_poly(body))
        b1 = _laurent_body(f1)
        b2 = _laurent_body(f2)
        return _gcd_or_unit(b1, b2).is_constant()
    # line-like contexts: gcd of the real/imaginary parts must be a unit of A
    g, _ = _realize_denominator(f, ctx)
    from .poly import real_imag_split
    p1, p2 = real_imag_split(g)
    d = _gcd_or_unit(p1, p2)
    return _is_real_unit(d, ctx)


def _laurent_body(v) -> Poly:
    if isinstance(v, Poly):
        return v
    return as_laurent(v).body if not as_ratfunc(v).is_zero() else Poly()


def _gcd_or_unit(a: Poly, b: Poly) -> Poly:
    if a.is_zero() and b.is_zero():
        raise ValueError("zero element")
    return gcd_monic(a, b)


def _is_real_unit(d: Poly, ctx: RingContext) -> bool:
    """Is the real polynomial d a unit of the fixed ring of the context?"""
    if ctx.kind == PRIME_LOCAL:
        return not d(ctx.point).is_zero()
    for p in ctx.inverted:
        o = d.order_at(p)
        if o:
            d = d.exact_div(Poly([-p, 1]) ** o)
    return d.is_constant()


def polar_factorize(f: ElementValue, ctx: RingContext) -> PolarFactorization:
    """f = real_part * delta_part with real_part sigma-fixed."""
    ctx.require_ring(f)
    if ctx.kind == CIRCLE:
        return _polar_factorize_circle(as_laurent(f), ctx)
    if ctx.kind == ICIRCLE:
        return _polar_factorize_icircle(as_laurent(f), ctx)
    from .poly import real_imag_split
    g, w = _realize_denominator(f, ctx)
    p1, p2 = real_imag_split(g)
    d = _gcd_or_unit(p1, p2)
    h = g.exact_div(d)
    real_part = as_ratfunc(d) * w
    if real_part.den.is_constant():
        real_part = real_part.num
    return PolarFactorization(real_part, h)


def _polar_factorize_circle(f: Laurent, ctx: RingContext) -> PolarFactorization:
    s = split(f.body)
    if isinstance(s, UnsplitReport):
        raise UnsplittableError("circle polar factorization needs a fully split input")
    roots = s.root_dict()
    pairs: list[tuple[Qi, Qi]] = []
    # matched off-circle pairs {z, conj(z)^-1}
    for z in sorted(roots, key=scalar_sort_key):
        if roots.get(z, 0) <= 0 or z.norm_sq() >= 1:
            continue
        w = z.conj().inverse()
        k = min(roots[z], roots.get(w, 0))
        if k > 0:
            pairs.extend([(z, w)] * k)
            roots[z] -= k
            roots[w] -= k
    # unit-circle roots chord off two at a time
    boundary: list[Qi] = []
    for z in sorted(roots, key=scalar_sort_key):
        if z.norm_sq() == 1:
            boundary.extend([z] * roots[z])
            roots[z] = 0
    while len(boundary) >= 2:
        pairs.append((boundary.pop(0), boundary.pop(0)))
    real_part = as_ratfunc(Poly.const(1))
    for z, w in pairs:
        real_part = real_part * _real_pair_factor(z, w, ctx)
    delta = as_ratfunc(f) / real_part
    return PolarFactorization(_to_laurent_or_ratfunc(real_part),
                              _to_laurent_or_ratfunc(delta))


def _real_pair_factor(z: Qi, w: Qi, ctx: RingContext) -> RatFunc:
    """c * t^-1 * (t-z)(t-w), sigma-fixed; valid when {z,w} maps to itself."""
    c = hilbert90((z.conj() * w.conj()).inverse())
    val = as_ratfunc(Poly.from_roots([z, w], lead=c)) / as_ratfunc(Poly.monomial(1))
    assert ctx.is_sigma_fixed(val)
    return val


def _to_laurent_or_ratfunc(r: RatFunc):
    try:
        return as_laurent(r)
    except ValueError:
        return r


def _polar_factorize_icircle(f: Laurent, ctx: RingContext) -> PolarFactorization:
    f1, f2 = ctx.fixed_decomposition(f)
    d = _gcd_or_unit(_laurent_body(f1), _laurent_body(f2))
    if d.is_constant():
        return PolarFactorization(Poly.const(1), f)
    # twist d by a unit c*t^m so it becomes sigma-fixed
    q = as_ratfunc(ctx.sigma(d)) / as_ratfunc(d)
    nz = [k for k, c in enumerate(q.num.coeffs) if not c.is_zero()]
    assert len(nz) == 1 and q.den.order_at_zero() == q.den.degree()
    k = nz[0] - q.den.degree()
    w = q.num.coeffs[-1]
    assert k % 2 == 0, "common factor of fixed parts must be unit-adjustable"
    m = k // 2
    sign = Qi(-1) if m % 2 else ONE
    c = hilbert90((w * sign).inverse())
    real_part = Laurent(m, d * c)
    assert ctx.is_sigma_fixed(real_part)
    delta = as_ratfunc(f) / as_ratfunc(real_part)
    return PolarFactorization(real_part, _to_laurent_or_ratfunc(delta))


# -- homomorphisms -------------------------------------------------------

def localization_map(a: PolarClass, target: RingContext) -> PolarClass:
    """Push a line class into a further-localized line context."""
    src = a.ctx
    if src.kind != LINE or target.kind != LINE or not src.inverted <= target.inverted:
        raise ValueError("localization requires nested line contexts")
    kept = [(z, e) for z, e in a.free if z not in target.inverted]
    return PolarClass(target, kept)


def localization_section(a: PolarClass, target: RingContext) -> PolarClass:
    """Section of the localization map: re-embed the table unchanged."""
    src = a.ctx
    if src.kind != LINE or target.kind != LINE or not target.inverted <= src.inverted:
        raise ValueError("section requires nested line contexts")
    return PolarClass(target, list(a.free))


def projective_include(a: PolarClass) -> PolarClass:
    """Include a projective class into the matching affine class group.

    The projective line includes injectively.  The conic maps onto the
    imaginary-circle group with kernel generated by the class of t.
    """
    if a.ctx.kind == PROJ_LINE:
        return PolarClass(affine_line(), list(a.free))
    if a.ctx.kind == CONIC:
        return PolarClass(imaginary_circle_form(), list(a.free))
    raise ValueError("projective_include takes a projective class")


def subalgebra_embed(f: ElementValue, ctx: RingContext) -> PolarClass:
    """Class of a cuspidal-cubic element inside the affine-line group."""
    ctx.require_ring(f)
    return class_of(as_ratfunc(f).num, affine_line())


def delta_T_membership(f: ElementValue) -> bool:
    """No-conjugate-roots test for the cuspidal cubic subring."""
    g = as_ratfunc(f).num
    s = split(g)
    if isinstance(s, UnsplitReport):
        raise UnsplittableError("delta test needs a fully split input")
    roots = s.root_dict()
    if s.t_exp:
        roots[ZERO] = s.t_exp
    return all(z.conj() not in roots for z in roots)


def reciprocal_sum_check(f: Poly) -> bool:
    """Check sum(1/w_j) = 0 over the roots exactly when f'(0) = 0."""
    if f.is_zero() or f.lead() != ONE:
        raise ValueError("requires a monic polynomial")
    if f(ZERO).is_zero():
        raise ValueError("requires f(0) != 0")
    s = split(f)
    if isinstance(s, UnsplitReport):
        raise UnsplittableError("reciprocal sum needs a fully split input")
    total = Qi(0)
    for z, e in s.roots:
        total = total + Qi(e) / z
    return (total.is_zero()) == (f.derivative()(ZERO).is_zero())


TRIVIAL_CLASS = "1"


def prime_reduction(f: ElementValue, p: Poly, ctx: RingContext | None = None) -> str:
    """Reduce modulo a maximal ideal of R[x]; the target group is trivial.

    The content of the operation is the domain check f not in pB; the
    residue ring is a field, so the reduced class is always the identity.
    """
    ctx = ctx or affine_line()
    if ctx.kind != LINE or ctx.inverted:
        raise ValueError("prime reduction is implemented over the plain line context")
    if p.is_zero() or not p.is_real() or p.lead() != ONE or p.degree() not in (1, 2):
        raise ValueError("modulus must be monic, real, of degree 1 or 2")
    if p.degree() == 2:
        disc = p.coeff(1) * p.coeff(1) - Qi(4) * p.coeff(0)
        if not (disc.is_real() and disc.re < 0):
            raise ValueError("degree-2 modulus must be irreducible over the reals")
    g = as_ratfunc(f)
    if g.is_zero() or not (g.num % p).__bool__():
        raise DomainError("element lies in the ideal; reduction undefined")
    return TRIVIAL_CLASS


# -- orbit representatives -----------------------------------------------

@dataclass(frozen=True)
class OrbitRepresentative:
    ctx: RingContext
    root: Qi
    inverted: bool

    def value(self) -> Poly:
        return Poly([-self.root, 1])

    def render(self) -> str:
        flag = "  (conjugate orbit)" if self.inverted else ""
        return f"{self.ctx.var} - {format_scalar(self.root)}{flag}"


def orbit_normalize(f: ElementValue, ctx: RingContext) -> OrbitRepresentative:
    """Canonical representative of the unit-and-conjugation orbit of f.

    f must be irreducible in B: a single simple linear factor (times a
    unit and, in Laurent contexts, a power of t).
    """
    s = split_fully(as_ratfunc(f))
    if len(s.roots) != 1 or s.roots[0][1] != 1:
        raise ValueError("orbit normalization takes an irreducible (linear) element")
    z = s.roots[0][0]
    if ctx.kind in (LINE, PROJ_LINE, CUSP, PRIME_LOCAL):
        if z.is_real():
            raise ValueError("real-rooted elements have a real divisor")
        if z.im > 0:
            return OrbitRepresentative(ctx, z, False)
        return OrbitRepresentative(ctx, z.conj(), True)
    if ctx.kind == CIRCLE:
        if z.is_zero():
            raise ValueError("t is a unit, not an irreducible")
        n = z.norm_sq()
        if n > 1:
            return OrbitRepresentative(ctx, z.conj().inverse(), True)
        return OrbitRepresentative(ctx, z, False)
    if ctx.kind == ICIRCLE:
        n = z.norm_sq()
        if n > 1:
            return OrbitRepresentative(ctx, -(z.conj().inverse()), True)
        if n == 1 and not _icircle_boundary_canonical(z):
            return OrbitRepresentative(ctx, -z, True)
        return OrbitRepresentative(ctx, z, False)
    raise ValueError(f"orbit normalization unsupported for {ctx.tag()}")
