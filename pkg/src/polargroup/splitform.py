"""Divisor-level view of elements: unit * t^k * product of (var - z)^e.

Root finding over Q(i) is complete: after clearing denominators the
coefficients live in Z[i] (a PID), so every rational root is a unit
multiple of (divisor of trailing coefficient)/(divisor of leading
coefficient).  What remains after removing all Q(i)-rational roots is a
certified rootless residual.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm

from . import gaussint
from .gaussint import Zi, qi_to_zi_pair
from .scalars import Qi, ZERO, ONE, scalar_sort_key, format_scalar
from .poly import Poly, Laurent, RatFunc, as_ratfunc


class UnsplittableError(ValueError):
    """Raised when an operation needs full splitting but a residual remains."""


@dataclass(frozen=True)
class SplitForm:
    unit: Qi
    t_exp: int = 0
    roots: tuple[tuple[Qi, int], ...] = ()

    def __init__(self, unit: Qi, t_exp: int = 0, roots=()):
        if Qi(unit).is_zero():
            raise ValueError("unit must be nonzero")
        if isinstance(roots, dict):
            roots = roots.items()
        rd: dict[Qi, int] = {}
        for z, e in roots:
            z = Qi(z)
            rd[z] = rd.get(z, 0) + e
        items = tuple(sorted(((z, e) for z, e in rd.items() if e != 0),
                             key=lambda kv: scalar_sort_key(kv[0])))
        object.__setattr__(self, "unit", Qi(unit))
        object.__setattr__(self, "t_exp", t_exp)
        object.__setattr__(self, "roots", items)

    def root_dict(self) -> dict[Qi, int]:
        return dict(self.roots)

    def __mul__(self, other: "SplitForm") -> "SplitForm":
        return SplitForm(self.unit * other.unit, self.t_exp + other.t_exp,
                         list(self.roots) + list(other.roots))

    def inverse(self) -> "SplitForm":
        return SplitForm(self.unit.inverse(), -self.t_exp,
                         [(z, -e) for z, e in self.roots])

    def conj(self) -> "SplitForm":
        """Conjugate unit and every root; exponents and t_exp unchanged."""
        return SplitForm(self.unit.conj(), self.t_exp,
                         [(z.conj(), e) for z, e in self.roots])

    def to_json(self) -> dict:
        return {
            "unit": format_scalar(self.unit),
            "t_exp": self.t_exp,
            "roots": [{"z": format_scalar(z), "e": e} for z, e in self.roots],
        }


@dataclass(frozen=True)
class UnsplitReport:
    """Partial splitting: split_part * residual = input, residual rootless."""

    split_part: SplitForm
    residual: Poly


def _approx_roots(f: Poly) -> list[complex]:
    """Durand-Kerner root approximations of the complex polynomial f."""
    n = f.degree()
    if n < 1:
        return []
    lead = complex(f.lead().re, f.lead().im)
    cs = [complex(c.re, c.im) / lead for c in f.coeffs]

    def ev(z: complex) -> complex:
        out = 0j
        for c in reversed(cs):
            out = out * z + c
        return out

    roots = [(0.4 + 0.9j) ** k for k in range(n)]
    for _ in range(400):
        moved = 0.0
        for j in range(n):
            d = 1 + 0j
            for k in range(n):
                if k != j:
                    d *= roots[j] - roots[k]
            if d == 0:
                roots[j] += 1e-3 + 1e-3j
                moved = 1.0
                continue
            step = ev(roots[j]) / d
            roots[j] -= step
            moved = max(moved, abs(step))
        if moved < 1e-14:
            break
    return roots


_RECON_DENOMS = (1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 16, 20, 24, 25, 36, 48,
                 64, 100, 1000, 10 ** 4)


def _reconstruct(z: complex):
    """Candidate exact values near a floating approximation.

    Only candidates that actually land close to the approximation are
    yielded; roots with exotic denominators are left to the complete
    divisor search.
    """
    from fractions import Fraction
    from math import isfinite
    if not (isfinite(z.real) and isfinite(z.imag)):
        return
    seen = set()
    for d in _RECON_DENOMS:
        re = Fraction(z.real).limit_denominator(d)
        im = Fraction(z.imag).limit_denominator(d)
        if abs(complex(re, im) - z) > 1e-7:
            continue
        cand = Qi(re, im)
        if cand not in seen:
            seen.add(cand)
            yield cand


def _numeric_root_pass(f: Poly) -> tuple[dict[Qi, int], Poly]:
    """Strip the Q(i)-rational roots that numeric approximation locates.

    Sound but not complete on its own: every returned root is verified by
    exact division.  The complete divisor search runs on what is left.
    """
    roots: dict[Qi, int] = {}
    g = f
    if f.degree() >= 2:
        d = gcd_monic_or_self(f, f.derivative())
        g = f.exact_div(d) if d.degree() > 0 else f
    for z in _approx_roots(g):
        for cand in _reconstruct(z):
            if cand in roots or not f(cand).is_zero():
                continue
            lin = Poly([-cand, 1])
            while True:
                q, r = divmod(f, lin)
                if not r.is_zero():
                    break
                roots[cand] = roots.get(cand, 0) + 1
                f = q
            break
    return roots, f


def gcd_monic_or_self(a: Poly, b: Poly) -> Poly:
    from .poly import gcd_monic
    if b.is_zero():
        return a.monic()
    return gcd_monic(a, b)


def _root_candidates(f: Poly) -> list[Qi]:
    # clear denominators, then run the rational-root search in Z[i]
    den = 1
    for c in f.coeffs:
        den = lcm(den, c.re.denominator, c.im.denominator)
    ints = []
    for c in f.coeffs:
        z, d = qi_to_zi_pair(c * den)
        assert d == 1
        ints.append(z)
    lo = 0
    while ints[lo].is_zero():
        lo += 1
    trailing, leading = ints[lo], ints[-1]
    out: set[Qi] = set()
    for p in gaussint.divisors_up_to_units(trailing):
        for q in gaussint.divisors_up_to_units(leading):
            base = p.to_qi() / q.to_qi()
            for u in (ONE, -ONE, Qi(0, 1), Qi(0, -1)):
                out.add(base * u)
    return sorted(out, key=scalar_sort_key)


def find_roots(f: Poly) -> tuple[dict[Qi, int], Poly]:
    """All Q(i)-rational roots with multiplicity, plus the rootless residual."""
    if f.is_zero():
        raise ValueError("cannot split the zero polynomial")
    roots: dict[Qi, int] = {}
    k = f.order_at_zero()
    if k:
        roots[ZERO] = k
        f = Poly(f.coeffs[k:])
    if f.degree() == 0:
        return roots, f
    # fast sound pass first; the complete divisor search mops up
    numeric, f = _numeric_root_pass(f)
    roots.update(numeric)
    if f.degree() == 0:
        return roots, f
    for z in _root_candidates(f):
        if not f(z).is_zero():
            continue
        lin = Poly([-z, 1])
        while True:
            q, r = divmod(f, lin)
            if not r.is_zero():
                break
            roots[z] = roots.get(z, 0) + 1
            f = q
        if f.degree() == 0:
            break
    return roots, f


def split(f) -> SplitForm | UnsplitReport:
    """Split a Poly, Laurent or RatFunc into unit * t^k * linear factors."""
    if isinstance(f, Laurent):
        s = split(f.body)
        add = f.order
    elif isinstance(f, RatFunc):
        if f.is_zero():
            raise ValueError("cannot split zero")
        sn = split(f.num)
        sd = split(f.den)
        if isinstance(sn, UnsplitReport) or isinstance(sd, UnsplitReport):
            res_n = sn.residual if isinstance(sn, UnsplitReport) else Poly.const(1)
            res_d = sd.residual if isinstance(sd, UnsplitReport) else Poly.const(1)
            pn = sn.split_part if isinstance(sn, UnsplitReport) else sn
            pd = sd.split_part if isinstance(sd, UnsplitReport) else sd
            if not res_d.is_constant() or not res_n.is_constant():
                raise UnsplittableError(
                    f"rational function has a rootless factor of degree >= 2: {res_n}/{res_d}")
            return pn * pd.inverse()
        return _hoist_zero_root(sn * sd.inverse())
    else:
        if f.is_zero():
            raise ValueError("cannot split zero")
        roots, residual = find_roots(f)
        base = SplitForm(residual.lead() if not residual.is_constant() else residual.constant(),
                         0, roots)
        base = _hoist_zero_root(base)
        if residual.degree() >= 2:
            return UnsplitReport(base, residual.monic())
        return base
    if isinstance(s, UnsplitReport):
        return UnsplitReport(SplitForm(s.split_part.unit, s.split_part.t_exp + add,
                                       s.split_part.roots), s.residual)
    return SplitForm(s.unit, s.t_exp + add, s.roots)


def _hoist_zero_root(s: SplitForm) -> SplitForm:
    """Move any root at 0 into t_exp so Laurent units come out as units."""
    rd = s.root_dict()
    k = rd.pop(ZERO, 0)
    return SplitForm(s.unit, s.t_exp + k, rd)


def split_fully(f) -> SplitForm:
    s = split(f)
    if isinstance(s, UnsplitReport):
        raise UnsplittableError(
            f"input has a rootless factor of degree >= 2: {s.residual}")
    return s


def assemble(s: SplitForm) -> Poly | RatFunc:
    """Exact product of the split data; negative exponents give a RatFunc."""
    num = Poly.const(s.unit)
    den = Poly.const(1)
    if s.t_exp >= 0:
        num = num * Poly.monomial(s.t_exp)
    else:
        den = den * Poly.monomial(-s.t_exp)
    for z, e in s.roots:
        lin = Poly([-z, 1])
        if e >= 0:
            num = num * lin ** e
        else:
            den = den * lin ** (-e)
    if den.is_constant() and den.constant() == ONE:
        return num
    return RatFunc(num, den)


def assemble_laurent(s: SplitForm) -> Laurent:
    """Assemble into a Laurent polynomial (all root exponents must be >= 0)."""
    body = Poly.const(s.unit)
    for z, e in s.roots:
        if e < 0:
            raise ValueError("negative root exponent does not give a Laurent polynomial")
        body = body * Poly([-z, 1]) ** e
    return Laurent(s.t_exp, body)
