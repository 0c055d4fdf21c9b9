"""polarctl: command line front end.

Exit codes: 0 success, 2 parse or domain error, 3 unsplittable input.
The report command exits 0 only when every embedded check passes.
"""

from __future__ import annotations

import argparse
import json
import sys

from .contexts import DomainError, RingContext, fixed_ring_generators
from .exprparse import ExprError, parse_ring, parse_value
from .poly import as_ratfunc
from .splitform import UnsplittableError
from . import polar
from . import report as report_mod

SCHEMA = 1


class _CliParser(argparse.ArgumentParser):
    def error(self, message):
        raise ExprError(message)


def _build_parser() -> argparse.ArgumentParser:
    p = _CliParser(prog="polarctl",
                   description="Polar group computations for real forms of complex curves.")
    sub = p.add_subparsers(dest="cmd", required=True)

    def add(name, help_text, exprs=0):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--ring", default="line", help="ring context DSL tag")
        sp.add_argument("--json", action="store_true", help="emit JSON")
        for k in range(exprs):
            sp.add_argument(f"expr{k + 1}" if exprs > 1 else "expr",
                            help="expression ('-' reads stdin)")
        return sp

    add("class", "canonical polar class of an expression", exprs=1)
    add("factor", "polar factorization f = real * delta", exprs=1)
    add("delta", "membership in the no-real-divisor set", exprs=1)
    add("order", "order of the class of an expression", exprs=1)
    add("eq", "are two expressions in the same class", exprs=2)
    add("oracle", "representation-independent triviality test", exprs=1)
    add("fixedring", "generators and relation of the fixed ring")
    add("orbit", "orbit representative of an irreducible element", exprs=1)
    hom = add("hom", "apply a group homomorphism to a class", exprs=1)
    hom.add_argument("--kind", required=True,
                     choices=("localize", "section", "include", "cusp-embed"))
    hom.add_argument("--target", help="target ring tag (localize/section)")
    rp = sub.add_parser("report", help="machine-verified report sections")
    rp.add_argument("--section", default="all", choices=report_mod.SECTIONS)
    rp.add_argument("--json", action="store_true")
    return p


def _read_expr(src: str) -> str:
    return sys.stdin.read() if src == "-" else src


def _value(args, ctx: RingContext, attr: str = "expr"):
    return parse_value(_read_expr(getattr(args, attr)), ctx)


def _emit(args, text_lines, payload) -> None:
    if getattr(args, "json", False):
        payload = {"schema": SCHEMA, **payload}
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _order_str(o) -> str:
    return "inf" if o == float("inf") else str(o)


def _class_payload(c: polar.PolarClass) -> dict:
    return {**c.to_json(), "order": _order_str(c.order())}


def _run_class(args) -> int:
    ctx = parse_ring(args.ring)
    c = polar.class_of(_value(args, ctx), ctx)
    _emit(args, [f"class: {c.render()}", f"order: {_order_str(c.order())}"],
          _class_payload(c))
    return 0


def _run_factor(args) -> int:
    ctx = parse_ring(args.ring)
    fac = polar.polar_factorize(_value(args, ctx), ctx)
    rp = as_ratfunc(fac.real_part).render(ctx.var)
    dp = as_ratfunc(fac.delta_part).render(ctx.var)
    _emit(args, [f"real:  {rp}", f"delta: {dp}"], {"real": rp, "delta": dp})
    return 0


def _run_delta(args) -> int:
    ctx = parse_ring(args.ring)
    member = polar.delta_membership(_value(args, ctx), ctx)
    _emit(args, ["member" if member else "not a member"], {"member": member})
    return 0


def _run_order(args) -> int:
    ctx = parse_ring(args.ring)
    c = polar.class_of(_value(args, ctx), ctx)
    _emit(args, [_order_str(c.order())], {"order": _order_str(c.order())})
    return 0


def _run_eq(args) -> int:
    ctx = parse_ring(args.ring)
    a = polar.class_of(_value(args, ctx, "expr1"), ctx)
    b = polar.class_of(_value(args, ctx, "expr2"), ctx)
    equal = a == b
    _emit(args, ["equal" if equal else "different"], {"equal": equal})
    return 0


def _run_oracle(args) -> int:
    ctx = parse_ring(args.ring)
    trivial = ctx.triviality_oracle(_value(args, ctx))
    _emit(args, ["trivial" if trivial else "nontrivial"], {"trivial": trivial})
    return 0


def _run_fixedring(args) -> int:
    ctx = parse_ring(args.ring)
    pres = fixed_ring_generators(ctx)
    lines = [f"{name} = {as_ratfunc(v).render(ctx.var)}" for name, v in pres.generators]
    lines.append(f"relation: {pres.relation}")
    lines.append(f"verified: {'yes' if pres.verified else 'NO'}")
    _emit(args, lines, {
        "generators": [{"name": n, "value": as_ratfunc(v).render(ctx.var)}
                       for n, v in pres.generators],
        "relation": pres.relation,
        "verified": pres.verified,
    })
    return 0


def _run_orbit(args) -> int:
    ctx = parse_ring(args.ring)
    rep = polar.orbit_normalize(_value(args, ctx), ctx)
    _emit(args, [rep.render()],
          {"representative": rep.value().render(ctx.var), "conjugate_orbit": rep.inverted})
    return 0


def _run_hom(args) -> int:
    ctx = parse_ring(args.ring)
    if args.kind in ("localize", "section"):
        if not args.target:
            raise ExprError(f"--target is required for --kind {args.kind}")
        target = parse_ring(args.target)
        c = polar.class_of(_value(args, ctx), ctx)
        fn = polar.localization_map if args.kind == "localize" else polar.localization_section
        try:
            img = fn(c, target)
        except ValueError as exc:
            raise ExprError(str(exc)) from exc
    elif args.kind == "include":
        c = polar.class_of(_value(args, ctx), ctx)
        try:
            img = polar.projective_include(c)
        except ValueError as exc:
            raise ExprError(str(exc)) from exc
    else:  # cusp-embed
        img = polar.subalgebra_embed(_value(args, ctx), ctx)
    _emit(args, [f"class: {img.render()}  (in {img.ctx.tag()})"], _class_payload(img))
    return 0


def _run_report(args) -> int:
    text, ok = report_mod.build_report(args.section)
    if getattr(args, "json", False):
        print(json.dumps({"schema": SCHEMA, "section": args.section,
                          "ok": ok, "text": text}, indent=2))
    else:
        print(text, end="")
    return 0 if ok else 1


_RUNNERS = {
    "class": _run_class,
    "factor": _run_factor,
    "delta": _run_delta,
    "order": _run_order,
    "eq": _run_eq,
    "oracle": _run_oracle,
    "fixedring": _run_fixedring,
    "orbit": _run_orbit,
    "hom": _run_hom,
    "report": _run_report,
}


def run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _RUNNERS[args.cmd](args)
    except (ExprError, DomainError, ValueError) as exc:
        if isinstance(exc, UnsplittableError):
            print(f"error: {exc}", file=sys.stderr)
            return 3
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
