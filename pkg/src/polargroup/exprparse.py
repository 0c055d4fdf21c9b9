"""Expression front end: scalar/polynomial literals and the ring DSL.

Grammar (standard precedence, left associative):

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := ('-')? base ('^' ('-')? int)?
    base   := int | 'i' | var | '(' expr ')'

The variable symbol is fixed by the ring context (``x`` for line-like
rings, ``t`` for Laurent rings); using the wrong one is a parse error.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .scalars import Qi, ONE, I
from .poly import Poly, RatFunc, as_ratfunc
from .splitform import split, UnsplitReport
from . import contexts
from .contexts import RingContext


class ExprError(ValueError):
    """Syntax or semantic error in an expression, with position info."""


# -- AST -----------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: int

@dataclass(frozen=True)
class ImagUnit:
    pass

@dataclass(frozen=True)
class Var:
    name: str

@dataclass(frozen=True)
class Neg:
    arg: "Node"

@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * /
    left: "Node"
    right: "Node"

@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int


Node = Union[Num, ImagUnit, Var, Neg, BinOp, Pow]

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def print_expr(node: Node) -> str:
    """Canonical rendering; parse(print_expr(n)) reproduces the tree."""
    return _print(node, 0)


def _print(node: Node, parent_prec: int) -> str:
    if isinstance(node, Num):
        s = str(node.value)
        return s if node.value >= 0 or parent_prec == 0 else f"({s})"
    if isinstance(node, ImagUnit):
        return "i"
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Neg):
        inner = _print(node.arg, 3)
        s = f"-{inner}"
        return f"({s})" if parent_prec > 0 else s
    if isinstance(node, Pow):
        b = _print(node.base, 4)
        return f"{b}^{node.exponent}"
    prec = _PREC[node.op]
    left = _print(node.left, prec - 1)
    right = _print(node.right, prec)
    s = f"{left} {node.op} {right}"
    return f"({s})" if parent_prec >= prec else s


# -- tokenizer and parser ------------------------------------------------

_OPS = set("+-*/^()")


def _tokenize(src: str) -> list[tuple[str, str, int]]:
    out = []
    k = 0
    while k < len(src):
        c = src[k]
        if c.isspace():
            k += 1
            continue
        if c in _OPS:
            out.append(("op", c, k))
            k += 1
            continue
        if c.isdigit():
            j = k
            while j < len(src) and src[j].isdigit():
                j += 1
            out.append(("int", src[k:j], k))
            k = j
            continue
        if c.isalpha():
            j = k
            while j < len(src) and src[j].isalnum():
                j += 1
            out.append(("name", src[k:j], k))
            k = j
            continue
        raise ExprError(f"unexpected character {c!r} at position {k}")
    out.append(("end", "", len(src)))
    return out


class _Parser:
    def __init__(self, src: str, var: str):
        self.src = src
        self.var = var
        self.toks = _tokenize(src)
        self.pos = 0

    def peek(self):
        return self.toks[self.pos]

    def take(self):
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def expect_op(self, op: str):
        kind, val, at = self.take()
        if kind != "op" or val != op:
            raise ExprError(f"expected {op!r} at position {at}")

    def parse(self) -> Node:
        node = self.expr()
        kind, val, at = self.peek()
        if kind != "end":
            raise ExprError(f"unexpected {val!r} at position {at}")
        return node

    def expr(self) -> Node:
        node = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                node = BinOp(val, node, self.term())
            else:
                return node

    def term(self) -> Node:
        node = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                node = BinOp(val, node, self.factor())
            else:
                return node

    def factor(self) -> Node:
        kind, val, _ = self.peek()
        neg = False
        if kind == "op" and val == "-":
            self.take()
            neg = True
        node = self.base()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            node = Pow(node, self.exponent())
        return Neg(node) if neg else node

    def exponent(self) -> int:
        kind, val, at = self.take()
        sign = 1
        if kind == "op" and val == "-":
            sign = -1
            kind, val, at = self.take()
        if kind == "op" and val == "(":
            inner = self.exponent()
            self.expect_op(")")
            return sign * inner
        if kind != "int":
            raise ExprError(f"exponent must be an integer (position {at})")
        return sign * int(val)

    def base(self) -> Node:
        kind, val, at = self.take()
        if kind == "int":
            return Num(int(val))
        if kind == "name":
            if val == "i":
                return ImagUnit()
            if val == self.var:
                return Var(val)
            raise ExprError(
                f"unknown symbol {val!r} at position {at} (variable here is {self.var!r})")
        if kind == "op" and val == "(":
            node = self.expr()
            self.expect_op(")")
            return node
        raise ExprError(f"unexpected {val or 'end of input'!r} at position {at}")


def parse(src: str, var: str = "x") -> Node:
    return _Parser(src, var).parse()


def evaluate(node: Node) -> RatFunc:
    if isinstance(node, Num):
        return as_ratfunc(Poly.const(node.value))
    if isinstance(node, ImagUnit):
        return as_ratfunc(Poly.const(I))
    if isinstance(node, Var):
        return as_ratfunc(Poly.var())
    if isinstance(node, Neg):
        return -evaluate(node.arg)
    if isinstance(node, Pow):
        return evaluate(node.base) ** node.exponent
    left = evaluate(node.left)
    right = evaluate(node.right)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    if right.is_zero():
        raise ExprError("division by zero")
    return left / right


def parse_value(src: str, ctx: RingContext) -> RatFunc:
    """Parse in the context's variable and require a nonzero value."""
    v = evaluate(parse(src, ctx.var))
    if v.is_zero():
        raise ExprError("expression evaluates to zero")
    return v


def parse_scalar(src: str) -> Qi:
    """Parse a scalar literal such as ``(3+4*i)/5``."""
    v = evaluate(parse(src, var="\x00no-variable"))
    if not v.is_constant():
        raise ExprError(f"expected a scalar, got {src!r}")
    return v.constant()


# -- ring DSL ------------------------------------------------------------

_SIMPLE_RINGS = {
    "line": contexts.affine_line,
    "circle": contexts.circle_form,
    "icircle": contexts.imaginary_circle_form,
    "proj-line": contexts.projective_line,
    "conic": contexts.projective_conic,
    "cusp": contexts.cusp_cubic,
}


def parse_ring(tag: str) -> RingContext:
    """Parse a ring tag: line, line[inv=...], prime-local[z], circle, ...."""
    tag = tag.strip()
    if tag in _SIMPLE_RINGS:
        return _SIMPLE_RINGS[tag]()
    if tag == "prime-local":
        return contexts.prime_local()
    if tag.startswith("line[inv=") and tag.endswith("]"):
        body = tag[len("line[inv="):-1]
        points: set[Qi] = set()
        for part in body.split(","):
            v = evaluate(parse(part, var="x"))
            if v.is_constant():
                points.add(v.constant())
                continue
            if not v.den.is_constant():
                raise ExprError("inverted locus must be a polynomial or points")
            s = split(v.num)
            if isinstance(s, UnsplitReport):
                raise ExprError(f"cannot split inverted locus {part!r} over Q(i)")
            points.update(z for z, _ in s.roots)
            if s.t_exp:
                points.add(Qi(0))
        try:
            return contexts.affine_line(points)
        except ValueError as exc:
            raise ExprError(str(exc)) from exc
    if tag.startswith("prime-local[") and tag.endswith("]"):
        z = parse_scalar(tag[len("prime-local["):-1])
        try:
            return contexts.prime_local(z)
        except ValueError as exc:
            raise ExprError(str(exc)) from exc
    raise ExprError(f"unknown ring {tag!r}")
