"""Text parsing and LaTeX rendering for polynomials and rational functions."""

from __future__ import annotations

import ast
import re
from fractions import Fraction

from .polynomial import Polynomial, format_coeff
from .ratfunc import RationalFunction
from .ring import Ring

_LATEX_NAMES = {"h": "\\hbar", "zeta": "\\zeta"}


def _latex_var(name: str) -> str:
    if name in _LATEX_NAMES:
        return _LATEX_NAMES[name]
    m = re.fullmatch(r"([A-Za-z]+)(\d+)", name)
    if m:
        return f"{m.group(1)}_{{{m.group(2)}}}"
    return name


def poly_latex(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    names = p.ring.names
    out = ""
    unpack = p.ring.unpack
    for i, (m, c) in enumerate(p._display_terms()):
        exps = unpack(m)
        mono = " ".join(
            _latex_var(name) if e == 1 else f"{_latex_var(name)}^{{{e}}}" for name, e in zip(names, exps) if e
        )
        mag = abs(Fraction(c))
        if mag.denominator != 1:
            coeff = f"\\frac{{{mag.numerator}}}{{{mag.denominator}}}"
        else:
            coeff = str(mag.numerator)
        body = mono if mono and mag == 1 else (f"{coeff} {mono}" if mono else coeff)
        if i == 0:
            out = ("-" if c < 0 else "") + body
        else:
            out += (" - " if c < 0 else " + ") + body
    return out


def rf_latex(f: RationalFunction) -> str:
    if f.den.is_constant():
        return poly_latex(f.num)
    return f"\\frac{{{poly_latex(f.num)}}}{{{poly_latex(f.den)}}}"


class _Evaluator(ast.NodeVisitor):
    def __init__(self, ring: Ring):
        self.ring = ring

    def visit_Expression(self, node):
        return self.visit(node.body)

    def visit_Constant(self, node):
        if isinstance(node.value, int) and not isinstance(node.value, bool):
            return node.value
        raise ValueError(f"unsupported literal {node.value!r}")

    def visit_Name(self, node):
        if node.id not in self.ring.index:
            raise ValueError(f"unknown variable {node.id!r}; expected one of {', '.join(self.ring.names)}")
        return Polynomial.var(self.ring, node.id)

    def visit_UnaryOp(self, node):
        v = self.visit(node.operand)
        if isinstance(node.op, ast.USub):
            return -v
        if isinstance(node.op, ast.UAdd):
            return v
        raise ValueError("unsupported unary operator")

    def visit_BinOp(self, node):
        a = self.visit(node.left)
        b = self.visit(node.right)
        op = node.op
        if isinstance(op, ast.Add):
            return a + b
        if isinstance(op, ast.Sub):
            return a - b
        if isinstance(op, ast.Mult):
            return a * b
        if isinstance(op, ast.Div):
            if isinstance(a, int) and isinstance(b, int):
                return Fraction(a, b)
            if isinstance(a, (int, Fraction)):
                a = Polynomial.constant(self.ring, a)
            return RationalFunction.lift(a, self.ring) / RationalFunction.lift(b, self.ring)
        if isinstance(op, ast.Pow):
            if not isinstance(b, int) or b < 0:
                raise ValueError("exponents must be non-negative integer literals")
            return a**b
        raise ValueError("unsupported operator")

    def generic_visit(self, node):
        raise ValueError(f"unsupported syntax: {type(node).__name__}")


def parse_expression(text: str, ring: Ring):
    """Parse ``text`` (``+ - * / ^`` and parentheses) into a Polynomial or RationalFunction."""
    src = text.replace("^", "**").replace("ℏ", "h")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse {text!r}: {exc.msg}") from None
    value = _Evaluator(ring).visit(tree)
    if isinstance(value, (int, Fraction)):
        value = Polynomial.constant(ring, value)
    return value


def parse_polynomial(text: str, ring: Ring) -> Polynomial:
    value = parse_expression(text, ring)
    if isinstance(value, RationalFunction):
        return value.as_polynomial()
    return value


def parse_rational(text: str, ring: Ring) -> RationalFunction:
    return RationalFunction.lift(parse_expression(text, ring), ring)


def coeff_str(c) -> str:
    return format_coeff(c)
