"""Text grammars: elements `i+j*a`, dense polynomials and factored products.

Input is read with sympy, then reduced into the field: integer (or rational)
coefficients mod p and powers of `a` through the field's own rule.
"""
from typing import Dict, Union

import sympy as sp
from sympy.parsing.sympy_parser import TokenError

from algebra.divfun import FactoredPoly, SplittingPoly
from algebra.errors import ParseError
from algebra.field import FieldCtx, FieldElem, FieldExt, build_field
from algebra.poly import Poly, format_dense, format_factor_list, poly_is_irreducible, split_off_roots

X = sp.Symbol("x")
A = sp.Symbol("a")


def _sympify(text: str) -> sp.Expr:
    if not text or not text.strip():
        raise ParseError("empty input")
    try:
        expr = sp.sympify(text, locals={"x": X, "a": A}, convert_xor=True)
    except (sp.SympifyError, SyntaxError, TypeError, TokenError) as e:
        raise ParseError(f"cannot parse {text!r}: {e}") from e
    if not isinstance(expr, sp.Expr):
        raise ParseError(f"{text!r} is not an algebraic expression")
    unknown = expr.free_symbols - {X, A}
    if unknown:
        raise ParseError(f"unknown symbols in {text!r}: {', '.join(sorted(map(str, unknown)))}")
    return expr


def _residue(ctx: FieldCtx, value) -> FieldElem:
    try:
        value = sp.Rational(value)
    except (TypeError, ValueError) as e:
        raise ParseError(f"coefficient {value} is not a rational number") from e
    if value.q % ctx.p == 0:
        raise ParseError(f"{value} has no residue mod {ctx.p}")
    return FieldElem(ctx, int(value.p)) * FieldElem(ctx, int(value.q)).inverse()


def _to_poly(ctx: FieldCtx, expr: sp.Expr) -> Poly:
    try:
        terms = sp.Poly(expr, X, A).terms()
    except sp.PolynomialError as e:
        raise ParseError(f"{expr} is not a polynomial in x: {e}") from e
    coeffs: Dict[int, FieldElem] = {}
    for (kx, ka), c in terms:
        if ka and not ctx.is_quadratic:
            raise ParseError(f"'a' is not defined over the prime field {ctx.label}")
        value = _residue(ctx, c) * (ctx.alpha ** ka if ka else ctx.one)
        coeffs[kx] = coeffs.get(kx, ctx.zero) + value
    top = max(coeffs, default=-1)
    return Poly(ctx, [coeffs.get(k, ctx.zero) for k in range(top + 1)])


def parse_elem(ctx: FieldCtx, text: str) -> FieldElem:
    P = _to_poly(ctx, _sympify(text))
    if P.degree > 0:
        raise ParseError(f"{text!r} is not a field element")
    return P.coeffs[0] if P.coeffs else ctx.zero


def parse_poly(ctx: FieldCtx, text: str) -> Poly:
    return _to_poly(ctx, _sympify(text))


def parse_factored(ctx: FieldCtx, text: str) -> FactoredPoly:
    """Product of monic factors; reducible factors are split by root extraction."""
    exps: Dict[Poly, int] = {}
    for factor in sp.Mul.make_args(_sympify(text)):
        base_expr, exp = factor.as_base_exp()
        if not (exp.is_Integer and exp >= 0):
            raise ParseError(f"exponent {exp} in {factor} is not a non-negative integer")
        base = _to_poly(ctx, base_expr)
        if base.is_zero():
            raise ParseError("the zero polynomial has no factorization")
        if base.degree == 0:
            if not base.is_one():
                raise ParseError(f"constant factor {base} is not allowed; factors must be monic")
            continue
        if not base.is_monic():
            raise ParseError(f"factor {base} is not monic")
        roots, rest = split_off_roots(base)
        pieces = [(Poly.linear(g), m) for g, m in roots.items()]
        if rest.degree >= 1:
            if not poly_is_irreducible(rest):
                raise ParseError(f"factor {base} does not factor into roots and one irreducible over {ctx.label}")
            pieces.append((rest, 1))
        for piece, m in pieces:
            exps[piece] = exps.get(piece, 0) + m * int(exp)
    return FactoredPoly._trusted(ctx, exps.items())


def parse_splitting(ctx: FieldCtx, text: str) -> SplittingPoly:
    factored = parse_factored(ctx, text)
    if not factored.is_splitting():
        raise ParseError(f"{text!r} does not split into linear factors over {ctx.label}")
    return factored.to_splitting()


def parse_field(text: str, default_ext: Union[FieldExt, str] = FieldExt.QUADRATIC) -> FieldCtx:
    """`p`, `p,ext` or `p,prime`."""
    head, _, tail = text.strip().partition(",")
    try:
        p = int(head)
        ext = FieldExt(tail.strip()) if tail else FieldExt(default_ext)
    except ValueError as e:
        raise ParseError(f"bad field description {text!r}: expected p[,ext|prime]") from e
    try:
        return build_field(p, ext)
    except ValueError as e:
        raise ParseError(str(e)) from e


def format_poly(P: Poly) -> str:
    return format_dense(P)


def format_factored(P: Union[Poly, SplittingPoly, FactoredPoly]) -> str:
    """Linear factors by root (prime-subfield roots first), then any cofactor densely."""
    if isinstance(P, (SplittingPoly, FactoredPoly)):
        return str(P)
    if P.is_zero():
        return "0"
    roots, rest = split_off_roots(P)
    items = sorted(roots.items(), key=lambda item: item[0].display_key)
    return format_factor_list(P.ctx, items, rest)
