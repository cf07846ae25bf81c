"""Dense univariate polynomials over a FieldCtx."""
from enum import Enum
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from algebra.errors import FieldMismatchError
from algebra.field import FieldCtx, FieldElem, enumerate_field

NEG_INF = float("-inf")


def _convolve(u: Sequence[int], v: Sequence[int]) -> List[int]:
    out = [0] * (len(u) + len(v) - 1)
    for i, a in enumerate(u):
        if a:
            for j, b in enumerate(v):
                out[i + j] += a * b
    return out


class Poly:
    """Coefficients lowest degree first, no trailing zeros. Treated as immutable."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: Iterable[Union[FieldElem, int]] = ()):
        normalized = []
        for c in coeffs:
            if isinstance(c, int):
                c = FieldElem(ctx, c)
            elif c.ctx is not ctx and c.ctx != ctx:
                raise FieldMismatchError(
                    f"coefficient from {c.ctx.label} in a polynomial over {ctx.label}"
                )
            normalized.append(c)
        while normalized and not normalized[-1]:
            normalized.pop()
        self.ctx = ctx
        self.coeffs = tuple(normalized)

    @classmethod
    def _raw(cls, ctx: FieldCtx, coeffs: List[FieldElem]) -> "Poly":
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        obj = object.__new__(cls)
        obj.ctx = ctx
        obj.coeffs = tuple(coeffs)
        return obj

    # constructors

    @classmethod
    def zero(cls, ctx: FieldCtx) -> "Poly":
        return cls(ctx)

    @classmethod
    def one(cls, ctx: FieldCtx) -> "Poly":
        return cls(ctx, [ctx.one])

    @classmethod
    def constant(cls, c: FieldElem) -> "Poly":
        return cls(c.ctx, [c])

    @classmethod
    def x(cls, ctx: FieldCtx) -> "Poly":
        return cls(ctx, [ctx.zero, ctx.one])

    @classmethod
    def linear(cls, root: FieldElem) -> "Poly":
        """x - root."""
        return cls(root.ctx, [-root, root.ctx.one])

    @classmethod
    def monomial(cls, c: FieldElem, k: int) -> "Poly":
        return cls(c.ctx, [c.ctx.zero] * k + [c])

    # basic properties

    @property
    def degree(self) -> Union[int, float]:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def leading(self) -> FieldElem:
        return self.coeffs[-1] if self.coeffs else self.ctx.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0].is_one()

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1].is_one()

    def monic(self) -> "Poly":
        if self.is_zero() or self.is_monic():
            return self
        inv = self.leading.inverse()
        return Poly._raw(self.ctx, [c * inv for c in self.coeffs])

    def _check(self, other: "Poly") -> None:
        if other.ctx is not self.ctx and other.ctx != self.ctx:
            raise FieldMismatchError(
                f"cannot combine polynomials over {self.ctx.label} and {other.ctx.label}"
            )

    # ring operations

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return Poly._raw(self.ctx, out)

    def __neg__(self) -> "Poly":
        return Poly._raw(self.ctx, [-c for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: Union["Poly", FieldElem]) -> "Poly":
        if isinstance(other, FieldElem):
            return self * Poly.constant(other)
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return Poly.zero(self.ctx)
        ctx = self.ctx
        p = ctx.p
        ai = [c.i for c in self.coeffs]
        bi = [c.i for c in other.coeffs]
        real = _convolve(ai, bi)
        if not ctx.is_quadratic:
            return Poly._raw(ctx, [FieldElem._raw(ctx, r % p, 0) for r in real])
        aj = [c.j for c in self.coeffs]
        bj = [c.j for c in other.coeffs]
        jj = _convolve(aj, bj)
        mixed = _convolve([x + y for x, y in zip(ai, aj)], [x + y for x, y in zip(bi, bj)])
        s, t = ctx.alpha_rule
        out = []
        for r, d, m in zip(real, jj, mixed):
            # (a+b*al)(c+d*al) = ac + bd*s + (ad + bc + bd*t)*al, ad + bc = m - ac - bd
            out.append(FieldElem._raw(ctx, (r + d * s) % p, (m - r - d + d * t) % p))
        return Poly._raw(ctx, out)

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly.one(self.ctx)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other: "Poly") -> Tuple["Poly", "Poly"]:
        self._check(other)
        if other.is_zero():
            raise ValueError("polynomial division by zero")
        ctx = self.ctx
        rem = list(self.coeffs)
        m = len(other.coeffs)
        if len(rem) < m:
            return Poly.zero(ctx), self
        inv_lead = other.leading.inverse()
        quo = [ctx.zero] * (len(rem) - m + 1)
        divisor = other.coeffs
        for k in range(len(rem) - m, -1, -1):
            c = rem[k + m - 1] * inv_lead
            if not c:
                continue
            quo[k] = c
            for idx, d in enumerate(divisor):
                rem[k + idx] = rem[k + idx] - c * d
        return Poly._raw(ctx, quo), Poly._raw(ctx, rem[: m - 1])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __call__(self, value: FieldElem) -> FieldElem:
        acc = self.ctx.zero
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def divide_linear(self, root: FieldElem) -> Tuple["Poly", FieldElem]:
        """Synthetic division by (x - root): (quotient, remainder)."""
        if not self.coeffs:
            return self, self.ctx.zero
        acc = self.ctx.zero
        quo = []
        for c in reversed(self.coeffs):
            acc = acc * root + c
            quo.append(acc)
        rem = quo.pop()
        quo.reverse()
        return Poly._raw(self.ctx, quo), rem

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.ctx, self.coeffs))

    def __str__(self) -> str:
        return format_dense(self)

    def __repr__(self) -> str:
        return f"Poly({self}, {self.ctx.label})"


def format_dense(P: Poly) -> str:
    """Dense text, highest degree first, e.g. x^2+(1+a)*x+1."""
    if P.is_zero():
        return "0"
    terms = []
    for k in range(len(P.coeffs) - 1, -1, -1):
        c = P.coeffs[k]
        if not c:
            continue
        power = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        if k == 0:
            terms.append(str(c))
        elif c.is_one():
            terms.append(power)
        else:
            text = str(c)
            if "+" in text:
                text = f"({text})"
            terms.append(f"{text}*{power}")
    return "+".join(terms)


def format_factor_list(ctx: FieldCtx, items: Sequence[Tuple[FieldElem, int]],
                       cofactor: "Poly" = None) -> str:
    """(x - g)^e factors as x^e or (x+<-g>)^e joined by '*', cofactor appended dense."""
    parts = []
    for gamma, e in items:
        if not gamma:
            parts.append(f"x^{e}")
        else:
            parts.append(f"(x+{-gamma})^{e}")
    if cofactor is not None and not cofactor.is_one():
        if cofactor.degree == 0:
            lead = str(cofactor.coeffs[0])
            parts.insert(0, f"({lead})" if "+" in lead else lead)
        else:
            parts.append(f"({cofactor})")
    return "*".join(parts) if parts else "1"


class PolyOp(str, Enum):
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIVREM = "divrem"


def poly_arith(a: Poly, b: Poly, op: Union[PolyOp, str]):
    op = PolyOp(op)
    if op is PolyOp.ADD:
        return a + b
    if op is PolyOp.SUB:
        return a - b
    if op is PolyOp.MUL:
        return a * b
    return divmod(a, b)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; a and b must not both be zero."""
    a._check(b)
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_powmod(base: Poly, n: int, modulus: Poly) -> Poly:
    result = Poly.one(base.ctx) % modulus
    base = base % modulus
    while n:
        if n & 1:
            result = (result * base) % modulus
        n >>= 1
        if n:
            base = (base * base) % modulus
    return result


def poly_is_irreducible(P: Poly) -> bool:
    """Ben-Or test: no factor of degree i <= deg/2 divides x^(q^i) - x."""
    if P.is_zero() or P.degree < 1:
        return False
    if P.degree == 1:
        return True
    f = P.monic()
    x = Poly.x(f.ctx)
    h = x
    for _ in range(int(f.degree) // 2):
        h = poly_powmod(h, f.ctx.q, f)
        if not poly_gcd(h - x, f).is_one():
            return False
    return True


def split_off_roots(P: Poly) -> Tuple[Dict[FieldElem, int], Poly]:
    """(root multiplicities, root-free cofactor), trying every element of the field."""
    if P.is_zero():
        raise ValueError("the zero polynomial has every element as a root")
    roots: Dict[FieldElem, int] = {}
    rest = P
    for gamma in enumerate_field(P.ctx):
        count = 0
        while rest.degree >= 1:
            quo, rem = rest.divide_linear(gamma)
            if rem:
                break
            rest = quo
            count += 1
        if count:
            roots[gamma] = count
    return roots, rest


def poly_roots(P: Poly) -> Dict[FieldElem, int]:
    return split_off_roots(P)[0]


def poly_splits(P: Poly) -> bool:
    return sum(poly_roots(P).values()) == P.degree
