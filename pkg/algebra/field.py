"""Prime fields F_p and their quadratic extensions F_{p^2}.

Elements of F_{p^2} are written i + j*a with a the adjoined root:
a^2 = c for odd p (c the smallest quadratic non-residue mod p) and
a^2 = a + 1 for p = 2.
"""
from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache
from typing import Optional, Tuple, Union

from sympy import isprime

from algebra.errors import FieldMismatchError


class FieldExt(str, Enum):
    PRIME = "prime"
    QUADRATIC = "ext"

    @classmethod
    def _missing_(cls, value):
        if value == "quadratic":
            return cls.QUADRATIC
        return None


@dataclass(frozen=True)
class FieldCtx:
    """Description of F_p or F_{p^2}; build instances with build_field()."""

    p: int
    ext: FieldExt
    c: Optional[int] = None

    @property
    def is_quadratic(self) -> bool:
        return self.ext is FieldExt.QUADRATIC

    @property
    def q(self) -> int:
        return self.p * self.p if self.is_quadratic else self.p

    @property
    def label(self) -> str:
        return f"F{self.q}"

    @cached_property
    def alpha_rule(self) -> Tuple[int, int]:
        """(s, t) with a^2 = s + t*a."""
        if not self.is_quadratic:
            return (0, 0)
        if self.p == 2:
            return (1, 1)
        return (self.c, 0)

    @property
    def zero(self) -> "FieldElem":
        return FieldElem(self, 0)

    @property
    def one(self) -> "FieldElem":
        return FieldElem(self, 1)

    @property
    def alpha(self) -> "FieldElem":
        if not self.is_quadratic:
            raise ValueError(f"{self.label} has no adjoined root")
        return FieldElem(self, 0, 1)

    def elem(self, i: int, j: int = 0) -> "FieldElem":
        return FieldElem(self, i, j)

    def element_at(self, index: int) -> "FieldElem":
        """The element at this position of the (i, j) lexicographic order."""
        if self.is_quadratic:
            return FieldElem(self, index // self.p, index % self.p)
        return FieldElem(self, index)

    def __str__(self) -> str:
        return self.label


class FieldElem:
    """An element i + j*a of a FieldCtx. Treated as immutable."""

    __slots__ = ("ctx", "i", "j")

    def __init__(self, ctx: FieldCtx, i: int, j: int = 0):
        p = ctx.p
        i %= p
        j %= p
        if j and not ctx.is_quadratic:
            raise ValueError(f"{ctx.label} elements have no a-component")
        self.ctx = ctx
        self.i = i
        self.j = j

    @classmethod
    def _raw(cls, ctx: FieldCtx, i: int, j: int) -> "FieldElem":
        obj = object.__new__(cls)
        obj.ctx = ctx
        obj.i = i
        obj.j = j
        return obj

    def _coerce(self, other) -> "FieldElem":
        if isinstance(other, FieldElem):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise FieldMismatchError(
                    f"cannot combine elements of {self.ctx.label} and {other.ctx.label}"
                )
            return other
        if isinstance(other, int):
            return FieldElem(self.ctx, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ctx.p
        return FieldElem._raw(self.ctx, (self.i + other.i) % p, (self.j + other.j) % p)

    __radd__ = __add__

    def __neg__(self):
        p = self.ctx.p
        return FieldElem._raw(self.ctx, -self.i % p, -self.j % p)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ctx.p
        return FieldElem._raw(self.ctx, (self.i - other.i) % p, (self.j - other.j) % p)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        ctx = self.ctx
        p = ctx.p
        s, t = ctx.alpha_rule
        a, b, c, d = self.i, self.j, other.i, other.j
        bd = b * d
        return FieldElem._raw(ctx, (a * c + bd * s) % p, (a * d + b * c + bd * t) % p)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.ctx.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "FieldElem":
        if not self:
            raise ZeroDivisionError(f"0 has no inverse in {self.ctx.label}")
        return self ** (self.ctx.q - 2)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __bool__(self) -> bool:
        return bool(self.i or self.j)

    def is_one(self) -> bool:
        return self.i == 1 and self.j == 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldElem):
            return NotImplemented
        return self.i == other.i and self.j == other.j and self.ctx == other.ctx

    def __hash__(self) -> int:
        return hash((self.i, self.j, self.ctx.p, self.ctx.ext))

    @property
    def display_key(self) -> Tuple[int, int]:
        # prime-subfield elements first
        return (self.j, self.i)

    def __str__(self) -> str:
        return format_elem(self)

    def __repr__(self) -> str:
        return f"FieldElem({self}, {self.ctx.label})"


def format_elem(e: FieldElem) -> str:
    """Canonical text: `i`, `a`, `j*a`, `i+a` or `i+j*a`."""
    if not e.j:
        return str(e.i)
    a_part = "a" if e.j == 1 else f"{e.j}*a"
    if not e.i:
        return a_part
    return f"{e.i}+{a_part}"


def _smallest_nonresidue(p: int) -> int:
    squares = {z * z % p for z in range(p)}
    return next(n for n in range(2, p) if n not in squares)


@lru_cache(maxsize=None)
def build_field(p: int, ext: Union[FieldExt, str] = FieldExt.QUADRATIC) -> FieldCtx:
    """Deterministic context for F_p (ext=prime) or F_{p^2} (ext=quadratic)."""
    ext = FieldExt(ext)
    if not isinstance(p, int) or not isprime(p):
        raise ValueError(f"field characteristic must be prime, got {p!r}")
    if ext is FieldExt.QUADRATIC and p != 2:
        return FieldCtx(p, ext, _smallest_nonresidue(p))
    return FieldCtx(p, ext)


def fe_inv(e: FieldElem) -> FieldElem:
    return e.inverse()


@lru_cache(maxsize=None)
def enumerate_field(ctx: FieldCtx) -> Tuple[FieldElem, ...]:
    """All q elements, lexicographic in (i, j)."""
    return tuple(ctx.element_at(k) for k in range(ctx.q))
