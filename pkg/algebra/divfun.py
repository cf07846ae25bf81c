"""Divisor sums sigma, sigma* and sigma** and the greatest common unitary divisor.

Divisors are monic throughout. sigma**(1) = 1.
"""
from enum import Enum
from math import prod
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from algebra.errors import DegreeCapExceeded, FieldMismatchError
from algebra.field import FieldCtx, FieldElem, enumerate_field
from algebra.poly import Poly, format_factor_list, poly_is_irreducible
from utils.logger import logger

DEFAULT_DEGREE_CAP = 64
DEFAULT_DIVISOR_CAP = 200_000


def display_roots(ctx: FieldCtx) -> List[FieldElem]:
    """Field elements, prime subfield first. Over F4 this is 0, 1, a, 1+a."""
    return sorted(enumerate_field(ctx), key=lambda g: g.display_key)


class SplittingPoly:
    """prod (x - g)^e over a root -> exponent map; zero exponents are dropped."""

    __slots__ = ("ctx", "exps")

    def __init__(self, ctx: FieldCtx, exps: Mapping[FieldElem, int]):
        clean: Dict[FieldElem, int] = {}
        for gamma, e in exps.items():
            if gamma.ctx != ctx:
                raise FieldMismatchError(f"root {gamma} is not in {ctx.label}")
            if not isinstance(e, int) or e < 0:
                raise ValueError(f"exponent of (x-{gamma}) must be a non-negative integer, got {e!r}")
            if e:
                clean[gamma] = clean.get(gamma, 0) + e
        self.ctx = ctx
        self.exps = clean

    @classmethod
    def from_tuple(cls, ctx: FieldCtx, exps: Sequence[int],
                   roots: Optional[Sequence[FieldElem]] = None) -> "SplittingPoly":
        """Exponents listed against `roots` (default: display_roots order)."""
        roots = list(roots) if roots is not None else display_roots(ctx)
        if len(exps) > len(roots):
            raise ValueError(f"{len(exps)} exponents for {len(roots)} roots")
        return cls(ctx, dict(zip(roots, exps)))

    @property
    def degree(self) -> int:
        return sum(self.exps.values())

    @property
    def omega(self) -> int:
        return len(self.exps)

    def exponent(self, gamma: FieldElem) -> int:
        return self.exps.get(gamma, 0)

    def roots(self) -> List[FieldElem]:
        return sorted(self.exps, key=lambda g: g.display_key)

    def items(self) -> List[Tuple[FieldElem, int]]:
        return [(g, self.exps[g]) for g in self.roots()]

    def as_tuple(self, roots: Optional[Sequence[FieldElem]] = None) -> Tuple[int, ...]:
        roots = roots if roots is not None else display_roots(self.ctx)
        return tuple(self.exponent(g) for g in roots)

    def is_constant(self) -> bool:
        return not self.exps

    def restrict(self, roots: Iterable[FieldElem]) -> "SplittingPoly":
        return SplittingPoly(self.ctx, {g: self.exps[g] for g in roots if g in self.exps})

    def is_coprime(self, other: "SplittingPoly") -> bool:
        return not (self.exps.keys() & other.exps.keys())

    def __mul__(self, other: "SplittingPoly") -> "SplittingPoly":
        if other.ctx != self.ctx:
            raise FieldMismatchError(f"cannot multiply over {self.ctx.label} and {other.ctx.label}")
        merged = dict(self.exps)
        for g, e in other.exps.items():
            merged[g] = merged.get(g, 0) + e
        return SplittingPoly(self.ctx, merged)

    def expand(self) -> Poly:
        result = Poly.one(self.ctx)
        for gamma, e in self.items():
            result = result * Poly.linear(gamma) ** e
        return result

    def to_factored(self) -> "FactoredPoly":
        return FactoredPoly._trusted(self.ctx, [(Poly.linear(g), e) for g, e in self.items()])

    def __eq__(self, other) -> bool:
        if not isinstance(other, SplittingPoly):
            return NotImplemented
        return self.ctx == other.ctx and self.exps == other.exps

    def __hash__(self) -> int:
        return hash((self.ctx, frozenset(self.exps.items())))

    def __str__(self) -> str:
        return format_factor_list(self.ctx, self.items())

    def __repr__(self) -> str:
        return f"SplittingPoly({self}, {self.ctx.label})"


def _base_key(base: Poly) -> Tuple:
    # linear bases x - g go by g, as in format_factored
    if base.degree == 1:
        return (2, ((-base.coeffs[0]).display_key,))
    return (len(base.coeffs), tuple(c.display_key for c in reversed(base.coeffs)))


class FactoredPoly:
    """prod base^e with pairwise distinct monic irreducible bases."""

    __slots__ = ("ctx", "factors")

    def __init__(self, ctx: FieldCtx, factors: Iterable[Tuple[Poly, int]]):
        seen = set()
        checked = []
        for base, e in factors:
            if base.ctx != ctx:
                raise FieldMismatchError(f"factor {base} is not over {ctx.label}")
            if e < 0:
                raise ValueError(f"negative exponent on {base}")
            if not e:
                continue
            if not base.is_monic() or not poly_is_irreducible(base):
                raise ValueError(f"{base} is not a monic irreducible polynomial over {ctx.label}")
            if base in seen:
                raise ValueError(f"repeated factor {base}")
            seen.add(base)
            checked.append((base, e))
        self.ctx = ctx
        self.factors = tuple(sorted(checked, key=lambda f: _base_key(f[0])))

    @classmethod
    def _trusted(cls, ctx: FieldCtx, factors: Iterable[Tuple[Poly, int]]) -> "FactoredPoly":
        obj = object.__new__(cls)
        obj.ctx = ctx
        obj.factors = tuple(sorted(((b, e) for b, e in factors if e), key=lambda f: _base_key(f[0])))
        return obj

    @classmethod
    def one(cls, ctx: FieldCtx) -> "FactoredPoly":
        return cls._trusted(ctx, ())

    @property
    def degree(self) -> int:
        return sum(int(b.degree) * e for b, e in self.factors)

    @property
    def omega(self) -> int:
        return len(self.factors)

    def is_one(self) -> bool:
        return not self.factors

    def exponent(self, base: Poly) -> int:
        for b, e in self.factors:
            if b == base:
                return e
        return 0

    def divisor_count(self) -> int:
        return prod(e + 1 for _, e in self.factors)

    def is_splitting(self) -> bool:
        return all(b.degree == 1 for b, _ in self.factors)

    def to_splitting(self) -> SplittingPoly:
        if not self.is_splitting():
            raise ValueError("polynomial has a non-linear irreducible factor")
        return SplittingPoly(self.ctx, {-b.coeffs[0]: e for b, e in self.factors})

    def expand(self) -> Poly:
        result = Poly.one(self.ctx)
        for base, e in self.factors:
            result = result * base ** e
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, FactoredPoly):
            return NotImplemented
        return self.ctx == other.ctx and self.factors == other.factors

    def __hash__(self) -> int:
        return hash((self.ctx, self.factors))

    def __str__(self) -> str:
        if self.is_one():
            return "1"
        parts = []
        for base, e in self.factors:
            if base.degree == 1:
                parts.append(format_factor_list(self.ctx, [(-base.coeffs[0], e)]))
            else:
                parts.append(f"({base})^{e}")
        return "*".join(parts)

    def __repr__(self) -> str:
        return f"FactoredPoly({self}, {self.ctx.label})"


def as_factored(A: Union[FactoredPoly, SplittingPoly]) -> FactoredPoly:
    return A.to_factored() if isinstance(A, SplittingPoly) else A


def sigma_pp(T: Poly, a: int) -> Poly:
    """1 + T + ... + T^a."""
    if a < 0:
        raise ValueError("exponent must be non-negative")
    one = Poly.one(T.ctx)
    acc = one
    for _ in range(a):
        acc = acc * T + one
    return acc


def sigma_star_pp(T: Poly, a: int) -> Poly:
    if a < 0:
        raise ValueError("exponent must be non-negative")
    one = Poly.one(T.ctx)
    return one if a == 0 else one + T ** a


def sigma_star2_pp(T: Poly, a: int) -> Poly:
    """sigma**(T^a): sigma for odd a, (1 + T^(n+1)) sigma(T^(n-1)) for a = 2n >= 2."""
    if a < 0:
        raise ValueError("exponent must be non-negative")
    if a == 0:
        return Poly.one(T.ctx)
    if a % 2:
        return sigma_pp(T, a)
    n = a // 2
    return (Poly.one(T.ctx) + T ** (n + 1)) * sigma_pp(T, n - 1)


class SigmaKind(str, Enum):
    SIGMA = "s"
    UNITARY = "s1"
    BIUNITARY = "s2"

    @property
    def per_prime_power(self):
        return {
            SigmaKind.SIGMA: sigma_pp,
            SigmaKind.UNITARY: sigma_star_pp,
            SigmaKind.BIUNITARY: sigma_star2_pp,
        }[self]

    @property
    def symbol(self) -> str:
        return {SigmaKind.SIGMA: "sigma", SigmaKind.UNITARY: "sigma*", SigmaKind.BIUNITARY: "sigma**"}[self]


def sigma_map(A: Union[FactoredPoly, SplittingPoly], which: Union[SigmaKind, str]) -> Poly:
    """Multiplicative extension of the chosen per-prime-power divisor sum."""
    which = SigmaKind(which)
    A = as_factored(A)
    pp = which.per_prime_power
    result = Poly.one(A.ctx)
    for base, e in A.factors:
        result = result * pp(base, e)
    return result


def gcd_u(S: FactoredPoly, T: FactoredPoly) -> FactoredPoly:
    """Greatest common unitary divisor: common bases carrying equal exponents."""
    if S.ctx != T.ctx:
        raise FieldMismatchError(f"cannot compare {S.ctx.label} and {T.ctx.label}")
    other = dict(T.factors)
    return FactoredPoly._trusted(S.ctx, [(b, e) for b, e in S.factors if other.get(b) == e])


def brute_sigma_star2(S: Union[FactoredPoly, SplittingPoly], degree_cap: int = DEFAULT_DEGREE_CAP,
                      divisor_cap: int = DEFAULT_DIVISOR_CAP) -> Poly:
    """sigma**(S) as the sum of every monic D | S with gcd_u(D, S/D) = 1.

    Walks exponent tuples depth first; the powers of the last base that qualify
    under a fixed prefix are summed before multiplying by the prefix product.
    """
    S = as_factored(S)
    if S.degree > degree_cap:
        raise DegreeCapExceeded(f"degree {S.degree} exceeds the oracle cap {degree_cap}")
    if S.divisor_count() > divisor_cap:
        raise DegreeCapExceeded(f"{S.divisor_count()} divisors exceed the oracle cap {divisor_cap}")
    ctx = S.ctx
    if S.is_one():
        return Poly.one(ctx)

    bases = [b for b, _ in S.factors]
    exps = [e for _, e in S.factors]
    powers = []
    for base, e in S.factors:
        row = [Poly.one(ctx)]
        for _ in range(e):
            row.append(row[-1] * base)
        powers.append(row)

    last = len(bases) - 1
    total = Poly.zero(ctx)
    chosen: List[int] = [0] * len(bases)

    def is_biunitary() -> bool:
        divisor = FactoredPoly._trusted(ctx, zip(bases, chosen))
        cofactor = FactoredPoly._trusted(ctx, ((b, e - d) for b, e, d in zip(bases, exps, chosen)))
        return gcd_u(divisor, cofactor).is_one()

    def walk(idx: int, prefix: Poly) -> None:
        nonlocal total
        if idx == last:
            block = Poly.zero(ctx)
            for d in range(exps[idx] + 1):
                chosen[idx] = d
                if is_biunitary():
                    block = block + powers[idx][d]
            chosen[idx] = 0
            if not block.is_zero():
                total = total + prefix * block
            return
        for d in range(exps[idx] + 1):
            chosen[idx] = d
            walk(idx + 1, prefix * powers[idx][d])
        chosen[idx] = 0

    logger.debug(f"Brute-force sigma** over {S.divisor_count()} divisors of {S}")
    walk(0, Poly.one(ctx))
    return total
