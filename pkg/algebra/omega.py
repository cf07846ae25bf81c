"""Admissible exponents: the sets Omega_1..Omega_4, unit root sets and split classifiers.

All root vectors are returned for T = x - gamma: a root rho of sigma**(T^e)
in T is the root gamma + rho in x.
"""
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Tuple

from sympy import divisors, isprime

from algebra.divfun import SplittingPoly, sigma_star2_pp
from algebra.errors import InvariantViolation, NonSplitExponentError
from algebra.field import FieldCtx, FieldElem, enumerate_field
from algebra.poly import Poly, split_off_roots
from utils.logger import logger

RootVector = Tuple[Tuple[FieldElem, int], ...]


class SplitClass(str, Enum):
    SPLITS = "splits"
    NON_SPLIT = "non-split"


@dataclass(frozen=True)
class OmegaSets:
    p: int
    omega1: FrozenSet[int]
    omega2: FrozenSet[int]
    omega3: FrozenSet[int]
    omega4: FrozenSet[int]

    @property
    def union(self) -> FrozenSet[int]:
        return self.omega1 | self.omega2 | self.omega3 | self.omega4

    def parts(self) -> Tuple[FrozenSet[int], ...]:
        return (self.omega1, self.omega2, self.omega3, self.omega4)

    def to_dict(self) -> Dict[str, List[int]]:
        return {
            "p": self.p,
            "omega1": sorted(self.omega1),
            "omega2": sorted(self.omega2),
            "omega3": sorted(self.omega3),
            "omega4": sorted(self.omega4),
            "omega": sorted(self.union),
        }


@dataclass(frozen=True)
class RootSets:
    """zetas: N-th roots of 1 other than 1; betas: (N+1)-th roots of -1."""

    N: int
    zetas: Tuple[FieldElem, ...]
    betas: Tuple[FieldElem, ...]


def _check_odd_prime(p: int) -> None:
    if not isinstance(p, int) or not isprime(p):
        raise ValueError(f"{p!r} is not prime")
    if p == 2:
        raise ValueError("p = 2 has no Omega sets; use the F4 classifier")


def raw_omega_sets(p: int) -> Tuple[FrozenSet[int], FrozenSet[int], FrozenSet[int]]:
    """Omega_2, Omega_3, Omega_4 straight from their defining divisibility conditions."""
    _check_odd_prime(p)
    order = p * p - 1
    divs = divisors(order)
    omega2 = frozenset(p * n for n in divs if order % (2 * p * n + 2) == 0)
    omega3 = frozenset(
        n for n in divs if (2 * n + 2) % p == 0 and order % ((2 * n + 2) // p) == 0
    )
    omega4 = frozenset(
        n for n in divs if (2 * n + 2) % (p * p) == 0 and order % ((2 * n + 2) // (p * p)) == 0
    )
    return omega2, omega3, omega4


@lru_cache(maxsize=None)
def omega_sets(p: int) -> OmegaSets:
    _check_odd_prime(p)
    order = p * p - 1
    omega1 = frozenset(n for n in divisors(order) if order % (2 * n + 2) == 0)
    raw = raw_omega_sets(p)
    expected = (frozenset({p}), frozenset({p - 1}), frozenset({order}))
    if raw != expected:
        raise InvariantViolation(
            f"Omega_2..Omega_4 for p={p} enumerate to {[sorted(s) for s in raw]}, "
            f"expected {[sorted(s) for s in expected]}"
        )
    logger.debug(f"Omega sets for p={p}: omega1={sorted(omega1)}")
    return OmegaSets(p, omega1, *expected)


def omega_class(k: int, p: int) -> Optional[int]:
    """Index i of the Omega_i holding the half-exponent k, or None."""
    for index, part in enumerate(omega_sets(p).parts(), start=1):
        if k in part:
            return index
    return None


def _strip_prime(m: int, p: int) -> Tuple[int, int]:
    """m = N * p^n with p not dividing N."""
    n = 0
    while m % p == 0:
        m //= p
        n += 1
    return m, n


def split_class_f4(e: int) -> SplitClass:
    if e < 0:
        raise ValueError("exponent must be non-negative")
    if e % 2 == 0:
        return SplitClass.SPLITS if e in (0, 2, 4, 6) else SplitClass.NON_SPLIT
    N, _ = _strip_prime(e + 1, 2)
    return SplitClass.SPLITS if N in (1, 3) else SplitClass.NON_SPLIT


def split_class_gen(e: int, p: int) -> SplitClass:
    if e < 0:
        raise ValueError("exponent must be non-negative")
    _check_odd_prime(p)
    if e % 2:
        N, _ = _strip_prime(e + 1, p)
        return SplitClass.SPLITS if (p * p - 1) % N == 0 else SplitClass.NON_SPLIT
    k = e // 2
    return SplitClass.SPLITS if k == 0 or k in omega_sets(p).union else SplitClass.NON_SPLIT


@lru_cache(maxsize=None)
def _split_class_direct(ctx: FieldCtx, e: int) -> SplitClass:
    _, rest = split_off_roots(sigma_star2_pp(Poly.x(ctx), e))
    return SplitClass.SPLITS if rest.degree == 0 else SplitClass.NON_SPLIT


def split_class(ctx: FieldCtx, e: int) -> SplitClass:
    """Does sigma**((x - g)^e) split over ctx?"""
    if ctx.is_quadratic:
        return split_class_f4(e) if ctx.p == 2 else split_class_gen(e, ctx.p)
    if e < 0:
        raise ValueError("exponent must be non-negative")
    return _split_class_direct(ctx, e)


def unity_roots(N: int, ctx: FieldCtx) -> Tuple[FieldElem, ...]:
    """The N-th roots of 1 in ctx other than 1, in enumeration order."""
    return tuple(z for z in enumerate_field(ctx) if z and not z.is_one() and (z ** N).is_one())


def neg_unity_roots(M: int, ctx: FieldCtx) -> Tuple[FieldElem, ...]:
    """The M-th roots of -1 in ctx; x^M + 1 must split into distinct roots."""
    minus_one = -ctx.one
    found = tuple(b for b in enumerate_field(ctx) if b and b ** M == minus_one)
    if len(found) != M:
        raise ValueError(f"x^{M}+1 has {len(found)} roots in {ctx.label}, not {M}")
    return found


def root_sets(N: int, ctx: FieldCtx) -> RootSets:
    if (ctx.q - 1) % N:
        raise ValueError(f"{N} does not divide {ctx.q - 1}")
    zetas = unity_roots(N, ctx)
    if len(zetas) != N - 1:
        raise InvariantViolation(f"found {len(zetas)} non-trivial {N}-th roots of 1 in {ctx.label}")
    return RootSets(N, zetas, neg_unity_roots(N + 1, ctx))


def _sigma_vector(ctx: FieldCtx, e: int) -> Optional[Counter]:
    """sigma(T^e) = (T^N - 1)^(p^n) / (T - 1) for e + 1 = N p^n."""
    N, n = _strip_prime(e + 1, ctx.p)
    if (ctx.q - 1) % N:
        return None
    power = ctx.p ** n
    vector = Counter({z: power for z in unity_roots(N, ctx)})
    if power > 1:
        vector[ctx.one] = power - 1
    return vector


def _f4_even_vector(ctx: FieldCtx, e: int) -> Counter:
    one, alpha = ctx.one, ctx.alpha
    beta = alpha + one
    return {
        2: Counter({one: 2}),
        4: Counter({one: 2, alpha: 1, beta: 1}),
        6: Counter({one: 4, alpha: 1, beta: 1}),
    }[e]


def _odd_quadratic_even_vector(ctx: FieldCtx, k: int) -> Counter:
    p, q = ctx.p, ctx.q
    one = ctx.one
    minus_one = -one
    cls = omega_class(k, p)
    if cls == 1:
        sets = root_sets(k, ctx)
        return Counter(sets.zetas) + Counter(sets.betas)
    if cls == 2:
        vector = Counter(neg_unity_roots(p + 1, ctx))
        vector[one] += p - 1
        return vector
    if cls == 3:
        vector = Counter({ctx.elem(l): 1 for l in range(2, p - 1)})
        vector[minus_one] += p + 1
        return vector
    vector = Counter({z: 1 for z in enumerate_field(ctx) if z and z != one and z != minus_one})
    vector[minus_one] += q + 1
    return vector


@lru_cache(maxsize=None)
def sigma_star2_vector(ctx: FieldCtx, e: int) -> RootVector:
    """Roots of sigma**(T^e) in T with multiplicities, display order."""
    if e < 0:
        raise ValueError("exponent must be non-negative")
    if e == 0:
        return ()
    if split_class(ctx, e) is SplitClass.NON_SPLIT:
        raise NonSplitExponentError(f"sigma**(T^{e}) does not split over {ctx.label}")
    if e % 2:
        vector = _sigma_vector(ctx, e)
    elif ctx.is_quadratic and ctx.p == 2:
        vector = _f4_even_vector(ctx, e)
    elif ctx.is_quadratic:
        vector = _odd_quadratic_even_vector(ctx, e // 2)
    else:
        vector = Counter(split_off_roots(sigma_star2_pp(Poly.x(ctx), e))[0])
    if vector is None or sum(vector.values()) != e:
        raise InvariantViolation(f"closed form for sigma**(T^{e}) over {ctx.label} has the wrong degree")
    return tuple(sorted(vector.items(), key=lambda item: item[0].display_key))


@lru_cache(maxsize=None)
def sigma_vector(ctx: FieldCtx, e: int) -> Optional[RootVector]:
    """Roots of sigma(T^e) in T, or None when it does not split."""
    if e < 0:
        raise ValueError("exponent must be non-negative")
    if e == 0:
        return ()
    vector = _sigma_vector(ctx, e)
    if vector is None:
        return None
    return tuple(sorted(vector.items(), key=lambda item: item[0].display_key))


def _shifted(ctx: FieldCtx, vector: RootVector, gamma: FieldElem) -> SplittingPoly:
    return SplittingPoly(ctx, {gamma + rho: m for rho, m in vector})


def sigma_star2_roots(ctx: FieldCtx, e: int, gamma: Optional[FieldElem] = None) -> SplittingPoly:
    """sigma**((x - gamma)^e) as a root map."""
    return _shifted(ctx, sigma_star2_vector(ctx, e), gamma if gamma is not None else ctx.zero)


def sigma_roots(ctx: FieldCtx, e: int, gamma: Optional[FieldElem] = None) -> Optional[SplittingPoly]:
    """sigma((x - gamma)^e) as a root map, None when it does not split."""
    vector = sigma_vector(ctx, e)
    if vector is None:
        return None
    return _shifted(ctx, vector, gamma if gamma is not None else ctx.zero)


def contributing_shifts(ctx: FieldCtx, gamma: FieldElem, e: int) -> List[FieldElem]:
    """Every delta, with multiplicity, such that (x - gamma) divides sigma**((x - delta)^e).

    Over F_{p^2} with p odd and e even, the shifts come out grouped as the
    unity part followed by the -1 part: gamma - zeta then gamma - beta for
    Omega_1, (gamma - 1) repeated p - 1 times then gamma - beta for Omega_2,
    gamma - l for l = 2..p-1 then (gamma + 1) repeated p times for Omega_3,
    and the same over all of F_q* for Omega_4.
    """
    if split_class(ctx, e) is SplitClass.NON_SPLIT:
        raise NonSplitExponentError(f"sigma**(T^{e}) does not split over {ctx.label}")
    if e == 0:
        return []
    if ctx.is_quadratic and ctx.p != 2 and e % 2 == 0:
        p, q = ctx.p, ctx.q
        k = e // 2
        one = ctx.one
        cls = omega_class(k, p)
        if cls == 1:
            sets = root_sets(k, ctx)
            return [gamma - z for z in sets.zetas] + [gamma - b for b in sets.betas]
        if cls == 2:
            return [gamma - one] * (p - 1) + [gamma - b for b in neg_unity_roots(p + 1, ctx)]
        if cls == 3:
            return [gamma - ctx.elem(l) for l in range(2, p)] + [gamma + one] * p
        return [gamma - z for z in enumerate_field(ctx) if z and z != one] + [gamma + one] * q
    shifts = []
    for rho, m in sigma_star2_vector(ctx, e):
        shifts.extend([gamma - rho] * m)
    return shifts
