"""Perfection predicates and decomposition of splitting polynomials."""
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from algebra.divfun import SigmaKind, SplittingPoly, sigma_map
from algebra.errors import FieldMismatchError
from algebra.field import FieldElem
from algebra.omega import (
    RootVector,
    SplitClass,
    sigma_star2_vector,
    sigma_vector,
    split_class,
)

SIGMA_LABEL = "member-of-Sigma"


class BupKind(str, Enum):
    NOT_BUP = "not-bup"
    TRIVIAL = "trivial-bup"
    INDECOMPOSABLE = "indecomposable-bup"


@dataclass(frozen=True)
class BupClass:
    kind: BupKind
    decomposition: Optional[Tuple[SplittingPoly, ...]] = None
    sigma_member: bool = False

    @property
    def is_bup(self) -> bool:
        return self.kind is not BupKind.NOT_BUP

    @property
    def label(self) -> str:
        return SIGMA_LABEL if self.sigma_member else self.kind.value

    def to_dict(self) -> Dict:
        data = {"class": self.label, "kind": self.kind.value, "bup": self.is_bup}
        if self.decomposition is not None:
            data["decomposition"] = [str(part) for part in self.decomposition]
        return data


def _require_nonconstant(A: SplittingPoly) -> None:
    if A.is_constant():
        raise ValueError("perfection is only defined here for nonconstant polynomials")


def _image_roots(A: SplittingPoly, vector_of: Callable[[int], Optional[RootVector]]) -> Optional[Counter]:
    """Root multiplicities of f(A) from per-root vectors; None if some factor does not split."""
    image: Counter = Counter()
    for gamma, e in A.exps.items():
        vector = vector_of(e)
        if vector is None:
            return None
        for rho, m in vector:
            image[gamma + rho] += m
    return image


def is_bup(A: SplittingPoly) -> bool:
    """sigma**(A) == A, compared root by root."""
    _require_nonconstant(A)
    ctx = A.ctx
    if any(split_class(ctx, e) is SplitClass.NON_SPLIT for e in A.exps.values()):
        return False
    return _image_roots(A, lambda e: sigma_star2_vector(ctx, e)) == Counter(A.exps)


def is_perfect(A: SplittingPoly) -> bool:
    _require_nonconstant(A)
    return _image_roots(A, lambda e: sigma_vector(A.ctx, e)) == Counter(A.exps)


def is_unitary_perfect(A: SplittingPoly) -> bool:
    _require_nonconstant(A)
    return sigma_map(A, SigmaKind.UNITARY) == A.expand()


def bup_by_expansion(A: SplittingPoly) -> bool:
    """sigma**(expand A) == expand A on expanded polynomials."""
    return sigma_map(A, SigmaKind.BIUNITARY) == A.expand()


def contribution_components(A: SplittingPoly) -> List[List[FieldElem]]:
    """Connected components of the graph joining g to every root of sigma**((x - g)^e_g).

    Only meaningful for b.u.p. A, where every such root is again a root of A.
    """
    ctx = A.ctx
    parent = {g: g for g in A.exps}

    def find(g):
        while parent[g] != g:
            parent[g] = parent[parent[g]]
            g = parent[g]
        return g

    for gamma, e in A.exps.items():
        for rho, _ in sigma_star2_vector(ctx, e):
            delta = gamma + rho
            if delta in parent:
                parent[find(delta)] = find(gamma)

    groups: Dict[FieldElem, List[FieldElem]] = {}
    for g in A.roots():
        groups.setdefault(find(g), []).append(g)
    return sorted(groups.values(), key=lambda roots: roots[0].display_key)


def classify_bup(A: SplittingPoly) -> BupClass:
    if not is_bup(A):
        return BupClass(BupKind.NOT_BUP)
    member = in_sigma_catalog(A)
    components = contribution_components(A)
    if len(components) >= 2:
        parts = tuple(A.restrict(roots) for roots in components)
        return BupClass(BupKind.TRIVIAL, parts, member)
    return BupClass(BupKind.INDECOMPOSABLE, None, member)


def translate(A: SplittingPoly, t: FieldElem) -> SplittingPoly:
    """A(x + t): the exponent of g moves to g - t."""
    if t.ctx != A.ctx:
        raise FieldMismatchError(f"cannot translate a polynomial over {A.ctx.label} by {t!r}")
    return SplittingPoly(A.ctx, {g - t: e for g, e in A.exps.items()})


def in_t_set(r: int) -> bool:
    """r in {2} or r = 2^n - 1, n >= 1."""
    return r == 2 or (r >= 1 and (r + 1) & r == 0)


def in_sigma_catalog(A: SplittingPoly) -> bool:
    """(x^2+x)^r or (x^2+x+1)^r over F4, r in the exponent set above."""
    ctx = A.ctx
    if not (ctx.is_quadratic and ctx.p == 2) or A.omega != 2:
        return False
    (g1, e1), (g2, e2) = A.items()
    return (g1 - g2).is_one() and e1 == e2 and in_t_set(e1)


def _f4_sigma_type(e: int) -> Optional[Tuple[int, int]]:
    """(u, v): multiplicity of the partner root g+1 and of each of g+a, g+a+1 in sigma((x-g)^e)."""
    if e == 0:
        return (0, 0)
    m = e + 1
    n = 0
    while m % 2 == 0:
        m //= 2
        n += 1
    if m == 1:
        return (e, 0)
    if m == 3:
        return (2 ** n - 1, 2 ** n)
    return None


def perfect_family_f4(exps: Sequence[int]) -> bool:
    """Closed-form recogniser of perfect x^a (x+1)^b (x+a)^c (x+a+1)^d over F4.

    Roots pair up as {0, 1} and {a, a+1}. Each exponent e = u + 2v sends u to
    its partner and v to each root of the other pair, so a pair is consistent
    when both members receive the same total from it, and the polynomial is
    perfect when the two pairs send each other equal weight.
    """
    a, b, c, d = exps
    if not any(exps):
        return False
    types = [_f4_sigma_type(e) for e in exps]
    if None in types:
        return False
    (ua, va), (ub, vb), (uc, vc), (ud, vd) = types
    if a - ub != b - ua or c - ud != d - uc:
        return False
    return a - ub == vc + vd and c - ud == va + vb


def quoted_perfect_family_f4(exps: Sequence[int]) -> bool:
    """The three textbook families: (2^n-1, 2^n-1, 2^m-1, 2^m-1), four equal N*2^n - 1
    with N in {1, 3}, and (3*2^r - 1, 2*2^r - 1, 3*2^r - 1, 2*2^r - 1)."""
    h, k, l, t = exps
    if not any(exps):
        return False

    def mersenne(e: int) -> bool:
        return (e + 1) & e == 0

    if h == k and l == t and mersenne(h) and mersenne(l):
        return True
    if h == k == l == t and _f4_sigma_type(h) is not None:
        return True
    if h == l and k == t and h > 0:
        r_part = (h + 1) // 3
        return (h + 1) % 3 == 0 and r_part & (r_part - 1) == 0 and k == 2 * r_part - 1
    return False


def beard_conditions(p: int, r: int) -> List[str]:
    """Which of the necessary conditions i-iv for (x^p - x)^r b.u.p. over F_p hold."""
    held = []
    if r % 2:
        m = r + 1
        while m % p == 0:
            m //= p
        if (p - 1) % m == 0:
            held.append("i")
    if r == 2 * (p - 1):
        held.append("ii")
    if r % 2 == 0 and r > 0:
        N = r // 2
        if N % 2 == 0 and (p - 1) % (N * (N + 1)) == 0:
            held.append("iii")
        if p % 4 == 1 and N % 2 == 1 and (p - 1) % (2 * N * (N + 1)) == 0:
            held.append("iv")
    return held
