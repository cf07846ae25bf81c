"""(x^q - x)^(2r) over F_q, q = p^2: b.u.p. exactly when r lies in Omega."""
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from algebra.bup import bup_by_expansion, is_bup
from algebra.divfun import (
    DEFAULT_DEGREE_CAP,
    DEFAULT_DIVISOR_CAP,
    SplittingPoly,
    brute_sigma_star2,
    display_roots,
)
from algebra.field import FieldExt, build_field
from algebra.omega import omega_class, omega_sets
from utils.logger import logger


@dataclass
class SplitbupRow:
    r: int
    bup: bool
    in_omega: bool
    omega_class: Optional[int]
    checks: List[str]

    @property
    def agrees(self) -> bool:
        return self.bup == self.in_omega

    def to_dict(self) -> Dict:
        return {
            "r": self.r,
            "bup": self.bup,
            "in_omega": self.in_omega,
            "omega_class": self.omega_class,
            "checks": self.checks,
        }


@dataclass
class SplitbupReport:
    p: int
    r_max: int
    omega: List[int]
    rows: List[SplitbupRow]
    elapsed_seconds: float = 0.0
    counterexamples: List[int] = field(default_factory=list)

    @property
    def bup_values(self) -> List[int]:
        return [row.r for row in self.rows if row.bup]

    def to_dict(self) -> Dict:
        return {
            "schema": 1,
            "field": f"F{self.p * self.p}",
            "bounds": {"r_max": self.r_max},
            "omega": self.omega,
            "bup_values": self.bup_values,
            "counterexamples": self.counterexamples,
            "rows": [row.to_dict() for row in self.rows],
            "elapsed_seconds": round(self.elapsed_seconds, 3),
        }

    def to_text(self) -> str:
        lines = [
            f"(x^{self.p * self.p}-x)^(2r) over F{self.p * self.p}, r <= {self.r_max}",
            f"Omega = {self.omega}",
            f"b.u.p. for r in {self.bup_values}",
        ]
        for row in self.rows:
            mark = "ok" if row.agrees else "MISMATCH"
            lines.append(
                f"r={row.r:<3} bup={str(row.bup).lower():<5} omega_class={row.omega_class or '-'} "
                f"checks={'+'.join(row.checks)} {mark}"
            )
        lines.append("no counterexamples" if not self.counterexamples else f"counterexamples: {self.counterexamples}")
        return "\n".join(lines)


def verify_splitbup(p: int, r_max: int, degree_cap: int = DEFAULT_DEGREE_CAP,
                    divisor_cap: int = DEFAULT_DIVISOR_CAP) -> SplitbupReport:
    """Root-multiplicity test for every r <= r_max, confirmed by expansion on hits and by
    the brute-force oracle wherever it fits inside both caps."""
    if r_max < 1:
        raise ValueError("r_max must be at least 1")
    sets = omega_sets(p)
    ctx = build_field(p, FieldExt.QUADRATIC)
    roots = display_roots(ctx)
    started = time.perf_counter()
    logger.info(f"Verifying (x^q-x)^(2r) over {ctx.label} for r <= {r_max}")

    rows: List[SplitbupRow] = []
    counterexamples: List[int] = []
    for r in range(1, r_max + 1):
        A = SplittingPoly(ctx, {g: 2 * r for g in roots})
        bup = is_bup(A)
        checks = ["roots"]
        if bup:
            if not bup_by_expansion(A):
                logger.warning(f"r={r}: root test and expanded sigma** disagree")
                bup = False
            checks.append("expansion")
        if A.degree <= degree_cap and (2 * r + 1) ** len(roots) <= divisor_cap:
            brute = brute_sigma_star2(A, degree_cap, divisor_cap) == A.expand()
            if brute != bup:
                logger.warning(f"r={r}: brute-force oracle disagrees with the root test")
                bup = brute
            checks.append("brute")
        row = SplitbupRow(r, bup, r in sets.union, omega_class(r, p), checks)
        if not row.agrees:
            counterexamples.append(r)
        rows.append(row)

    elapsed = time.perf_counter() - started
    logger.info(f"Found b.u.p. for r in {[row.r for row in rows if row.bup]} in {elapsed:.2f}s")
    return SplitbupReport(p, r_max, sorted(sets.union), rows, elapsed, counterexamples)
