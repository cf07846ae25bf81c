"""(x^p - x)^r over the prime field F_p by brute-force sigma**, against conditions i-iv."""
import time
from dataclasses import dataclass
from typing import Dict, List

from algebra.bup import beard_conditions
from algebra.divfun import (
    DEFAULT_DEGREE_CAP,
    DEFAULT_DIVISOR_CAP,
    SplittingPoly,
    brute_sigma_star2,
    display_roots,
)
from algebra.errors import DegreeCapExceeded
from algebra.field import FieldExt, build_field
from utils.logger import logger


@dataclass
class BeardRow:
    r: int
    bup: bool
    conditions: List[str]

    def to_dict(self) -> Dict:
        return {"r": self.r, "bup": self.bup, "conditions": self.conditions}


@dataclass
class BeardReport:
    p: int
    r_max: int
    rows: List[BeardRow]
    elapsed_seconds: float = 0.0

    @property
    def bup_values(self) -> List[int]:
        return [row.r for row in self.rows if row.bup]

    @property
    def candidate_values(self) -> List[int]:
        return [row.r for row in self.rows if row.conditions]

    @property
    def violations(self) -> List[int]:
        """b.u.p. exponents meeting none of the conditions."""
        return [row.r for row in self.rows if row.bup and not row.conditions]

    def to_dict(self) -> Dict:
        return {
            "schema": 1,
            "field": f"F{self.p}",
            "bounds": {"r_max": self.r_max},
            "bup_values": self.bup_values,
            "candidate_values": self.candidate_values,
            "violations": self.violations,
            "exact": self.bup_values == self.candidate_values,
            "rows": [row.to_dict() for row in self.rows],
            "elapsed_seconds": round(self.elapsed_seconds, 3),
        }

    def to_text(self) -> str:
        lines = [
            f"(x^{self.p}-x)^r over F{self.p}, r <= {self.r_max}",
            f"b.u.p. for r in {self.bup_values}",
            f"conditions i-iv allow r in {self.candidate_values}",
        ]
        for row in self.rows:
            lines.append(
                f"r={row.r:<3} bup={str(row.bup).lower():<5} conditions={','.join(row.conditions) or '-'}"
            )
        lines.append("no violations" if not self.violations else f"violations: {self.violations}")
        return "\n".join(lines)


def verify_beard_fp(p: int, r_max: int, degree_cap: int = DEFAULT_DEGREE_CAP,
                    divisor_cap: int = DEFAULT_DIVISOR_CAP) -> BeardReport:
    if r_max < 1:
        raise ValueError("r_max must be at least 1")
    if p == 2:
        raise ValueError("the conditions are stated for odd p")
    ctx = build_field(p, FieldExt.PRIME)
    if p * r_max > degree_cap:
        raise DegreeCapExceeded(f"degree {p * r_max} of (x^{p}-x)^{r_max} exceeds the cap {degree_cap}")
    if (r_max + 1) ** p > divisor_cap:
        raise DegreeCapExceeded(f"{(r_max + 1) ** p} divisors of (x^{p}-x)^{r_max} exceed the cap {divisor_cap}")

    roots = display_roots(ctx)
    started = time.perf_counter()
    logger.info(f"Brute-force sigma** of (x^{p}-x)^r over {ctx.label} for r <= {r_max}")
    rows = []
    for r in range(1, r_max + 1):
        A = SplittingPoly(ctx, {g: r for g in roots})
        bup = brute_sigma_star2(A, degree_cap, divisor_cap) == A.expand()
        rows.append(BeardRow(r, bup, beard_conditions(p, r)))
        logger.debug(f"r={r}: bup={bup}")

    elapsed = time.perf_counter() - started
    report = BeardReport(p, r_max, rows, elapsed)
    logger.info(f"Found b.u.p. for r in {report.bup_values} in {elapsed:.2f}s")
    return report
