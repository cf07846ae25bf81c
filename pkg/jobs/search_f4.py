"""Exhaustive search of x^a (x+1)^b (x+a)^c (x+a+1)^d over F4.

Each admissible exponent gets a precomputed table: placed on root i it adds a
fixed integer vector to the root multiplicities of sigma**(A) (or sigma(A)).
A tuple is a hit when the summed vectors reproduce the tuple itself.
"""
import multiprocessing
import time
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from algebra.bup import BupClass, BupKind, bup_by_expansion, classify_bup, translate
from algebra.divfun import SigmaKind, SplittingPoly, display_roots, sigma_map
from algebra.errors import InvariantViolation, NonSplitExponentError
from algebra.field import FieldExt, build_field
from algebra.omega import sigma_star2_vector, sigma_vector
from utils.logger import logger

ROW_NAMES = ("a", "b", "c", "d")
Exps = Tuple[int, int, int, int]
Table = Dict[int, Tuple[Tuple[int, int, int, int], ...]]


class SearchFilter(str, Enum):
    ALL = "all"
    NOT_ALL_ODD = "not-all-odd"
    ALL_ODD = "all-odd"
    IBUP_ONLY = "ibup-only"


def parse_filters(spec: Union[str, Iterable[str], None]) -> FrozenSet[SearchFilter]:
    """'ibup-only,not-all-odd' -> {IBUP_ONLY, NOT_ALL_ODD}; 'all' is the empty restriction."""
    if spec is None:
        return frozenset()
    tokens = spec.split(",") if isinstance(spec, str) else list(spec)
    chosen = {SearchFilter(token.strip()) for token in tokens if token.strip()}
    chosen.discard(SearchFilter.ALL)
    if {SearchFilter.ALL_ODD, SearchFilter.NOT_ALL_ODD} <= chosen:
        raise ValueError("all-odd and not-all-odd exclude each other")
    return frozenset(chosen)


@dataclass(frozen=True)
class SearchHit:
    exps: Exps
    label: str
    kind: Optional[BupKind] = None
    decomposition: Optional[Tuple[str, ...]] = None

    def to_dict(self) -> Dict:
        data = {"exps": list(self.exps), "class": self.label}
        if self.decomposition is not None:
            data["decomposition"] = list(self.decomposition)
        return data


@dataclass
class SearchReport:
    function: str
    bound: int
    filters: List[str]
    hits: List[SearchHit]
    orbits: List[List[Exps]]
    elapsed_seconds: float
    field_label: str = "F4"
    candidates: int = 0
    counts: Dict[str, int] = field(default_factory=dict)

    def hit_set(self) -> set:
        return {hit.exps for hit in self.hits}

    def to_dict(self) -> Dict:
        return {
            "schema": 1,
            "field": self.field_label,
            "function": self.function,
            "bounds": {"max_exponent": self.bound},
            "filters": self.filters,
            "candidates": self.candidates,
            "hits": [hit.to_dict() for hit in self.hits],
            "counts": dict(sorted(self.counts.items())),
            "orbits": [[list(e) for e in orbit] for orbit in self.orbits],
            "elapsed_seconds": round(self.elapsed_seconds, 3),
        }

    def to_text(self, width: int = 16) -> str:
        """Hits as columns of a four-row table, `width` columns per block."""
        lines = [
            f"{self.function} search over {self.field_label}, exponents <= {self.bound}, "
            f"filters: {','.join(self.filters) or 'all'}",
            f"{len(self.hits)} hits among {self.candidates} candidate tuples",
        ]
        for start in range(0, len(self.hits), width):
            block = self.hits[start:start + width]
            lines.append("")
            for row, name in enumerate(ROW_NAMES):
                cells = " ".join(f"{hit.exps[row]:>3}" for hit in block)
                lines.append(f"{name} | {cells}")
        if self.counts:
            lines.append("")
            for label, count in sorted(self.counts.items()):
                lines.append(f"{label}: {count}")
        lines.append(f"translation orbits: {len(self.orbits)}")
        return "\n".join(lines)


def _build_tables(function: SigmaKind, bound: int) -> Tuple[List[int], Table]:
    """Admissible exponents and, per exponent, the vector it adds when placed on each root."""
    ctx = build_field(2, FieldExt.QUADRATIC)
    roots = display_roots(ctx)
    position = {g: i for i, g in enumerate(roots)}
    admissible: List[int] = []
    table: Table = {}
    for e in range(bound + 1):
        if function is SigmaKind.BIUNITARY:
            try:
                vector = sigma_star2_vector(ctx, e)
            except NonSplitExponentError:
                continue
        else:
            vector = sigma_vector(ctx, e)
            if vector is None:
                continue
        rows = []
        for gamma in roots:
            contribution = [0, 0, 0, 0]
            for rho, m in vector:
                contribution[position[gamma + rho]] += m
            rows.append(tuple(contribution))
        admissible.append(e)
        table[e] = tuple(rows)
    return admissible, table


def scan_partition(args) -> List[Exps]:
    """All hits whose exponent of x equals the partition's leading exponent."""
    a, admissible, table = args
    hits = []
    ta = table[a][0]
    for b in admissible:
        tb = table[b][1]
        ab = (ta[0] + tb[0], ta[1] + tb[1], ta[2] + tb[2], ta[3] + tb[3])
        if ab[0] > a or ab[1] > b:
            continue
        for c in admissible:
            tc = table[c][2]
            abc = (ab[0] + tc[0], ab[1] + tc[1], ab[2] + tc[2], ab[3] + tc[3])
            if abc[0] > a or abc[1] > b or abc[2] > c:
                continue
            for d in admissible:
                td = table[d][3]
                if (abc[0] + td[0] == a and abc[1] + td[1] == b
                        and abc[2] + td[2] == c and abc[3] + td[3] == d):
                    if a or b or c or d:
                        hits.append((a, b, c, d))
    return hits


def _passes(exps: Exps, filters: FrozenSet[SearchFilter]) -> bool:
    present = [e for e in exps if e]
    if SearchFilter.ALL_ODD in filters and any(e % 2 == 0 for e in present):
        return False
    if SearchFilter.NOT_ALL_ODD in filters:
        if all(e % 2 for e in present) or exps[0] % 2:
            return False
    return True


def translation_orbits(hits: Sequence[Exps]) -> List[List[Exps]]:
    """Group tuples under x -> x + t, t in F4; each orbit sorted, orbits by first member."""
    ctx = build_field(2, FieldExt.QUADRATIC)
    roots = display_roots(ctx)
    remaining = set(hits)
    orbits = []
    for exps in sorted(hits):
        if exps not in remaining:
            continue
        A = SplittingPoly.from_tuple(ctx, exps, roots)
        orbit = {translate(A, t).as_tuple(roots) for t in roots}
        members = sorted(orbit & remaining)
        remaining -= orbit
        orbits.append(members)
    return orbits


def _run_partitions(partitions: List[tuple], workers: int) -> List[List[Exps]]:
    if workers <= 1:
        return [scan_partition(args) for args in partitions]
    try:
        with multiprocessing.Pool(workers) as pool:
            return pool.map(scan_partition, partitions)
    except Exception as e:
        logger.error(f"Parallel scan failed: {e}", exc_info=True)
        raise


def search_f4(bound: int = 23, filters: Union[str, Iterable[str], None] = None,
              workers: int = 1, function: Union[SigmaKind, str] = SigmaKind.BIUNITARY) -> SearchReport:
    """Every hit with exponents in [0, bound], classified and filtered, sorted by tuple."""
    if bound < 1:
        raise ValueError("search bound must be at least 1")
    if workers < 1:
        raise ValueError("workers must be positive")
    function = SigmaKind(function)
    if function is SigmaKind.UNITARY:
        raise ValueError("the F4 search covers sigma and sigma** only")
    chosen = parse_filters(filters)
    if SearchFilter.IBUP_ONLY in chosen and function is not SigmaKind.BIUNITARY:
        raise ValueError("ibup-only applies to the sigma** search")

    started = time.perf_counter()
    logger.info(f"Starting {function.symbol} search over F4 with exponents <= {bound}")
    admissible, table = _build_tables(function, bound)
    partitions = [(a, admissible, table) for a in admissible]
    logger.info(f"{len(admissible)} admissible exponents, {len(partitions)} partitions, {workers} worker(s)")

    raw_hits: List[Exps] = []
    for part in _run_partitions(partitions, workers):
        raw_hits.extend(part)
    raw_hits.sort()
    logger.info(f"Scan found {len(raw_hits)} raw hits")

    ctx = build_field(2, FieldExt.QUADRATIC)
    roots = display_roots(ctx)
    hits: List[SearchHit] = []
    for exps in raw_hits:
        if not _passes(exps, chosen):
            continue
        A = SplittingPoly.from_tuple(ctx, exps, roots)
        if function is SigmaKind.BIUNITARY:
            if not bup_by_expansion(A):
                raise InvariantViolation(f"{A} passed the root test but not the expanded check")
            cls: BupClass = classify_bup(A)
            if SearchFilter.IBUP_ONLY in chosen and (
                cls.kind is not BupKind.INDECOMPOSABLE or A.omega < 3
            ):
                continue
            parts = tuple(str(p) for p in cls.decomposition) if cls.decomposition else None
            hits.append(SearchHit(exps, cls.label, cls.kind, parts))
        else:
            if sigma_map(A, SigmaKind.SIGMA) != A.expand():
                raise InvariantViolation(f"{A} passed the root test but not the expanded check")
            hits.append(SearchHit(exps, "perfect"))

    counts = Counter(hit.label for hit in hits)
    orbits = translation_orbits([hit.exps for hit in hits])
    elapsed = time.perf_counter() - started
    logger.info(f"Search finished: {len(hits)} hits, {len(orbits)} orbits in {elapsed:.2f}s")
    return SearchReport(
        function=function.symbol,
        bound=bound,
        filters=sorted(f.value for f in chosen) or [SearchFilter.ALL.value],
        hits=hits,
        orbits=orbits,
        elapsed_seconds=elapsed,
        candidates=len(admissible) ** 4,
        counts=dict(counts),
    )
