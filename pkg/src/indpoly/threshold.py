"""Threshold graphs and their binary building strings.

A building string is a ``str`` over ``{"0", "1"}`` starting with ``"0"``.
Vertex ``i`` is added as an isolated vertex for ``"0"`` and as a vertex
dominating all earlier vertices for ``"1"``.
"""

from __future__ import annotations

import os
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Iterator, TypeVar

from .engine import independence_poly
from .graph import MAX_VERTICES, CapacityError, Graph, degree_sequence
from .polynomial import (Polynomial, count_real_roots, is_log_concave, is_real_rooted,
                         is_unimodal)
from .report import CheckRow

ENUMERATION_MAX = 16
UNIQUENESS_MAX = 12

T = TypeVar("T")
R = TypeVar("R")


class BuildingStringError(ValueError):
    pass


def check_string(s: str) -> str:
    if not s:
        raise BuildingStringError("building string is empty")
    if set(s) - {"0", "1"}:
        raise BuildingStringError(f"building string {s!r} has characters other than 0/1")
    if s[0] != "0":
        raise BuildingStringError(f"building string {s!r} must start with 0")
    if len(s) > MAX_VERTICES:
        raise CapacityError(f"building string of length {len(s)} exceeds capacity {MAX_VERTICES}")
    return s


def build_threshold(s: str) -> Graph:
    check_string(s)
    adj = [0] * len(s)
    for i, bit in enumerate(s):
        if bit == "1":
            adj[i] = (1 << i) - 1
            for j in range(i):
                adj[j] |= 1 << i
    return Graph(len(s), tuple(adj))


def recognize_threshold(g: Graph) -> str | None:
    """Canonical building string of ``g``, or ``None`` if ``g`` is not threshold.

    Repeatedly strips a vertex that is dominating in what remains (lowest label
    first), or failing that an isolated one.
    """
    if g.n == 0:
        return None
    mask = g.vertex_mask
    bits = []
    while mask.bit_count() > 1:
        size = mask.bit_count()
        dominating = isolated = -1
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            d = (g.adj[v] & mask).bit_count()
            if d == size - 1:
                dominating = v
                break
            if d == 0 and isolated < 0:
                isolated = v
            m ^= low
        if dominating >= 0:
            bits.append("1")
            mask &= ~(1 << dominating)
        elif isolated >= 0:
            bits.append("0")
            mask &= ~(1 << isolated)
        else:
            return None
    bits.append("0")
    return "".join(reversed(bits))


def is_threshold(g: Graph) -> bool:
    return recognize_threshold(g) is not None


def degree_sequence_from_string(s: str) -> tuple[int, ...]:
    check_string(s)
    n = len(s)
    degs = []
    later_ones = 0
    for i in range(n - 1, -1, -1):
        # earlier vertices if dominating, plus every later dominating vertex
        degs.append((i if s[i] == "1" else 0) + later_ones)
        if s[i] == "1":
            later_ones += 1
    return tuple(sorted(degs, reverse=True))


def poly_from_string(s: str) -> Polynomial:
    """Independence polynomial via union/join with ``K_1`` per bit, no graph needed."""
    check_string(s)
    p = Polynomial((1, 1))
    for bit in s[1:]:
        p = p + Polynomial((0, 1)) if bit == "1" else p * Polynomial((1, 1))
    return p


# --- enumeration and uniqueness census ----------------------------------------

@dataclass(frozen=True)
class ThresholdRecord:
    string: str
    graph: Graph
    degrees: tuple[int, ...]
    poly: Polynomial

    def as_record(self) -> dict:
        return {"string": self.string, "degrees": list(self.degrees),
                "coeffs": list(self.poly.coeffs)}


def all_strings(n: int) -> Iterator[str]:
    for tail in product("01", repeat=n - 1):
        yield "0" + "".join(tail)


def threshold_record(s: str) -> ThresholdRecord:
    g = build_threshold(s)
    return ThresholdRecord(s, g, degree_sequence(g), independence_poly(g))


def _pool_map(fn: Callable[[T], R], items: Iterable[T], jobs: int | None) -> Iterator[R]:
    jobs = jobs or os.cpu_count() or 1
    if jobs <= 1:
        yield from map(fn, items)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(fn, items, chunksize=64)


def enumerate_threshold(n: int, jobs: int | None = 1) -> Iterator[ThresholdRecord]:
    """All ``2**(n-1)`` threshold graphs of order ``n`` in lexicographic string order."""
    if not 1 <= n <= ENUMERATION_MAX:
        raise CapacityError(f"enumeration order must be in 1..{ENUMERATION_MAX}, got {n}")
    yield from _pool_map(threshold_record, all_strings(n), jobs)


@dataclass
class UniquenessReport:
    n: int
    groups: dict[tuple[int, ...], list[str]]
    rows: list[CheckRow] = field(default_factory=list)

    @property
    def violations(self) -> list[CheckRow]:
        return [r for r in self.rows if not r.passed]

    @property
    def passed(self) -> bool:
        return not self.violations


def verify_uniqueness(n: int, jobs: int | None = 1) -> UniquenessReport:
    """Group all threshold graphs of order ``n`` by polynomial and audit each group."""
    from .antiregular import antiregular, antiregular_complement

    if not 1 <= n <= UNIQUENESS_MAX:
        raise CapacityError(f"uniqueness sweep order must be in 1..{UNIQUENESS_MAX}, got {n}")
    by_poly: dict[tuple[int, ...], list[ThresholdRecord]] = defaultdict(list)
    by_degrees: dict[tuple[int, ...], set[tuple[int, ...]]] = defaultdict(set)
    for rec in enumerate_threshold(n, jobs):
        by_poly[rec.poly.coeffs].append(rec)
        by_degrees[rec.degrees].add(rec.poly.coeffs)

    rows = []
    bad = [k for k, recs in by_poly.items() if len({r.degrees for r in recs}) > 1]
    rows.append(CheckRow(
        "equal polynomial => equal degree sequence", f"n={n}", not bad,
        f"{len(by_poly)} polynomial groups over {2 ** (n - 1)} strings"
        + (f"; {len(bad)} mixed groups" if bad else "")))
    split = [d for d, polys in by_degrees.items() if len(polys) > 1]
    rows.append(CheckRow(
        "equal degree sequence => equal polynomial", f"n={n}", not split,
        f"{len(split)} degree sequences with several polynomials" if split else ""))

    targets = [("connected antiregular group is one class", antiregular(n))]
    if n >= 2:
        targets.append(("disconnected antiregular group is one class", antiregular_complement(n)))
    for claim, g in targets:
        key = independence_poly(g).coeffs
        classes = {r.degrees for r in by_poly.get(key, [])}
        ok = classes == {degree_sequence(g)}
        members = ",".join(r.string for r in by_poly.get(key, []))
        rows.append(CheckRow(claim, f"n={n}", ok, f"strings [{members}]"))

    groups = {k: [r.string for r in recs] for k, recs in by_poly.items()}
    return UniquenessReport(n, groups, rows)


# --- (prefix, period) pattern survey ------------------------------------------

@dataclass(frozen=True)
class PatternSpec:
    prefix: str
    period: str
    orders: tuple[int, int]

    def __post_init__(self):
        if not self.period:
            raise BuildingStringError("pattern period must be nonempty")
        if set(self.prefix + self.period) - {"0", "1"}:
            raise BuildingStringError("pattern bits must be 0/1")
        lo, hi = self.orders
        if not 1 <= lo <= hi:
            raise BuildingStringError(f"invalid order range {lo}..{hi}")
        if hi > MAX_VERTICES:
            raise CapacityError(f"order {hi} exceeds capacity {MAX_VERTICES}")

    def expand(self, n: int) -> str:
        """Prefix then the period repeated, cut to exactly ``n`` bits."""
        reps = -(-max(0, n - len(self.prefix)) // len(self.period))
        return check_string((self.prefix + self.period * reps)[:n])

    def partial_period(self, n: int) -> bool:
        tail = n - len(self.prefix)
        return tail > 0 and tail % len(self.period) != 0


@dataclass(frozen=True)
class SurveyRecord:
    order: int
    string: str
    poly: Polynomial
    unimodal: bool
    log_concave: bool
    real_root_count: int
    all_roots_real: bool
    partial_period: bool = False

    def as_record(self) -> dict:
        return {
            "order": self.order, "string": self.string, "coeffs": list(self.poly.coeffs),
            "unimodal": self.unimodal, "log_concave": self.log_concave,
            "real_root_count": self.real_root_count, "all_roots_real": self.all_roots_real,
            "partial_period": self.partial_period,
        }


def survey_record(s: str, partial: bool = False) -> SurveyRecord:
    p = independence_poly(build_threshold(s))
    return SurveyRecord(len(s), s, p, is_unimodal(p), is_log_concave(p),
                        count_real_roots(p), is_real_rooted(p), partial)


def _survey_item(item: tuple[str, bool]) -> SurveyRecord:
    return survey_record(*item)


def pattern_survey(spec: PatternSpec, jobs: int | None = 1) -> Iterator[SurveyRecord]:
    lo, hi = spec.orders
    items = [(spec.expand(n), spec.partial_period(n)) for n in range(lo, hi + 1)]
    yield from _pool_map(_survey_item, items, jobs)
