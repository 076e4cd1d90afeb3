"""Antiregular graphs: constructors, closed-form polynomials and claim checks.

``antiregular(n)`` is the connected antiregular graph of order ``n``;
``antiregular_complement(n)`` is the disconnected one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .engine import alpha, independence_poly
from .graph import (MAX_VERTICES, Graph, complement, complete_bipartite, degree_sequence,
                    disjoint_union, empty_graph, is_antiregular, is_konig_egervary,
                    is_simplicial_graph, max_matching_size, zykov_sum)
from .polynomial import (Polynomial, RootReport, binomial_power, count_real_roots,
                         is_log_concave, real_roots)
from .report import CheckRow

Variant = Literal["connected", "disconnected"]

K1 = empty_graph(1)
VERIFY_MAX = 30
ENGINE_MAX = 24


class AntiregularError(ValueError):
    pass


@dataclass(frozen=True)
class AntiregularSpec:
    n: int
    variant: Variant = "connected"

    def __post_init__(self):
        if self.variant not in ("connected", "disconnected"):
            raise AntiregularError(f"unknown variant {self.variant!r}")
        if self.n < 1:
            raise AntiregularError(f"no {self.variant} antiregular graph of order {self.n}")


def _check_order(n: int, low: int) -> None:
    if not low <= n <= MAX_VERTICES:
        raise AntiregularError(f"order must be in {low}..{MAX_VERTICES}, got {n}")


def antiregular(n: int) -> Graph:
    """Build via ``A_{m+2} = K_1 + (K_1 u A_m)``.

    The last label ``n-1`` is the dominating vertex added last and ``n-2`` its
    pendant neighbor; ``A_{n-2}`` keeps labels ``0..n-3``.
    """
    _check_order(n, 1)
    g = K1 if n % 2 else zykov_sum(K1, K1)
    for _ in range((n - 1) // 2):
        g = zykov_sum(disjoint_union(g, K1), K1)
    return g


def antiregular_by_complement(n: int) -> Graph:
    """Build via the other recurrence ``A_{m+1} = K_1 + complement(A_m)``."""
    _check_order(n, 1)
    g = K1
    for _ in range(n - 1):
        g = zykov_sum(complement(g), K1)
    return g


def antiregular_complement(n: int) -> Graph:
    """``A_{n-1} u K_1``. At ``n = 1`` this is ``K_1`` itself, which is not disconnected."""
    _check_order(n, 1)
    return K1 if n == 1 else disjoint_union(antiregular(n - 1), K1)


def antiregular_string(n: int) -> str:
    """Building string of ``A_n``: ``0101...01`` for even ``n``, ``00101...01`` for odd."""
    _check_order(n, 1)
    if n == 1:
        return "0"
    return "01" * (n // 2) if n % 2 == 0 else "0" + "01" * (n // 2)


def antiregular_poly_closed(spec: AntiregularSpec) -> Polynomial:
    n = spec.n
    k = (n + 1) // 2
    if spec.variant == "connected":
        if n % 2:
            return binomial_power(k) + binomial_power(k - 1) - 1
        return binomial_power(k).scale(2) - 1
    one_plus_x = Polynomial((1, 1))
    if n % 2:
        return binomial_power(k).scale(2) - one_plus_x
    return binomial_power(k + 1) + binomial_power(k) - one_plus_x


def lemma1_step(p: Polynomial) -> Polynomial:
    """``(1 + x) * (1 + p) - 1``: polynomial of ``A_{n+2}`` from that of ``A_n``."""
    return Polynomial((1, 1)) * (p + 1) - 1


def lemma1_iterate(n: int) -> Polynomial:
    p = Polynomial((1, 1)) if n % 2 else Polynomial((1, 2))
    for _ in range((n - 1) // 2):
        p = lemma1_step(p)
    return p


# --- root claims ----------------------------------------------------------------

def _claimed_root_intervals(n: int) -> list[tuple[int, int]]:
    # A_{2k}: (-1,0) plus (-2,-1) for even k; A_{2k-1}: (-1,0) plus (-3,-2) for even k
    k = (n + 1) // 2
    if k % 2:
        return [(-1, 0)]
    return [(-2, -1), (-1, 0)] if n % 2 == 0 else [(-3, -2), (-1, 0)]


def check_root_claim(n: int) -> CheckRow:
    k = (n + 1) // 2
    name = f"A_{2 * k}" if n % 2 == 0 else f"A_{2 * k - 1}"
    p = antiregular_poly_closed(AntiregularSpec(n))
    report = real_roots(p)
    claimed = _claimed_root_intervals(n)
    problems = []
    if report.count != len(claimed):
        problems.append(f"{report.count} real roots, expected {len(claimed)}")
    else:
        for i, (lo, hi) in enumerate(claimed):
            if not report.interval_inside(i, lo, hi):
                problems.append(f"root in {format_interval(report.intervals[i])} not in ({lo},{hi})")
        if n % 2 == 0:
            for i, sign in enumerate([-1, 1] if k % 2 == 0 else [1]):
                if not _contains_binomial_root(report.intervals[i], k, sign):
                    problems.append(f"interval {i} misses -1{'+' if sign > 0 else '-'}2^(-1/{k})")
    return CheckRow(f"real roots of {name}", f"k={k}", not problems,
                    "; ".join(problems) or _describe_roots(report))


def _contains_binomial_root(interval: tuple[Fraction, Fraction], k: int, sign: int) -> bool:
    """Whether ``(lo, hi]`` contains ``-1 + sign * 2**(-1/k)``.

    Decided on ``y = sign * (1 + t)``, where the root is ``y**k = 1/2`` with ``y > 0``.
    """
    lo, hi = interval
    y0, y1 = sorted((sign * (1 + lo), sign * (1 + hi)))
    if y1 <= 0:
        return False
    half = Fraction(1, 2)
    y0 = max(y0, Fraction(0))
    # y -> y**k is increasing on y >= 0; accept either open/closed end
    return y0 ** k <= half <= y1 ** k


def format_interval(iv: tuple[Fraction, Fraction]) -> str:
    return f"({iv[0]}, {iv[1]}]"


def _describe_roots(report: RootReport) -> str:
    return " ".join(format_interval(iv) + f"~{float(iv[1]):.4f}" for iv in report.intervals)


def roots_of_complement_match(n: int) -> bool:
    """Roots of the disconnected graph's polynomial are those of ``A_{n-1}`` plus ``-1``."""
    p = antiregular_poly_closed(AntiregularSpec(n, "disconnected"))
    base = real_roots(antiregular_poly_closed(AntiregularSpec(n - 1)))
    ours = real_roots(p)
    minus_one = Fraction(-1)
    if minus_one not in ours.exact_roots:
        return False
    expected = base.count + (0 if minus_one in base.exact_roots else 1)
    if ours.count != expected:
        return False
    # every root of A_{n-1} is a root here: its isolating interval holds one root of p
    return all(count_real_roots(p, lo, hi) == 1 for lo, hi in base.intervals)


# --- aggregated verification ----------------------------------------------------

def _rows_over(claim: str, orders, predicate, label: str = "n") -> CheckRow:
    orders = list(orders)
    failed = [n for n in orders if not predicate(n)]
    scope = f"{label}={orders[0]}..{orders[-1]}" if orders else f"{label}=none"
    return CheckRow(claim, scope, not failed, f"failed at {failed}" if failed else "")


def fibonacci_closed(spec: AntiregularSpec) -> int:
    k = (spec.n + 1) // 2
    if spec.variant == "connected":
        return 3 * 2 ** (k - 1) - 1 if spec.n % 2 else 2 ** (k + 1) - 1
    return 2 ** (k + 1) - 2 if spec.n % 2 else 3 * 2 ** k - 2


def verify_antiregular_claims(n_max: int) -> list[CheckRow]:
    if not 1 <= n_max <= VERIFY_MAX:
        raise AntiregularError(f"n_max must be in 1..{VERIFY_MAX}, got {n_max}")
    from .threshold import is_threshold

    orders = range(1, n_max + 1)
    comp_orders = range(2, n_max + 1)
    engine_orders = range(1, min(n_max, ENGINE_MAX) + 1)
    engine_comp = range(1, min(n_max, ENGINE_MAX) + 1)

    def closed(n, variant="connected"):
        return antiregular_poly_closed(AntiregularSpec(n, variant))

    rows = [
        _rows_over("closed form = engine (connected)", engine_orders,
                   lambda n: closed(n) == independence_poly(antiregular(n))),
        _rows_over("closed form = engine (disconnected)", engine_comp,
                   lambda n: closed(n, "disconnected")
                   == independence_poly(complement(antiregular(n)))),
        _rows_over("closed form = recurrence step iteration", orders,
                   lambda n: closed(n) == lemma1_iterate(n)),
        _rows_over("disconnected = (1+x) * connected of order n-1", comp_orders,
                   lambda n: closed(n, "disconnected") == Polynomial((1, 1)) * closed(n - 1)),
        _rows_over("Fibonacci numbers (connected)", orders,
                   lambda n: closed(n)(1) == fibonacci_closed(AntiregularSpec(n))),
        _rows_over("Fibonacci numbers (disconnected)", orders,
                   lambda n: closed(n, "disconnected")(1)
                   == fibonacci_closed(AntiregularSpec(n, "disconnected"))),
        _rows_over("alternating number -1 (connected)", orders, lambda n: closed(n)(-1) == -1),
        _rows_over("alternating number 0 (disconnected)", comp_orders,
                   lambda n: closed(n, "disconnected")(-1) == 0),
        _rows_over("log-concave (connected)", orders, lambda n: is_log_concave(closed(n))),
        _rows_over("log-concave (disconnected)", orders,
                   lambda n: is_log_concave(closed(n, "disconnected"))),
    ]

    ks = range(1, n_max // 2 + 1)
    rows.append(_rows_over("A_2k matches K_k,k", ks,
                           lambda k: closed(2 * k) == independence_poly(complete_bipartite(k, k)),
                           label="k"))
    ks_odd = range(1, (n_max + 1) // 2 + 1)
    rows.append(_rows_over("A_2k-1 matches K_k,k-1", ks_odd,
                           lambda k: closed(2 * k - 1)
                           == independence_poly(complete_bipartite(k, k - 1)), label="k"))
    big = range(3, n_max // 2 + 1)
    if big:
        rows.append(_rows_over("K_k,k is not threshold", big,
                               lambda k: not is_threshold(complete_bipartite(k, k)), label="k"))
    big_odd = range(3, (n_max + 1) // 2 + 1)
    if big_odd:
        rows.append(_rows_over("K_k,k-1 is not threshold", big_odd,
                               lambda k: not is_threshold(complete_bipartite(k, k - 1)),
                               label="k"))

    for n in orders:
        rows.append(check_root_claim(n))
    if comp_orders:
        rows.append(_rows_over("roots(disconnected) = roots(A_n-1) + {-1}", comp_orders,
                               roots_of_complement_match))

    struct_orders = range(1, min(n_max, ENGINE_MAX) + 1)
    rows.append(_rows_over("antiregular degree pattern", orders,
                           lambda n: is_antiregular(antiregular(n))))
    rows.append(_rows_over("threshold", orders, lambda n: is_threshold(antiregular(n))))
    rows.append(_rows_over("simplicial", orders, lambda n: is_simplicial_graph(antiregular(n))))
    rows.append(_rows_over("alpha = ceil(n/2), mu = floor(n/2), Konig-Egervary", struct_orders,
                           lambda n: alpha(antiregular(n)) == (n + 1) // 2
                           and max_matching_size(antiregular(n)) == n // 2
                           and is_konig_egervary(antiregular(n))))
    rows.append(_rows_over("both recurrences agree", orders,
                           lambda n: degree_sequence(antiregular(n))
                           == degree_sequence(antiregular_by_complement(n))))
    return rows
