"""Exact independence polynomials.

Two independent routes: a subset-enumeration oracle for small graphs, and the
vertex-deletion recursion ``I(G) = I(G - w) + x * I(G - N[w])`` with
connected-component factorization and per-call memoization on vertex masks.
"""

from __future__ import annotations

from typing import Callable

from .graph import CapacityError, Graph, components_of_mask, line_graph
from .polynomial import Polynomial

BRUTEFORCE_MAX_VERTICES = 20
DEFAULT_MEMO_LIMIT = 1 << 22

PivotRule = Callable[[tuple[int, ...], int], int]


class MemoLimitExceeded(RuntimeError):
    pass


def independence_poly_bruteforce(g: Graph) -> Polynomial:
    """Count independent sets of each size over all ``2**n`` vertex subsets."""
    if g.n > BRUTEFORCE_MAX_VERTICES:
        raise CapacityError(
            f"brute force supports at most {BRUTEFORCE_MAX_VERTICES} vertices, got {g.n}")
    counts = [0] * (g.n + 1)
    adj = g.adj
    for mask in range(1 << g.n):
        m = mask
        independent = True
        while m:
            low = m & -m
            if adj[low.bit_length() - 1] & mask:
                independent = False
                break
            m ^= low
        if independent:
            counts[mask.bit_count()] += 1
    return Polynomial(counts)


def max_degree_pivot(adj: tuple[int, ...], mask: int) -> int:
    best, best_deg = -1, -1
    m = mask
    while m:
        low = m & -m
        v = low.bit_length() - 1
        d = (adj[v] & mask).bit_count()
        if d > best_deg:
            best, best_deg = v, d
        m ^= low
    return best


def lowest_label_pivot(adj: tuple[int, ...], mask: int) -> int:
    return (mask & -mask).bit_length() - 1


PIVOT_RULES: dict[str, PivotRule] = {
    "max_degree": max_degree_pivot,
    "lowest_label": lowest_label_pivot,
}


def _mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


def _add_shifted(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    # a + x*b
    out = list(a) + [0] * max(0, len(b) + 1 - len(a))
    for i, y in enumerate(b):
        out[i + 1] += y
    return tuple(out)


def independence_poly(g: Graph, pivot: str | PivotRule = "max_degree",
                      memo_limit: int = DEFAULT_MEMO_LIMIT) -> Polynomial:
    """Independence polynomial by memoized deletion recursion.

    The memo table lives for one call only. ``MemoLimitExceeded`` is raised
    instead of evicting entries when the table would grow past ``memo_limit``.
    """
    choose = PIVOT_RULES[pivot] if isinstance(pivot, str) else pivot
    adj = g.adj
    memo: dict[int, tuple[int, ...]] = {}

    def solve(mask: int) -> tuple[int, ...]:
        size = mask.bit_count()
        if size == 0:
            return (1,)
        if size == 1:
            return (1, 1)
        if size == 2:
            low = mask & -mask
            return (1, 2) if adj[low.bit_length() - 1] & mask else (1, 2, 1)
        hit = memo.get(mask)
        if hit is not None:
            return hit
        comps = components_of_mask(adj, mask)
        if len(comps) > 1:
            result = (1,)
            for comp in comps:
                result = _mul(result, solve(comp))
        else:
            w = choose(adj, mask)
            without = solve(mask & ~(1 << w))
            closed = solve(mask & ~(adj[w] | 1 << w))
            result = _add_shifted(without, closed)
        if len(memo) >= memo_limit:
            raise MemoLimitExceeded(
                f"memo table exceeded {memo_limit} entries on a {g.n}-vertex graph")
        memo[mask] = result
        return result

    return Polynomial(solve(g.vertex_mask))


def independence_poly_of_union(p1: Polynomial, p2: Polynomial) -> Polynomial:
    return p1 * p2


def independence_poly_of_join(p1: Polynomial, p2: Polynomial) -> Polynomial:
    return p1 + p2 - 1


def matching_poly(g: Graph) -> Polynomial:
    """Matching generating polynomial, read off the line graph."""
    return independence_poly(line_graph(g))


def alpha(g: Graph) -> int:
    return independence_poly(g).degree


def fibonacci_number(g: Graph) -> int:
    return independence_poly(g)(1)


def alternating_number(g: Graph) -> int:
    return independence_poly(g)(-1)
