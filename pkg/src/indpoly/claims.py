"""Named claim groups for the ``verify`` command."""

from __future__ import annotations

from random import Random
from typing import Callable

from .antiregular import verify_antiregular_claims
from .engine import (independence_poly, independence_poly_bruteforce,
                     independence_poly_of_join, independence_poly_of_union, matching_poly)
from .graph import (Graph, complete_graph, degree_sequence, disjoint_union, empty_graph,
                    is_isomorphic, load_fixture, random_graph, zykov_sum)
from .polynomial import Polynomial, is_log_concave, is_unimodal
from .report import CheckRow
from .threshold import build_threshold, verify_uniqueness

UNIQUENESS_SWEEP_MAX = 10


def count_matchings(g: Graph) -> list[int]:
    """Matchings of each size, by depth-first extension over the lexicographic edge list."""
    edges = g.edges()
    counts = [0] * (g.n // 2 + 1)

    def extend(start: int, used: int, size: int) -> None:
        counts[size] += 1
        for i in range(start, len(edges)):
            u, v = edges[i]
            if not (used >> u & 1 or used >> v & 1):
                extend(i + 1, used | 1 << u | 1 << v, size + 1)

    extend(0, 0, 0)
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


def _flags(p: Polynomial) -> str:
    if not is_unimodal(p):
        return "non-unimodal"
    return "log-concave" if is_log_concave(p) else "unimodal, not log-concave"


def _clique_plus_three_k7(m: int) -> Polynomial:
    k7 = independence_poly(complete_graph(7))
    return independence_poly_of_join(Polynomial((1, m)), k7 * k7 * k7)


def zoo_rows() -> list[CheckRow]:
    rows = []
    stated = {
        42: ((1, 63, 147, 343), "log-concave"),
        43: ((1, 64, 147, 343), "unimodal, not log-concave"),
        127: ((1, 148, 147, 343), "non-unimodal"),
        100: ((1, 121, 147, 343), None),
        120: ((1, 141, 147, 343), None),
    }
    for m, (coeffs, flag) in stated.items():
        p = _clique_plus_three_k7(m)
        ok = p.coeffs == coeffs and (flag is None or _flags(p) == flag)
        rows.append(CheckRow(f"I(K_{m}+3K_7)", "join identity", ok, f"{p} [{_flags(p)}]"))
    # both fit the 64-vertex capacity, so the engine can confirm the join identity
    for m in (42, 43):
        three_k7 = disjoint_union(disjoint_union(complete_graph(7), complete_graph(7)),
                                  complete_graph(7))
        g = zykov_sum(complete_graph(m), three_k7)
        rows.append(CheckRow(f"I(K_{m}+3K_7) engine", f"n={g.n}",
                             independence_poly(g) == _clique_plus_three_k7(m)))
    prod = _clique_plus_three_k7(100) * _clique_plus_three_k7(120)
    expected = (1, 262, 17355, 39200, 111475, 100842, 117649)
    rows.append(CheckRow("product of unimodal pair", "K_100, K_120",
                         prod.coeffs == expected and not is_unimodal(prod), str(prod)))

    threshold_cases = [
        (6, 10, (1, 16, 15, 20, 15, 6, 1), "non-unimodal"),
        (3, 7, (1, 10, 3, 1), "unimodal, not log-concave"),
        (7, 5, (1, 12, 21, 35, 35, 21, 7, 1), "log-concave"),
    ]
    for zeros, ones, coeffs, flag in threshold_cases:
        s = "0" * zeros + "1" * ones
        p = independence_poly(build_threshold(s))
        ok = p.coeffs == coeffs and _flags(p) == flag
        rows.append(CheckRow(f"{zeros}K_1+K_{ones}", s, ok, f"{p} [{_flags(p)}]"))
    return rows


def oracle_rows(count: int = 500, n_max: int = 14, seed: int = 0) -> list[CheckRow]:
    rng = Random(seed)
    mismatches = []
    for i in range(count):
        g = random_graph(rng.randint(1, n_max), rng.random(), rng)
        if independence_poly(g) != independence_poly_bruteforce(g):
            mismatches.append(i)
    return [CheckRow("engine = subset enumeration", f"{count} graphs, n<={n_max}",
                     not mismatches, f"mismatches {mismatches[:5]}" if mismatches else "")]


def matching_rows(count: int = 100, n_max: int = 10, seed: int = 1) -> list[CheckRow]:
    g1 = load_fixture("g1")
    rows = [CheckRow("M(G_1) via line graph", "g1 fixture",
                     matching_poly(g1).coeffs == (1, 6, 7, 1), str(matching_poly(g1)))]
    rng = Random(seed)
    bad = []
    for i in range(count):
        g = random_graph(rng.randint(1, n_max), rng.random(), rng)
        if list(matching_poly(g).coeffs) != count_matchings(g):
            bad.append(i)
    rows.append(CheckRow("line-graph polynomial = matching counts",
                         f"{count} graphs, n<={n_max}", not bad,
                         f"mismatches {bad[:5]}" if bad else ""))
    return rows


def tree_rows() -> list[CheckRow]:
    t1, t2 = load_fixture("t1"), load_fixture("t2")
    p1, p2 = independence_poly(t1), independence_poly(t2)
    stated = (1, 10, 36, 58, 42, 12, 1)
    same_degrees = degree_sequence(t1) == degree_sequence(t2)
    return [
        CheckRow("I(T_1) = I(T_2) = stated", "t1, t2 fixtures",
                 p1.coeffs == stated and p2.coeffs == stated, str(p1)),
        CheckRow("T_1 and T_2 not isomorphic", "exact search", not is_isomorphic(t1, t2),
                 "degree sequences " + ("equal" if same_degrees else "differ")),
    ]


def coincidence_rows() -> list[CheckRow]:
    k23, a5 = load_fixture("k23"), load_fixture("a5")
    p, q = independence_poly(k23), independence_poly(a5)
    return [CheckRow("I(K_2,3) = I(A_5)", "k23, a5 fixtures",
                     p == q and p.coeffs == (1, 5, 4, 1) and not is_isomorphic(k23, a5), str(p))]


def uniqueness_rows(n_max: int, jobs: int | None = 1) -> list[CheckRow]:
    rows = []
    for n in range(1, min(n_max, UNIQUENESS_SWEEP_MAX) + 1):
        rows.extend(verify_uniqueness(n, jobs).rows)
    return rows


def empty_graph_rows() -> list[CheckRow]:
    g = empty_graph(0)
    return [CheckRow("I(empty graph) = 1", "n=0", independence_poly(g).coeffs == (1,))]


def union_join_rows(count: int = 100, seed: int = 2) -> list[CheckRow]:
    rng = Random(seed)
    bad = []
    for i in range(count):
        g1 = random_graph(rng.randint(1, 7), rng.random(), rng)
        g2 = random_graph(rng.randint(1, 7), rng.random(), rng)
        b1, b2 = independence_poly_bruteforce(g1), independence_poly_bruteforce(g2)
        if (independence_poly(disjoint_union(g1, g2)) != independence_poly_of_union(b1, b2)
                or independence_poly(zykov_sum(g1, g2)) != independence_poly_of_join(b1, b2)):
            bad.append(i)
    return [CheckRow("union / join identities", f"{count} random pairs", not bad,
                     f"mismatches {bad[:5]}" if bad else "")]


CLAIM_GROUPS: dict[str, Callable[..., list[CheckRow]]] = {
    "antiregular": lambda n_max, jobs: verify_antiregular_claims(n_max),
    "uniqueness": uniqueness_rows,
    "zoo": lambda n_max, jobs: zoo_rows(),
    "oracle": lambda n_max, jobs: oracle_rows(),
    "identities": lambda n_max, jobs: union_join_rows() + empty_graph_rows(),
    "matching": lambda n_max, jobs: matching_rows(),
    "trees": lambda n_max, jobs: tree_rows() + coincidence_rows(),
}


def verify_claims(groups: list[str], n_max: int, jobs: int | None = 1) -> list[CheckRow]:
    if "all" in groups:
        groups = list(CLAIM_GROUPS)
    rows = []
    for name in groups:
        rows.extend(CLAIM_GROUPS[name](n_max, jobs))
    return rows
