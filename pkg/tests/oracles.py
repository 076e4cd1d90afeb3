"""Brute-force references, independent of the library's algorithms."""

from itertools import combinations
from random import Random

from hypothesis import strategies as st

from indpoly.graph import graph_from_edges, random_graph


def edge_set(g):
    return {(u, v) for u in range(g.n) for v in range(u + 1, g.n) if g.adj[u] >> v & 1}


def independent_set_counts(g):
    edges = edge_set(g)
    counts = [0] * (g.n + 1)
    for k in range(g.n + 1):
        for sub in combinations(range(g.n), k):
            if all((a, b) not in edges for a, b in combinations(sub, 2)):
                counts[k] += 1
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


def brute_alpha(g):
    return len(independent_set_counts(g)) - 1


def matching_counts_by_subsets(g):
    """Every edge subset, kept when its edges are pairwise non-incident."""
    edges = sorted(edge_set(g))
    counts = [0] * (len(edges) + 1)
    for mask in range(1 << len(edges)):
        chosen = [edges[i] for i in range(len(edges)) if mask >> i & 1]
        ends = [x for e in chosen for x in e]
        if len(ends) == len(set(ends)):
            counts[len(chosen)] += 1
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


def brute_mu(g):
    return len(matching_counts_by_subsets(g)) - 1


# --- shared generators ----------------------------------------------------------


def random_graphs(count, n_max, seed, n_min=1):
    r = Random(seed)
    return [random_graph(r.randint(n_min, n_max), r.random(), r) for _ in range(count)]


@st.composite
def graphs(draw, max_n=9, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return graph_from_edges(n, [e for e, k in zip(pairs, keep) if k])


def has_induced_p4_c4_2k2(g):
    """Look for an induced P_4, C_4 or 2K_2 among all 4-vertex subsets."""
    edges = edge_set(g)
    for quad in combinations(range(g.n), 4):
        present = [(a, b) for a, b in combinations(quad, 2) if (a, b) in edges]
        degs = sorted(sum(v in e for e in present) for v in quad)
        if degs in ([1, 1, 1, 1], [1, 1, 2, 2], [2, 2, 2, 2]):
            return True
    return False


def all_graphs(n):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for mask in range(1 << len(pairs)):
        yield graph_from_edges(n, [e for i, e in enumerate(pairs) if mask >> i & 1])
