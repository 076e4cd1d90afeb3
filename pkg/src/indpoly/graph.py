"""Simple undirected graphs stored as per-vertex neighbor bitmasks.

Vertices are labelled ``0 .. n-1``. Bit ``u`` of ``adj[v]`` is set iff ``uv``
is an edge. Graph values are immutable; every operation returns a new graph.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from random import Random
from typing import Iterable, Iterator

MAX_VERTICES = 64
MAX_MATCHING_VERTICES = 24
FIXTURE_DIR = Path(__file__).parent / "fixtures"


class GraphError(ValueError):
    """Malformed graph input (bad endpoint, loop, unparsable edge list)."""


class CapacityError(GraphError):
    """An operation would exceed a documented size bound."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        if self.n > MAX_VERTICES:
            raise CapacityError(f"{self.n} vertices exceeds capacity {MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise GraphError(f"vertex {v} has a neighbor outside 0..{self.n - 1}")
            if nb >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in _bits(nb):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph, relabelled in increasing order of the kept vertices."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            adj.append(sum(1 << index[u] for u in _bits(self.adj[v]) if u in index))
        return Graph(len(keep), tuple(adj))

    def components(self) -> list[int]:
        """Connected components as vertex masks, ordered by lowest vertex."""
        return components_of_mask(self.adj, self.vertex_mask)

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def components_of_mask(adj: tuple[int, ...], mask: int) -> list[int]:
    comps = []
    while mask:
        seed = mask & -mask
        comp = frontier = seed
        while frontier:
            reach = 0
            for v in _bits(frontier):
                reach |= adj[v]
            frontier = reach & mask & ~comp
            comp |= frontier
        comps.append(comp)
        mask &= ~comp
    return comps


# --- constructors -------------------------------------------------------------

def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n > MAX_VERTICES:
        raise CapacityError(f"{n} vertices exceeds capacity {MAX_VERTICES}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop edge ({u}, {v})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n}: vertices ``0..m-1`` on one side, ``m..m+n-1`` on the other."""
    return graph_from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)])


# --- operations ---------------------------------------------------------------

def random_graph(n: int, p: float, rng: Random) -> Graph:
    """Erdos-Renyi G(n, p) drawn from ``rng``."""
    return graph_from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple(full & ~nb & ~(1 << v) for v, nb in enumerate(g.adj)))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    if g1.n + g2.n > MAX_VERTICES:
        raise CapacityError(f"union has {g1.n + g2.n} vertices, capacity is {MAX_VERTICES}")
    return Graph(g1.n + g2.n, g1.adj + tuple(nb << g1.n for nb in g2.adj))


def zykov_sum(g1: Graph, g2: Graph) -> Graph:
    """Join: disjoint union plus every edge between the two parts."""
    u = disjoint_union(g1, g2)
    left = g1.vertex_mask
    right = g2.vertex_mask << g1.n
    adj = tuple(nb | (right if v < g1.n else left) for v, nb in enumerate(u.adj))
    return Graph(u.n, adj)


def line_graph(g: Graph) -> Graph:
    """One vertex per edge of ``g`` (lexicographic edge order); adjacent iff the edges meet."""
    edges = g.edges()
    if len(edges) > MAX_VERTICES:
        raise CapacityError(f"line graph needs {len(edges)} vertices, capacity is {MAX_VERTICES}")
    incident = [0] * g.n
    for i, (u, v) in enumerate(edges):
        incident[u] |= 1 << i
        incident[v] |= 1 << i
    adj = tuple((incident[u] | incident[v]) & ~(1 << i) for i, (u, v) in enumerate(edges))
    return Graph(len(edges), adj)


def degree_sequence(g: Graph) -> tuple[int, ...]:
    return tuple(sorted((g.degree(v) for v in range(g.n)), reverse=True))


def is_antiregular(g: Graph) -> bool:
    counts = Counter(g.degree(v) for v in range(g.n)).values()
    return all(c <= 2 for c in counts) and sum(c == 2 for c in counts) <= 1


def simplicial_vertices(g: Graph) -> set[int]:
    simp = set()
    for v in range(g.n):
        nb = g.adj[v]
        # N[v] is a clique iff each neighbor sees all of N(v) besides itself
        if all((g.adj[u] | 1 << u) & nb == nb for u in _bits(nb)):
            simp.add(v)
    return simp


def is_simplicial_graph(g: Graph) -> bool:
    simp = simplicial_vertices(g)
    simp_mask = sum(1 << v for v in simp)
    return all(v in simp or g.adj[v] & simp_mask for v in range(g.n))


def max_matching_size(g: Graph) -> int:
    """Exact matching number by memoized branching on the lowest unmatched vertex."""
    if g.n > MAX_MATCHING_VERTICES:
        raise CapacityError(
            f"matching search supports at most {MAX_MATCHING_VERTICES} vertices, got {g.n}")
    adj = g.adj
    memo: dict[int, int] = {}

    def best(mask: int) -> int:
        # drop vertices with no neighbors left in the mask
        while mask:
            low = mask & -mask
            v = low.bit_length() - 1
            if adj[v] & mask:
                break
            mask ^= low
        if not mask:
            return 0
        if mask in memo:
            return memo[mask]
        rest = mask & ~low
        result = best(rest)
        for u in _bits(adj[v] & rest):
            if result >= (rest.bit_count() + 1) // 2:
                break
            result = max(result, 1 + best(rest & ~(1 << u)))
        memo[mask] = result
        return result

    return best(g.vertex_mask)


def is_konig_egervary(g: Graph) -> bool:
    from .engine import alpha

    return alpha(g) + max_matching_size(g) == g.n


def neighbor_degree_signature(g: Graph) -> tuple:
    """Isomorphism invariant finer than the degree sequence."""
    return tuple(sorted(
        (g.degree(v), tuple(sorted(g.degree(u) for u in _bits(g.adj[v])))) for v in range(g.n)))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test by backtracking over signature-compatible vertex maps.

    Exponential in the worst case; meant for fixture-sized graphs.
    """
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    if neighbor_degree_signature(g) != neighbor_degree_signature(h):
        return False
    sig_g = [(g.degree(v), sorted(g.degree(u) for u in _bits(g.adj[v]))) for v in range(g.n)]
    sig_h = [(h.degree(v), sorted(h.degree(u) for u in _bits(h.adj[v]))) for v in range(h.n)]
    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    image = [-1] * g.n
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == g.n:
            return True
        v = order[i]
        for w in range(h.n):
            if used >> w & 1 or sig_h[w] != sig_g[v]:
                continue
            if all(g.has_edge(v, u) == h.has_edge(w, image[u]) for u in order[:i]):
                image[v] = w
                used |= 1 << w
                if extend(i + 1):
                    return True
                used &= ~(1 << w)
        image[v] = -1
        return False

    return extend(0)


def has_forbidden_threshold_subgraph(g: Graph) -> bool:
    """Brute-force search for an induced P4, C4, or 2K2."""
    for quad in combinations(range(g.n), 4):
        degs = sorted(sum(g.has_edge(v, u) for u in quad if u != v) for v in quad)
        if degs in ([1, 1, 1, 1], [1, 1, 2, 2], [2, 2, 2, 2]):
            return True
    return False


# --- edge-list text format ----------------------------------------------------

def parse_edge_list(text: str, source: str = "<string>") -> Graph:
    """Parse ``n m`` followed by ``m`` lines of ``u v``. Blank and ``#`` lines are skipped."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphError(f"{source}: empty edge list")
    try:
        head = [int(tok) for tok in lines[0].split()]
        if len(head) != 2:
            raise ValueError
        n, m = head
        pairs = []
        for ln in lines[1:]:
            u, v = (int(tok) for tok in ln.split())
            pairs.append((u, v))
    except ValueError:
        raise GraphError(f"{source}: malformed edge list") from None
    if len(pairs) != m:
        raise GraphError(f"{source}: header declares {m} edges, found {len(pairs)}")
    try:
        return graph_from_edges(n, pairs)
    except GraphError as exc:
        raise type(exc)(f"{source}: {exc}") from None


def read_edge_list(path: str | Path) -> Graph:
    path = Path(path)
    return parse_edge_list(path.read_text(), source=str(path))


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    return "\n".join([f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]) + "\n"


def fixture_path(name: str) -> Path:
    """Path of a bundled fixture; ``name`` may omit the ``.edges`` suffix."""
    if not name.endswith(".edges"):
        name += ".edges"
    return FIXTURE_DIR / name


def load_fixture(name: str) -> Graph:
    return read_edge_list(fixture_path(name))
