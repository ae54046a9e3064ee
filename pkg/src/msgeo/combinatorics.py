"""Borsuk partitions, clique-cover and chromatic numbers through GH distances to
simplexes, bipartite edge covers, and Euclidean realisation of configurations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb, sqrt
from typing import Iterable, Iterator

import numpy as np

from . import errors
from .gromov_hausdorff import gh_to_simplex
from .metric_core import (
    PARTITION_LIMIT,
    FiniteMetricSpace,
    block_distance_tables,
    default_labels,
    diameter,
    enumerate_rgs,
    get_tolerance,
)

ORACLE_LIMIT = 8
EDGE_LIMIT = 24


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: frozenset[tuple[int, int]]

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        norm = set()
        for i, j in edges:
            i, j = int(i), int(j)
            if i == j or not (0 <= i < n and 0 <= j < n):
                raise errors.InvalidGraph(f"bad edge ({i}, {j}) for n={n}", i=i, j=j)
            e = (min(i, j), max(i, j))
            if e in norm:
                raise errors.InvalidGraph(f"duplicate edge {e}", i=e[0], j=e[1])
            norm.add(e)
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "edges", frozenset(norm))

    def adjacent(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def complement(self) -> "SimpleGraph":
        return SimpleGraph(self.n, (e for e in itertools.combinations(range(self.n), 2)
                                    if e not in self.edges))

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in sorted(self.edges)]}


@dataclass(frozen=True)
class BipartiteGraph:
    p: int
    q: int
    edges: frozenset[tuple[int, int]]

    def __init__(self, p: int, q: int, edges: Iterable[tuple[int, int]] = ()):
        norm = set()
        for l, r in edges:
            l, r = int(l), int(r)
            if not (0 <= l < p and 0 <= r < q):
                raise errors.InvalidGraph(f"bad edge ({l}, {r}) for parts {p}, {q}", i=l, j=r)
            if (l, r) in norm:
                raise errors.InvalidGraph(f"duplicate edge ({l}, {r})", i=l, j=r)
            norm.add((l, r))
        object.__setattr__(self, "p", int(p))
        object.__setattr__(self, "q", int(q))
        object.__setattr__(self, "edges", frozenset(norm))

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q, "edges": [list(e) for e in sorted(self.edges)]}


def complete_bipartite(p: int, q: int) -> BipartiteGraph:
    return BipartiteGraph(p, q, itertools.product(range(p), range(q)))


def cycle_bipartite(k: int) -> BipartiteGraph:
    """The cycle C_{2k} with parts given by alternate vertices: a_i ~ b_i, b_{i-1}."""
    return BipartiteGraph(k, k, [(i, i) for i in range(k)] + [(i, (i - 1) % k) for i in range(k)]
                          if k > 1 else [(0, 0)])


# ---------------------------------------------------------------------------
# generalised Borsuk problem


def _borsuk_checks(space: FiniteMetricSpace, m: int) -> float:
    d = diameter(space)
    if d <= 0:
        raise errors.DegenerateDiameter("space has zero diameter")
    if not 2 <= m <= space.n:
        raise errors.InvalidParams(f"need 2 <= m <= #X, got m={m}, #X={space.n}", m=m, n=space.n)
    return d


def borsuk_partitionable(space: FiniteMetricSpace, m: int, tol: float | None = None,
                         limit: int = PARTITION_LIMIT) -> bool:
    """Whether some m-block partition has every block diameter at most diam - tol."""
    tol = get_tolerance(tol)
    d = _borsuk_checks(space, m)
    for rgs in enumerate_rgs(space.n, m, limit):
        _, hi = block_distance_tables(space.dist, np.asarray(rgs), m)
        if np.diag(hi).max() <= d - tol:
            return True
    return False


def borsuk_by_gh(space: FiniteMetricSpace, m: int, lam: float | None = None,
                 tol: float | None = None, limit: int = PARTITION_LIMIT) -> bool:
    """Partitionable into m parts of smaller diameter iff 2 d_GH(lam Delta_m, X) < diam X."""
    tol = get_tolerance(tol)
    d = _borsuk_checks(space, m)
    if lam is None:
        lam = d / 2
    if not 0 < lam < d:
        raise errors.InvalidParams(f"need 0 < lambda < diam = {d}", lam=lam, diam=d)
    return 2 * gh_to_simplex(space, m, lam, limit) < d - tol


# ---------------------------------------------------------------------------
# clique cover and chromatic numbers


def two_distance_space(graph: SimpleGraph, adjacent: float, nonadjacent: float) -> FiniteMetricSpace:
    n = graph.n
    d = np.full((n, n), float(nonadjacent))
    for i, j in graph.edges:
        d[i, j] = d[j, i] = adjacent
    np.fill_diagonal(d, 0.0)
    return FiniteMetricSpace(tuple(default_labels(n)), d)


def _check_ab(a: float, b: float) -> None:
    if not 0 < a < b <= 2 * a:
        raise errors.InvalidAB(f"need 0 < a < b <= 2a, got a={a}, b={b}", a=a, b=b)


def _greatest_k_at_b(space: FiniteMetricSpace, a: float, b: float, tol: float, limit: int) -> int:
    """Greatest k with 2 d_GH(a Delta_k, V) = b, or 0.

    Beyond #V the value is max(a, b - a) < b, so k <= #V.
    """
    m = 0
    for k in range(1, space.n + 1):
        if abs(2 * gh_to_simplex(space, k, a, limit) - b) <= tol:
            m = k
    return m


def clique_cover_brute(graph: SimpleGraph) -> int:
    """Fewest cliques partitioning the vertices (exhaustive)."""
    return _min_blocks(graph.n, lambda u, v: graph.adjacent(u, v))


def chromatic_brute(graph: SimpleGraph) -> int:
    """Fewest independent sets partitioning the vertices (exhaustive)."""
    return _min_blocks(graph.n, lambda u, v: not graph.adjacent(u, v))


def _min_blocks(n: int, together) -> int:
    if n == 0:
        return 0
    for k in range(1, n + 1):
        for rgs in enumerate_rgs(n, k, limit=max(n, PARTITION_LIMIT)):
            if all(together(u, v) for u, v in itertools.combinations(range(n), 2)
                   if rgs[u] == rgs[v]):
                return k
    return n


def _graph_number(graph: SimpleGraph, a: float, b: float, adjacent_at_a: bool, verify: bool,
                  tol: float | None, limit: int) -> int:
    tol = get_tolerance(tol)
    _check_ab(a, b)
    if graph.n > limit:
        raise errors.TooLarge(f"{graph.n} vertices exceed the guard {limit}", n=graph.n, limit=limit)
    space = two_distance_space(graph, a, b) if adjacent_at_a else two_distance_space(graph, b, a)
    value = _greatest_k_at_b(space, a, b, tol, limit) + 1
    if verify and graph.n <= ORACLE_LIMIT:
        oracle = clique_cover_brute(graph) if adjacent_at_a else chromatic_brute(graph)
        if oracle != value:
            raise errors.OracleMismatch(f"GH route gave {value}, brute force {oracle}",
                                        gh=value, brute=oracle)
    return value


def clique_cover_number(graph: SimpleGraph, a: float = 1.0, b: float = 2.0, verify: bool = True,
                        tol: float | None = None, limit: int = PARTITION_LIMIT) -> int:
    """theta(G) via GH distances; adjacent vertices at distance a, others at b."""
    return _graph_number(graph, a, b, True, verify, tol, limit)


def chromatic_number(graph: SimpleGraph, a: float = 1.0, b: float = 2.0, verify: bool = True,
                     tol: float | None = None, limit: int = PARTITION_LIMIT) -> int:
    """gamma(G) via GH distances; adjacent vertices at distance b, others at a."""
    return _graph_number(graph, a, b, False, verify, tol, limit)


def nonisomorphic_graphs(n: int) -> list[SimpleGraph]:
    """One graph per isomorphism class on n vertices (canonical = least edge bitmask)."""
    pairs = list(itertools.combinations(range(n), 2))
    index = {e: i for i, e in enumerate(pairs)}
    perms = list(itertools.permutations(range(n)))
    relabel = [[index[tuple(sorted((p[i], p[j])))] for i, j in pairs] for p in perms]
    seen: set[int] = set()
    out = []
    for mask in range(1 << len(pairs)):
        bits = [e for e in range(len(pairs)) if mask >> e & 1]
        canon = min(sum(1 << r[e] for e in bits) for r in relabel)
        if canon not in seen:
            seen.add(canon)
            out.append(SimpleGraph(n, (pairs[e] for e in range(len(pairs)) if canon >> e & 1)))
    return out


# ---------------------------------------------------------------------------
# edge covers, matchings, configurations


def count_edge_covers(graph: BipartiteGraph, limit: int = EDGE_LIMIT) -> int:
    """Edge subsets touching every vertex of both parts.

    Depth-first over the edges in sorted order.  A branch dies once some
    vertex has no chosen edge and no edge left to choose; once every vertex
    is covered the remaining r edges contribute 2**r at once.
    """
    edges = sorted(graph.edges)
    E = len(edges)
    if E > limit:
        raise errors.TooLarge(f"{E} edges exceed the guard {limit}", edges=E, limit=limit)
    V = graph.p + graph.q
    ends = [(l, graph.p + r) for l, r in edges]
    # remaining[e][v]: edges e.. that touch v
    remaining = [[0] * V for _ in range(E + 1)]
    for e in range(E - 1, -1, -1):
        remaining[e] = list(remaining[e + 1])
        for v in ends[e]:
            remaining[e][v] += 1
    full = (1 << V) - 1

    def rec(e: int, covered: int) -> int:
        if covered == full:
            return 1 << (E - e)
        if e == E:
            return 0
        for v in range(V):
            if not covered >> v & 1 and remaining[e][v] == 0:
                return 0
        u, w = ends[e]
        return rec(e + 1, covered | 1 << u | 1 << w) + rec(e + 1, covered)

    return rec(0, 0)


def cycle_matching_count(m: int) -> int:
    """All matchings of the m-cycle, empty one included.

    The number with i edges is m/(m-i) * C(m-i, i).
    """
    if m < 3:
        raise errors.MOutOfRange(f"m={m} must be >= 3", m=m)
    total = 0
    for i in range(m // 2 + 1):
        num = m * comb(m - i, i)
        q, rem = divmod(num, m - i)
        assert rem == 0
        total += q
    return total


@dataclass(frozen=True)
class Configuration:
    points: np.ndarray  # rows a_1..a_p, then b_1..b_q
    p: int
    q: int
    N: int

    @property
    def A(self) -> tuple[int, ...]:
        return tuple(range(self.p))

    @property
    def B(self) -> tuple[int, ...]:
        return tuple(range(self.p, self.p + self.q))

    def to_json(self) -> dict:
        return {"metric": "euclidean", "points": self.points.tolist(),
                "A": list(self.A), "B": list(self.B), "N": self.N}


def realize_configuration(graph: BipartiteGraph) -> Configuration:
    """Embed the bipartite graph in R^{p+q} so its edges are the closest cross pairs.

    a_i goes to e_i and b_j to sqrt(N - |I_j|) e_{p+j} + sum of e_i over its
    neighbours I_j, where N = 1 + max |I_j|.  Edges then have squared length
    N - 1 and non-edges N + 1.
    """
    if count_edge_covers(graph, limit=max(EDGE_LIMIT, len(graph.edges))) == 0:
        raise errors.NoEdgeCover("the graph has no edge cover")
    p, q = graph.p, graph.q
    nbrs = [[l for l in range(p) if (l, r) in graph.edges] for r in range(q)]
    N = 1 + max(len(I) for I in nbrs)
    pts = np.zeros((p + q, p + q))
    for i in range(p):
        pts[i, i] = 1.0
    for j, I in enumerate(nbrs):
        pts[p + j, p + j] = sqrt(N - len(I))
        pts[p + j, I] = 1.0
    return Configuration(pts, p, q, N)


def all_bipartite_graphs(max_vertices: int) -> Iterator[BipartiteGraph]:
    """Every labelled bipartite graph with p, q >= 1 and p + q <= max_vertices."""
    for p in range(1, max_vertices):
        for q in range(1, max_vertices - p + 1):
            cells = list(itertools.product(range(p), range(q)))
            for mask in range(1 << len(cells)):
                yield BipartiteGraph(p, q, (cells[e] for e in range(len(cells)) if mask >> e & 1))
