"""Minimum spanning trees, the mst-spectrum, and Steiner minimal trees in finite spaces."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from . import errors
from .gromov_hausdorff import gh_to_simplex
from .metric_core import (
    PARTITION_LIMIT,
    FiniteMetricSpace,
    block_distance_tables,
    diameter,
    enumerate_rgs,
    get_tolerance,
)

SUPERSET_LIMIT = 16
NETWORK_LIMIT = 7


@dataclass(frozen=True)
class Tree:
    n: int
    edges: tuple[tuple[int, int, float], ...]

    @property
    def length(self) -> float:
        return float(sum(e[2] for e in self.edges))


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


def kruskal(dist: np.ndarray, forced: Sequence[tuple[int, int]] = ()) -> Tree:
    """Kruskal on the complete graph, ties broken by (length, i, j).

    ``forced`` edges are put in the tree first.
    """
    n = len(dist)
    uf = _UnionFind(n)
    edges = []
    for i, j in forced:
        if uf.union(i, j):
            edges.append((min(i, j), max(i, j), float(dist[i, j])))
    iu, ju = np.triu_indices(n, 1)
    order = np.lexsort((ju, iu, dist[iu, ju]))
    for e in order:
        i, j = int(iu[e]), int(ju[e])
        if len(edges) == n - 1:
            break
        if uf.union(i, j):
            edges.append((i, j, float(dist[i, j])))
    return Tree(n, tuple(edges))


def mst(space: FiniteMetricSpace) -> Tree:
    return kruskal(space.dist)


def _prim_length(dist: np.ndarray) -> float:
    n = len(dist)
    if n <= 1:
        return 0.0
    in_tree = np.zeros(n, dtype=bool)
    in_tree[0] = True
    best = dist[0].copy()
    total = 0.0
    for _ in range(n - 1):
        cand = np.where(in_tree, np.inf, best)
        v = int(np.argmin(cand))
        total += float(cand[v])
        in_tree[v] = True
        best = np.minimum(best, dist[v])
    return total


def mst_length(space: FiniteMetricSpace) -> float:
    return _prim_length(space.dist)


def mst_spectrum(space: FiniteMetricSpace) -> tuple[float, ...]:
    """MST edge lengths, descending (independent of which MST is taken)."""
    if space.n < 2:
        raise errors.SingletonSpace("the spectrum needs at least 2 points")
    return tuple(sorted((e[2] for e in mst(space).edges), reverse=True))


def mst_spectrum_by_partitions(space: FiniteMetricSpace,
                               limit: int = PARTITION_LIMIT) -> tuple[float, ...]:
    """sigma_k = max over (k+1)-block partitions of the least inter-block distance."""
    n = space.n
    if n < 2:
        raise errors.SingletonSpace("the spectrum needs at least 2 points")
    out = []
    for k in range(1, n):
        off = ~np.eye(k + 1, dtype=bool)
        best = -np.inf
        for rgs in enumerate_rgs(n, k + 1, limit):
            lo, _ = block_distance_tables(space.dist, np.asarray(rgs), k + 1)
            best = max(best, float(lo[off].min()))
        out.append(best)
    return tuple(out)


def mst_spectrum_by_gh(space: FiniteMetricSpace, lam: float | None = None,
                       limit: int = PARTITION_LIMIT) -> tuple[tuple[float, ...], float]:
    """Spectrum as sigma_k = lam - 2 d_GH(lam Delta_{k+1}, X), lam >= 2 diam X.

    Also returns the mst length lam (n - 1) - 2 sum_k d_GH(lam Delta_{k+1}, X).
    """
    n = space.n
    if n < 2:
        raise errors.SingletonSpace("the spectrum needs at least 2 points")
    d = diameter(space)
    if lam is None:
        lam = 2 * d
    if lam < 2 * d:
        raise errors.LambdaTooSmall(f"lambda={lam} is below 2 diam = {2 * d}", lam=lam, diam=d)
    gh = [gh_to_simplex(space, k + 1, lam, limit) for k in range(1, n)]
    spectrum = tuple(lam - 2 * g for g in gh)
    length = lam * (n - 1) - 2 * sum(gh)
    return spectrum, length


# ---------------------------------------------------------------------------
# Steiner minimal trees


def _check_boundary(ambient: FiniteMetricSpace, M: Sequence[int]) -> tuple[int, ...]:
    M = tuple(sorted(set(int(i) for i in M)))
    if not M:
        raise errors.EmptySet("M must be non-empty")
    if M[0] < 0 or M[-1] >= ambient.n:
        raise errors.IndexOutOfRange("M has an index outside the ambient space")
    return M


def smt_by_supersets(ambient: FiniteMetricSpace, M: Sequence[int], limit: int = SUPERSET_LIMIT,
                     tol: float | None = None) -> tuple[float, tuple[int, ...]]:
    """min of mst(V) over M ⊆ V ⊆ ambient, with the lexicographically first minimiser."""
    tol = get_tolerance(tol)
    M = _check_boundary(ambient, M)
    if ambient.n > limit:
        raise errors.TooLarge(f"{ambient.n} ambient points exceed the guard {limit}",
                              n=ambient.n, limit=limit)
    others = [i for i in range(ambient.n) if i not in M]
    results = []
    for r in range(len(others) + 1):
        for extra in itertools.combinations(others, r):
            V = tuple(sorted(M + extra))
            results.append((_prim_length(ambient.dist[np.ix_(V, V)]), V))
    best = min(length for length, _ in results)
    witness = min(V for length, V in results if length <= best + tol)
    return best, witness


@dataclass(frozen=True)
class SteinerTopology:
    """A full Steiner tree on vertices 0..2n-3 with boundary 0..n-1."""

    n: int
    edges: tuple[tuple[int, int], ...]

    @property
    def vertex_count(self) -> int:
        return max(2 * self.n - 2, 2)

    def degrees(self) -> list[int]:
        deg = [0] * self.vertex_count
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def splits(self) -> frozenset[frozenset[int]]:
        """Boundary bipartitions cut by the edges, each stored as the side without vertex 0."""
        adj: dict[int, list[int]] = {v: [] for v in range(self.vertex_count)}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        out = set()
        for a, b in self.edges:
            seen, stack = {a, b}, [b]
            side = set()
            while stack:
                v = stack.pop()
                if v < self.n:
                    side.add(v)
                for w in adj[v]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            if 0 in side:
                side = set(range(self.n)) - side
            out.add(frozenset(side))
        return frozenset(out)


def enumerate_topologies(n: int) -> Iterator[SteinerTopology]:
    """One representative per class of full Steiner trees with n boundary vertices.

    Leaf k is attached by subdividing each edge of every tree on leaves
    0..k-1; this produces each class exactly once, (2n-5)!! in total.
    """
    if not 2 <= n <= NETWORK_LIMIT:
        raise errors.NOutOfRange(f"n={n} outside [2, {NETWORK_LIMIT}]", n=n)
    if n == 2:
        yield SteinerTopology(2, ((0, 1),))
        return
    # vertices named ("b", leaf) or ("s", creation index) while growing
    def grow(edges, leaf, made):
        if leaf == n:
            yield edges, made
            return
        for e in range(len(edges)):
            u, v = edges[e]
            s = ("s", made)
            new = edges[:e] + [(u, s), (s, v), (s, ("b", leaf))] + edges[e + 1:]
            yield from grow(new, leaf + 1, made + 1)

    start = [(("b", 0), ("s", 0)), (("b", 1), ("s", 0)), (("b", 2), ("s", 0))]
    for edges, _ in grow(start, 3, 1):
        def name(v):
            return v[1] if v[0] == "b" else n + v[1]
        yield SteinerTopology(n, tuple(sorted(tuple(sorted((name(a), name(b)))) for a, b in edges)))


def double_factorial(k: int) -> int:
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def _best_placement(dist: np.ndarray, topo: SteinerTopology, boundary: Sequence[int]):
    """Exact minimum network length for one topology, by dynamic programming.

    Rooted at boundary vertex 0; cost[v][x] is the least length of the
    subtree below v when v sits at ambient point x.
    """
    n = topo.n
    N = len(dist)
    adj: dict[int, list[int]] = {v: [] for v in range(topo.vertex_count)}
    for a, b in topo.edges:
        adj[a].append(b)
        adj[b].append(a)
    parent = {0: None}
    order = [0]
    for v in order:
        for w in adj[v]:
            if w not in parent:
                parent[w] = v
                order.append(w)
    cost: dict[int, np.ndarray] = {}
    choice: dict[int, np.ndarray] = {}
    for v in reversed(order):
        if v < n:
            c = np.full(N, np.inf)
            c[boundary[v]] = 0.0
            if v != 0:
                cost[v] = c
                continue
        else:
            c = np.zeros(N)
        for w in adj[v]:
            if parent.get(w) != v:
                continue
            # via[x, y]: child w at y when v sits at x
            via = cost[w][None, :] + dist
            choice[w] = np.argmin(via, axis=1)
            c = c + via.min(axis=1)
        cost[v] = c
    root_at = boundary[0]
    place = {0: root_at}
    for v in order[1:]:
        place[v] = int(choice[v][place[parent[v]]])
    return float(cost[0][root_at]), tuple(place[v] for v in range(topo.vertex_count))


def smt_by_networks(ambient: FiniteMetricSpace, M: Sequence[int], limit: int = NETWORK_LIMIT):
    """min network length over all full Steiner topologies and interior placements.

    Interior vertices may sit on any ambient point, boundary points
    included.  Returns ``(length, (topology, placement))`` where
    ``placement[v]`` is the ambient index of topology vertex v.
    """
    M = _check_boundary(ambient, M)
    if len(M) > limit:
        raise errors.TooLarge(f"{len(M)} boundary points exceed the guard {limit}",
                              n=len(M), limit=limit)
    if len(M) == 1:
        return 0.0, (None, M)
    best, witness = np.inf, None
    for topo in enumerate_topologies(len(M)):
        length, place = _best_placement(ambient.dist, topo, M)
        if length < best:
            best, witness = length, (topo, place)
    return best, witness
