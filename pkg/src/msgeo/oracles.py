"""Slow, independent reference computations used by the tests and the self-test.

Nothing here shares search code with the main modules: each function goes
back to the defining formula and enumerates the whole search space.
"""

from __future__ import annotations

import itertools
from collections import Counter
from typing import Sequence

import numpy as np

from .combinatorics import BipartiteGraph
from .metric_core import FiniteMetricSpace


def gh_all_relations(X: FiniteMetricSpace, Y: FiniteMetricSpace) -> float:
    """Half the least distortion over every relation that is surjective both ways."""
    n, m = X.n, Y.n
    cells = list(itertools.product(range(n), range(m)))
    best = np.inf
    for mask in range(1, 1 << len(cells)):
        R = [cells[e] for e in range(len(cells)) if mask >> e & 1]
        if {x for x, _ in R} != set(range(n)) or {y for _, y in R} != set(range(m)):
            continue
        dis = max(abs(X.dist[x, x2] - Y.dist[y, y2]) for x, y in R for x2, y2 in R)
        best = min(best, dis)
    return float(best) / 2


def gh_by_maps(X: FiniteMetricSpace, Y: FiniteMetricSpace) -> float:
    """Half the least distortion of graph(f) ∪ graph(g)^-1 over all f: X→Y, g: Y→X.

    Every correspondence contains one of these, and distortion only grows
    with the relation, so the minimum is the GH distance.
    """
    n, m = X.n, Y.n
    best = np.inf
    for f in itertools.product(range(m), repeat=n):
        for g in itertools.product(range(n), repeat=m):
            xs = np.array(list(range(n)) + list(g))
            ys = np.array(list(f) + list(range(m)))
            dis = np.abs(X.dist[np.ix_(xs, xs)] - Y.dist[np.ix_(ys, ys)]).max()
            best = min(best, dis)
    return float(best) / 2


def hausdorff_by_balls(dist: np.ndarray, A: Sequence[int], B: Sequence[int]) -> float:
    """Least r from the distance table with A ⊆ B_r(B) and B ⊆ B_r(A)."""
    A, B = list(A), list(B)
    for r in sorted(set(dist.ravel().tolist())):
        if all(any(dist[a, b] <= r for b in B) for a in A) and \
           all(any(dist[a, b] <= r for a in A) for b in B):
            return float(r)
    raise AssertionError("unreachable: the diameter always works")


def count_s_position_brute(pair, candidates: Sequence[int], s: float, tol: float = 1e-9) -> int:
    from .hausdorff import is_s_position
    cand = list(candidates)
    return sum(is_s_position(pair, C, s, tol)
               for r in range(1, len(cand) + 1) for C in itertools.combinations(cand, r))


def cov_brute(dist: np.ndarray, eps: float) -> int:
    n = len(dist)
    for k in range(1, n + 1):
        for centres in itertools.combinations(range(n), k):
            if np.all((dist[list(centres)] < eps).any(axis=0)):
                return k
    return n


def pack_brute(dist: np.ndarray, eps: float) -> int:
    """Largest set of centres whose open eps/2 balls share no point of the space."""
    n = len(dist)
    inside = dist < eps / 2
    for k in range(n, 0, -1):
        for centres in itertools.combinations(range(n), k):
            if all(not np.any(inside[i] & inside[j]) for i, j in itertools.combinations(centres, 2)):
                return k
    return 0


def prufer_trees(n: int):
    """Every labelled tree on n >= 2 vertices as an edge list."""
    if n == 2:
        yield [(0, 1)]
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield _decode_prufer(list(seq), n)


def _decode_prufer(seq: list[int], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = [x for x in range(n) if degree[x] == 1]
    edges.append((u, w))
    return edges


def mst_length_brute(dist: np.ndarray) -> float:
    n = len(dist)
    if n < 2:
        return 0.0
    return min(float(sum(dist[a, b] for a, b in t)) for t in prufer_trees(n))


def boundary_splits(n: int, V: int, edges) -> frozenset:
    adj = {v: [] for v in range(V)}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    out = set()
    for a, b in edges:
        seen, stack, side = {a, b}, [b], set()
        while stack:
            v = stack.pop()
            if v < n:
                side.add(v)
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if 0 in side:
            side = set(range(n)) - side
        out.add(frozenset(side))
    return frozenset(out)


def full_steiner_classes(n: int) -> list[list[tuple[int, int]]]:
    """Full Steiner trees on boundary 0..n-1, one per class of boundary splits.

    Labelled trees with the right degrees are generated from Prüfer
    sequences in which each interior vertex appears exactly twice.
    """
    if n == 2:
        return [[(0, 1)]]
    V = 2 * n - 2
    interior = list(range(n, V))
    classes: dict[frozenset, list] = {}
    for seq in _multiset_permutations({v: 2 for v in interior}, 2 * len(interior)):
        edges = _decode_prufer(seq, V)
        classes.setdefault(boundary_splits(n, V, edges), edges)
    return list(classes.values())


def _multiset_permutations(counts: dict[int, int], length: int, prefix=None):
    prefix = [] if prefix is None else prefix
    if len(prefix) == length:
        yield list(prefix)
        return
    for v in sorted(counts):
        if counts[v]:
            counts[v] -= 1
            prefix.append(v)
            yield from _multiset_permutations(counts, length, prefix)
            prefix.pop()
            counts[v] += 1


def smt_by_products(dist: np.ndarray, M: Sequence[int]) -> float:
    """Least network length over Prüfer-derived topologies and all interior placements."""
    M = list(M)
    n, N = len(M), len(dist)
    if n == 1:
        return 0.0
    best = np.inf
    for edges in full_steiner_classes(n):
        for inner in itertools.product(range(N), repeat=n - 2):
            place = M + list(inner)
            best = min(best, float(sum(dist[place[a], place[b]] for a, b in edges)))
    return best


def edge_covers_exhaustive(graph: BipartiteGraph) -> int:
    edges = sorted(graph.edges)
    count = 0
    for r in range(len(edges) + 1):
        for S in itertools.combinations(edges, r):
            if {l for l, _ in S} == set(range(graph.p)) and {q for _, q in S} == set(range(graph.q)):
                count += 1
    return count


def edge_covers_inclusion_exclusion(graph: BipartiteGraph) -> int:
    """Sum over uncovered vertex sets U of (-1)^|U| 2^{edges avoiding U}."""
    V = graph.p + graph.q
    ends = [(l, graph.p + r) for l, r in graph.edges]
    total = 0
    for U in range(1 << V):
        free = sum(1 for a, b in ends if not (U >> a & 1 or U >> b & 1))
        total += (-1) ** bin(U).count("1") * (1 << free)
    return total


def cycle_matchings_enumerated(m: int) -> int:
    """Matchings of the m-cycle, counted by listing edge subsets."""
    edges = [(i, (i + 1) % m) for i in range(m)]
    count = 0
    for r in range(m // 2 + 1):
        for S in itertools.combinations(edges, r):
            used = Counter(v for e in S for v in e)
            if all(c == 1 for c in used.values()):
                count += 1
    return count
