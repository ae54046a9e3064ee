"""Seeded generators for random finite spaces, subsets and graphs."""

from __future__ import annotations

import itertools

import numpy as np

from .combinatorics import BipartiteGraph, SimpleGraph
from .metric_core import FiniteMetricSpace, default_labels


def rng(seed: int | np.random.Generator | None = 0) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def integer_space(n: int, gen: np.random.Generator, low: int = 1, high: int = 9,
                  max_tries: int = 1000) -> FiniteMetricSpace:
    """Integer distances in [low, high] satisfying the triangle inequality.

    Points are added one at a time; the new row is redrawn until it is
    compatible with the rows already placed.  A constant row always fits,
    so a fallback exists if the draws keep failing.
    """
    d = np.zeros((n, n))
    for k in range(1, n):
        for _ in range(max_tries):
            row = gen.integers(low, high + 1, size=k).astype(float)
            prev = d[:k, :k]
            ok = (np.all(row[:, None] <= row[None, :] + prev)
                  and np.all(prev <= row[:, None] + row[None, :]))
            if ok:
                d[k, :k] = d[:k, k] = row
                break
        else:  # pragma: no cover
            d[k, :k] = d[:k, k] = high
    return FiniteMetricSpace(tuple(default_labels(n)), d)


def euclidean_space(n: int, gen: np.random.Generator, dim: int = 2) -> FiniteMetricSpace:
    pts = gen.random((n, dim))
    d = np.sqrt(((pts[:, None, :] - pts[None, :, :]) ** 2).sum(-1))
    return FiniteMetricSpace(tuple(default_labels(n)), d)


def random_space(gen: np.random.Generator, n_min: int, n_max: int) -> FiniteMetricSpace:
    """Integer space with n drawn uniformly from [n_min, n_max]."""
    return integer_space(int(gen.integers(n_min, n_max + 1)), gen)


def random_subset(gen: np.random.Generator, n: int) -> tuple[int, ...]:
    """Uniform non-empty subset of range(n)."""
    while True:
        mask = gen.random(n) < 0.5
        if mask.any():
            return tuple(int(i) for i in np.flatnonzero(mask))


def random_graph(gen: np.random.Generator, n: int, p: float = 0.5) -> SimpleGraph:
    return SimpleGraph(n, (e for e in itertools.combinations(range(n), 2) if gen.random() < p))


def random_bipartite_with_cover(gen: np.random.Generator, max_vertices: int = 7) -> BipartiteGraph:
    """Random bipartite graph in which every vertex has an edge."""
    while True:
        p = int(gen.integers(1, max_vertices))
        q = int(gen.integers(1, max_vertices - p + 1))
        edges = [c for c in itertools.product(range(p), range(q)) if gen.random() < 0.5]
        left = {l for l, _ in edges}
        right = {r for _, r in edges}
        if len(left) == p and len(right) == q:
            return BipartiteGraph(p, q, edges)


def permuted_copy(space: FiniteMetricSpace, gen: np.random.Generator) -> FiniteMetricSpace:
    return space.permuted([int(i) for i in gen.permutation(space.n)])
