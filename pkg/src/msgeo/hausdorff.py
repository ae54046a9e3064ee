"""Hausdorff distance between subsets of a finite ambient space, and s-position sets.

A set C lies in s-position between A and B (with r = d_H(A, B)) when
d_H(A, C) = s and d_H(C, B) = r - s.  Every such C sits inside
C_s(A, B) = B_s(A) ∩ B_{r-s}(B), which :func:`cs_set` computes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import errors
from .metric_core import FiniteMetricSpace, from_points, get_tolerance

COUNT_LIMIT = 20


def _index_set(indices: Iterable[int], n: int, name: str) -> tuple[int, ...]:
    out = tuple(sorted({int(i) for i in indices}))
    if not out:
        raise errors.EmptySet(f"{name} must be non-empty", which=name)
    if out[0] < 0 or out[-1] >= n:
        raise errors.IndexOutOfRange(f"{name} has an index outside range({n})", which=name)
    return out


@dataclass(frozen=True)
class SubsetPair:
    ambient: FiniteMetricSpace
    A: tuple[int, ...]
    B: tuple[int, ...]

    def __init__(self, ambient: FiniteMetricSpace, A: Iterable[int], B: Iterable[int]):
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "A", _index_set(A, ambient.n, "A"))
        object.__setattr__(self, "B", _index_set(B, ambient.n, "B"))


def dist_point_set(ambient: FiniteMetricSpace, i: int, S: Iterable[int]) -> float:
    S = list(S)
    if not S:
        raise errors.EmptySet("S must be non-empty")
    return float(ambient.dist[i, S].min())


def _hausdorff(dist: np.ndarray, A: Sequence[int], B: Sequence[int]) -> float:
    sub = dist[np.ix_(list(A), list(B))]
    return float(max(sub.min(axis=1).max(), sub.min(axis=0).max()))


def hausdorff(pair: SubsetPair) -> float:
    """max of the two directed sup-inf distances."""
    return _hausdorff(pair.ambient.dist, pair.A, pair.B)


def hausdorff_sets(ambient: FiniteMetricSpace, A: Iterable[int], B: Iterable[int]) -> float:
    return hausdorff(SubsetPair(ambient, A, B))


def cs_set(pair: SubsetPair, s: float, tol: float | None = None) -> tuple[int, ...]:
    """Ambient points within s of A and within r - s of B (closed balls, tolerance tol)."""
    tol = get_tolerance(tol)
    r = hausdorff(pair)
    if s < -tol or s > r + tol:
        raise errors.SOutOfRange(f"s={s} outside [0, {r}]", s=s, r=r)
    d = pair.ambient.dist
    to_a = d[:, list(pair.A)].min(axis=1)
    to_b = d[:, list(pair.B)].min(axis=1)
    keep = (to_a <= s + tol) & (to_b <= r - s + tol)
    return tuple(int(i) for i in np.flatnonzero(keep))


def is_s_position(pair: SubsetPair, C: Iterable[int], s: float, tol: float | None = None) -> bool:
    tol = get_tolerance(tol)
    C = list(C)
    if not C:
        raise errors.EmptyC("C must be non-empty")
    r = hausdorff(pair)
    if s < -tol or s > r + tol:
        raise errors.SOutOfRange(f"s={s} outside [0, {r}]", s=s, r=r)
    d = pair.ambient.dist
    return (abs(_hausdorff(d, pair.A, C) - s) <= tol
            and abs(_hausdorff(d, C, pair.B) - (r - s)) <= tol)


def _subset_hausdorff(dist: np.ndarray, fixed: Sequence[int], cand: Sequence[int]) -> np.ndarray:
    """d_H(fixed, C) for every subset C of cand, indexed by bitmask (entry 0 unused).

    Built one bit at a time: subsets containing bit j are the subsets of
    bits < j extended by cand[j].
    """
    k = len(cand)
    sub = dist[np.ix_(list(fixed), list(cand))]  # |fixed| x k
    nearest = np.full((1 << k, len(fixed)), np.inf)  # min over c in C of d(f, c)
    farthest = np.full(1 << k, -np.inf)  # max over c in C of d(c, fixed)
    to_fixed = sub.min(axis=0)
    for j in range(k):
        lo, hi = 1 << j, 1 << (j + 1)
        nearest[lo:hi] = np.minimum(nearest[:lo], sub[:, j])
        farthest[lo:hi] = np.maximum(farthest[:lo], to_fixed[j])
    return np.maximum(nearest.max(axis=1), farthest)


def count_s_position_sets(pair: SubsetPair, candidates: Iterable[int] | None, s: float,
                          tol: float | None = None, limit: int = COUNT_LIMIT) -> int:
    """Number of non-empty C ⊆ candidates in s-position between A and B.

    ``candidates=None`` means ``cs_set(pair, s)``.
    """
    tol = get_tolerance(tol)
    r = hausdorff(pair)
    if s < -tol or s > r + tol:
        raise errors.SOutOfRange(f"s={s} outside [0, {r}]", s=s, r=r)
    cand = cs_set(pair, s, tol) if candidates is None else tuple(sorted(set(candidates)))
    if len(cand) > limit:
        raise errors.TooLarge(f"{len(cand)} candidates exceed the guard {limit}",
                              n=len(cand), limit=limit)
    if not cand:
        return 0
    d = pair.ambient.dist
    to_a = _subset_hausdorff(d, pair.A, cand)
    to_b = _subset_hausdorff(d, pair.B, cand)
    ok = (np.abs(to_a - s) <= tol) & (np.abs(to_b - (r - s)) <= tol)
    return int(ok[1:].sum())


def segment_candidates(points, A: Sequence[int], B: Sequence[int], s: float,
                       metric: str = "euclidean", tol: float | None = None):
    """Point cloud extended by the s-position point of every closest cross pair.

    For each a in A, b in B with |ab| = r = d_H(A, B), the point a + (s/r)(b - a)
    is appended.  Returns ``(ambient, pair, new_indices)``; for a finite
    Euclidean configuration the new points are exactly C_s(A, B).
    """
    tol = get_tolerance(tol)
    pts = np.asarray(points, dtype=float)
    base = from_points(pts, metric)
    pair = SubsetPair(base, A, B)
    r = hausdorff(pair)
    if r <= 0 or not 0 <= s <= r:
        raise errors.SOutOfRange(f"s={s} outside [0, {r}]", s=s, r=r)
    extra = [pts[a] + (s / r) * (pts[b] - pts[a])
             for a in pair.A for b in pair.B if abs(base.dist[a, b] - r) <= tol]
    ambient = from_points(np.vstack([pts, *extra]) if extra else pts, metric)
    new = tuple(range(len(pts), len(pts) + len(extra)))
    return ambient, SubsetPair(ambient, pair.A, pair.B), new
