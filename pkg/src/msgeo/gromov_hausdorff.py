"""Correspondences, distortion and exact Gromov-Hausdorff distance for small spaces.

The exact search runs over irreducible correspondences only.  Each one is a
union of products X_i x Y_i over a pair of k-block partitions matched by a
block bijection in which every matched pair has a singleton side.  For such
a correspondence the distortion reduces to block tables:

    dis R = max over i, j of  max(|X_i X_j|' - |Y_i Y_j|,  |Y_i Y_j|' - |X_i X_j|)

with |.|' the largest and |.| the smallest pointwise distance (the diagonal
terms give the block diameters).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

import numpy as np

from . import errors
from .metric_core import (
    PARTITION_LIMIT,
    FiniteMetricSpace,
    Partition,
    _rgs_exact,
    block_distance_tables,
    diameter,
    enumerate_rgs,
    eps_min,
    get_tolerance,
    scale,
)

GH_LIMIT = 8


@dataclass(frozen=True)
class Correspondence:
    """A relation between index ranges, surjective onto both sides."""

    left_size: int
    right_size: int
    pairs: frozenset[tuple[int, int]]

    def __init__(self, left_size: int, right_size: int, pairs: Iterable[tuple[int, int]]):
        pairs = frozenset((int(i), int(j)) for i, j in pairs)
        object.__setattr__(self, "left_size", int(left_size))
        object.__setattr__(self, "right_size", int(right_size))
        object.__setattr__(self, "pairs", pairs)
        left = {i for i, _ in pairs}
        right = {j for _, j in pairs}
        if left != set(range(left_size)) or right != set(range(right_size)):
            raise errors.InvalidCorrespondence(
                "pairs must cover every index on both sides",
                left_size=left_size, right_size=right_size,
            )

    def sorted_pairs(self) -> list[tuple[int, int]]:
        return sorted(self.pairs)

    def image(self, i: int) -> list[int]:
        return sorted(j for a, j in self.pairs if a == i)

    def preimage(self, j: int) -> list[int]:
        return sorted(i for i, b in self.pairs if b == j)

    def is_irreducible(self) -> bool:
        deg_l = np.bincount([i for i, _ in self.pairs], minlength=self.left_size)
        deg_r = np.bincount([j for _, j in self.pairs], minlength=self.right_size)
        return all(min(deg_l[i], deg_r[j]) == 1 for i, j in self.pairs)

    def compose(self, other: "Correspondence") -> "Correspondence":
        """``other ∘ self``: pairs (i, k) with (i, j) in self and (j, k) in other."""
        if self.right_size != other.left_size:
            raise errors.InvalidCorrespondence("sizes do not chain")
        out = {(i, k) for i, j in self.pairs for j2, k in other.pairs if j == j2}
        return Correspondence(self.left_size, other.right_size, out)

    def inverse(self) -> "Correspondence":
        return Correspondence(self.right_size, self.left_size, ((j, i) for i, j in self.pairs))


@dataclass(frozen=True)
class GHResult:
    distance: float
    witness: Correspondence


def identity_correspondence(n: int) -> Correspondence:
    return Correspondence(n, n, ((i, i) for i in range(n)))


def relation_distortion(X: FiniteMetricSpace, Y: FiniteMetricSpace,
                        pairs: Iterable[tuple[int, int]]) -> float:
    """sup |d_X(x, x') - d_Y(y, y')| over related pairs; any relation, surjective or not."""
    pairs = list(pairs)
    if not pairs:
        return 0.0
    I = np.array([p[0] for p in pairs])
    J = np.array([p[1] for p in pairs])
    return float(np.abs(X.dist[np.ix_(I, I)] - Y.dist[np.ix_(J, J)]).max())


def distortion(X: FiniteMetricSpace, Y: FiniteMetricSpace, corr: Correspondence) -> float:
    if corr.left_size != X.n or corr.right_size != Y.n:
        raise errors.InvalidCorrespondence(
            f"correspondence is {corr.left_size}x{corr.right_size}, spaces are {X.n}x{Y.n}"
        )
    return relation_distortion(X, Y, corr.pairs)


def _check_sizes(X: FiniteMetricSpace, Y: FiniteMetricSpace, limit: int) -> None:
    if max(X.n, Y.n) > limit:
        raise errors.TooLarge(f"exact GH search is guarded at {limit} points",
                              n=X.n, m=Y.n, limit=limit)


@lru_cache(maxsize=None)
def _perms(k: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(k))), dtype=np.intp).reshape(-1, k)


def _blocks_of(rgs, k: int) -> list[list[int]]:
    blocks: list[list[int]] = [[] for _ in range(k)]
    for i, b in enumerate(rgs):
        blocks[b].append(i)
    return blocks


def enumerate_irreducible(X: FiniteMetricSpace, Y: FiniteMetricSpace,
                          limit: int = GH_LIMIT) -> Iterator[Correspondence]:
    """Every irreducible correspondence exactly once.

    Order: block count k ascending, partitions of X then of Y in
    restricted-growth order, block bijections lexicographic.
    """
    _check_sizes(X, Y, limit)
    n, m = X.n, Y.n
    for k in range(1, min(n, m) + 1):
        ys = [_blocks_of(r, k) for r in _rgs_exact(m, k)]
        for rx in _rgs_exact(n, k):
            xb = _blocks_of(rx, k)
            for yb in ys:
                for perm in itertools.permutations(range(k)):
                    if all(len(xb[i]) == 1 or len(yb[perm[i]]) == 1 for i in range(k)):
                        yield Correspondence(n, m, (
                            (x, y) for i in range(k) for x in xb[i] for y in yb[perm[i]]
                        ))


def _partition_tables(space: FiniteMetricSpace, k: int):
    rgs_list, lo, hi = [], [], []
    for rgs in _rgs_exact(space.n, k):
        labels = np.asarray(rgs)
        l, h = block_distance_tables(space.dist, labels, k)
        rgs_list.append(rgs)
        lo.append(l)
        hi.append(h)
    lo_arr = np.array(lo)
    hi_arr = np.array(hi)
    single = np.array([np.bincount(r, minlength=k) == 1 for r in rgs_list])
    return rgs_list, lo_arr, hi_arr, single


def _upper_bound(X: FiniteMetricSpace, Y: FiniteMetricSpace) -> float:
    """Distortion of some correspondence; only used to prune the search."""
    bound = max(diameter(X), diameter(Y))  # X x Y
    if X.n == Y.n and X.n <= GH_LIMIT:
        P = _perms(X.n)
        DY = Y.dist[P[:, :, None], P[:, None, :]]
        bound = min(bound, float(np.abs(X.dist[None] - DY).max(axis=(1, 2)).min()))
    return bound


def gh_exact(X: FiniteMetricSpace, Y: FiniteMetricSpace, limit: int = GH_LIMIT) -> GHResult:
    """Exact d_GH with an optimal irreducible witness.

    The witness is the first optimal correspondence in the order used by
    :func:`enumerate_irreducible`.  Pruning skips only candidates that
    cannot be strictly better than the best found so far, so it never
    changes the answer or the witness.
    """
    _check_sizes(X, Y, limit)
    n, m = X.n, Y.n
    upper = _upper_bound(X, Y)
    upper_slack = upper + 1e-12 * max(1.0, upper)
    lower = abs(diameter(X) - diameter(Y))
    best = np.inf
    found = None
    for k in range(1, min(n, m) + 1):
        if best <= lower:
            break
        y_rgs, y_lo, y_hi, y_single = _partition_tables(Y, k)
        y_diam = np.diagonal(y_hi, axis1=1, axis2=2).max(axis=1)
        y_nonsingle = (~y_single).sum(axis=1)
        perms = _perms(k)
        for rx in _rgs_exact(n, k):
            labels = np.asarray(rx)
            x_lo, x_hi = block_distance_tables(X.dist, labels, k)
            x_diam = float(np.diag(x_hi).max())
            if x_diam >= best or x_diam > upper_slack:
                continue
            x_single = np.bincount(labels, minlength=k) == 1
            x_nonsingle = int((~x_single).sum())
            cut = min(best, upper_slack)
            keep = np.flatnonzero(
                (y_diam <= cut)
                & (y_nonsingle <= int(x_single.sum()))
                & (x_nonsingle <= k - y_nonsingle)
            )
            if len(keep) == 0:
                continue
            ok = (x_single[None, None, :] | y_single[keep][:, perms]).all(axis=2)
            pi, qi = np.nonzero(ok)
            if len(pi) == 0:
                continue
            yp = keep[pi]
            P = perms[qi]
            lo_p = y_lo[yp[:, None, None], P[:, :, None], P[:, None, :]]
            hi_p = y_hi[yp[:, None, None], P[:, :, None], P[:, None, :]]
            vals = np.maximum(x_hi[None] - lo_p, hi_p - x_lo[None]).max(axis=(1, 2))
            t = int(np.argmin(vals))
            if vals[t] < best:
                best = float(vals[t])
                found = (rx, y_rgs[yp[t]], tuple(P[t]), k)
            if best <= lower:
                break
    rx, ry, perm, k = found
    xb, yb = _blocks_of(rx, k), _blocks_of(ry, k)
    witness = Correspondence(n, m, (
        (x, y) for i in range(k) for x in xb[i] for y in yb[perm[i]]
    ))
    return GHResult(best / 2, witness)


def gh_distance(X: FiniteMetricSpace, Y: FiniteMetricSpace, limit: int = GH_LIMIT) -> float:
    return gh_exact(X, Y, limit).distance


# ---------------------------------------------------------------------------
# closed forms and bounds


def gh_two_point(X: FiniteMetricSpace, Y: FiniteMetricSpace) -> float:
    if X.n != 2 or Y.n != 2:
        raise errors.WrongCardinality("both spaces must have 2 points", n=X.n, m=Y.n)
    return abs(float(X.dist[0, 1]) - float(Y.dist[0, 1])) / 2


def _sorted_sides(space: FiniteMetricSpace) -> np.ndarray:
    return np.sort(space.dist[np.triu_indices(3, 1)])


def gh_three_point(X: FiniteMetricSpace, Y: FiniteMetricSpace) -> float:
    """Half the largest gap between the ascending-sorted side lengths."""
    if X.n != 3 or Y.n != 3:
        raise errors.WrongCardinality("both spaces must have 3 points", n=X.n, m=Y.n)
    return float(np.abs(_sorted_sides(X) - _sorted_sides(Y)).max()) / 2


def gh_bounds(X: FiniteMetricSpace, Y: FiniteMetricSpace) -> tuple[float, float]:
    dx, dy = diameter(X), diameter(Y)
    return abs(dx - dy) / 2, max(dx, dy) / 2


def gh_to_simplex(X: FiniteMetricSpace, m: int, lam: float,
                  limit: int = PARTITION_LIMIT) -> float:
    """d_GH(lam * Delta_m, X) from the simplex formulas.

    m = 1 or lam = 0: the simplex is a point, so the value is diam X / 2.
    m > #X:   max(lam, diam X - lam) / 2.
    m = #X:   max(lam - eps_min X, diam X - lam) / 2.
    2 <= m < #X: min over m-block partitions D of
              max(diam D, lam - alpha(D), diam X - lam) / 2.
    """
    if m < 1:
        raise errors.InvalidParams("m must be >= 1", m=m)
    if lam < 0:
        raise errors.InvalidParams("lambda must be non-negative", lam=lam)
    n = X.n
    dX = diameter(X)
    if m == 1 or lam == 0:
        return dX / 2
    if m > n:
        return max(lam, dX - lam) / 2
    if m == n:
        return max(lam - eps_min(X), dX - lam) / 2
    best = np.inf
    off = ~np.eye(m, dtype=bool)
    for rgs in enumerate_rgs(n, m, limit):
        lo, hi = block_distance_tables(X.dist, np.asarray(rgs), m)
        val = max(float(np.diag(hi).max()), lam - float(lo[off].min()))
        best = min(best, val)
    return max(best, dX - lam) / 2


def gh_scaling_check(X: FiniteMetricSpace, Y: FiniteMetricSpace, lam: float,
                     limit: int = GH_LIMIT) -> tuple[float, float]:
    """(d_GH(lam X, lam Y), lam * d_GH(X, Y))."""
    if lam < 0:
        raise errors.InvalidParams("lambda must be non-negative", lam=lam)
    lhs = gh_exact(scale(X, lam), scale(Y, lam), limit).distance
    rhs = lam * gh_exact(X, Y, limit).distance
    return lhs, rhs


# ---------------------------------------------------------------------------
# geodesics and epsilon-isometries


def interpolate(X: FiniteMetricSpace, Y: FiniteMetricSpace, corr: Correspondence, t: float,
                tol: float | None = None) -> FiniteMetricSpace:
    """The space R_t: related pairs with d_t = (1 - t) d_X + t d_Y.

    t = 0 and t = 1 return X and Y.  Pairs closer than tol are merged so the
    result stays a metric space.
    """
    tol = get_tolerance(tol)
    if not 0 <= t <= 1:
        raise errors.TOutOfRange(f"t={t} outside [0, 1]", t=t)
    if corr.left_size != X.n or corr.right_size != Y.n:
        raise errors.InvalidCorrespondence("correspondence does not match the spaces")
    if t == 0:
        return X
    if t == 1:
        return Y
    pairs = corr.sorted_pairs()
    I = np.array([p[0] for p in pairs])
    J = np.array([p[1] for p in pairs])
    d = (1 - t) * X.dist[np.ix_(I, I)] + t * Y.dist[np.ix_(J, J)]
    keep: list[int] = []
    for a in range(len(pairs)):
        if all(d[a, b] > tol for b in keep):
            keep.append(a)
    labels = tuple(f"{X.labels[pairs[a][0]]}|{Y.labels[pairs[a][1]]}" for a in keep)
    return FiniteMetricSpace(labels, np.array(d[np.ix_(keep, keep)]))


def extract_map(corr: Correspondence) -> tuple[int, ...]:
    """A map contained in the correspondence: smallest related right index per left index."""
    first = [corr.right_size] * corr.left_size
    for i, j in corr.pairs:
        first[i] = min(first[i], j)
    return tuple(first)
