"""Finite metric spaces, partitions and covering/packing numbers."""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from . import errors

DEFAULT_TOLERANCE = 1e-9
PARTITION_LIMIT = 12
COVER_LIMIT = 20


def get_tolerance(tol: float | None = None) -> float:
    """Resolve the absolute tolerance: explicit value, then MSGEO_TOLERANCE, then 1e-9."""
    if tol is not None:
        return float(tol)
    env = os.environ.get("MSGEO_TOLERANCE")
    if env:
        return float(env)
    return DEFAULT_TOLERANCE


@dataclass(frozen=True, eq=False)
class FiniteMetricSpace:
    """Labelled points with a validated, exactly symmetric distance table.

    Build instances through :func:`validate_space` (or the helpers in this
    module); the constructor itself does not check the metric axioms.
    """

    labels: tuple[str, ...]
    dist: np.ndarray

    def __post_init__(self):
        self.dist.setflags(write=False)

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def n(self) -> int:
        return len(self.labels)

    def subspace(self, indices: Sequence[int]) -> "FiniteMetricSpace":
        idx = list(indices)
        return FiniteMetricSpace(
            tuple(self.labels[i] for i in idx),
            np.array(self.dist[np.ix_(idx, idx)], dtype=float),
        )

    def permuted(self, order: Sequence[int]) -> "FiniteMetricSpace":
        return self.subspace(order)

    def same_table(self, other: "FiniteMetricSpace", tol: float | None = None) -> bool:
        tol = get_tolerance(tol)
        return self.n == other.n and bool(np.all(np.abs(self.dist - other.dist) <= tol))

    def to_json(self) -> dict:
        return {"labels": list(self.labels), "matrix": self.dist.tolist()}

    def __repr__(self) -> str:
        return f"FiniteMetricSpace(n={self.n}, labels={list(self.labels)})"


def validate_space(labels: Sequence, dist_table, tolerance: float | None = None) -> FiniteMetricSpace:
    """Check the metric axioms and return a :class:`FiniteMetricSpace`.

    Raises the error naming the first violated axiom, with the witnessing
    indices in ``detail``.  Checks run in the order: shape, finiteness,
    non-negativity, zero diagonal, symmetry, positivity, triangle inequality.
    """
    tol = get_tolerance(tolerance)
    labels = tuple(str(x) for x in labels)
    try:
        d = np.array(dist_table, dtype=float)
    except (TypeError, ValueError) as exc:
        raise errors.NonSquare(f"distance table is not a numeric square table: {exc}") from None
    n = len(labels)
    if d.ndim != 2 or d.shape != (n, n):
        raise errors.NonSquare(f"expected a {n}x{n} table, got shape {d.shape}", shape=list(d.shape))
    if n == 0:
        raise errors.NonSquare("a metric space needs at least one point", shape=[0, 0])
    if len(set(labels)) != n:
        dup = next(x for x in labels if labels.count(x) > 1)
        raise errors.DuplicateLabel(f"label {dup!r} appears twice", label=dup)
    if not np.all(np.isfinite(d)):
        i, j = map(int, np.argwhere(~np.isfinite(d))[0])
        raise errors.NonFinite(f"non-finite entry at ({i},{j})", i=i, j=j)
    neg = np.argwhere(d < 0)
    if len(neg):
        i, j = map(int, neg[0])
        raise errors.NegativeAt(f"negative distance at ({i},{j})", i=i, j=j)
    diag = np.flatnonzero(np.abs(np.diag(d)) > tol)
    if len(diag):
        i = int(diag[0])
        raise errors.NonZeroDiagonal(f"dist[{i}][{i}] = {d[i, i]}", i=i)
    asym = np.argwhere(np.triu(np.abs(d - d.T) > tol))
    if len(asym):
        i, j = map(int, asym[0])
        raise errors.AsymmetricAt(f"dist[{i}][{j}] != dist[{j}][{i}]", i=i, j=j)
    d = (d + d.T) / 2
    np.fill_diagonal(d, 0.0)
    off = ~np.eye(n, dtype=bool)
    zero = np.argwhere(np.triu(off & (d <= tol)))
    if len(zero):
        i, j = map(int, zero[0])
        raise errors.ZeroOffDiagonal(f"distinct points {i} and {j} at distance 0", i=i, j=j)
    # violation[i, j, k]: d(i,k) > d(i,j) + d(j,k)
    viol = d[:, None, :] > d[:, :, None] + d[None, :, :] + tol
    if viol.any():
        i, j, k = map(int, np.argwhere(viol)[0])
        raise errors.TriangleViolation(
            f"d({i},{k}) > d({i},{j}) + d({j},{k})", i=i, j=j, k=k
        )
    return FiniteMetricSpace(labels, d)


def default_labels(n: int) -> list[str]:
    return [str(i) for i in range(n)]


def from_matrix(dist_table, labels: Sequence | None = None, tolerance: float | None = None) -> FiniteMetricSpace:
    d = np.asarray(dist_table, dtype=float)
    if labels is None:
        labels = default_labels(len(d))
    return validate_space(labels, d, tolerance)


def from_points(points, metric: str = "euclidean", labels: Sequence | None = None,
                tolerance: float | None = None) -> FiniteMetricSpace:
    """Build a space from coordinates under the euclidean or l-infinity metric."""
    p = np.asarray(points, dtype=float)
    if p.ndim == 1:
        p = p[:, None]
    diff = p[:, None, :] - p[None, :, :]
    if metric == "euclidean":
        d = np.sqrt((diff ** 2).sum(axis=-1))
    elif metric == "linf":
        d = np.abs(diff).max(axis=-1)
    else:
        raise errors.InvalidParams(f"unknown metric {metric!r}", metric=metric)
    return from_matrix(d, labels, tolerance)


def line(values: Sequence[float]) -> FiniteMetricSpace:
    """Points on the real line, labelled by their coordinates."""
    return from_points(list(values), labels=[f"{v:g}" for v in values])


def simplex(m: int, lam: float) -> FiniteMetricSpace:
    """``m`` points with every non-zero distance equal to ``lam``."""
    if m < 1:
        raise errors.InvalidParams("simplex needs m >= 1", m=m)
    if m >= 2 and lam <= 0:
        raise errors.InvalidParams("simplex with m >= 2 needs lambda > 0", m=m, lam=lam)
    if lam < 0:
        raise errors.InvalidParams("lambda must be non-negative", m=m, lam=lam)
    d = np.full((m, m), float(lam))
    np.fill_diagonal(d, 0.0)
    return FiniteMetricSpace(tuple(default_labels(m)), d)


def scale(space: FiniteMetricSpace, lam: float) -> FiniteMetricSpace:
    """Multiply every distance by ``lam``; ``lam == 0`` collapses to one point."""
    if lam < 0:
        raise errors.InvalidParams("scale factor must be non-negative", lam=lam)
    if lam == 0:
        return FiniteMetricSpace(space.labels[:1], np.zeros((1, 1)))
    return FiniteMetricSpace(space.labels, space.dist * float(lam))


def diameter(space: FiniteMetricSpace) -> float:
    return float(space.dist.max()) if space.n > 1 else 0.0


def eps_min(space: FiniteMetricSpace) -> float:
    """Smallest distance between distinct points."""
    if space.n < 2:
        raise errors.SingletonSpace("eps_min is undefined on a one-point space")
    return float(space.dist[~np.eye(space.n, dtype=bool)].min())


# ---------------------------------------------------------------------------
# partitions


@dataclass(frozen=True)
class Partition:
    """Disjoint non-empty blocks of point indices, in restricted-growth order."""

    blocks: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.blocks)

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    def labels(self) -> np.ndarray:
        """Block id of every point."""
        out = np.empty(self.n, dtype=np.intp)
        for b, block in enumerate(self.blocks):
            out[list(block)] = b
        return out

    @classmethod
    def from_rgs(cls, rgs: Sequence[int]) -> "Partition":
        k = max(rgs) + 1 if len(rgs) else 0
        blocks: list[list[int]] = [[] for _ in range(k)]
        for i, b in enumerate(rgs):
            blocks[b].append(i)
        return cls(tuple(tuple(b) for b in blocks))

    def check(self, n: int) -> None:
        seen = [i for b in self.blocks for i in b]
        if any(len(b) == 0 for b in self.blocks):
            raise errors.InvalidPartition("empty block")
        if sorted(seen) != list(range(n)):
            raise errors.InvalidPartition(f"blocks do not partition range({n})", n=n)


@dataclass(frozen=True)
class PartitionStats:
    diam: float
    alpha: float
    beta: float


def _rgs_exact(n: int, m: int) -> Iterator[list[int]]:
    """Restricted growth strings of length n using exactly m block ids, in lex order."""
    rgs = [0] * n

    def rec(i: int, used: int):
        if n - i < m - used:
            return
        if i == n:
            if used == m:
                yield list(rgs)
            return
        for b in range(min(used + 1, m)):
            rgs[i] = b
            yield from rec(i + 1, max(used, b + 1))

    if n == 0:
        return
    rgs[0] = 0
    yield from rec(1, 1)


def enumerate_rgs(n: int, m: int, limit: int = PARTITION_LIMIT) -> Iterator[list[int]]:
    if not 1 <= m <= n:
        raise errors.InvalidParams(f"need 1 <= m <= n, got m={m}, n={n}", m=m, n=n)
    if n > limit:
        raise errors.TooLarge(f"{n} points exceed the partition guard {limit}", n=n, limit=limit)
    return _rgs_exact(n, m)


def enumerate_partitions(space: FiniteMetricSpace | int, m: int,
                         limit: int = PARTITION_LIMIT) -> Iterator[Partition]:
    """Every partition of the points into exactly ``m`` blocks, each once."""
    n = space if isinstance(space, int) else space.n
    for rgs in enumerate_rgs(n, m, limit):
        yield Partition.from_rgs(rgs)


def block_distance_tables(dist: np.ndarray, labels: np.ndarray, k: int) -> tuple[np.ndarray, np.ndarray]:
    """k x k tables of min and max pointwise distance between blocks.

    The diagonal holds 0 (min) and the block diameter (max).
    """
    mask = labels[None, :] == np.arange(k)[:, None]
    pair = mask[:, None, :, None] & mask[None, :, None, :]
    lo = np.where(pair, dist, np.inf).min(axis=(2, 3))
    hi = np.where(pair, dist, -np.inf).max(axis=(2, 3))
    return lo, hi


def partition_stats(space: FiniteMetricSpace, partition: Partition) -> PartitionStats:
    """diam, alpha and beta of a partition.

    A one-block partition reports alpha = inf and beta = 0.
    """
    partition.check(space.n)
    k = len(partition)
    lo, hi = block_distance_tables(space.dist, partition.labels(), k)
    diam = float(np.diag(hi).max())
    if k == 1:
        return PartitionStats(diam, float("inf"), 0.0)
    off = ~np.eye(k, dtype=bool)
    return PartitionStats(diam, float(lo[off].min()), float(hi[off].max()))


# ---------------------------------------------------------------------------
# covering and packing numbers


def _subset_table(space: FiniteMetricSpace, subset: Sequence[int] | None, limit: int) -> np.ndarray:
    idx = list(range(space.n)) if subset is None else sorted(set(subset))
    if not idx:
        raise errors.EmptySet("subset must be non-empty")
    if any(not 0 <= i < space.n for i in idx):
        raise errors.IndexOutOfRange("subset index out of range")
    if len(idx) > limit:
        raise errors.TooLarge(f"{len(idx)} points exceed the cover/pack guard {limit}",
                              n=len(idx), limit=limit)
    return space.dist[np.ix_(idx, idx)]


def cov(space: FiniteMetricSpace, subset: Sequence[int] | None = None, eps: float = 1.0,
        limit: int = COVER_LIMIT) -> int:
    """Least number of open eps-balls, centred in the subset, that cover it."""
    if eps <= 0:
        raise errors.InvalidParams("eps must be positive", eps=eps)
    d = _subset_table(space, subset, limit)
    n = len(d)
    inside = d < eps
    for k in range(1, n + 1):
        for centres in itertools.combinations(range(n), k):
            if inside[list(centres)].any(axis=0).all():
                return k
    return n  # unreachable: every point covers itself


def pack(space: FiniteMetricSpace, subset: Sequence[int] | None = None, eps: float = 1.0,
         limit: int = COVER_LIMIT) -> int:
    """Greatest number of pairwise disjoint open (eps/2)-balls centred in the subset.

    Balls live in the subset itself, so two balls meet exactly when some
    subset point lies within eps/2 of both centres.
    """
    if eps <= 0:
        raise errors.InvalidParams("eps must be positive", eps=eps)
    d = _subset_table(space, subset, limit)
    n = len(d)
    near = d < eps / 2
    meet = (near[:, None, :] & near[None, :, :]).any(axis=2)
    np.fill_diagonal(meet, False)
    adj = [sum(1 << int(j) for j in np.flatnonzero(meet[i])) for i in range(n)]
    return _max_independent_set(adj, (1 << n) - 1)


def _max_independent_set(adj: list[int], candidates: int) -> int:
    if candidates == 0:
        return 0
    v = candidates.bit_length() - 1
    rest = candidates & ~(1 << v)
    if adj[v] & rest == 0:
        # v has no conflicts left; taking it is never worse
        return 1 + _max_independent_set(adj, rest)
    with_v = 1 + _max_independent_set(adj, rest & ~adj[v])
    return max(with_v, _max_independent_set(adj, rest))
