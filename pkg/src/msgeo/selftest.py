"""Oracle-equivalence suites: each one compares a fast route with a brute force."""

from __future__ import annotations

import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Callable

import numpy as np

from . import combinatorics as comb
from . import oracles
from .gromov_hausdorff import gh_exact, gh_to_simplex
from .hausdorff import hausdorff_sets
from .metric_core import cov, diameter, pack, scale, simplex
from .random_spaces import (
    integer_space,
    random_bipartite_with_cover,
    random_space,
    random_subset,
)
from .trees import (
    enumerate_topologies,
    double_factorial,
    mst_spectrum,
    mst_spectrum_by_gh,
    mst_spectrum_by_partitions,
    smt_by_networks,
    smt_by_supersets,
)

SCALES = ("quick", "full")


@dataclass
class SuiteResult:
    name: str
    cases: int
    max_deviation: float
    passed: bool
    seconds: float = 0.0


def _gh_relations(gen, n_cases, big):
    dev = 0.0
    for _ in range(n_cases):
        X, Y = random_space(gen, 1, 3), random_space(gen, 1, 3)
        dev = max(dev, abs(gh_exact(X, Y).distance - oracles.gh_all_relations(X, Y)))
    for _ in range(n_cases // 4 if big else 2):
        X, Y = random_space(gen, 2, 4), random_space(gen, 2, 4)
        dev = max(dev, abs(gh_exact(X, Y).distance - oracles.gh_by_maps(X, Y)))
    return n_cases + (n_cases // 4 if big else 2), dev, 1e-9


def _simplex(gen, n_cases, big):
    top = 6 if big else 5
    count, dev = 0, 0.0
    for _ in range(n_cases):
        X = random_space(gen, 1, top)
        d = diameter(X)
        for m in range(1, 7):
            for lam in (0.5, 1.0, d, 2 * d):
                exact = gh_exact(scale(simplex(m, 1.0), lam), X).distance
                dev = max(dev, abs(gh_to_simplex(X, m, lam) - exact))
                count += 1
    return count, dev, 1e-9


def _spectrum(gen, n_cases, big):
    dev = 0.0
    for _ in range(n_cases):
        X = random_space(gen, 3, 6)
        a = np.array(mst_spectrum(X))
        b = np.array(mst_spectrum_by_partitions(X))
        c, length = mst_spectrum_by_gh(X)
        dev = max(dev, np.abs(a - b).max(), np.abs(a - np.array(c)).max(),
                  abs(length - oracles.mst_length_brute(X.dist)) / X.n)
    return n_cases, float(dev), 1e-9


def _steiner(gen, n_cases, big):
    dev = 0.0
    for _ in range(n_cases):
        A = random_space(gen, 2, 8 if big else 6)
        M = random_subset(gen, A.n)[:4]
        s = smt_by_supersets(A, M)[0]
        t = smt_by_networks(A, M)[0]
        dev = max(dev, abs(s - t), abs(s - oracles.smt_by_products(A.dist, M)))
    for n in range(3, 8 if big else 6):
        dev = max(dev, abs(sum(1 for _ in enumerate_topologies(n)) - double_factorial(2 * n - 5)))
    return n_cases, dev, 1e-9


def _borsuk(gen, n_cases, big):
    bad = 0
    for _ in range(n_cases):
        X = random_space(gen, 2, 6)
        for m in range(2, X.n + 1):
            bad += comb.borsuk_by_gh(X, m) != comb.borsuk_partitionable(X, m)
    return n_cases, float(bad), 0.0


def _graphs(gen, n_cases, big):
    graphs = comb.nonisomorphic_graphs(5 if big else 4)
    bad = 0
    for g in graphs:
        theta = comb.clique_cover_number(g, verify=False)
        gamma = comb.chromatic_number(g, verify=False)
        bad += theta != comb.clique_cover_brute(g)
        bad += gamma != comb.chromatic_brute(g)
        bad += theta != comb.chromatic_number(g.complement(), verify=False)
    return len(graphs), float(bad), 0.0


def _edge_covers(gen, n_cases, big):
    bad = 0
    for _ in range(n_cases):
        g = random_bipartite_with_cover(gen, 7 if big else 6)
        fast = comb.count_edge_covers(g)
        bad += fast != oracles.edge_covers_inclusion_exclusion(g)
        bad += fast != oracles.edge_covers_exhaustive(g)
    for k in range(2, 6):
        bad += comb.count_edge_covers(comb.cycle_bipartite(k)) != comb.cycle_matching_count(2 * k)
    return n_cases, float(bad), 0.0


def _hausdorff(gen, n_cases, big):
    dev = 0.0
    for _ in range(n_cases):
        S = integer_space(int(gen.integers(2, 11)), gen)
        A, B = random_subset(gen, S.n), random_subset(gen, S.n)
        dev = max(dev, abs(hausdorff_sets(S, A, B) - oracles.hausdorff_by_balls(S.dist, A, B)))
    return n_cases, dev, 1e-12


def _cov_pack(gen, n_cases, big):
    bad = 0
    for _ in range(n_cases):
        S = random_space(gen, 1, 8)
        eps = float(gen.uniform(0.5, 10))
        bad += cov(S, eps=eps) != oracles.cov_brute(S.dist, eps)
        bad += pack(S, eps=eps) != oracles.pack_brute(S.dist, eps)
    return n_cases, float(bad), 0.0


SUITES: dict[str, tuple[Callable, int, int]] = {
    # name: (function, quick cases, full cases)
    "gh_vs_relations": (_gh_relations, 20, 100),
    "simplex_formulas": (_simplex, 10, 60),
    "spectrum_routes": (_spectrum, 20, 200),
    "steiner_routes": (_steiner, 5, 50),
    "borsuk": (_borsuk, 20, 100),
    "graph_numbers": (_graphs, 0, 0),
    "edge_covers": (_edge_covers, 20, 100),
    "hausdorff_balls": (_hausdorff, 50, 500),
    "cov_pack": (_cov_pack, 50, 200),
}


def run_suite(name: str, scale: str, seed: int) -> SuiteResult:
    fn, quick, full = SUITES[name]
    big = scale == "full"
    # one independent stream per suite, so results do not depend on --jobs
    gen = np.random.default_rng([seed, list(SUITES).index(name)])
    start = time.perf_counter()
    cases, dev, allowed = fn(gen, full if big else quick, big)
    return SuiteResult(name, cases, float(dev), bool(dev <= allowed),
                       time.perf_counter() - start)


def _run_named(args) -> SuiteResult:
    return run_suite(*args)


def selftest(scale: str = "quick", seed: int = 0, jobs: int = 1, stream=None,
             quiet: bool = False) -> dict:
    """Run every suite; per-suite PASS/FAIL lines go to ``stream`` (stderr by default)."""
    from . import errors
    if scale not in SCALES:
        raise errors.InvalidParams(f"unknown scale {scale!r}; use quick or full", scale=scale)
    work = [(name, scale, seed) for name in SUITES]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_named, work))
    else:
        results = [_run_named(w) for w in work]
    stream = stream or sys.stderr
    for r in results:
        if not quiet:
            print(f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.cases} cases, "
                  f"max deviation {r.max_deviation:.3g}", file=stream)
    return {
        "scale": scale,
        "seed": seed,
        "passed": all(r.passed for r in results),
        "suites": [{k: v for k, v in asdict(r).items() if k != "seconds"} for r in results],
    }
