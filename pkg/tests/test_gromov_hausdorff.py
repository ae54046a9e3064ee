import itertools

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

import msgeo as mg
from msgeo import errors
from msgeo.gromov_hausdorff import (
    Correspondence,
    distortion,
    enumerate_irreducible,
    extract_map,
    gh_bounds,
    gh_distance,
    gh_exact,
    gh_scaling_check,
    gh_three_point,
    gh_to_simplex,
    gh_two_point,
    identity_correspondence,
    interpolate,
    relation_distortion,
)
from msgeo.oracles import gh_all_relations, gh_by_maps

from conftest import spaces

TWO3 = mg.line([0, 3])
TWO5 = mg.line([0, 5])
POINT = mg.simplex(1, 0)
LINE013 = mg.line([0, 1, 3])


def all_relations(n, m):
    cells = list(itertools.product(range(n), range(m)))
    for mask in range(1, 1 << len(cells)):
        R = {cells[e] for e in range(len(cells)) if mask >> e & 1}
        if {i for i, _ in R} == set(range(n)) and {j for _, j in R} == set(range(m)):
            yield Correspondence(n, m, R)


@st.composite
def correspondences(draw, n, m):
    """Random correspondence: a random relation patched to be surjective."""
    pairs = set(draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, m - 1)))))
    for i in range(n):
        pairs.add((i, draw(st.integers(0, m - 1))))
    for j in range(m):
        pairs.add((draw(st.integers(0, n - 1)), j))
    return Correspondence(n, m, pairs)


# --- correspondences and distortion ---------------------------------------

def test_correspondence_must_be_surjective():
    with pytest.raises(errors.InvalidCorrespondence):
        Correspondence(2, 2, [(0, 0)])


def test_distortion_examples():
    assert distortion(LINE013, LINE013, identity_correspondence(3)) == 0
    assert distortion(TWO3, TWO5, identity_correspondence(2)) == 2
    R = Correspondence(1, 3, [(0, j) for j in range(3)])
    assert distortion(POINT, LINE013, R) == 3
    assert distortion(POINT, POINT, identity_correspondence(1)) == 0


def test_distortion_rejects_mismatched_sizes():
    with pytest.raises(errors.InvalidCorrespondence):
        distortion(TWO3, LINE013, identity_correspondence(2))


@given(spaces(1, 3), spaces(1, 3), st.data())
def test_distortion_is_monotone(X, Y, data):
    R = data.draw(correspondences(X.n, Y.n))
    extra = data.draw(st.lists(st.tuples(st.integers(0, X.n - 1), st.integers(0, Y.n - 1))))
    S = Correspondence(X.n, Y.n, R.pairs | set(extra))
    assert distortion(X, Y, R) <= distortion(X, Y, S)


@given(spaces(1, 3), spaces(1, 3), spaces(1, 3), st.data())
def test_composition_bound(X, Y, Z, data):
    R1 = data.draw(correspondences(X.n, Y.n))
    R2 = data.draw(correspondences(Y.n, Z.n))
    assert distortion(X, Z, R1.compose(R2)) <= distortion(X, Y, R1) + distortion(Y, Z, R2) + 1e-9


# --- irreducible correspondences -------------------------------------------

def test_irreducible_two_by_two_are_the_bijections():
    got = {c.pairs for c in enumerate_irreducible(TWO3, TWO5)}
    assert got == {frozenset({(0, 0), (1, 1)}), frozenset({(0, 1), (1, 0)})}


def test_irreducible_from_a_point():
    got = list(enumerate_irreducible(POINT, LINE013))
    assert len(got) == 1 and got[0].pairs == {(0, 0), (0, 1), (0, 2)}


@pytest.mark.parametrize("n, m", [(2, 3), (3, 2), (3, 3), (1, 4), (2, 4)])
def test_irreducible_matches_relation_filter(n, m):
    X, Y = mg.simplex(n, 1), mg.simplex(m, 1)
    got = [c.pairs for c in enumerate_irreducible(X, Y)]
    assert len(got) == len(set(got))
    expected = {c.pairs for c in all_relations(n, m) if _minimal(c)}
    assert set(got) == expected
    assert all(c.is_irreducible() for c in enumerate_irreducible(X, Y))


def _minimal(c):
    """Inclusion-minimal among correspondences: dropping any pair breaks surjectivity."""
    for p in c.pairs:
        rest = c.pairs - {p}
        if {i for i, _ in rest} == set(range(c.left_size)) and \
           {j for _, j in rest} == set(range(c.right_size)):
            return False
    return True


def test_irreducible_guard():
    with pytest.raises(errors.TooLarge):
        next(enumerate_irreducible(mg.simplex(9, 1), TWO3))


# --- exact distance ----------------------------------------------------------

def test_gh_examples():
    res = gh_exact(LINE013, LINE013)
    assert res.distance == 0 and distortion(LINE013, LINE013, res.witness) == 0
    assert gh_distance(TWO3, TWO5) == 1.0
    assert gh_distance(POINT, LINE013) == 1.5


def test_gh_guard():
    with pytest.raises(errors.TooLarge):
        gh_exact(mg.simplex(9, 1), TWO3)


@given(spaces(1, 3), spaces(1, 3))
def test_gh_matches_all_relations(X, Y):
    res = gh_exact(X, Y)
    assert res.distance == pytest.approx(gh_all_relations(X, Y), abs=1e-12)
    assert distortion(X, Y, res.witness) == pytest.approx(2 * res.distance, abs=1e-9)


@given(spaces(2, 4), spaces(2, 4))
def test_gh_matches_map_pairs(X, Y):
    assert gh_distance(X, Y) == pytest.approx(gh_by_maps(X, Y), abs=1e-12)


@given(spaces(1, 5), spaces(1, 5), spaces(1, 5))
def test_gh_triangle(X, Y, Z):
    assert gh_distance(X, Z) <= gh_distance(X, Y) + gh_distance(Y, Z) + 2e-9


@given(spaces(1, 5), spaces(1, 5))
def test_gh_symmetric_and_bounded(X, Y):
    d = gh_distance(X, Y)
    assert d == pytest.approx(gh_distance(Y, X), abs=1e-12)
    lo, hi = gh_bounds(X, Y)
    assert lo - 1e-9 <= d <= hi + 1e-9


@given(spaces(1, 5), st.randoms(use_true_random=False))
def test_gh_zero_on_isometric_copies(X, rnd):
    order = list(range(X.n))
    rnd.shuffle(order)
    res = gh_exact(X, X.permuted(order))
    assert res.distance == 0
    assert distortion(X, X.permuted(order), res.witness) == 0


@given(spaces(2, 4), spaces(2, 4))
def test_gh_zero_only_for_isometric(X, Y):
    isometric = X.n == Y.n and any(
        np.array_equal(X.dist, Y.dist[np.ix_(p, p)]) for p in itertools.permutations(range(Y.n)))
    assert (gh_distance(X, Y) == 0) == isometric


# --- closed forms ------------------------------------------------------------

def test_two_point_examples():
    assert gh_two_point(TWO3, TWO3) == 0
    assert gh_two_point(TWO3, TWO5) == 1
    with pytest.raises(errors.WrongCardinality):
        gh_two_point(LINE013, TWO3)


def test_three_point_example():
    X = mg.from_matrix([[0, 1, 2], [1, 0, 2], [2, 2, 0]])
    Y = mg.from_matrix([[0, 1, 1], [1, 0, 2], [1, 2, 0]])
    assert gh_three_point(X, Y) == 0.5 == gh_distance(X, Y)
    with pytest.raises(errors.WrongCardinality):
        gh_three_point(TWO3, X)


@given(spaces(2, 2), spaces(2, 2))
def test_two_point_formula(X, Y):
    assert gh_two_point(X, Y) == pytest.approx(gh_distance(X, Y), abs=1e-12)


@given(spaces(3, 3), spaces(3, 3))
def test_three_point_formula(X, Y):
    assert gh_three_point(X, Y) == pytest.approx(gh_distance(X, Y), abs=1e-12)


def test_bounds_examples():
    assert gh_bounds(POINT, LINE013) == (1.5, 1.5)
    assert gh_bounds(LINE013, LINE013)[0] == 0
    assert gh_bounds(TWO3, TWO5) == (1, 2.5)


# --- simplexes ----------------------------------------------------------------

def test_simplex_examples():
    assert gh_to_simplex(TWO3, 3, 1) == 1.0 == gh_distance(mg.simplex(3, 1), TWO3)
    assert gh_to_simplex(mg.simplex(4, 2.5), 4, 2.5) == 0
    assert gh_to_simplex(LINE013, 3, 6) == 2.5 == gh_distance(mg.simplex(3, 6), LINE013)


def test_simplex_guard():
    with pytest.raises(errors.TooLarge):
        gh_to_simplex(mg.line(range(13)), 3, 1.0)


@given(spaces(1, 6), st.integers(1, 6), st.sampled_from([0.0, 0.5, 1.0, 2.5, 7.0]))
def test_simplex_formula_matches_exact(X, m, lam):
    simplex = mg.scale(mg.simplex(m, 1), lam)
    assert gh_to_simplex(X, m, lam) == pytest.approx(gh_distance(simplex, X), abs=1e-9)


# --- scaling, maps, geodesics ------------------------------------------------

def test_scaling_examples():
    assert gh_scaling_check(TWO3, TWO5, 1) == (1, 1)
    assert gh_scaling_check(TWO3, TWO5, 0) == (0, 0)
    assert gh_scaling_check(TWO3, TWO5, 2) == (2, 2)


@given(spaces(1, 4), spaces(1, 4), st.floats(0, 5))
def test_scaling(X, Y, lam):
    lhs, rhs = gh_scaling_check(X, Y, lam)
    assert lhs == pytest.approx(rhs, abs=1e-9)


def test_extract_map_examples():
    swap = Correspondence(2, 2, [(0, 1), (1, 0)])
    assert extract_map(swap) == (1, 0)
    assert extract_map(Correspondence(1, 3, [(0, 0), (0, 1), (0, 2)])) == (0,)
    f = extract_map(gh_exact(TWO3, TWO5).witness)
    assert relation_distortion(TWO3, TWO5, list(enumerate(f))) == 2


@given(spaces(1, 4), spaces(1, 4), st.data())
def test_extract_map_is_a_net(X, Y, data):
    R = data.draw(correspondences(X.n, Y.n))
    f = extract_map(R)
    assert all((i, f[i]) in R.pairs for i in range(X.n))
    dis = distortion(X, Y, R)
    assert relation_distortion(X, Y, list(enumerate(f))) <= dis
    image = sorted(set(f))
    assert Y.dist[:, image].min(axis=1).max() <= dis + 1e-9


def test_interpolate_examples():
    X, Y = mg.line([0, 2]), mg.line([0, 4])
    R = identity_correspondence(2)
    assert interpolate(X, Y, R, 0) is X
    assert interpolate(X, Y, R, 1) is Y
    assert interpolate(X, Y, R, 0.5).dist[0, 1] == 3
    with pytest.raises(errors.TOutOfRange):
        interpolate(X, Y, R, 1.5)


def test_interpolate_merges_coincident_pairs():
    X = mg.line([0, 1])
    R = Correspondence(2, 1, [(0, 0), (1, 0)])
    mid = interpolate(X, POINT, R, 0.5)
    assert mid.n == 2 and mid.dist[0, 1] == 0.5
    merged = interpolate(X, POINT, R, 0.5, tol=0.6)
    assert merged.n == 1 and merged.labels == ("0|0",)


@given(spaces(1, 3), spaces(1, 3), st.sampled_from([0, 0.25, 0.5, 0.75, 1]),
       st.sampled_from([0, 0.25, 0.5, 0.75, 1]))
def test_geodesic(X, Y, s, t):
    res = gh_exact(X, Y)
    Rs = interpolate(X, Y, res.witness, s)
    Rt = interpolate(X, Y, res.witness, t)
    assert gh_distance(Rs, Rt) == pytest.approx(abs(s - t) * res.distance, abs=2e-9)


@given(spaces(1, 3), spaces(1, 3), st.data(), st.floats(0, 1), st.floats(0, 1))
def test_lipschitz_for_any_correspondence(X, Y, data, s, t):
    R = data.draw(correspondences(X.n, Y.n))
    assume(len(R.pairs) <= 8)
    Rs, Rt = interpolate(X, Y, R, s), interpolate(X, Y, R, t)
    assert gh_distance(Rs, Rt) <= 0.5 * abs(s - t) * distortion(X, Y, R) + 2e-9


# --- cov / pack stability under GH closeness --------------------------------

@given(spaces(1, 4), spaces(1, 4), st.floats(0.1, 10), st.floats(1e-6, 2))
def test_cov_pack_stability(X, Y, eps, margin):
    delta = gh_distance(X, Y) + margin
    assert mg.cov(X, eps=eps) >= mg.cov(Y, eps=eps + 2 * delta)
    assert mg.pack(X, eps=eps) >= mg.pack(Y, eps=2 * eps + 4 * delta)
