from fractions import Fraction
from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from coincnet.errors import DimensionError, DomainError
from coincnet.similarity import coincidence, interiority, jaccard, pairwise_similarity

from oracles import frac_indices, set_interiority, set_jaccard

X = [2, 0, 1, 3.5]
Y = [1.2, 3, 2, 0]

DIRECT_WEIGHTS = np.array([
    [1, 2, 0, 0, 0, 0, 2, 0],
    [0, 0, 0, 3, 2, 0, 1, 0],
    [1, 0, 4, 0, 0, 2, 0, 2],
    [0, 0, 0, 0, 4, 0, 0, 1],
    [0, 0, 2, 0, 0, 4, 0, 3],
], dtype=float)

# frozen from oracles.frac_indices on the DIRECT_WEIGHTS rows
F = Fraction
DIRECT_COINCIDENCE = [
    [1, F(1, 50), F(1, 65), 0, 0],
    [F(1, 50), 1, 0, F(4, 45), 0],
    [F(1, 65), 0, 1, F(1, 65), F(1, 3)],
    [0, F(4, 45), F(1, 65), 1, F(1, 65)],
    [0, 0, F(1, 3), F(1, 65), 1],
]


def test_worked_example():
    assert jaccard(X, Y) == pytest.approx(2.2 / 10.5, rel=1e-12)
    assert interiority(X, Y) == pytest.approx(2.2 / 6.2, rel=1e-12)
    t = coincidence(X, Y)
    assert t.coincidence == pytest.approx(4.84 / 65.1, rel=1e-12)
    assert round(t.coincidence, 3) == 0.074


def test_worked_example_matches_exact_oracle():
    j, i, c = frac_indices(X, Y)
    assert (j, i, c) == (F(22, 105), F(11, 31), F(242, 3255))
    assert coincidence(X, Y) == pytest.approx((float(j), float(i), float(c)), rel=1e-12)


@pytest.mark.parametrize("x, y, expected", [
    ([1, 1], [1, 1], 1.0),
    ([1, 0], [0, 1], 0.0),
])
def test_jaccard_trivial(x, y, expected):
    assert jaccard(x, y) == expected


@pytest.mark.parametrize("x, y, expected", [
    ([1, 0, 0], [1, 2, 3], 1.0),
    ([1, 0], [0, 1], 0.0),
])
def test_interiority_trivial(x, y, expected):
    assert interiority(x, y) == expected


def test_example_rows_a3_a5():
    t = coincidence(DIRECT_WEIGHTS[2], DIRECT_WEIGHTS[4])
    assert t.jaccard == pytest.approx(6 / 12)
    assert t.interiority == pytest.approx(6 / 9)
    assert t.coincidence == pytest.approx(1 / 3)


def test_self_similarity_is_one():
    assert coincidence(X, X).coincidence == 1.0


@pytest.mark.parametrize("bad", [[0, 0, 0], [1, -1, 2], [1, np.nan], [], [[1, 2]]])
def test_invalid_vectors_rejected(bad):
    with pytest.raises((DomainError, DimensionError)):
        coincidence(bad, [1, 1, 1])


def test_length_mismatch():
    with pytest.raises(DimensionError):
        jaccard([1, 2], [1, 2, 3])


def test_pairwise_example_matches_frozen_oracle():
    S = pairwise_similarity(DIRECT_WEIGHTS)
    expected = np.array([[float(v) for v in row] for row in DIRECT_COINCIDENCE])
    np.testing.assert_allclose(S.coincidence, expected, rtol=1e-12, atol=0)
    assert np.array_equal(S.coincidence, S.coincidence.T)
    assert np.all(np.diag(S.coincidence) == 1.0)


def test_pairwise_agrees_with_scalar_path():
    rng = np.random.default_rng(3)
    R = rng.random((9, 6)) * (rng.random((9, 6)) > 0.4)
    R[:, 0] += 0.1
    S = pairwise_similarity(R)
    for i in range(9):
        for j in range(9):
            if i != j:
                assert S.coincidence[i, j] == pytest.approx(coincidence(R[i], R[j]).coincidence, rel=1e-12)


def test_pairwise_identical_and_disjoint_rows():
    S = pairwise_similarity([[1, 2, 0], [1, 2, 0]])
    assert S.coincidence[0, 1] == 1.0
    S = pairwise_similarity(np.eye(4) * 3)
    off = ~np.eye(4, dtype=bool)
    assert np.all(S.coincidence[off] == 0.0)


def test_pairwise_names_bad_row():
    with pytest.raises(DomainError, match="row 2"):
        pairwise_similarity([[1, 0], [0, 1], [0, 0]])


def test_pairwise_needs_two_rows():
    with pytest.raises(DimensionError):
        pairwise_similarity([[1, 2]])


def test_pairwise_parallel_is_bitwise_identical():
    rng = np.random.default_rng(11)
    R = rng.random((150, 40)) * (rng.random((150, 40)) > 0.5)
    R[:, 0] += 1e-3
    serial = pairwise_similarity(R, n_jobs=1, block_size=17)
    threaded = pairwise_similarity(R, n_jobs=4, block_size=17)
    one_block = pairwise_similarity(R, block_size=1000)
    for a, b, c in zip(serial, threaded, one_block):
        assert a.tobytes() == b.tobytes() == c.tobytes()


# -- properties --------------------------------------------------------------

def _pairs():
    return st.integers(1, 20).flatmap(lambda m: st.tuples(
        arrays(float, m, elements=st.floats(0, 100, allow_subnormal=False)),
        arrays(float, m, elements=st.floats(0, 100, allow_subnormal=False)),
    )).filter(lambda xy: xy[0].sum() > 0 and xy[1].sum() > 0)


@settings(max_examples=300, deadline=None)
@given(_pairs())
def test_index_properties(xy):
    x, y = xy
    t = coincidence(x, y)
    assert 0 <= t.jaccard <= 1 and 0 <= t.interiority <= 1 and 0 <= t.coincidence <= 1
    assert coincidence(y, x) == t
    assert t.coincidence <= min(t.jaccard, t.interiority)
    assert t.coincidence == t.jaccard * t.interiority


@settings(max_examples=200, deadline=None)
@given(_pairs(), st.floats(1e-3, 1e3))
def test_joint_scale_invariance(xy, alpha):
    x, y = xy
    assert coincidence(alpha * x, alpha * y).coincidence == pytest.approx(
        coincidence(x, y).coincidence, rel=1e-12, abs=1e-15)


@pytest.mark.parametrize("m", range(1, 7))
def test_binary_vectors_match_set_indices(m):
    vecs = [v for v in product((0, 1), repeat=m) if any(v)]
    for x in vecs:
        A = {k for k, b in enumerate(x) if b}
        for y in vecs:
            B = {k for k, b in enumerate(y) if b}
            assert jaccard(x, y) == float(set_jaccard(A, B))
            assert interiority(x, y) == float(set_interiority(A, B))
