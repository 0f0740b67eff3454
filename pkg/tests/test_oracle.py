import random
from itertools import product

import pytest

from founderseg.errors import OutOfRange, TooLarge
from founderseg.model import build_matrix
from founderseg.oracle import distinct_count, enumerate_segmentations, oracle_dp, segmentation_cost

from conftest import random_panel


def test_distinct_counts_example1(example1):
    assert [distinct_count(example1, i, 7) for i in range(1, 8)] == [6, 6, 4, 4, 3, 3, 2]


def test_distinct_count_identical_rows():
    mat = build_matrix(["acca"] * 3)
    assert distinct_count(mat, 2, 4) == 1


def test_distinct_count_range(example1):
    with pytest.raises(OutOfRange):
        distinct_count(example1, 3, 2)


def _all_segmentations(n, L):
    """Every boundary tuple, generated from 0/1 cut masks rather than combinations."""
    for mask in product((0, 1), repeat=n - 1):
        bounds = (0,) + tuple(p for p, cut in enumerate(mask, 1) if cut) + (n,)
        if all(y - x >= L for x, y in zip(bounds, bounds[1:])):
            yield bounds


def test_small_example_all_sixteen(small):
    segs = list(_all_segmentations(5, 1))
    assert len(segs) == 16
    best = min(segmentation_cost(small, b) for b in segs)
    assert best == 2
    assert enumerate_segmentations(small, 1) == 2
    assert oracle_dp(small, 1).M_n == 2


def test_single_column():
    mat = build_matrix(["a", "c", "a", "g"])
    assert enumerate_segmentations(mat, 1) == 3


def test_identical_rows_dp():
    mat = build_matrix(["acgtac"] * 4)
    res = oracle_dp(mat, 2)
    assert res.M_table[2:] == (1,) * 5
    assert res.M_table[:2] == (5, 5)


def test_short_panel_all_sentinel(small):
    res = oracle_dp(small, 6)
    assert set(res.M_table) == {4}
    assert res.boundaries is None
    assert enumerate_segmentations(small, 6) == 4


def test_enumeration_guard():
    mat = build_matrix(["a" * 25])
    with pytest.raises(TooLarge):
        enumerate_segmentations(mat, 1)


def test_dp_agrees_with_enumeration():
    rng = random.Random(3)
    for _ in range(500):
        L = rng.randint(1, 5)
        n = rng.randint(L, 12)
        mat = random_panel(rng, rng.randint(1, 6), n, rng.choice([2, 4]))
        res = oracle_dp(mat, L)
        assert res.M_n == enumerate_segmentations(mat, L)
        assert segmentation_cost(mat, res.boundaries) == res.M_n


def test_distinct_count_monotone():
    rng = random.Random(4)
    mat = random_panel(rng, 7, 10, 3)
    for k in range(1, 11):
        counts = [distinct_count(mat, j, k) for j in range(1, k + 1)]
        assert all(x >= y for x, y in zip(counts, counts[1:]))
        assert counts[0] <= 7
