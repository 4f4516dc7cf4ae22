from itertools import combinations
from math import comb

import numpy as np
import pytest

from rmacode.combinatorics import colex_array, colex_blocks, colex_rank, colex_subsets


def colex_oracle(n, k):
    return sorted(combinations(range(n), k), key=lambda c: c[::-1])


@pytest.mark.parametrize("n,k", [(n, k) for n in range(0, 9) for k in range(0, n + 1)] + [(5, 7)])
def test_scalar_generator_matches_sorted_oracle(n, k):
    assert list(colex_subsets(n, k)) == colex_oracle(n, k)


@pytest.mark.parametrize("n,k", [(1, 1), (4, 1), (6, 3), (9, 4), (12, 2), (7, 7), (5, 0)])
def test_numpy_generator_matches_scalar(n, k):
    arr = colex_array(n, k)
    assert arr.shape == (comb(n, k), k)
    assert [tuple(int(x) for x in row) for row in arr] == list(colex_subsets(n, k))


def test_blocks_grouped_by_largest_element():
    blocks = list(colex_blocks(6, 3))
    assert len(blocks) == 4
    for top, block in zip(range(2, 6), blocks):
        assert np.all(block[:, -1] == top)


def test_first_subsets():
    assert list(colex_subsets(4, 2))[:4] == [(0, 1), (0, 2), (1, 2), (0, 3)]


def test_rank_is_position():
    for i, c in enumerate(colex_subsets(8, 3)):
        assert colex_rank(c) == i
