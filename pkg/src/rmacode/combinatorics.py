"""k-subset enumeration in colexicographic order.

Two independent generators are provided: a scalar successor rule for small
tables, and a block-wise numpy generator for the large counting sweeps.
"""

from __future__ import annotations

from math import comb
from typing import Iterator

import numpy as np


def colex_subsets(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Yield every size-``k`` subset of ``range(n)`` as a sorted tuple, in colex order.

    Colex order compares subsets by their largest differing element, so
    ``{0,1} < {0,2} < {1,2} < {0,3} < ...``.
    """
    if k < 0 or k > n:
        return
    c = list(range(k))
    while True:
        yield tuple(c)
        # smallest j whose entry can move up without colliding with c[j+1]
        j = 0
        while j < k and (c[j] + 1 == (c[j + 1] if j + 1 < k else n)):
            j += 1
        if j == k:
            return
        c[j] += 1
        c[:j] = range(j)


def colex_rank(subset) -> int:
    """Position of a sorted subset in colex order (combinatorial number system)."""
    return sum(comb(c, i + 1) for i, c in enumerate(sorted(subset)))


def colex_array(n: int, k: int, dtype=np.int32) -> np.ndarray:
    """All size-``k`` subsets of ``range(n)`` as a ``(C(n,k), k)`` array in colex order."""
    if k < 0 or k > n:
        return np.empty((0, max(k, 0)), dtype=dtype)
    blocks = list(colex_blocks(n, k, dtype=dtype))
    if not blocks:
        return np.empty((0, k), dtype=dtype)
    return np.concatenate(blocks, axis=0)


def colex_blocks(n: int, k: int, dtype=np.int32) -> Iterator[np.ndarray]:
    """Yield colex-ordered blocks of subsets, one block per largest element.

    Concatenating the blocks gives :func:`colex_array`. Subsets of ``range(t)``
    form a prefix of the colex order on ``range(n)``, which lets every block
    reuse one shared table of ``(k-1)``-subsets.
    """
    if k < 0 or k > n:
        return
    if k == 0:
        yield np.empty((1, 0), dtype=dtype)
        return
    base = colex_array(n - 1, k - 1, dtype=dtype)
    for top in range(k - 1, n):
        head = base[: comb(top, k - 1)]
        block = np.empty((head.shape[0], k), dtype=dtype)
        block[:, :-1] = head
        block[:, -1] = top
        yield block
