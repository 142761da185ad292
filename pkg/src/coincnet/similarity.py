"""
Jaccard, interiority and coincidence indices over non-negative vectors.

Vectors are treated as multisets: ``min`` plays the role of intersection and
``max`` the role of union. All vectors must be non-negative and carry some
mass; an all-zero vector is rejected instead of being given a similarity of 0.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import NamedTuple, Sequence

import numpy as np

from .errors import DimensionError, DomainError

__all__ = [
    "SimilarityTriple",
    "PairwiseSimilarity",
    "jaccard",
    "interiority",
    "coincidence",
    "pairwise_similarity",
]


class SimilarityTriple(NamedTuple):
    jaccard: float
    interiority: float
    coincidence: float


class PairwiseSimilarity(NamedTuple):
    """Three symmetric ``n x n`` matrices with unit diagonal."""

    jaccard: np.ndarray
    interiority: np.ndarray
    coincidence: np.ndarray


def _as_vector(x, name="x") -> np.ndarray:
    v = np.asarray(x, dtype=float)
    if v.ndim != 1 or v.size == 0:
        raise DimensionError(f"{name} must be a non-empty 1-D vector, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise DomainError(f"{name} contains non-finite values")
    if np.any(v < 0):
        raise DomainError(f"{name} contains negative values")
    if not np.any(v > 0):
        raise DomainError(f"{name} is the zero vector")
    return v


def _sums(x, y):
    x = _as_vector(x, "x")
    y = _as_vector(y, "y")
    if x.shape != y.shape:
        raise DimensionError(f"length mismatch: {x.size} vs {y.size}")
    return np.minimum(x, y).sum(), np.maximum(x, y).sum(), x.sum(), y.sum()


def jaccard(x, y) -> float:
    """Multiset Jaccard index ``sum(min) / sum(max)``."""
    s_min, s_max, _, _ = _sums(x, y)
    return float(s_min / s_max)


def interiority(x, y) -> float:
    """Interiority (overlap) index ``sum(min) / min(sum(x), sum(y))``."""
    s_min, _, s_x, s_y = _sums(x, y)
    return float(s_min / min(s_x, s_y))


def coincidence(x, y) -> SimilarityTriple:
    """Jaccard, interiority and their product, the coincidence index.

    Example:
        >>> round(coincidence([2, 0, 1, 3.5], [1.2, 3, 2, 0]).coincidence, 6)
        0.074347
    """
    s_min, s_max, s_x, s_y = _sums(x, y)
    j = float(s_min / s_max)
    i = float(s_min / min(s_x, s_y))
    return SimilarityTriple(j, i, j * i)


def _block(X, totals, lo, hi):
    # entries (r, c) for r in [lo, hi); each depends only on rows r and c
    rows = X[lo:hi, None, :]
    s_min = np.minimum(rows, X[None, :, :]).sum(axis=-1)
    s_max = np.maximum(rows, X[None, :, :]).sum(axis=-1)
    s_small = np.minimum(totals[lo:hi, None], totals[None, :])
    j = s_min / s_max
    i = s_min / s_small
    return j, i


def pairwise_similarity(rows: Sequence | np.ndarray, n_jobs: int | None = None,
                        block_size: int = 64) -> PairwiseSimilarity:
    """All-pairs indices between the rows of a feature matrix.

    Args:
        rows: ``n x m`` array-like of non-negative weights, ``n >= 2``.
        n_jobs: number of worker threads; ``None`` or 1 runs serially.
            The result is identical for every value.
        block_size: number of rows evaluated per work unit.

    Returns:
        PairwiseSimilarity with the diagonal fixed to 1.0.

    Raises:
        DomainError: a row is all-zero, negative or non-finite; the message
            names the first offending row index.
    """
    X = np.asarray(rows, dtype=float)
    if X.ndim != 2:
        raise DimensionError(f"expected a 2-D feature matrix, got shape {X.shape}")
    n, m = X.shape
    if n < 2:
        raise DimensionError(f"need at least 2 rows, got {n}")
    if m < 1:
        raise DimensionError("feature matrix has no columns")
    bad = ~np.all(np.isfinite(X), axis=1) | np.any(X < 0, axis=1) | ~np.any(X > 0, axis=1)
    if bad.any():
        r = int(np.flatnonzero(bad)[0])
        raise DomainError(f"row {r} is not a valid feature vector (zero, negative or non-finite)")

    X = np.ascontiguousarray(X)
    totals = X.sum(axis=1)
    starts = range(0, n, max(1, int(block_size)))
    jobs = [(lo, min(lo + block_size, n)) for lo in starts]

    if n_jobs is None or n_jobs <= 1 or len(jobs) == 1:
        parts = [_block(X, totals, lo, hi) for lo, hi in jobs]
    else:
        with ThreadPoolExecutor(max_workers=n_jobs) as pool:
            parts = list(pool.map(lambda b: _block(X, totals, *b), jobs))

    J = np.vstack([p[0] for p in parts])
    I = np.vstack([p[1] for p in parts])
    # mirror the upper triangle so symmetry holds bit-for-bit
    lower = np.tril_indices(n, -1)
    J[lower] = J.T[lower]
    I[lower] = I.T[lower]
    np.fill_diagonal(J, 1.0)
    np.fill_diagonal(I, 1.0)
    C = J * I
    return PairwiseSimilarity(J, I, C)
