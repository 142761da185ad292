"""
Labeled weighted bipartite networks and the networks derived from them.

A :class:`BipartiteNetwork` stores only the ``n_A x n_B`` block of the full
weight matrix; :func:`to_symmetric` and :func:`from_symmetric` convert to and
from the ``(n_A + n_B)`` square form with empty same-type blocks.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Hashable, Sequence

import numpy as np

from .errors import DimensionError, DomainError, FormatError, IsolatedNodeError
from .similarity import pairwise_similarity

__all__ = [
    "Orientation",
    "Side",
    "BipartiteNetwork",
    "FeatureMatrix",
    "SimilarityNetwork",
    "ProjectedNetwork",
    "feature_matrix",
    "coincidence_network",
    "project",
    "from_symmetric",
    "to_symmetric",
]


class Orientation(str, Enum):
    """Which node type is compared (rows) and which serves as features."""

    DIRECT = "direct"    # rows are A-nodes, features are B-nodes
    REVERSE = "reverse"  # rows are B-nodes, features are A-nodes

    @classmethod
    def parse(cls, value) -> "Orientation":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise DomainError(f"unknown orientation {value!r}; use 'direct' or 'reverse'") from None


class Side(str, Enum):
    A = "a"
    B = "b"

    @classmethod
    def parse(cls, value) -> "Side":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise DomainError(f"unknown side {value!r}; use 'a' or 'b'") from None


def _check_labels(labels, kind):
    labels = tuple(labels)
    if not labels:
        raise FormatError(f"{kind} label list is empty")
    seen = set()
    for lab in labels:
        if lab in seen:
            raise FormatError(f"duplicate {kind} label {lab!r}")
        seen.add(lab)
    return labels


def _frozen(a):
    a = np.array(a, dtype=float, copy=True)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class BipartiteNetwork:
    """Non-negative weights between A-nodes (rows) and B-nodes (columns).

    A weight of 0 means the link is absent. Instances are immutable; the
    weight array is stored read-only.
    """

    a_labels: tuple
    b_labels: tuple
    weights: np.ndarray

    def __post_init__(self):
        a = _check_labels(self.a_labels, "A")
        b = _check_labels(self.b_labels, "B")
        w = np.asarray(self.weights, dtype=float)
        if w.shape != (len(a), len(b)):
            raise DimensionError(f"weights shape {w.shape} does not match {len(a)} A x {len(b)} B labels")
        if not np.all(np.isfinite(w)):
            raise DomainError("weights contain non-finite values")
        neg = np.argwhere(w < 0)
        if neg.size:
            r, c = neg[0]
            raise DomainError(f"negative weight {w[r, c]} between {a[r]!r} and {b[c]!r}")
        object.__setattr__(self, "a_labels", a)
        object.__setattr__(self, "b_labels", b)
        object.__setattr__(self, "weights", _frozen(w))

    @classmethod
    def from_matrix(cls, weights, a_labels=None, b_labels=None) -> "BipartiteNetwork":
        """Build a network, naming nodes ``A1..`` and ``B1..`` when labels are omitted."""
        w = np.asarray(weights, dtype=float)
        if w.ndim != 2:
            raise DimensionError(f"expected a 2-D weight matrix, got shape {w.shape}")
        if a_labels is None:
            a_labels = [f"A{i + 1}" for i in range(w.shape[0])]
        if b_labels is None:
            b_labels = [f"B{j + 1}" for j in range(w.shape[1])]
        return cls(tuple(a_labels), tuple(b_labels), w)

    @property
    def shape(self):
        return self.weights.shape

    @property
    def n_links(self) -> int:
        return int(np.count_nonzero(self.weights))

    def is_binary(self) -> bool:
        return bool(np.all((self.weights == 0) | (self.weights == 1)))

    def binarize(self) -> "BipartiteNetwork":
        return BipartiteNetwork(self.a_labels, self.b_labels, (self.weights > 0).astype(float))

    def edges(self):
        """Yield ``(a_label, b_label, weight)`` for every link, row-major."""
        for r, c in zip(*np.nonzero(self.weights)):
            yield self.a_labels[r], self.b_labels[c], float(self.weights[r, c])

    def __eq__(self, other):
        if not isinstance(other, BipartiteNetwork):
            return NotImplemented
        return (self.a_labels == other.a_labels and self.b_labels == other.b_labels
                and np.array_equal(self.weights, other.weights))

    __hash__ = None

    def __repr__(self):
        return (f"BipartiteNetwork(n_A={len(self.a_labels)}, n_B={len(self.b_labels)}, "
                f"links={self.n_links})")


@dataclass(frozen=True, eq=False)
class FeatureMatrix:
    matrix: np.ndarray
    row_labels: tuple
    col_labels: tuple
    orientation: Orientation


@dataclass(frozen=True, eq=False)
class SimilarityNetwork:
    """Symmetric coincidence matrix over the row-type nodes of an orientation.

    ``dropped`` lists isolated nodes removed before the computation, if any.
    """

    labels: tuple
    matrix: np.ndarray
    orientation: Orientation
    source_features: int
    dropped: tuple = field(default=())

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=float)
        n = len(self.labels)
        if m.shape != (n, n):
            raise DimensionError(f"matrix shape {m.shape} does not match {n} labels")
        if not np.array_equal(m, m.T):
            raise DomainError("similarity matrix is not symmetric")
        if np.any(m < 0) or np.any(m > 1):
            raise DomainError("similarity values must lie in [0, 1]")
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "matrix", _frozen(m))

    def edges(self):
        """Yield ``(label_i, label_j, value)`` for positive off-diagonal entries, ``i < j``."""
        iu, ju = np.triu_indices(len(self.labels), 1)
        for i, j in zip(iu, ju):
            v = self.matrix[i, j]
            if v > 0:
                yield self.labels[i], self.labels[j], float(v)

    def value(self, u: Hashable, v: Hashable) -> float:
        idx = {lab: k for k, lab in enumerate(self.labels)}
        return float(self.matrix[idx[u], idx[v]])


@dataclass(frozen=True, eq=False)
class ProjectedNetwork:
    """Shared-neighbour network over one node type; zero diagonal."""

    labels: tuple
    matrix: np.ndarray
    side: Side
    weighted: bool = False


def feature_matrix(net: BipartiteNetwork, orientation=Orientation.DIRECT) -> FeatureMatrix:
    """Weight matrix seen from one node type.

    Direct returns the stored ``n_A x n_B`` block, Reverse its transpose.
    """
    o = Orientation.parse(orientation)
    if o is Orientation.DIRECT:
        return FeatureMatrix(net.weights, net.a_labels, net.b_labels, o)
    return FeatureMatrix(net.weights.T, net.b_labels, net.a_labels, o)


def coincidence_network(net: BipartiteNetwork, orientation=Orientation.DIRECT, *,
                        drop_isolated: bool = False, n_jobs: int | None = None) -> SimilarityNetwork:
    """Pairwise coincidence similarity between the feature rows of ``net``.

    Args:
        net: the bipartite network.
        orientation: ``"direct"`` compares A-nodes, ``"reverse"`` B-nodes.
        drop_isolated: remove nodes whose feature row is all-zero instead of
            raising. Removed labels are listed in ``SimilarityNetwork.dropped``.
        n_jobs: worker threads for the pairwise computation.

    Raises:
        IsolatedNodeError: some row is all-zero and ``drop_isolated`` is false.
    """
    fm = feature_matrix(net, orientation)
    X = fm.matrix
    isolated = ~np.any(X > 0, axis=1)
    dropped = ()
    labels = fm.row_labels
    if isolated.any():
        bad = tuple(lab for lab, z in zip(fm.row_labels, isolated) if z)
        if not drop_isolated:
            raise IsolatedNodeError(bad)
        dropped = bad
        X = X[~isolated]
        labels = tuple(lab for lab, z in zip(fm.row_labels, isolated) if not z)
    if len(labels) < 2:
        raise DimensionError(f"need at least 2 non-isolated nodes, got {len(labels)}")
    sim = pairwise_similarity(X, n_jobs=n_jobs)
    return SimilarityNetwork(labels, sim.coincidence, fm.orientation, X.shape[1], dropped)


def project(net: BipartiteNetwork, side="a", use_weights: bool = False) -> ProjectedNetwork:
    """Unipartite projection onto the A or B nodes.

    Unweighted entries count common neighbours (links with weight > 0);
    weighted entries sum ``min(w_ik, w_jk)`` over common neighbours ``k``.
    """
    s = Side.parse(side)
    W = net.weights if s is Side.A else net.weights.T
    labels = net.a_labels if s is Side.A else net.b_labels
    if use_weights:
        M = np.minimum(W[:, None, :], W[None, :, :]).sum(axis=-1)
    else:
        B = (W > 0).astype(np.int64)
        M = B @ B.T
    np.fill_diagonal(M, 0)
    return ProjectedNetwork(labels, M, s, bool(use_weights))


def to_symmetric(net: BipartiteNetwork) -> np.ndarray:
    """Full ``(n_A + n_B)`` square weight matrix, A-nodes first."""
    na, nb = net.shape
    full = np.zeros((na + nb, na + nb))
    full[:na, na:] = net.weights
    full[na:, :na] = net.weights.T
    return full


def from_symmetric(full, n_a: int, labels: Sequence | None = None) -> BipartiteNetwork:
    """Extract the A-to-B block of a full symmetric bipartite weight matrix.

    Args:
        full: square matrix ordered with the ``n_a`` A-nodes first.
        n_a: number of A-nodes.
        labels: ``n_a + n_b`` node labels in matrix order; defaults to
            ``A1..`` followed by ``B1..``.

    Raises:
        FormatError: the matrix is not square or symmetric, or a same-type
            block has a nonzero entry. The message names the first offending
            index pair.
    """
    M = np.asarray(full, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise FormatError(f"expected a square matrix, got shape {M.shape}")
    n = M.shape[0]
    if not 1 <= n_a < n:
        raise FormatError(f"n_a={n_a} must leave at least one node of each type in {n} nodes")
    asym = np.argwhere(M != M.T)
    if asym.size:
        i, j = asym[0]
        raise FormatError(f"matrix is not symmetric at ({i}, {j}): {M[i, j]} vs {M[j, i]}")
    for name, blk, off in (("A-A", M[:n_a, :n_a], 0), ("B-B", M[n_a:, n_a:], n_a)):
        nz = np.argwhere(blk != 0)
        if nz.size:
            i, j = nz[0] + off
            raise FormatError(f"nonzero {name} entry at ({i}, {j}); links must join distinct types")
    if labels is None:
        labels = [f"A{i + 1}" for i in range(n_a)] + [f"B{j + 1}" for j in range(n - n_a)]
    labels = tuple(labels)
    if len(labels) != n:
        raise FormatError(f"{len(labels)} labels for a {n}x{n} matrix")
    return BipartiteNetwork(labels[:n_a], labels[n_a:], M[:n_a, n_a:])
