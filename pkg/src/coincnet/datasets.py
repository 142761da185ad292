"""
Small built-in networks used in documentation and tests.

Two versions of the five-by-eight example network circulate, differing only
in the weight of link A5-B6 (4 or 3). :func:`example_network` uses 4;
:func:`example_symmetric_matrix` takes the A5-B6 weight as a parameter.
"""
from __future__ import annotations

import numpy as np

from .bipartite import BipartiteNetwork, to_symmetric

__all__ = ["EXAMPLE_WEIGHTS", "example_network", "example_symmetric_matrix"]

EXAMPLE_A_LABELS = ("A1", "A2", "A3", "A4", "A5")
EXAMPLE_B_LABELS = ("B1", "B2", "B3", "B4", "B5", "B6", "B7", "B8")

#            B1 B2 B3 B4 B5 B6 B7 B8
EXAMPLE_WEIGHTS = np.array([
    [1, 2, 0, 0, 0, 0, 2, 0],  # A1
    [0, 0, 0, 3, 2, 0, 1, 0],  # A2
    [1, 0, 4, 0, 0, 2, 0, 2],  # A3
    [0, 0, 0, 0, 4, 0, 0, 1],  # A4
    [0, 0, 2, 0, 0, 4, 0, 3],  # A5
], dtype=float)
EXAMPLE_WEIGHTS.setflags(write=False)


def example_network() -> BipartiteNetwork:
    """The 5 A-node, 8 B-node weighted example network (A5-B6 = 4)."""
    return BipartiteNetwork(EXAMPLE_A_LABELS, EXAMPLE_B_LABELS, EXAMPLE_WEIGHTS)


def example_symmetric_matrix(a5_b6: float = 4.0) -> np.ndarray:
    """13x13 symmetric weight matrix of the example network, A-nodes first.

    ``a5_b6`` sets the A5-B6 entry and its mirror; the default matches
    :func:`example_network`.
    """
    full = to_symmetric(example_network())
    a5 = EXAMPLE_A_LABELS.index("A5")
    b6 = len(EXAMPLE_A_LABELS) + EXAMPLE_B_LABELS.index("B6")
    full[a5, b6] = full[b6, a5] = a5_b6
    return full


def example_labels() -> tuple:
    return EXAMPLE_A_LABELS + EXAMPLE_B_LABELS
