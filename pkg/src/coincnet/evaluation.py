"""
Group recovery by thresholding a similarity network.

Two error rates are reported, both as percentages:

* ``eps_between`` - share of between-group node pairs that end up linked;
* ``eps_within`` - share of within-group node pairs that end up unlinked.

Edges are kept where similarity is strictly greater than the threshold, so
raising the threshold only removes edges.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Mapping, NamedTuple, Sequence

import numpy as np

from .bipartite import Orientation, SimilarityNetwork, coincidence_network
from .errors import DimensionError, DomainError, IsolatedNodeError
from .generator import GeneratorConfig, GroundTruth, generate

__all__ = [
    "ThresholdedGraph",
    "ErrorPair",
    "ErrorCurve",
    "EnsembleSummary",
    "threshold_grid",
    "threshold_graph",
    "group_errors",
    "error_sweep",
    "ensemble",
]


def threshold_grid(step: float = 0.01) -> np.ndarray:
    """Evenly spaced thresholds from 0 to 1 inclusive; ``1/step`` must be an integer."""
    step = float(step)
    if not 0 < step <= 1:
        raise DomainError(f"grid step must lie in (0, 1], got {step}")
    n = round(1.0 / step)
    if abs(n * step - 1.0) > 1e-9:
        raise DomainError(f"grid step {step} does not divide [0, 1] evenly")
    return np.arange(n + 1) / n


@dataclass(frozen=True, eq=False)
class ThresholdedGraph:
    labels: tuple
    adjacency: np.ndarray
    threshold: float

    @property
    def n_edges(self) -> int:
        return int(np.triu(self.adjacency, 1).sum())


class ErrorPair(NamedTuple):
    eps_between: float
    eps_within: float


@dataclass(frozen=True, eq=False)
class ErrorCurve:
    """Error rates of one similarity network over a threshold grid."""

    thresholds: np.ndarray
    eps_between: np.ndarray
    eps_within: np.ndarray
    orientation: Orientation | None = None
    config: GeneratorConfig | None = None

    @property
    def points(self) -> list[ErrorPair]:
        return [ErrorPair(float(b), float(w)) for b, w in zip(self.eps_between, self.eps_within)]

    def min_max_error(self) -> float:
        """Smallest value over the grid of ``max(eps_between, eps_within)``."""
        return float(np.max([self.eps_between, self.eps_within], axis=0).min())

    def best_threshold(self) -> float:
        """First threshold achieving :meth:`min_max_error`."""
        worst = np.max([self.eps_between, self.eps_within], axis=0)
        return float(self.thresholds[int(np.argmin(worst))])


@dataclass(frozen=True, eq=False)
class EnsembleSummary:
    """Per-threshold mean and population standard deviation over realizations.

    ``curves`` holds the individual curves in realization order and
    ``seeds`` the seed of each; ``skipped`` lists seeds whose network could
    not be analysed (an isolated node in the chosen orientation).
    """

    thresholds: np.ndarray
    eps_between_mean: np.ndarray
    eps_between_std: np.ndarray
    eps_within_mean: np.ndarray
    eps_within_std: np.ndarray
    n_realizations: int
    orientation: Orientation
    config: GeneratorConfig
    seeds: tuple = ()
    skipped: tuple = ()
    curves: list = field(default_factory=list)

    def min_max_errors(self) -> np.ndarray:
        """:meth:`ErrorCurve.min_max_error` of every retained curve."""
        return np.array([c.min_max_error() for c in self.curves])


def threshold_graph(sim: SimilarityNetwork, T: float) -> ThresholdedGraph:
    """Keep the pairs whose similarity is strictly above ``T``."""
    T = float(T)
    if not 0.0 <= T <= 1.0:
        raise DomainError(f"threshold must lie in [0, 1], got {T}")
    adj = (np.asarray(sim.matrix) > T).astype(np.int8)
    np.fill_diagonal(adj, 0)
    return ThresholdedGraph(sim.labels, adj, T)


def _group_vector(labels, truth) -> np.ndarray:
    if isinstance(truth, GroundTruth):
        raise TypeError("pass truth.mapping(orientation) rather than a GroundTruth")
    if isinstance(truth, Mapping):
        if set(truth) != set(labels):
            missing = [lab for lab in labels if lab not in truth]
            extra = [lab for lab in truth if lab not in set(labels)]
            raise DomainError(f"ground truth does not match node set (missing {missing[:5]}, extra {extra[:5]})")
        return np.array([truth[lab] for lab in labels])
    groups = np.asarray(truth)
    if groups.shape != (len(labels),):
        raise DomainError(f"{groups.size} group labels for {len(labels)} nodes")
    return groups


class _PairMasks(NamedTuple):
    between: np.ndarray
    within: np.ndarray


def _pair_masks(groups) -> _PairMasks:
    iu = np.triu_indices(groups.size, 1)
    same = groups[iu[0]] == groups[iu[1]]
    return _PairMasks(~same, same)


def _errors(upper_edges, masks: _PairMasks) -> ErrorPair:
    n_b = int(masks.between.sum())
    n_w = int(masks.within.sum())
    eps_b = 100.0 * int(upper_edges[masks.between].sum()) / n_b if n_b else 0.0
    eps_w = 100.0 * int((~upper_edges[masks.within]).sum()) / n_w if n_w else 0.0
    return ErrorPair(eps_b, eps_w)


def group_errors(g: ThresholdedGraph, truth: Mapping | Sequence) -> ErrorPair:
    """Between- and within-group error percentages of a thresholded graph.

    Args:
        g: thresholded similarity graph.
        truth: ``{label: group}`` covering exactly ``g.labels``, or a sequence
            of groups aligned with ``g.labels``.

    When no between-group (or within-group) pairs exist the corresponding
    error is 0.
    """
    groups = _group_vector(g.labels, truth)
    iu = np.triu_indices(len(g.labels), 1)
    return _errors(np.asarray(g.adjacency)[iu] > 0, _pair_masks(groups))


def _check_thresholds(thresholds) -> np.ndarray:
    t = np.asarray(thresholds, dtype=float)
    if t.ndim != 1 or t.size == 0:
        raise DimensionError("thresholds must be a non-empty 1-D sequence")
    if np.any(t < 0) or np.any(t > 1):
        raise DomainError("thresholds must lie in [0, 1]")
    if np.any(np.diff(t) <= 0):
        raise DomainError("thresholds must be strictly increasing")
    return t


def error_sweep(sim: SimilarityNetwork, truth: Mapping | Sequence, thresholds=None,
                config: GeneratorConfig | None = None) -> ErrorCurve:
    """Error rates of ``sim`` at every threshold; defaults to a 0.01 grid."""
    t = threshold_grid() if thresholds is None else _check_thresholds(thresholds)
    groups = _group_vector(sim.labels, truth)
    masks = _pair_masks(groups)
    iu = np.triu_indices(len(sim.labels), 1)
    values = np.asarray(sim.matrix)[iu]
    eps = np.array([_errors(values > T, masks) for T in t]).reshape(-1, 2)
    return ErrorCurve(t, eps[:, 0], eps[:, 1], sim.orientation, config)


def _realization(args):
    cfg, orientation, thresholds = args
    net, truth = generate(cfg)
    try:
        sim = coincidence_network(net, orientation)
    except IsolatedNodeError:
        return None
    return error_sweep(sim, truth.mapping(orientation), thresholds, cfg)


def ensemble(cfg: GeneratorConfig, n_realizations: int, orientation=Orientation.DIRECT,
             thresholds=None, n_jobs: int | None = None) -> EnsembleSummary:
    """Generate, analyse and aggregate ``n_realizations`` networks.

    Realization ``k`` uses seed ``cfg.seed + k`` (wrapping at 2**64).
    Realizations run in worker processes when ``n_jobs > 1``; aggregation
    always follows realization order, so the summary does not depend on
    ``n_jobs``.
    """
    n = int(n_realizations)
    if n < 1:
        raise DomainError(f"n_realizations must be >= 1, got {n_realizations}")
    o = Orientation.parse(orientation)
    t = threshold_grid() if thresholds is None else _check_thresholds(thresholds)
    seeds = [(cfg.seed + k) % 2**64 for k in range(n)]
    tasks = [(cfg.with_seed(s), o, t) for s in seeds]
    if n_jobs is None or n_jobs <= 1:
        results = [_realization(task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=n_jobs) as pool:
            results = list(pool.map(_realization, tasks))

    curves = [c for c in results if c is not None]
    kept = tuple(s for s, c in zip(seeds, results) if c is not None)
    skipped = tuple(s for s, c in zip(seeds, results) if c is None)
    if not curves:
        raise DomainError(f"all {n} realizations were skipped (isolated nodes)")
    B = np.vstack([c.eps_between for c in curves])
    W = np.vstack([c.eps_within for c in curves])
    return EnsembleSummary(
        thresholds=t,
        eps_between_mean=B.mean(axis=0),
        eps_between_std=B.std(axis=0),
        eps_within_mean=W.mean(axis=0),
        eps_within_std=W.std(axis=0),
        n_realizations=len(curves),
        orientation=o,
        config=cfg,
        seeds=kept,
        skipped=skipped,
        curves=curves,
    )
