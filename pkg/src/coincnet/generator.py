"""
Synthetic modular bipartite networks.

The reference model joins every A-node of a group to every B-node of the same
group and to nothing else. :func:`rewire` then scrambles links with a
degree-preserving endpoint swap among a random subset of links, which creates
overlap between groups while every node keeps its degree.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Iterator

import numpy as np

from .bipartite import BipartiteNetwork, Orientation
from .errors import DomainError

__all__ = [
    "RNG_ALGORITHM",
    "GeneratorConfig",
    "GroundTruth",
    "reference_model",
    "rewire",
    "generate",
    "between_group_fraction",
]

RNG_ALGORITHM = f"numpy.random.PCG64 via default_rng (numpy {np.__version__})"
DEFAULT_MAX_RETRIES = 32


@dataclass(frozen=True)
class GeneratorConfig:
    """Parameters of a synthetic network.

    Attributes:
        n_groups: number of groups.
        a_per_group: A-nodes per group.
        b_per_group: B-nodes per group.
        rewire_p: probability that each link is selected for scrambling.
        seed: unsigned 64-bit seed of the random stream.
        max_weight: links get uniform integer weights in ``[1, max_weight]``
            after rewiring; the default 1 keeps the network binary.
        partners: partner pool of :func:`rewire`, ``"selected"`` or ``"all"``.
    """

    n_groups: int
    a_per_group: int
    b_per_group: int
    rewire_p: float = 0.0
    seed: int = 0
    max_weight: int = 1
    partners: str = "selected"

    def __post_init__(self):
        for name in ("n_groups", "a_per_group", "b_per_group", "max_weight"):
            v = getattr(self, name)
            if isinstance(v, bool) or int(v) != v or v < 1:
                raise DomainError(f"{name} must be a positive integer, got {v!r}")
            object.__setattr__(self, name, int(v))
        p = float(self.rewire_p)
        if not 0.0 <= p <= 1.0:
            raise DomainError(f"rewire_p must lie in [0, 1], got {self.rewire_p!r}")
        object.__setattr__(self, "rewire_p", p)
        if isinstance(self.seed, bool) or int(self.seed) != self.seed or not 0 <= self.seed < 2**64:
            raise DomainError(f"seed must be an unsigned 64-bit integer, got {self.seed!r}")
        object.__setattr__(self, "seed", int(self.seed))
        if self.partners not in ("selected", "all"):
            raise DomainError(f"partners must be 'selected' or 'all', got {self.partners!r}")

    def with_seed(self, seed: int) -> "GeneratorConfig":
        return GeneratorConfig(**{**asdict(self), "seed": seed})

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class GroundTruth:
    """Group index of every node, aligned with the network's label order."""

    a_labels: tuple
    a_groups: tuple
    b_labels: tuple
    b_groups: tuple

    def mapping(self, orientation=Orientation.DIRECT) -> dict:
        """``{label: group}`` for the node type compared under ``orientation``."""
        o = Orientation.parse(orientation)
        if o is Orientation.DIRECT:
            return dict(zip(self.a_labels, self.a_groups))
        return dict(zip(self.b_labels, self.b_groups))

    def items(self) -> Iterator[tuple]:
        yield from zip(self.a_labels, self.a_groups)
        yield from zip(self.b_labels, self.b_groups)


def reference_model(cfg: GeneratorConfig) -> tuple[BipartiteNetwork, GroundTruth]:
    """Block-diagonal 0/1 network with ``n_groups`` complete bipartite blocks."""
    a_groups = np.repeat(np.arange(cfg.n_groups), cfg.a_per_group)
    b_groups = np.repeat(np.arange(cfg.n_groups), cfg.b_per_group)
    W = (a_groups[:, None] == b_groups[None, :]).astype(float)
    a_labels = tuple(f"A{i + 1}" for i in range(a_groups.size))
    b_labels = tuple(f"B{j + 1}" for j in range(b_groups.size))
    truth = GroundTruth(a_labels, tuple(int(g) for g in a_groups),
                        b_labels, tuple(int(g) for g in b_groups))
    return BipartiteNetwork(a_labels, b_labels, W), truth


def rewire(net: BipartiteNetwork, p: float, rng=None,
           max_retries: int = DEFAULT_MAX_RETRIES, partners: str = "selected") -> BipartiteNetwork:
    """Scramble the links of a binary network by pairwise endpoint swaps.

    Each link is selected for scrambling with probability ``p`` (one draw per
    link, row-major order of the input). The selected links are then visited
    in that same order; a visited link ``(a1, b1)`` picks a partner
    ``(a2, b2)`` uniformly and the two exchange B-endpoints, giving
    ``(a1, b2)`` and ``(a2, b1)``. A partner whose swap would create a link
    that already exists is re-drawn, at most ``max_retries`` times, after
    which the link stays where it is. Every node keeps its degree.

    Args:
        net: binary network (all weights 0 or 1).
        p: selection probability per link, in ``[0, 1]``.
        rng: ``numpy.random.Generator`` or anything ``default_rng`` accepts.
        max_retries: partner draws per visited link.
        partners: ``"selected"`` draws partners among the selected links
            only, so about ``p`` of all links move. ``"all"`` draws them among
            every current link, which moves roughly twice as many.
    """
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"p must lie in [0, 1], got {p}")
    if partners not in ("selected", "all"):
        raise DomainError(f"partners must be 'selected' or 'all', got {partners!r}")
    if not net.is_binary():
        raise DomainError("rewiring is defined only for binary (0/1) networks")
    rng = rng if isinstance(rng, np.random.Generator) else np.random.default_rng(rng)

    adj = net.weights > 0
    a_end, b_end = np.nonzero(adj)
    b_end = b_end.copy()
    selected = np.flatnonzero(rng.random(a_end.size) < p)
    pool = selected if partners == "selected" else np.arange(a_end.size)
    for k in selected:
        a1, b1 = a_end[k], b_end[k]
        for _ in range(max_retries):
            j = pool[rng.integers(pool.size)]
            a2, b2 = a_end[j], b_end[j]
            # also rejects j == k and partners sharing an endpoint
            if adj[a1, b2] or adj[a2, b1]:
                continue
            adj[a1, b1] = adj[a2, b2] = False
            adj[a1, b2] = adj[a2, b1] = True
            b_end[k], b_end[j] = b2, b1
            break
    return BipartiteNetwork(net.a_labels, net.b_labels, adj.astype(float))


def generate(cfg: GeneratorConfig) -> tuple[BipartiteNetwork, GroundTruth]:
    """Reference model, rewired with ``cfg.rewire_p`` from a stream seeded by ``cfg.seed``."""
    net, truth = reference_model(cfg)
    rng = np.random.default_rng(cfg.seed)
    net = rewire(net, cfg.rewire_p, rng, partners=cfg.partners)
    if cfg.max_weight > 1:
        W = np.array(net.weights)
        mask = W > 0
        W[mask] = rng.integers(1, cfg.max_weight + 1, size=int(mask.sum()))
        net = BipartiteNetwork(net.a_labels, net.b_labels, W)
    return net, truth


def between_group_fraction(net: BipartiteNetwork, truth: GroundTruth) -> float:
    """Fraction of links whose endpoints belong to different groups."""
    ga = np.asarray(truth.a_groups)
    gb = np.asarray(truth.b_groups)
    links = net.weights > 0
    total = links.sum()
    if total == 0:
        return 0.0
    return float((links & (ga[:, None] != gb[None, :])).sum() / total)
