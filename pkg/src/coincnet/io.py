"""
Readers and writers for networks, ground truth, error curves and run metadata.

Formats
-------
weight matrix (CSV)
    Header row holds the B-labels after an ignored corner cell; every other
    row is an A-label followed by one non-negative weight per B-node.
edge list (TSV)
    ``a_label<TAB>b_label[<TAB>weight]`` per line, weight defaulting to 1.
    Lines starting with ``#`` are comments, except the node declarations
    ``#@A<TAB>label...`` and ``#@B<TAB>label...`` which fix the node order
    and keep isolated nodes. Without declarations labels are taken in order
    of first appearance. Lines without a tab are split on whitespace.
ground truth (CSV)
    ``node_label,group_index`` with a header row.
run metadata
    ``key=value`` lines; the generator keys double as a config file.

Every writer accepts a path, ``"-"`` for standard output, or an open text
stream.
"""
from __future__ import annotations

import contextlib
import csv
import math
import sys
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Mapping
from xml.etree import ElementTree as ET

import numpy as np

from .bipartite import BipartiteNetwork, ProjectedNetwork, SimilarityNetwork
from .errors import DomainError, FormatError
from .evaluation import EnsembleSummary, ErrorCurve
from .generator import RNG_ALGORITHM, GeneratorConfig, GroundTruth

__all__ = [
    "read_weight_matrix",
    "write_weight_matrix",
    "read_edge_list",
    "write_edge_list",
    "read_network",
    "read_ground_truth",
    "write_ground_truth",
    "write_similarity",
    "write_projection",
    "write_error_curves",
    "write_realization_curves",
    "RunMetadata",
    "write_metadata",
    "read_metadata",
    "read_config",
    "config_from_mapping",
]

GRAPHML_NS = "http://graphml.graphdrawing.org/xmlns"
EDGE_DECIMALS = 6


@contextlib.contextmanager
def _open_out(dest):
    if dest == "-" or dest is None:
        yield sys.stdout
    elif hasattr(dest, "write"):
        yield dest
    else:
        with open(dest, "w", newline="", encoding="utf-8") as fh:
            yield fh


def _fmt(x) -> str:
    """Shortest text that parses back to the same float."""
    x = float(x)
    if x.is_integer() and abs(x) < 1e15:
        return str(int(x))
    return repr(x)


def _parse_weight(text, where):
    try:
        w = float(text)
    except ValueError:
        raise FormatError(f"{where}: cannot parse weight {text!r}") from None
    if not math.isfinite(w):
        raise DomainError(f"{where}: non-finite weight {text!r}")
    if w < 0:
        raise DomainError(f"{where}: negative weight {text!r}")
    return w


# -- weight matrix -----------------------------------------------------------

def read_weight_matrix(path) -> BipartiteNetwork:
    """Parse a labeled CSV weight matrix (A-rows by B-columns)."""
    with open(path, newline="", encoding="utf-8") as fh:
        rows = [r for r in csv.reader(fh) if any(cell.strip() for cell in r)]
    if not rows:
        raise FormatError(f"{path}: empty weight matrix file")
    b_labels = [c.strip() for c in rows[0][1:]]
    if not b_labels:
        raise FormatError(f"{path}: header row has no B-labels")
    a_labels, W = [], []
    for r, row in enumerate(rows[1:], start=2):
        if len(row) != len(b_labels) + 1:
            raise FormatError(f"{path}: row {r} has {len(row) - 1} cells, expected {len(b_labels)}")
        a_labels.append(row[0].strip())
        W.append([_parse_weight(cell.strip(), f"{path}: row {r}, column {c}")
                  for c, cell in enumerate(row[1:], start=2)])
    if not a_labels:
        raise FormatError(f"{path}: no A-rows")
    return BipartiteNetwork(tuple(a_labels), tuple(b_labels), np.array(W, dtype=float))


def write_weight_matrix(net: BipartiteNetwork, dest) -> None:
    with _open_out(dest) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow([""] + list(net.b_labels))
        for lab, row in zip(net.a_labels, net.weights):
            w.writerow([lab] + [_fmt(x) for x in row])


# -- edge list ----------------------------------------------------------------

def read_edge_list(path) -> BipartiteNetwork:
    """Parse a TSV edge list into a network.

    Raises:
        FormatError: wrong number of fields or a repeated ``(a, b)`` pair.
        DomainError: negative or non-finite weight.
    """
    a_order: dict = {}
    b_order: dict = {}
    edges: dict = {}
    with open(path, encoding="utf-8") as fh:
        for n, raw in enumerate(fh, start=1):
            line = raw.rstrip("\r\n")
            if not line.strip():
                continue
            if line.startswith("#@A\t") or line.startswith("#@B\t"):
                order = a_order if line[2] == "A" else b_order
                for lab in line.split("\t")[1:]:
                    lab = lab.strip()
                    if lab in order:
                        raise FormatError(f"{path}: line {n}: label {lab!r} declared twice")
                    order[lab] = len(order)
                continue
            if line.lstrip().startswith("#"):
                continue
            fields = line.split("\t") if "\t" in line else line.split()
            fields = [f.strip() for f in fields]
            if len(fields) not in (2, 3) or not fields[0] or not fields[1]:
                raise FormatError(f"{path}: line {n}: expected 'a<TAB>b[<TAB>weight]', got {len(fields)} fields")
            a, b = fields[0], fields[1]
            w = _parse_weight(fields[2], f"{path}: line {n}") if len(fields) == 3 else 1.0
            if (a, b) in edges:
                raise FormatError(f"{path}: line {n}: duplicate edge {a!r} - {b!r}")
            edges[(a, b)] = w
            a_order.setdefault(a, len(a_order))
            b_order.setdefault(b, len(b_order))
    if not a_order or not b_order:
        raise FormatError(f"{path}: no edges or node declarations found")
    W = np.zeros((len(a_order), len(b_order)))
    for (a, b), w in edges.items():
        W[a_order[a], b_order[b]] = w
    return BipartiteNetwork(tuple(a_order), tuple(b_order), W)


def _check_tsv_label(lab):
    s = str(lab)
    if any(ch in s for ch in "\t\r\n") or s != s.strip() or not s or s.startswith("#"):
        raise FormatError(f"label {lab!r} cannot be stored in an edge list")
    return s


def write_edge_list(net: BipartiteNetwork, dest, declare_nodes: bool = True) -> None:
    """Write links in row-major order, preceded by node declarations."""
    with _open_out(dest) as fh:
        if declare_nodes:
            fh.write("#@A\t" + "\t".join(_check_tsv_label(x) for x in net.a_labels) + "\n")
            fh.write("#@B\t" + "\t".join(_check_tsv_label(x) for x in net.b_labels) + "\n")
        for a, b, w in net.edges():
            fh.write(f"{_check_tsv_label(a)}\t{_check_tsv_label(b)}\t{_fmt(w)}\n")


def read_network(path) -> BipartiteNetwork:
    """Dispatch on extension: ``.csv`` is a weight matrix, anything else an edge list."""
    if Path(path).suffix.lower() == ".csv":
        return read_weight_matrix(path)
    return read_edge_list(path)


# -- ground truth -------------------------------------------------------------

def read_ground_truth(path) -> dict:
    """``{label: group}`` from a ``node_label,group_index`` CSV."""
    truth = {}
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip() for h in header] != ["node_label", "group_index"]:
            raise FormatError(f"{path}: expected header 'node_label,group_index'")
        for n, row in enumerate(reader, start=2):
            if not any(c.strip() for c in row):
                continue
            if len(row) != 2:
                raise FormatError(f"{path}: line {n}: expected 2 fields, got {len(row)}")
            lab = row[0].strip()
            try:
                g = int(row[1])
            except ValueError:
                raise FormatError(f"{path}: line {n}: bad group index {row[1]!r}") from None
            if lab in truth:
                raise FormatError(f"{path}: line {n}: duplicate node {lab!r}")
            truth[lab] = g
    return truth


def write_ground_truth(truth: GroundTruth | Mapping, dest) -> None:
    items = truth.items() if isinstance(truth, (GroundTruth, Mapping)) else truth
    with _open_out(dest) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["node_label", "group_index"])
        for lab, g in items:
            w.writerow([lab, int(g)])


# -- similarity and projections -----------------------------------------------

def _write_matrix_csv(labels, M, fh):
    w = csv.writer(fh, lineterminator="\n")
    w.writerow([""] + list(labels))
    for lab, row in zip(labels, M):
        w.writerow([lab] + [_fmt(x) for x in row])


def _dot_id(lab) -> str:
    s = str(lab).replace("\\", "\\\\").replace('"', '\\"')
    return f'"{s}"'


def _write_dot(sim: SimilarityNetwork, fh):
    fh.write("graph coincidence {\n")
    for lab in sim.labels:
        fh.write(f"  {_dot_id(lab)};\n")
    for u, v, x in sim.edges():
        fh.write(f"  {_dot_id(u)} -- {_dot_id(v)} [weight={x:.{EDGE_DECIMALS}f}];\n")
    fh.write("}\n")


def _write_graphml(sim: SimilarityNetwork, fh):
    ET.register_namespace("", GRAPHML_NS)
    root = ET.Element(f"{{{GRAPHML_NS}}}graphml")
    ET.SubElement(root, f"{{{GRAPHML_NS}}}key", {
        "id": "weight", "for": "edge", "attr.name": "weight", "attr.type": "double"})
    graph = ET.SubElement(root, f"{{{GRAPHML_NS}}}graph",
                          {"id": "coincidence", "edgedefault": "undirected"})
    for lab in sim.labels:
        ET.SubElement(graph, f"{{{GRAPHML_NS}}}node", {"id": str(lab)})
    for u, v, x in sim.edges():
        e = ET.SubElement(graph, f"{{{GRAPHML_NS}}}edge", {"source": str(u), "target": str(v)})
        d = ET.SubElement(e, f"{{{GRAPHML_NS}}}data", {"key": "weight"})
        d.text = f"{x:.{EDGE_DECIMALS}f}"
    ET.indent(root)
    fh.write('<?xml version="1.0" encoding="UTF-8"?>\n')
    fh.write(ET.tostring(root, encoding="unicode"))
    fh.write("\n")


def write_similarity(sim: SimilarityNetwork, dest, format: str = "csv") -> None:
    """Write a similarity network as ``csv``, ``graphml`` or ``dot``.

    CSV holds the full labeled matrix at full precision. GraphML and DOT hold
    one undirected edge per strictly positive off-diagonal entry, with the
    weight rounded to 6 decimals; every node is declared, isolated or not.
    """
    fmt = format.lower()
    writers = {"csv": lambda fh: _write_matrix_csv(sim.labels, sim.matrix, fh),
               "graphml": lambda fh: _write_graphml(sim, fh),
               "dot": lambda fh: _write_dot(sim, fh)}
    if fmt not in writers:
        raise DomainError(f"unknown similarity format {format!r}; use csv, graphml or dot")
    with _open_out(dest) as fh:
        writers[fmt](fh)


def write_projection(proj: ProjectedNetwork, dest) -> None:
    with _open_out(dest) as fh:
        _write_matrix_csv(proj.labels, proj.matrix, fh)


# -- error curves -------------------------------------------------------------

CURVE_COLUMNS = ["T", "eps_b_mean", "eps_b_std", "eps_w_mean", "eps_w_std", "n_realizations"]


def write_error_curves(curve: ErrorCurve | EnsembleSummary, dest) -> None:
    """One row per threshold; a single curve has zero std and ``n_realizations`` 1."""
    if isinstance(curve, EnsembleSummary):
        cols = (curve.eps_between_mean, curve.eps_between_std,
                curve.eps_within_mean, curve.eps_within_std)
        n = curve.n_realizations
    elif isinstance(curve, ErrorCurve):
        zeros = np.zeros_like(curve.eps_between)
        cols = (curve.eps_between, zeros, curve.eps_within, zeros)
        n = 1
    else:
        raise TypeError(f"expected ErrorCurve or EnsembleSummary, got {type(curve).__name__}")
    with _open_out(dest) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(CURVE_COLUMNS)
        for k, T in enumerate(curve.thresholds):
            w.writerow([_fmt(T)] + [_fmt(c[k]) for c in cols] + [n])


def write_realization_curves(summary: EnsembleSummary, dest) -> None:
    """Long-format CSV of every retained curve: ``realization,seed,T,eps_b,eps_w``."""
    with _open_out(dest) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["realization", "seed", "T", "eps_b", "eps_w"])
        for r, (seed, c) in enumerate(zip(summary.seeds, summary.curves)):
            for T, b, e in zip(c.thresholds, c.eps_between, c.eps_within):
                w.writerow([r, seed, _fmt(T), _fmt(b), _fmt(e)])


# -- metadata and config ------------------------------------------------------

CONFIG_KEYS = {
    "n_groups": int, "a_per_group": int, "b_per_group": int,
    "rewire_p": float, "seed": int, "max_weight": int, "partners": str,
}


@dataclass
class RunMetadata:
    """Everything needed to repeat a run with the same installation."""

    command: str
    config: dict = field(default_factory=dict)
    rng: str = RNG_ALGORITHM
    version: str = ""
    timestamp: str = ""

    def __post_init__(self):
        if not self.version:
            from . import __version__
            self.version = __version__
        if not self.timestamp:
            self.timestamp = datetime.now(timezone.utc).isoformat(timespec="seconds")

    def lines(self) -> list[str]:
        out = [f"command={self.command}"]
        out += [f"{k}={_fmt(v) if isinstance(v, float) else v}" for k, v in self.config.items()]
        out += [f"rng={self.rng}", f"version={self.version}", f"timestamp={self.timestamp}"]
        return out


def write_metadata(meta: RunMetadata, dest) -> None:
    with _open_out(dest) as fh:
        for line in meta.lines():
            if "\n" in line:
                raise FormatError(f"metadata value contains a newline: {line!r}")
            fh.write(line + "\n")


def read_metadata(path) -> dict:
    """``key=value`` lines to a dict of strings; blank and ``#`` lines are skipped."""
    out = {}
    with open(path, encoding="utf-8") as fh:
        for n, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise FormatError(f"{path}: line {n}: expected key=value")
            k, v = line.split("=", 1)
            out[k.strip()] = v.strip()
    return out


def config_from_mapping(values: Mapping, **overrides) -> GeneratorConfig:
    """Build a config from string or typed values; unknown keys are ignored."""
    kw = {}
    for key, typ in CONFIG_KEYS.items():
        if overrides.get(key) is not None:
            kw[key] = overrides[key]
        elif key in values:
            try:
                kw[key] = typ(values[key])
            except ValueError:
                raise FormatError(f"config key {key}: cannot parse {values[key]!r}") from None
    missing = [k for k in ("n_groups", "a_per_group", "b_per_group") if k not in kw]
    if missing:
        raise FormatError(f"config is missing {', '.join(missing)}")
    return GeneratorConfig(**kw)


def read_config(path, **overrides) -> GeneratorConfig:
    """Generator config from a ``key=value`` file such as a ``gen`` metadata sidecar."""
    return config_from_mapping(read_metadata(path), **overrides)
