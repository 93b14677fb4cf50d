"""Unit-vector labelings of hypergraph vertices in R^3.

A labeling is a faithful orthogonal representation (FOR) of a hypergraph
when vertices sharing an edge get orthogonal vectors, no other pair is
orthogonal, and no two labels coincide up to sign.  Labels are rays:
every comparison uses ``|<u|v>|``.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Sequence

import networkx as nx
import numpy as np

from ..hypergraph import Hypergraph, make_edge
from .eigen import eigen_sym3

__all__ = [
    "DEFAULT_EPS",
    "GRAM_EPS",
    "default_eps",
    "LabelingError",
    "VectorLabeling",
    "ForReport",
    "verify_for",
    "infer_hypergraph_from_labels",
    "projector_sum",
    "quantum_bounds",
    "born_probabilities",
    "gram_equivalent",
    "pairwise_overlaps",
]

DEFAULT_EPS = 1e-10
GRAM_EPS = 1e-8
_UNIT_TOL = 1e-12
_READ_TOL = 1e-6


def default_eps() -> float:
    """Orthogonality tolerance, overridable through ``PSEUDOCTX_EPS``."""
    env = os.environ.get("PSEUDOCTX_EPS")
    return float(env) if env else DEFAULT_EPS


class LabelingError(ValueError):
    pass


@dataclass(frozen=True)
class VectorLabeling:
    """Vectors for vertices ``1..n``; row ``v - 1`` labels vertex ``v``."""

    vectors: np.ndarray
    eps: float = field(default=DEFAULT_EPS)

    def __post_init__(self):
        v = np.array(self.vectors, dtype=float)
        if v.ndim != 2 or v.shape[1] != 3:
            raise LabelingError(f"expected an (n, 3) array, got shape {v.shape}")
        norms = np.linalg.norm(v, axis=1)
        bad = np.flatnonzero(np.abs(norms - 1) > _UNIT_TOL)
        if bad.size:
            raise LabelingError(f"labels {[int(i) + 1 for i in bad]} are not unit vectors")
        v.setflags(write=False)
        object.__setattr__(self, "vectors", v)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[float]], eps: float = DEFAULT_EPS, normalize: bool = True):
        v = np.array(list(rows), dtype=float)
        if normalize:
            v = v / np.linalg.norm(v, axis=1, keepdims=True)
        return cls(v, eps)

    @classmethod
    def from_mapping(cls, labels: Mapping[int, Sequence[float]], eps: float = DEFAULT_EPS):
        n = max(labels)
        if sorted(labels) != list(range(1, n + 1)):
            raise LabelingError("labels must cover vertices 1..n")
        return cls.from_rows((labels[v] for v in range(1, n + 1)), eps)

    @property
    def n(self) -> int:
        return len(self.vectors)

    def __getitem__(self, v: int) -> np.ndarray:
        if not 1 <= v <= self.n:
            raise LabelingError(f"vertex {v} has no label")
        return self.vectors[v - 1]

    def gram(self) -> np.ndarray:
        return self.vectors @ self.vectors.T

    def with_eps(self, eps: float) -> "VectorLabeling":
        return VectorLabeling(self.vectors, eps)

    def to_json(self) -> str:
        rows = ",\n".join("    [" + ", ".join(format(x, ".17g") for x in r) + "]" for r in self.vectors)
        return '{\n  "n": %d,\n  "vectors": [\n%s\n  ]\n}\n' % (self.n, rows)

    @classmethod
    def from_json(cls, text: str, eps: float = DEFAULT_EPS) -> "VectorLabeling":
        try:
            data = json.loads(text)
            rows = np.array(data["vectors"], dtype=float)
            n = int(data.get("n", len(rows)))
        except (ValueError, KeyError, TypeError) as exc:
            raise LabelingError(f"invalid vector JSON: {exc}") from exc
        if rows.ndim != 2 or rows.shape != (n, 3):
            raise LabelingError(f"expected {n} vectors of length 3")
        norms = np.linalg.norm(rows, axis=1)
        off = np.flatnonzero(np.abs(norms - 1) > _READ_TOL)
        if off.size:
            raise LabelingError(f"vectors {[int(i) + 1 for i in off]} have norms off by more than {_READ_TOL}")
        return cls(rows / norms[:, None], eps)


@dataclass(frozen=True)
class ForReport:
    missing: tuple[tuple[int, int], ...]  # same-edge pairs that are not orthogonal
    extra: tuple[tuple[int, int], ...]  # orthogonal pairs outside every edge
    duplicates: tuple[tuple[int, int], ...]  # parallel labels

    @property
    def ok(self) -> bool:
        return not (self.missing or self.extra or self.duplicates)

    def to_dict(self) -> dict:
        return {
            "faithful": self.ok,
            "missing_orthogonality": [list(p) for p in self.missing],
            "extra_orthogonality": [list(p) for p in self.extra],
            "duplicate_labels": [list(p) for p in self.duplicates],
        }


def verify_for(h: Hypergraph, labels: VectorLabeling, eps: float | None = None) -> ForReport:
    """Check every vertex pair against the FOR conditions at tolerance ``eps``."""
    eps = labels.eps if eps is None else eps
    if labels.n < h.n:
        raise LabelingError(f"vertices {list(range(labels.n + 1, h.n + 1))} have no label")
    g = np.abs(labels.gram())
    coedge = {p for e in h.edges for p in combinations(e, 2)}
    missing, extra, dup = [], [], []
    for i, j in combinations(range(1, h.n + 1), 2):
        x = g[i - 1, j - 1]
        if (i, j) in coedge:
            if x > eps:
                missing.append((i, j))
        elif x <= eps:
            extra.append((i, j))
        if x >= 1 - eps:
            dup.append((i, j))
    return ForReport(tuple(missing), tuple(extra), tuple(dup))


def orthogonality_graph(labels: VectorLabeling, eps: float | None = None) -> nx.Graph:
    eps = labels.eps if eps is None else eps
    g = np.abs(labels.gram())
    graph = nx.Graph()
    graph.add_nodes_from(range(1, labels.n + 1))
    graph.add_edges_from(
        (i, j) for i, j in combinations(range(1, labels.n + 1), 2) if g[i - 1, j - 1] <= eps
    )
    return graph


def infer_hypergraph_from_labels(labels: VectorLabeling, eps: float | None = None) -> Hypergraph:
    """The hypergraph whose edges are the maximal orthogonal cliques.

    Every maximal clique must be a triple; in R^3 a clique cannot exceed 3,
    so smaller cliques (including isolated vertices) are the failure mode.
    """
    eps = labels.eps if eps is None else eps
    g = np.abs(labels.gram())
    dup = [(i + 1, j + 1) for i, j in combinations(range(labels.n), 2) if g[i, j] >= 1 - eps]
    if dup:
        raise LabelingError(f"duplicate labels (up to sign): {dup}")
    cliques = sorted(sorted(c) for c in nx.find_cliques(orthogonality_graph(labels, eps)))
    bad = [c for c in cliques if len(c) != 3]
    if bad:
        raise LabelingError(f"maximal orthogonal cliques of size other than 3: {bad}")
    return Hypergraph.from_edges([make_edge(c) for c in cliques], n=labels.n)


def projector_sum(labels: VectorLabeling, subset: Iterable[int]) -> np.ndarray:
    """``sum_v |v><v|`` over ``subset``."""
    rows = np.array([labels[v] for v in subset]).reshape(-1, 3)
    return rows.T @ rows


def quantum_bounds(labels: VectorLabeling, subset: Iterable[int]) -> tuple[float, float]:
    """Range of ``sum_v |<v|psi>|^2`` over unit ``psi``: extreme eigenvalues of the projector sum."""
    vals = eigen_sym3(projector_sum(labels, subset)).eigenvalues
    return float(vals[0]), float(vals[-1])


def born_probabilities(labels: VectorLabeling, psi: Sequence[float]) -> dict[int, float]:
    psi = np.asarray(psi, dtype=float)
    if abs(np.linalg.norm(psi) - 1) > _UNIT_TOL * 100:
        raise LabelingError("state vector is not normalized")
    amp = labels.vectors @ psi
    return {v: float(a * a) for v, a in enumerate(amp, start=1)}


def gram_equivalent(l1: VectorLabeling, l2: VectorLabeling, tol: float = GRAM_EPS) -> bool:
    """Same ``|<v_i|v_j>|`` for all pairs, i.e. equal up to an orthogonal map and label signs."""
    if l1.n != l2.n:
        return False
    return bool(np.abs(np.abs(l1.gram()) - np.abs(l2.gram())).max() <= tol)


def pairwise_overlaps(labels: VectorLabeling, subset: Iterable[int]) -> list[float]:
    vs = sorted(subset)
    return [float(abs(labels[i] @ labels[j])) for i, j in combinations(vs, 2)]
