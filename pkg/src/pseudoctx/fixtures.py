"""Embedded reference data for the two example logics.

Graphs are not stored: they are rebuilt from the Boolean set
representations (``*_partition``) or from the vector tables, and
:func:`check_fixture_integrity` asserts both routes agree.

Vector tables are closed-form radical expressions evaluated once in double
precision.  Signs are kept exactly as tabulated.
"""
from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources
from math import sqrt as r

from .geometry.labeling import VectorLabeling, infer_hypergraph_from_labels
from .hypergraph import Hypergraph
from .states import PartitionRepresentation, edges_from_partition

__all__ = [
    "FIXTURE_NAMES",
    "HEURISTIC_SMALL_VECTORS",
    "COMBO_PI3_VECTORS",
    "COMBO_PI2_VECTORS",
    "partition_sets",
    "vector_table",
    "load_fixture",
    "small_graph",
    "combo_graph",
    "check_fixture_integrity",
    "FixtureError",
]

FIXTURE_NAMES = (
    "small-graph",
    "combo-graph",
    "small-for-heuristic",
    "combo-for-alpha-pi3",
    "combo-for-alpha-pi2",
    "small-partition",
    "combo-partition",
)


class FixtureError(RuntimeError):
    """Raised when the embedded reference data is inconsistent."""


_s65 = r(65)

# 15-vector labeling of the small logic found by a heuristic search.
HEURISTIC_SMALL_VECTORS = [
    (1 / r(2), 3 / (5 * r(2)), -2 * r(2) / 5),
    (1 / r(3), -7 / (5 * r(3)), 1 / (5 * r(3))),
    (1 / r(6), 1 / r(6), r(2 / 3)),
    (1 / r(3), 1 / r(3), -1 / r(3)),
    (1 / r(2), -1 / r(2), 0.0),
    (1 / (3 * r(2)), -8 * r(2) / 15, 13 / (15 * r(2))),
    (1 / r(2), 2 * r(2) / 5, 3 / (5 * r(2))),
    (-2 / 3, 1 / 3, 2 / 3),
    (1 / r(2), 0.0, 1 / r(2)),
    (1 / (3 * r(2)), 2 * r(2) / 3, -1 / (3 * r(2))),
    (-1 / r(14), 9 * r(2 / 7) / 5, 1 / (5 * r(14))),
    (1 / r(6), r(2 / 3) / 5, -11 / (5 * r(6))),
    (4 / r(21), 1 / r(21), 2 / r(21)),
    (-1 / r(6), r(2 / 3), 1 / r(6)),
    (1 / r(14), r(2 / 7), -3 / r(14)),
]

# 36-vector labeling of the combined logic, alpha = pi/3, beta = arcsec(-14).
COMBO_PI3_VECTORS = [
    (r(3 / 10), -1 / r(10), -r(3 / 5)),
    (r(2 / 3), 0.0, 1 / r(3)),
    (-1 / r(30), -3 / r(10), 1 / r(15)),
    (r((209 - 9 * _s65) / 15) / 14, -(5 + 3 * _s65) / (70 * r(2)), -r(13 / 15)),
    ((-r(30) - 45 * r(78)) / 420, r((37 - 3 * _s65) / 5) / 14, -1 / r(15)),
    (-1 / (7 * r(6)), r(65 / 2) / 7, 1 / r(3)),
    (r(3 / 10) * (_s65 - 1) / 14, (1 + 3 * _s65) / (14 * r(10)), -r(3 / 5)),
    ((3 * _s65 - 1) / (14 * r(6)), r(33 + _s65) / 14, 1 / r(3)),
    ((2 * r(30) + 15 * r(78)) / 210, (r(10) - 10 * r(26)) / 70, -1 / r(15)),
    (1 / r(30 * (97 + 12 * _s65)), (10 + _s65) / (35 * r(2)), -r(13 / 15)),
    (-2 * r(2 / 15), -r(2 / 5), -1 / r(15)),
    (1 / r(6), -1 / r(2), 1 / r(3)),
    (0.0, r(2 / 5), -r(3 / 5)),
    (-1 / r(6), 1 / r(2), 1 / r(3)),
    (r(5 / 6), 1 / r(10), 1 / r(15)),
    ((_s65 - 3) / (14 * r(6)), r(69 / 5 + _s65) / 14, -r(13 / 15)),
    ((r(30) + 3 * r(78)) / 84, (r(10) - 25 * r(26)) / 140, -1 / r(15)),
    ((r(6) - 3 * r(390)) / 84, -r(33 + _s65) / 14, 1 / r(3)),
    (-r(39 / 2) / 7, -1 / (7 * r(10)), -r(3 / 5)),
    (-r(293 / 3 + _s65) / 14, (_s65 - 1) / (14 * r(2)), 1 / r(3)),
    (r((61 - 3 * _s65) / 3) / 14, r(813 / 5 + _s65) / 14, -1 / r(15)),
    (-(3 + _s65) / (14 * r(6)), -r((69 - 5 * _s65) / 5) / 14, -r(13 / 15)),
    (r(5 / 6), -1 / r(10), -1 / r(15)),
    (1 / r(6), 1 / r(2), 1 / r(3)),
    (-r(3 / 10), -1 / r(10), -r(3 / 5)),
    (-1 / r(6), -1 / r(2), 1 / r(3)),
    (-2 * r(2 / 15), r(2 / 5), 1 / r(15)),
    (-(15 + 2 * _s65) / (35 * r(6)), (_s65 - 10) / (35 * r(2)), -r(13 / 15)),
    ((15 * r(78) - 2 * r(30)) / 210, (r(10) + 10 * r(26)) / 70, -1 / r(15)),
    ((r(6) + 3 * r(390)) / 84, -(_s65 - 1) / (14 * r(2)), 1 / r(3)),
    (r(3 / 10) * (1 + _s65) / 14, (1 - 3 * _s65) / (14 * r(10)), -r(3 / 5)),
    (1 / (7 * r(6)), -r(65 / 2) / 7, 1 / r(3)),
    ((r(30) - 45 * r(78)) / 420, -r((37 + 3 * _s65) / 5) / 14, -1 / r(15)),
    ((45 + _s65) / (70 * r(6)), (5 - 3 * _s65) / (70 * r(2)), -r(13 / 15)),
    (-1 / r(30), 3 / r(10), -1 / r(15)),
    (-r(2 / 3), 0.0, 1 / r(3)),
]

_s2, _s3, _s6 = r(2), r(3), r(6)

# 36-vector labeling of the combined logic, alpha = pi/2, beta = arcsec(-5).
COMBO_PI2_VECTORS = [
    (1 / 2, -1 / 2, -1 / _s2),
    (r(2 / 3), 0.0, 1 / _s3),
    (-1 / (2 * _s3), -_s3 / 2, 1 / _s6),
    (r(29 / 6 + _s6) / 5, (_s6 - 1) / (5 * _s2), r(2 / 3)),
    ((18 * _s2 - _s3) / 30, -r(11 + 4 * _s6) / 10, -1 / _s6),
    (-r(2 / 3) / 5, -4 / 5, 1 / _s3),
    ((-1 - 2 * _s6) / 10, (1 - 2 * _s6) / 10, -1 / _s2),
    (-4 / 5, r(2 / 3) / 5, 1 / _s3),
    ((_s3 - 2 * _s2) / 10, (18 * _s2 + _s3) / 30, -1 / _s6),
    (-r(7 / 2 + _s6) / 5, r(29 / 6 - _s6) / 5, r(2 / 3)),
    (-_s3 / 2, -1 / (2 * _s3), -1 / _s6),
    (0.0, -r(2 / 3), 1 / _s3),
    ((_s3 - 1) / 4, (1 + _s3) / 4, -1 / _s2),
    (-1 / _s6, 1 / _s2, 1 / _s3),
    ((9 + _s3) / 12, (_s3 - 1) / 4, 1 / _s6),
    ((-18 - 9 * _s2 - 2 * _s3 + 3 * _s6) / 60, (2 + _s2 - 2 * _s3 + 3 * _s6) / 20, r(2 / 3)),
    ((9 - 18 * _s2 + _s3 + 6 * _s6) / 60, (-1 + 2 * _s2 + _s3 + 6 * _s6) / 20, -1 / _s6),
    ((12 + _s2) / (10 * _s3), (4 - _s2) / 10, 1 / _s3),
    ((1 + 6 * _s2 - _s3 + 2 * _s6) / 20, (-1 - 6 * _s2 - _s3 + 2 * _s6) / 20, -1 / _s2),
    ((4 - _s2) / 10, -(12 + _s2) / (10 * _s3), 1 / _s3),
    ((-1 - 6 * _s6 + r(11 - 4 * _s6)) / 20, (9 - 18 * _s2 - _s3 - 6 * _s6) / 60, -1 / _s6),
    ((2 + _s2 + 2 * _s3 - 3 * _s6) / 20, (-18 - 9 * _s2 + 2 * _s3 - 3 * _s6) / 60, r(2 / 3)),
    ((1 + _s3) / 4, (_s3 - 9) / 12, -1 / _s6),
    (1 / _s2, 1 / _s6, 1 / _s3),
    ((-1 - _s3) / 4, (1 - _s3) / 4, -1 / _s2),
    (-1 / _s6, -1 / _s2, 1 / _s3),
    ((_s3 - 9) / 12, (1 + _s3) / 4, 1 / _s6),
    ((18 - 9 * _s2 - 2 * _s3 - 3 * _s6) / 60, (-2 + _s2 - 2 * _s3 - 3 * _s6) / 20, r(2 / 3)),
    ((-9 - 18 * _s2 + _s3 - 6 * _s6) / 60, (1 + 2 * _s2 + _s3 - 6 * _s6) / 20, -1 / _s6),
    ((_s2 - 12) / (10 * _s3), (4 + _s2) / 10, 1 / _s3),
    ((1 - 6 * _s2 + _s3 + 2 * _s6) / 20, (-1 + 6 * _s2 + _s3 + 2 * _s6) / 20, -1 / _s2),
    ((4 + _s2) / 10, r(73 / 6 - 2 * _s2) / 5, 1 / _s3),
    ((1 + 6 * _s6 + r(11 - 4 * _s6)) / 20, (-9 - 18 * _s2 - _s3 + 6 * _s6) / 60, -1 / _s6),
    ((-2 + _s2 + 2 * _s3 + 3 * _s6) / 20, (18 - 9 * _s2 + 2 * _s3 + 3 * _s6) / 60, r(2 / 3)),
    ((_s3 - 1) / 4, (9 + _s3) / 12, -1 / _s6),
    (-1 / _s2, 1 / _s6, 1 / _s3),
]


_VECTOR_TABLES = {
    "small-for-heuristic": HEURISTIC_SMALL_VECTORS,
    "combo-for-alpha-pi3": COMBO_PI3_VECTORS,
    "combo-for-alpha-pi2": COMBO_PI2_VECTORS,
}
_PARTITION_SIZES = {"small": 24, "combo": 225}


@lru_cache(maxsize=None)
def partition_sets(which: str) -> PartitionRepresentation:
    """Reference Boolean set representation, ``which`` in {"small", "combo"}."""
    text = resources.files("pseudoctx.data").joinpath(f"{which}_partition.json").read_text()
    return PartitionRepresentation.from_mapping(json.loads(text), _PARTITION_SIZES[which])


def vector_table(name: str) -> VectorLabeling:
    return VectorLabeling.from_rows(_VECTOR_TABLES[name])


@lru_cache(maxsize=None)
def small_graph() -> Hypergraph:
    """15 atoms in 8 contexts, rebuilt from the reference set representation."""
    return Hypergraph.from_edges(edges_from_partition(partition_sets("small")), n=15)


@lru_cache(maxsize=None)
def combo_graph() -> Hypergraph:
    """36 atoms in 22 contexts, rebuilt from the reference set representation."""
    return Hypergraph.from_edges(edges_from_partition(partition_sets("combo")), n=36)


def load_fixture(name: str):
    """Resolve a fixture name to a Hypergraph, VectorLabeling or PartitionRepresentation."""
    if name == "small-graph":
        return small_graph()
    if name == "combo-graph":
        return combo_graph()
    if name in _VECTOR_TABLES:
        return vector_table(name)
    if name == "small-partition":
        return partition_sets("small")
    if name == "combo-partition":
        return partition_sets("combo")
    raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURE_NAMES)}")


def check_fixture_integrity() -> None:
    """Both graph reconstructions (set representation, vector table) must agree."""
    for graph, table in ((small_graph(), "small-for-heuristic"), (combo_graph(), "combo-for-alpha-pi3"), (combo_graph(), "combo-for-alpha-pi2")):
        inferred = infer_hypergraph_from_labels(vector_table(table))
        if inferred.edges != graph.edges or inferred.n != graph.n:
            raise FixtureError(f"{table}: orthogonality cliques disagree with the set representation")
