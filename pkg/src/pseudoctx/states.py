"""Two-valued states, partition-logic representations and rainbow colorings.

A two-valued state assigns 0 or 1 to every vertex with exactly one 1 per
edge.  States are kept in canonical order: descending lexicographic order of
the bit string ``s(1) s(2) ... s(n)``, so that states with ``s(1) = 1``
come first.  This is the order a depth-first search produces when it tries
the value 1 before 0 at each vertex.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from .hypergraph import Hyperedge, Hypergraph, make_edge

__all__ = [
    "TwoValuedState",
    "StateSet",
    "PartitionRepresentation",
    "Coloring",
    "ColoringError",
    "enumerate_two_valued_states",
    "is_separating",
    "partition_representation",
    "edges_from_partition",
    "partitions_equivalent",
    "find_rainbow_coloring",
    "is_rainbow",
    "state_from_coloring",
]

TwoValuedState = tuple[int, ...]


@dataclass(frozen=True)
class StateSet:
    """All two-valued states of a hypergraph, in canonical order."""

    n: int
    states: tuple[TwoValuedState, ...]

    def __len__(self) -> int:
        return len(self.states)

    def __iter__(self) -> Iterator[TwoValuedState]:
        return iter(self.states)

    def __getitem__(self, i: int) -> TwoValuedState:
        return self.states[i]

    @property
    def matrix(self) -> np.ndarray:
        """``(len(self), n)`` 0/1 array; column ``v - 1`` holds vertex ``v``."""
        return np.array(self.states, dtype=np.int8).reshape(len(self.states), self.n)

    def sums(self, subset: Iterable[int]) -> np.ndarray:
        """Per-state value of ``sum(s(v) for v in subset)``."""
        cols = [v - 1 for v in subset]
        return self.matrix[:, cols].sum(axis=1)

    def to_text(self) -> str:
        return "".join("".join(map(str, s)) + "\n" for s in self.states)

    @classmethod
    def from_text(cls, text: str) -> "StateSet":
        rows = [ln.strip() for ln in text.splitlines() if ln.strip()]
        n = len(rows[0]) if rows else 0
        if any(len(r) != n or set(r) - {"0", "1"} for r in rows):
            raise ValueError("states must be equal-length 0/1 strings")
        return cls(n, tuple(tuple(int(c) for c in r) for r in rows))


def enumerate_two_valued_states(h: Hypergraph) -> StateSet:
    """Every 0/1 assignment with exactly one 1 per edge.

    Depth-first over vertices ``1..n``.  Each edge keeps a count of assigned
    ones and of still-unassigned members; a branch is cut as soon as an edge
    gets a second 1 or has all members fixed at 0.
    """
    n = h.n
    edges = h.sorted_edges()
    inc: list[list[int]] = [[] for _ in range(n + 1)]
    for k, e in enumerate(edges):
        for v in e:
            inc[v].append(k)
    ones = [0] * len(edges)
    free = [3] * len(edges)
    values = [0] * (n + 1)
    out: list[TwoValuedState] = []

    def assign(v: int, bit: int) -> bool:
        ok = True
        for k in inc[v]:
            free[k] -= 1
            ones[k] += bit
            if ones[k] > 1 or (free[k] == 0 and ones[k] == 0):
                ok = False
        return ok

    def undo(v: int, bit: int) -> None:
        for k in inc[v]:
            free[k] += 1
            ones[k] -= bit

    def dfs(v: int) -> None:
        if v > n:
            out.append(tuple(values[1:]))
            return
        for bit in (1, 0):
            if assign(v, bit):
                values[v] = bit
                dfs(v + 1)
            undo(v, bit)
        values[v] = 0

    dfs(1)
    return StateSet(n, tuple(out))


def is_separating(s: StateSet, h: Hypergraph | None = None) -> tuple[bool, tuple[int, int] | None]:
    """Whether every pair of distinct vertices takes different values in some state.

    Returns ``(True, None)`` or ``(False, (u, v))`` for the first
    unseparated pair in lexicographic order.
    """
    n = s.n if h is None else h.n
    m = s.matrix
    if m.size == 0:
        return (n < 2, None if n < 2 else (1, 2))
    # identical columns are exactly the unseparated pairs
    for u, v in combinations(range(n), 2):
        if np.array_equal(m[:, u], m[:, v]):
            return False, (u + 1, v + 1)
    return True, None


@dataclass(frozen=True)
class PartitionRepresentation:
    """Per-vertex index sets ``b[v]`` over state positions ``1..size``."""

    size: int
    sets: Mapping[int, frozenset[int]]

    @property
    def vertices(self) -> list[int]:
        return sorted(self.sets)

    def __getitem__(self, v: int) -> frozenset[int]:
        return self.sets[v]

    def is_edge_partition(self, edge: Sequence[int]) -> bool:
        """Do the sets of ``edge`` partition ``1..size``?"""
        parts = [self.sets[v] for v in edge]
        total = sum(len(p) for p in parts)
        return total == self.size and frozenset().union(*parts) == frozenset(range(1, self.size + 1))

    def to_json(self) -> str:
        body = ",\n".join(f'  "{v}": {json.dumps(sorted(self.sets[v]))}' for v in self.vertices)
        return "{\n" + body + "\n}\n"

    @classmethod
    def from_mapping(cls, data: Mapping, size: int | None = None) -> "PartitionRepresentation":
        sets = {int(v): frozenset(int(i) for i in idx) for v, idx in data.items()}
        if size is None:
            size = max((max(s) for s in sets.values() if s), default=0)
        return cls(size, sets)

    @classmethod
    def from_json(cls, text: str, size: int | None = None) -> "PartitionRepresentation":
        return cls.from_mapping(json.loads(text), size)

    def state_columns(self) -> list[frozenset[int]]:
        """For each state index, the set of vertices valued 1."""
        cols: list[set[int]] = [set() for _ in range(self.size)]
        for v, idx in self.sets.items():
            for i in idx:
                cols[i - 1].add(v)
        return [frozenset(c) for c in cols]


def partition_representation(s: StateSet) -> PartitionRepresentation:
    if len(s) == 0:
        raise ValueError("partition representation of an empty state set")
    m = s.matrix
    sets = {v: frozenset(int(i) + 1 for i in np.flatnonzero(m[:, v - 1])) for v in range(1, s.n + 1)}
    return PartitionRepresentation(len(s), sets)


def edges_from_partition(p: PartitionRepresentation) -> set[Hyperedge]:
    """All vertex triples whose index sets partition the full index range."""
    full = frozenset(range(1, p.size + 1))
    vs = p.vertices
    out: set[Hyperedge] = set()
    for u, v in combinations(vs, 2):
        bu, bv = p[u], p[v]
        if bu & bv:
            continue
        rest = full - bu - bv
        for w in vs:
            if w > v and p[w] == rest:
                out.add(make_edge((u, v, w)))
    return out


def partitions_equivalent(p: PartitionRepresentation, q: PartitionRepresentation) -> bool:
    """Equal up to a relabelling of state indices.

    Two representations over the same vertices agree up to a permutation of
    indices iff they induce the same multiset of per-index vertex sets.
    """
    if p.size != q.size or set(p.sets) != set(q.sets):
        return False
    key = lambda cols: sorted(tuple(sorted(c)) for c in cols)  # noqa: E731
    return key(p.state_columns()) == key(q.state_columns())


Coloring = tuple[int, ...]


class ColoringError(ValueError):
    pass


def is_rainbow(colors: Sequence[int], edges: Iterable[Sequence[int]]) -> bool:
    return all({colors[v - 1] for v in e} == {1, 2, 3} for e in edges)


def find_rainbow_coloring(h: Hypergraph, also_rainbow: Iterable[Iterable[int]] = ()) -> Coloring | None:
    """First 3-coloring, in search order, with all three colors on every edge.

    Vertices are colored in ascending order and colors tried as 1, 2, 3, so
    the result is deterministic.  ``also_rainbow`` lists extra vertex
    triples (e.g. pseudocontexts) that must carry all three colors too.
    """
    triples = [make_edge(e) for e in h.edges] + [make_edge(t) for t in also_rainbow]
    bad = sorted({v for t in triples for v in t if not 1 <= v <= h.n})
    if bad:
        raise ValueError(f"vertices {bad} not in 1..{h.n}")
    inc: list[list[Hyperedge]] = [[] for _ in range(h.n + 1)]
    for t in triples:
        for v in t:
            inc[v].append(t)
    colors = [0] * (h.n + 1)

    def fits(v: int, c: int) -> bool:
        return all(colors[u] != c for t in inc[v] for u in t if u != v)

    def dfs(v: int) -> bool:
        if v > h.n:
            return True
        for c in (1, 2, 3):
            if fits(v, c):
                colors[v] = c
                if dfs(v + 1):
                    return True
        colors[v] = 0
        return False

    # three vertices with pairwise distinct colors on a 3-set is the rainbow condition
    return tuple(colors[1:]) if dfs(1) else None


def state_from_coloring(c: Sequence[int], chosen_color: int, h: Hypergraph) -> TwoValuedState:
    """Value 1 exactly on the vertices painted ``chosen_color``."""
    if chosen_color not in (1, 2, 3):
        raise ColoringError(f"chosen color must be 1, 2 or 3, got {chosen_color}")
    if len(c) != h.n or not is_rainbow(c, h.edges):
        raise ColoringError("coloring is not rainbow on every edge")
    return tuple(int(x == chosen_color) for x in c)
