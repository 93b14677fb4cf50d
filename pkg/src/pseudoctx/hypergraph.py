"""3-uniform hypergraphs of contexts.

Vertices are the integers ``1..n``; every edge (context) is stored as a sorted
triple.  Two distinct edges may share at most one vertex, which rules out
the 4-cycles that cannot occur in an orthomodular diagram with 3-element
blocks.

Text format: one edge per line as whitespace-separated positive integers,
``#`` starts a comment, blank lines are skipped.  The JSON mirror is
``{"n": int, "edges": [[u, v, w], ...]}``.
"""
from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

__all__ = [
    "Hyperedge",
    "Hypergraph",
    "HypergraphError",
    "IsolatedVertex",
    "SharedPair",
    "DuplicateEdge",
    "BadEdge",
    "VertexGap",
    "make_edge",
    "parse_hypergraph",
    "parse_hypergraph_json",
    "serialize",
    "to_json",
    "validate",
    "vertex_degrees",
]

Hyperedge = tuple[int, int, int]


class HypergraphError(ValueError):
    """Malformed hypergraph input.  ``line``/``column`` are 1-based when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


def make_edge(members: Iterable[int]) -> Hyperedge:
    """Canonical (sorted) form of a 3-element context."""
    m = tuple(sorted(int(v) for v in members))
    if len(m) != 3 or len(set(m)) != 3:
        raise HypergraphError(f"edge {m} does not have exactly 3 distinct vertices")
    return m  # type: ignore[return-value]


# Diagnostics returned by validate().
@dataclass(frozen=True)
class IsolatedVertex:
    vertex: int


@dataclass(frozen=True)
class SharedPair:
    u: int
    v: int


@dataclass(frozen=True)
class DuplicateEdge:
    edge: tuple[int, ...]


@dataclass(frozen=True)
class BadEdge:
    edge: tuple[int, ...]
    reason: str


@dataclass(frozen=True)
class VertexGap:
    vertex: int


@dataclass(frozen=True)
class Hypergraph:
    """A 3-uniform hypergraph on vertices ``1..n``.

    Construct through :meth:`from_edges` to get validation; the raw
    constructor only canonicalizes.
    """

    n: int
    edges: frozenset[Hyperedge] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "edges", frozenset(make_edge(e) for e in self.edges))

    @classmethod
    def from_edges(cls, edges: Iterable[Sequence[int]], n: int | None = None) -> "Hypergraph":
        """Build and validate.  ``n`` defaults to the largest vertex seen."""
        raw = [tuple(int(v) for v in e) for e in edges]
        if n is None:
            n = max((v for e in raw for v in e), default=0)
        problems = _raw_diagnostics(raw, n)
        if problems:
            raise HypergraphError("; ".join(_describe(p) for p in problems))
        return cls(n, frozenset(make_edge(e) for e in raw))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def sorted_edges(self) -> list[Hyperedge]:
        return sorted(self.edges)

    def has_edge(self, members: Iterable[int]) -> bool:
        try:
            return make_edge(members) in self.edges
        except HypergraphError:
            return False

    def inside_edge(self, subset: Iterable[int]) -> bool:
        """True if every member of ``subset`` lies in one common edge."""
        s = set(subset)
        return any(s <= set(e) for e in self.edges)

    def neighbours(self, v: int) -> set[int]:
        """Vertices sharing an edge with ``v``."""
        return {u for e in self.edges if v in e for u in e if u != v}

    def edges_of(self, v: int) -> list[Hyperedge]:
        return [e for e in self.sorted_edges() if v in e]

    def __len__(self) -> int:
        return len(self.edges)


def _describe(p) -> str:
    if isinstance(p, IsolatedVertex):
        return f"vertex {p.vertex} is in no edge"
    if isinstance(p, SharedPair):
        return f"vertices {p.u} and {p.v} occur together in two edges"
    if isinstance(p, DuplicateEdge):
        return f"duplicate edge {list(p.edge)}"
    if isinstance(p, BadEdge):
        return f"edge {list(p.edge)}: {p.reason}"
    if isinstance(p, VertexGap):
        return f"vertex {p.vertex} outside 1..n"
    return str(p)


def _raw_diagnostics(raw: Sequence[tuple[int, ...]], n: int) -> list:
    out: list = []
    good: list[Hyperedge] = []
    seen: set[Hyperedge] = set()
    for e in raw:
        if len(e) != 3:
            out.append(BadEdge(e, f"has {len(e)} vertices, expected 3"))
            continue
        if len(set(e)) != 3:
            out.append(BadEdge(e, "repeats a vertex"))
            continue
        bad = [v for v in e if v < 1 or v > n]
        if bad:
            out.extend(VertexGap(v) for v in bad)
            continue
        c = make_edge(e)
        if c in seen:
            out.append(DuplicateEdge(c))
            continue
        seen.add(c)
        good.append(c)
    pairs = Counter(p for e in good for p in combinations(e, 2))
    out.extend(SharedPair(u, v) for (u, v), k in sorted(pairs.items()) if k > 1)
    used = {v for e in good for v in e}
    out.extend(IsolatedVertex(v) for v in range(1, n + 1) if v not in used)
    return out


def validate(h: Hypergraph) -> list:
    """Structural diagnostics for ``h``; empty iff all invariants hold."""
    return _raw_diagnostics(sorted(h.edges), h.n)


def vertex_degrees(h: Hypergraph) -> dict[int, int]:
    deg = {v: 0 for v in h.vertices}
    for e in h.edges:
        for v in e:
            deg[v] += 1
    return deg


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse the line-oriented edge format.

    Raises :class:`HypergraphError` with a line/column position on syntax
    errors and on structural violations tied to a specific line.
    """
    raw: list[tuple[int, ...]] = []
    where: list[tuple[int, int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0]
        if not body.strip():
            continue
        vals = []
        for m in re.finditer(r"\S+", body):
            tok = m.group()
            if not tok.isdigit() or int(tok) < 1:
                raise HypergraphError(f"expected a positive integer, got {tok!r}", lineno, m.start() + 1)
            vals.append(int(tok))
        first_col = len(body) - len(body.lstrip()) + 1
        raw.append(tuple(vals))
        where.append((lineno, first_col))

    n = max((v for e in raw for v in e), default=0)
    seen: dict[Hyperedge, int] = {}
    pair_line: dict[tuple[int, int], int] = {}
    for e, (lineno, col) in zip(raw, where):
        if len(e) != 3:
            raise HypergraphError(f"edge has {len(e)} vertices, expected 3", lineno, col)
        if len(set(e)) != 3:
            raise HypergraphError("edge repeats a vertex", lineno, col)
        c = make_edge(e)
        if c in seen:
            raise HypergraphError(f"duplicate of the edge on line {seen[c]}", lineno, col)
        seen[c] = lineno
        for p in combinations(c, 2):
            if p in pair_line:
                raise HypergraphError(
                    f"edges share two vertices {p[0]} and {p[1]} (see line {pair_line[p]})", lineno, col
                )
            pair_line[p] = lineno
    used = {v for e in raw for v in e}
    missing = [v for v in range(1, n + 1) if v not in used]
    if missing:
        raise HypergraphError(f"vertex numbering has gaps: {missing} never appear")
    return Hypergraph(n, frozenset(seen))


def parse_hypergraph_json(text: str) -> Hypergraph:
    try:
        data = json.loads(text)
        n = int(data["n"])
        edges = data["edges"]
    except (ValueError, KeyError, TypeError) as exc:
        raise HypergraphError(f"invalid hypergraph JSON: {exc}") from exc
    return Hypergraph.from_edges(edges, n=n)


def serialize(h: Hypergraph) -> str:
    return "".join(" ".join(map(str, e)) + "\n" for e in h.sorted_edges())


def to_json(h: Hypergraph) -> str:
    return json.dumps({"n": h.n, "edges": [list(e) for e in h.sorted_edges()]})
