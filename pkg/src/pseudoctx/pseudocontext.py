"""Pseudocontexts: vertex sets outside every context with equal probability sums.

Sets ``A`` and ``B`` form a pseudocontext pair when, for every probability
assignment that sums to one on each edge, ``sum_A p == sum_B p``.  That holds
exactly when

    chi_A - chi_B = sum_e lam_e * chi_e   with   sum_e lam_e = 0,

because then ``sum_A p - sum_B p = sum_e lam_e * 1 = 0``.  All arithmetic
here is over :class:`fractions.Fraction`, so a returned certificate is a proof.
"""
from __future__ import annotations

import json
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Mapping

from . import _exact
from .hypergraph import Hyperedge, Hypergraph
from .states import StateSet

__all__ = [
    "PreconditionError",
    "PseudocontextCertificate",
    "Covering",
    "ClassicalBounds",
    "GadgetReport",
    "verify_pseudocontext_pair",
    "certificate_from_coverings",
    "find_pseudocontext_pairs",
    "find_coverings",
    "classical_bounds",
    "classify_gadget",
]


class PreconditionError(ValueError):
    """Inputs violate the preconditions (distinct from "no certificate")."""


@dataclass(frozen=True)
class PseudocontextCertificate:
    A: frozenset[int]
    B: frozenset[int]
    lam: Mapping[Hyperedge, Fraction]

    def residual(self, n: int) -> list[Fraction]:
        """``chi_A - chi_B - sum lam_e chi_e`` per vertex; all zero when sound."""
        r = [Fraction(0)] * (n + 1)
        for v in self.A:
            r[v] += 1
        for v in self.B:
            r[v] -= 1
        for e, c in self.lam.items():
            for v in e:
                r[v] -= c
        return r[1:]

    def is_sound(self, n: int) -> bool:
        return all(x == 0 for x in self.residual(n)) and sum(self.lam.values(), Fraction(0)) == 0

    def support(self) -> dict[Hyperedge, Fraction]:
        return {e: c for e, c in sorted(self.lam.items()) if c != 0}

    def to_dict(self) -> dict:
        return {
            "A": sorted(self.A),
            "B": sorted(self.B),
            "lambda": [
                {"edge": list(e), "num": c.numerator, "den": c.denominator}
                for e, c in sorted(self.lam.items())
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: Mapping) -> "PseudocontextCertificate":
        lam = {tuple(sorted(x["edge"])): Fraction(x["num"], x["den"]) for x in d["lambda"]}
        return cls(frozenset(d["A"]), frozenset(d["B"]), lam)


@dataclass(frozen=True)
class Covering:
    """Edges covering every vertex outside ``excluded`` exactly once."""

    edges: tuple[Hyperedge, ...]
    excluded: frozenset[int]

    def __len__(self) -> int:
        return len(self.edges)

    def is_valid(self, h: Hypergraph) -> bool:
        hits = Counter(v for e in self.edges for v in e)
        return all(hits[v] == (0 if v in self.excluded else 1) for v in h.vertices) and all(
            e in h.edges for e in self.edges
        )

    def to_json(self) -> str:
        return json.dumps([list(e) for e in self.edges])


@dataclass(frozen=True)
class ClassicalBounds:
    lo: int
    hi: int


@dataclass(frozen=True)
class GadgetReport:
    """Joint behaviour of ``(sum_A s, sum_B s)`` over all two-valued states."""

    joint: Mapping[tuple[int, int], int]
    fif: bool
    tit_levels: tuple[int, ...]
    symmetric: bool
    size: int = field(default=3)

    @property
    def tit(self) -> bool:
        """True-implies-true at full level: all of A true forces all of B true."""
        return self.size in self.tit_levels

    @property
    def max_level(self) -> int:
        return max(a for a, _ in self.joint)


def _check_pair(h: Hypergraph, A: frozenset[int], B: frozenset[int]) -> None:
    if not A or not B:
        raise PreconditionError("pseudocontext sets must be non-empty")
    if A & B:
        raise PreconditionError(f"sets overlap in {sorted(A & B)}")
    bad = sorted(v for v in A | B if not 1 <= v <= h.n)
    if bad:
        raise PreconditionError(f"vertices {bad} not in 1..{h.n}")
    for name, S in (("A", A), ("B", B)):
        if h.inside_edge(S):
            raise PreconditionError(f"{name}={sorted(S)} lies inside an edge")


def _edge_system(h: Hypergraph) -> tuple[list[Hyperedge], _exact.Matrix]:
    """Incidence matrix (vertex rows) with an extra all-ones row for sum(lam)."""
    edges = h.sorted_edges()
    rows = [[Fraction(int(v in e)) for e in edges] for v in h.vertices]
    rows.append([Fraction(1)] * len(edges))
    return edges, rows


def verify_pseudocontext_pair(h: Hypergraph, A: Iterable[int], B: Iterable[int]) -> PseudocontextCertificate | None:
    """Exact certificate that ``A`` and ``B`` have equal sums, or None.

    When the edge incidence vectors are dependent the solution is not
    unique; free coefficients are set to zero.
    """
    A, B = frozenset(A), frozenset(B)
    _check_pair(h, A, B)
    edges, a = _edge_system(h)
    rhs = [Fraction(int(v in A) - int(v in B)) for v in h.vertices] + [Fraction(0)]
    x = _exact.solve(a, rhs)
    if x is None:
        return None
    return PseudocontextCertificate(A, B, dict(zip(edges, x)))


def certificate_from_coverings(cov_a: Covering, cov_b: Covering) -> PseudocontextCertificate:
    """Certificate with unit coefficients from two coverings.

    ``cov_a`` leaves out ``A`` and ``cov_b`` leaves out ``B``; subtracting the
    two identities ``chi_V - chi_A = sum chi_e`` gives the certificate.
    """
    lam: dict[Hyperedge, Fraction] = defaultdict(Fraction)
    for e in cov_b.edges:
        lam[e] += 1
    for e in cov_a.edges:
        lam[e] -= 1
    return PseudocontextCertificate(cov_a.excluded, cov_b.excluded, dict(lam))


def _quotient_forms(h: Hypergraph) -> dict[int, tuple[Fraction, ...]]:
    """Normal form of each vertex indicator modulo span{chi_e - chi_f}.

    That span is exactly ``{sum lam_e chi_e : sum lam_e = 0}``, so two sets
    are a pair iff their summed normal forms coincide.
    """
    edges = h.sorted_edges()
    vecs = [[Fraction(int(v in e)) for v in h.vertices] for e in edges]
    diffs = [[x - y for x, y in zip(vecs[k], vecs[0])] for k in range(1, len(vecs))]
    basis, piv = _exact.rref(diffs) if diffs else ([], [])
    out = {}
    for v in h.vertices:
        unit = [Fraction(int(u == v)) for u in h.vertices]
        out[v] = _exact.reduce_modulo(unit, basis, piv)
    return out


def find_pseudocontext_pairs(h: Hypergraph, k: int = 3) -> list[tuple[frozenset[int], frozenset[int]]]:
    """All unordered pairs of disjoint ``k``-sets, neither inside an edge, with equal sums.

    Each candidate set is keyed by its summed quotient normal form; pairs are
    only formed within a bucket.  Output is sorted.
    """
    if k < 2:
        raise PreconditionError("k must be at least 2")
    forms = _quotient_forms(h)
    buckets: dict[tuple, list[frozenset[int]]] = defaultdict(list)
    for S in combinations(h.vertices, k):
        if h.inside_edge(S):
            continue
        sig = tuple(sum(col) for col in zip(*(forms[v] for v in S)))
        buckets[sig].append(frozenset(S))
    pairs = []
    for group in buckets.values():
        for X, Y in combinations(group, 2):
            if not X & Y:
                pairs.append(tuple(sorted((X, Y), key=sorted)))
    return sorted(pairs, key=lambda p: (sorted(p[0]), sorted(p[1])))


def _exact_covers(universe: set[int], rows: dict[Hyperedge, tuple[int, ...]]) -> Iterator[list[Hyperedge]]:
    """Algorithm X on a dict-of-sets; always branches on the scarcest column."""
    cols: dict[int, set[Hyperedge]] = {c: set() for c in universe}
    for r, members in rows.items():
        for c in members:
            cols[c].add(r)
    chosen: list[Hyperedge] = []

    def select(r):
        removed = []
        for c in rows[r]:
            for other in cols[c]:
                for c2 in rows[other]:
                    if c2 != c:
                        cols[c2].discard(other)
            removed.append(cols.pop(c))
        return removed

    def deselect(r, removed):
        for c in reversed(rows[r]):
            cols[c] = removed.pop()
            for other in cols[c]:
                for c2 in rows[other]:
                    if c2 != c:
                        cols[c2].add(other)

    def search():
        if not cols:
            yield sorted(chosen)
            return
        c = min(cols, key=lambda c: (len(cols[c]), c))
        for r in sorted(cols[c]):
            chosen.append(r)
            removed = select(r)
            yield from search()
            deselect(r, removed)
            chosen.pop()

    yield from search()


def find_coverings(h: Hypergraph, excluded: Iterable[int] = (), limit: int | None = None) -> list[Covering]:
    """Exact covers of ``V \\ excluded`` by edges that avoid ``excluded``."""
    ex = frozenset(excluded)
    rows = {e: e for e in h.sorted_edges() if not ex & set(e)}
    universe = set(h.vertices) - ex
    out = []
    for cover in _exact_covers(universe, rows):
        out.append(Covering(tuple(cover), ex))
        if limit is not None and len(out) >= limit:
            break
    return sorted(out, key=lambda c: c.edges)


def classical_bounds(s: StateSet, A: Iterable[int]) -> ClassicalBounds:
    """Min and max of ``sum_A s`` over the states (the vertices of the classical polytope)."""
    if len(s) == 0:
        raise ValueError("classical bounds of an empty state set")
    sums = s.sums(sorted(A))
    return ClassicalBounds(int(sums.min()), int(sums.max()))


def classify_gadget(s: StateSet, A: Iterable[int], B: Iterable[int]) -> GadgetReport:
    """False-implies-false / true-implies-true behaviour of a pair.

    ``tit_levels`` lists every level ``m`` attained by ``sum_A`` at which
    all states with ``sum_A == m`` also have ``sum_B == m``.
    """
    A, B = frozenset(A), frozenset(B)
    if not A or not B or A & B:
        raise PreconditionError("gadget classification needs two disjoint non-empty sets")
    if len(s) == 0:
        raise ValueError("gadget classification over an empty state set")
    sa, sb = s.sums(sorted(A)), s.sums(sorted(B))
    joint = Counter(zip(sa.tolist(), sb.tolist()))
    fif_ab = all(b == 0 for a, b in joint if a == 0)
    fif_ba = all(a == 0 for a, b in joint if b == 0)
    levels = sorted({a for a, _ in joint})
    tit = tuple(m for m in levels if all(b == m for a, b in joint if a == m))
    symmetric = all(joint.get((b, a), 0) == c for (a, b), c in joint.items())
    return GadgetReport(dict(sorted(joint.items())), fif_ab and fif_ba, tit, symmetric, len(A))
