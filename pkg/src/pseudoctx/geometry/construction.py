"""Analytic one-parameter families of FORs for the two example logics.

Small logic (15 vertices).  Its three "arms" ``a-b-c-d-e`` are the edge
pairs ``{a,b,c}``, ``{c,d,e}``::

    (1, 2, 3, 4, 5), (6, 7, 8, 9, 10), (11, 12, 13, 14, 15)

The ``d`` vertices {4, 9, 14} form an orthonormal basis on the cone
``z = 1/sqrt(3)`` with vertex 4 at ``(sqrt(2/3), 0, 1/sqrt(3))``; the ``b``
vertices {2, 7, 12} are the same basis turned about the z-axis by ``alpha``.
Then ``c = b x d``, ``a = b x c`` and ``e = c x d`` (normalized).

Combined logic (36 vertices).  Left half: the small family, mirrored
(``b`` turned by ``-alpha``) and relabelled.  Right half: a copy of the left
half turned about z by ``handedness * beta(alpha)``, where ``beta`` makes
vertices 3 and 5 orthogonal.  The six stitching vertices {4, 16, 28} and
{10, 22, 34} are cross products across the cut.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import acos, atan, cos, pi, sqrt

import numpy as np
from scipy.optimize import brentq

from ..hypergraph import Hypergraph
from .labeling import DEFAULT_EPS, LabelingError, VectorLabeling, infer_hypergraph_from_labels, verify_for

__all__ = [
    "ALPHA_MAX",
    "ConstructionParams",
    "DegenerateConstructionError",
    "AssignmentError",
    "beta_of_alpha",
    "aperture_of_alpha",
    "construct_small_for",
    "construct_combo_for",
    "small_labels",
    "combo_labels",
    "find_degenerate_alpha",
    "degenerate_alphas",
    "cube_representation",
]

ALPHA_MAX = 2 * atan(3)  # == pi - arccos(4/5); beta(ALPHA_MAX) == pi
_ALPHA_TOL = 1e-9

SMALL_ARMS = ((1, 2, 3, 4, 5), (6, 7, 8, 9, 10), (11, 12, 13, 14, 15))
# small arm k -> combo left-half arm (same a, b, c, d, e roles)
COMBO_LEFT_ARMS = ((11, 12, 1, 2, 3), (23, 24, 13, 14, 15), (35, 36, 25, 26, 27))
# left-half vertex -> its rotated image on the right half
COMBO_RIGHT_OF = {
    2: 6, 12: 8, 1: 7, 11: 9, 3: 5,
    14: 18, 24: 20, 13: 19, 23: 21, 15: 17,
    26: 30, 36: 32, 25: 31, 35: 33, 27: 29,
}
# stitching vertex -> the two vertices it is orthogonal to across the cut
COMBO_STITCH = {4: (3, 5), 10: (9, 11), 16: (15, 17), 22: (21, 23), 28: (27, 29), 34: (33, 35)}


class DegenerateConstructionError(ValueError):
    """The construction does not yield a FOR at this ``alpha``.

    ``kind`` is one of ``duplicate-halves`` (alpha = 0), ``duplicate-triple``
    (alpha = 2 pi / 3), ``duplicate-labels`` (other coinciding rays) or
    ``extra-orthogonality``; ``pairs`` lists the
    offending vertex pairs when known and ``cube`` holds the nine rays of the
    alpha = 0 limit.
    """

    def __init__(self, kind: str, alpha: float, pairs=(), cube=None):
        self.kind = kind
        self.alpha = alpha
        self.pairs = tuple(pairs)
        self.cube = cube
        msg = f"degenerate: {kind.replace('-', ' ')} at alpha={alpha:.17g}"
        if self.pairs:
            msg += f" (pairs {[list(p) for p in self.pairs]})"
        super().__init__(msg)


class AssignmentError(RuntimeError):
    """Constructed vectors do not realize the target hypergraph."""


def _unit(v: np.ndarray) -> np.ndarray:
    return v / np.linalg.norm(v)


def _cone(phi: float) -> np.ndarray:
    return np.array([sqrt(2 / 3) * cos(phi), sqrt(2 / 3) * np.sin(phi), 1 / sqrt(3)])


def _rot_z(theta: float) -> np.ndarray:
    c, s = cos(theta), np.sin(theta)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


def beta_of_alpha(alpha: float) -> float:
    """Rotation angle between the two halves that makes 3 and 5 orthogonal."""
    if not -1e-12 <= alpha <= ALPHA_MAX + 1e-12:
        raise ValueError(f"alpha={alpha!r} outside [0, 2 arctan 3]")
    x = (cos(alpha) - 1) / (5 + 4 * cos(alpha))
    return acos(max(-1.0, min(1.0, x)))


def aperture_of_alpha(alpha: float) -> float:
    """Angle between the z-axis and the stitching vectors {4,16,28}, {10,22,34}.

    ``cos^2 = (4 + 5 cos alpha) / (3 (2 + cos alpha))``, which follows from
    the common height ``z^2 = (1 - cos alpha) / (3 (2 + cos alpha))`` of
    vertices 3 and 5.
    """
    if not 0 <= alpha <= ALPHA_MAX + 1e-12:
        raise ValueError(f"alpha={alpha!r} outside [0, 2 arctan 3]")
    c2 = (4 + 5 * cos(alpha)) / (3 * (2 + cos(alpha)))
    return acos(sqrt(max(0.0, min(1.0, c2))))


def _arm_vectors(alpha: float, mirror: bool = False) -> list[tuple[np.ndarray, ...]]:
    """``(a, b, c, d, e)`` vectors for the three arms, without degeneracy checks."""
    sign = -1.0 if mirror else 1.0
    arms = []
    for k in range(3):
        d = _cone(2 * pi * k / 3)
        b = _cone(2 * pi * k / 3 + sign * alpha)
        c = _unit(np.cross(b, d))
        a = _unit(np.cross(b, c))
        e = _unit(np.cross(c, d))
        arms.append((a, b, c, d, e))
    return arms


def small_labels(alpha: float) -> dict[int, np.ndarray]:
    """Raw small-family vectors by vertex.  Undefined (nan) at alpha = 0."""
    out = {}
    for roles, vecs in zip(SMALL_ARMS, _arm_vectors(alpha)):
        out.update(zip(roles, vecs))
    return out


def combo_labels(alpha: float, handedness: int = 1) -> dict[int, np.ndarray]:
    """Raw combined-family vectors by vertex, without degeneracy checks."""
    out = {}
    for roles, vecs in zip(COMBO_LEFT_ARMS, _arm_vectors(alpha, mirror=True)):
        out.update(zip(roles, vecs))
    rot = _rot_z(handedness * beta_of_alpha(alpha))
    for left, right in COMBO_RIGHT_OF.items():
        out[right] = rot @ out[left]
    for s, (u, v) in COMBO_STITCH.items():
        out[s] = _unit(np.cross(out[u], out[v]))
    return out


def cube_representation() -> np.ndarray:
    """The nine distinct rays of the small family in the limit alpha -> 0.

    As ``b -> d`` the direction of ``b x d`` tends to ``(z x d) x d``; the
    ``a`` and ``e`` rays then coincide.  In the basis of the ``d`` vectors
    the result is the three axes plus six face diagonals of a cube.
    """
    z = np.array([0.0, 0.0, 1.0])
    rays = []
    for k in range(3):
        d = _cone(2 * pi * k / 3)
        c = _unit(np.cross(np.cross(z, d), d))
        rays.extend([d, c, _unit(np.cross(d, c))])
    return np.array(rays)


@lru_cache(maxsize=None)
def find_degenerate_alpha() -> float:
    """The alpha in (0, 2 pi / 3) at which vertices 5 and 11 become orthogonal."""

    def f(a: float) -> float:
        v = small_labels(a)
        return float(v[5] @ v[11])

    grid = np.linspace(1e-3, 2 * pi / 3 - 1e-3, 400)
    vals = [f(a) for a in grid]
    brackets = [(grid[i], grid[i + 1]) for i in range(len(grid) - 1) if vals[i] * vals[i + 1] < 0]
    if len(brackets) != 1:
        raise RuntimeError(f"expected one sign change of <v5|v11>, found {len(brackets)}")
    return brentq(f, *brackets[0], xtol=1e-15, rtol=4 * np.finfo(float).eps)


def degenerate_alphas(variant: str = "small", handedness: int = 1, samples: int = 4000) -> list[tuple[float, list[tuple[int, int]]]]:
    """Scan the domain for alphas where a non-edge pair becomes orthogonal.

    Returns ``(alpha, pairs)`` sorted by alpha.  ``2 pi / 3`` shows up here
    too, since every label collapses onto the first basis there.
    """
    from ..fixtures import combo_graph, small_graph

    if variant == "small":
        h, hi, build = small_graph(), pi, small_labels
    elif variant == "combo":
        h, hi, build = combo_graph(), ALPHA_MAX, lambda a: combo_labels(a, handedness)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    coedge = {p for e in h.edges for p in combinations(e, 2)}
    pairs = [p for p in combinations(h.vertices, 2) if p not in coedge]
    grid = np.linspace(1e-4, hi - 1e-9, samples)
    rows = []
    for a in grid:
        v = build(a)
        rows.append([v[i] @ v[j] for i, j in pairs])
    table = np.array(rows)
    found: dict[float, list[tuple[int, int]]] = {}
    for k, (i, j) in enumerate(pairs):
        col = table[:, k]
        for t in np.flatnonzero(col[:-1] * col[1:] < 0):
            root = brentq(lambda a: float(build(a)[i] @ build(a)[j]), grid[t], grid[t + 1], xtol=1e-14)
            key = round(root, 9)
            found.setdefault(key, []).append((i, j))
    return [(a, sorted(ps)) for a, ps in sorted(found.items())]


def _checked(alpha: float, raw: dict[int, np.ndarray], target: Hypergraph, eps: float) -> VectorLabeling:
    labels = VectorLabeling.from_mapping(raw, eps)
    report = verify_for(target, labels)
    if report.missing:
        raise AssignmentError(f"construction misses orthogonalities {list(report.missing)}")
    if report.duplicates:
        raise DegenerateConstructionError("duplicate-labels", alpha, report.duplicates)
    if report.extra:
        raise DegenerateConstructionError("extra-orthogonality", alpha, report.extra)
    try:
        inferred = infer_hypergraph_from_labels(labels)
    except LabelingError as exc:
        raise AssignmentError(str(exc)) from exc
    if inferred.edges != target.edges:
        raise AssignmentError("inferred hypergraph differs from the target")
    return labels


def _screen(alpha: float, hi: float, name: str, build) -> None:
    if abs(alpha) <= _ALPHA_TOL:
        raise DegenerateConstructionError("duplicate-halves", alpha, cube=cube_representation())
    if not 0 < alpha <= hi + 1e-12:
        raise ValueError(f"alpha={alpha!r} outside the {name} domain (0, {hi:.17g}]")
    if abs(alpha - 2 * pi / 3) <= _ALPHA_TOL:
        raise DegenerateConstructionError("duplicate-triple", alpha)
    a0 = find_degenerate_alpha()
    if abs(alpha - a0) <= _ALPHA_TOL:
        v = build(a0)
        n = len(v)
        pairs = [
            (i, j)
            for i, j in combinations(range(1, n + 1), 2)
            if abs(v[i] @ v[j]) <= 1e-9
        ]
        from ..fixtures import combo_graph, small_graph

        h = small_graph() if n == 15 else combo_graph()
        coedge = {p for e in h.edges for p in combinations(e, 2)}
        raise DegenerateConstructionError("extra-orthogonality", alpha, [p for p in pairs if p not in coedge])


def construct_small_for(alpha: float, eps: float = DEFAULT_EPS) -> VectorLabeling:
    """15-vector FOR of the small logic for ``alpha`` in (0, pi] minus {2 pi/3, alpha_0}."""
    from ..fixtures import small_graph

    _screen(alpha, pi, "small", small_labels)
    return _checked(alpha, small_labels(alpha), small_graph(), eps)


def construct_combo_for(alpha: float, handedness: int = 1, eps: float = DEFAULT_EPS) -> VectorLabeling:
    """36-vector FOR of the combined logic for ``alpha`` in (0, 2 arctan 3] minus degenerate values.

    ``handedness`` picks the sense of the ``beta`` rotation between the
    halves; both senses give valid, mutually non-congruent FORs.
    """
    from ..fixtures import combo_graph

    if handedness not in (1, -1):
        raise ValueError("handedness must be +1 or -1")
    _screen(alpha, ALPHA_MAX, "combo", lambda a: combo_labels(a, handedness))
    return _checked(alpha, combo_labels(alpha, handedness), combo_graph(), eps)


@dataclass(frozen=True)
class ConstructionParams:
    alpha: float
    variant: str = "small"
    handedness: int = 1

    @property
    def beta(self) -> float:
        return beta_of_alpha(self.alpha)

    def build(self, eps: float = DEFAULT_EPS) -> VectorLabeling:
        if self.variant == "small":
            return construct_small_for(self.alpha, eps)
        if self.variant == "combo":
            return construct_combo_for(self.alpha, self.handedness, eps)
        raise ValueError(f"unknown variant {self.variant!r}")
