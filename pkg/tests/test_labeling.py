import json
from math import sqrt

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pseudoctx.fixtures import load_fixture
from pseudoctx.geometry import (
    LabelingError,
    VectorLabeling,
    born_probabilities,
    default_eps,
    eigen_sym3,
    gram_equivalent,
    infer_hypergraph_from_labels,
    pairwise_overlaps,
    projector_sum,
    quantum_bounds,
    verify_for,
)
from pseudoctx.hypergraph import Hypergraph, parse_hypergraph

EDGE = parse_hypergraph("1 2 3\n")
BASIS = VectorLabeling(np.eye(3))


def random_rotation(rng):
    q, r = np.linalg.qr(rng.normal(size=(3, 3)))
    return q * np.sign(np.diag(r))


def test_orthonormal_triple():
    assert verify_for(EDGE, BASIS).ok
    assert infer_hypergraph_from_labels(BASIS).edges == {(1, 2, 3)}
    assert np.allclose(projector_sum(BASIS, [1, 2, 3]), np.eye(3))
    assert pairwise_overlaps(BASIS, [1, 2, 3]) == [0.0, 0.0, 0.0]
    assert quantum_bounds(BASIS, [2]) == pytest.approx((0.0, 1.0), abs=1e-15)


def test_reference_tables_are_faithful(small, combo, heuristic, pi3, pi2):
    assert verify_for(small, heuristic).ok
    assert verify_for(combo, pi3).ok
    assert verify_for(combo, pi2).ok


def test_inference_matches_partition_route(small, combo, heuristic, pi3, pi2):
    assert infer_hypergraph_from_labels(heuristic) == small
    assert infer_hypergraph_from_labels(pi3) == combo
    assert infer_hypergraph_from_labels(pi2) == combo


def test_verify_reports_each_failure_kind():
    v = np.array([[1, 0, 0], [0, 1, 0], [1, 1, 0] / np.sqrt(2)], dtype=float)
    rep = verify_for(EDGE, VectorLabeling(v))
    assert rep.missing == ((1, 3), (2, 3)) and not rep.ok
    rep = verify_for(Hypergraph(4, frozenset({(1, 3, 4)})), VectorLabeling(np.eye(3)[[0, 0, 1, 2]]))
    assert rep.extra == ((2, 3), (2, 4))
    assert rep.duplicates == ((1, 2),)
    with pytest.raises(LabelingError):
        verify_for(parse_hypergraph("1 2 3\n3 4 5\n"), BASIS)


def test_infer_errors():
    with pytest.raises(LabelingError, match="duplicate"):
        infer_hypergraph_from_labels(VectorLabeling(np.eye(3)[[0, 1, 2, 0]]))
    with pytest.raises(LabelingError, match="size other than 3"):
        infer_hypergraph_from_labels(VectorLabeling.from_rows([[1, 0, 0], [0, 1, 0], [1, 1, 1]]))


def test_unit_norm_enforced():
    with pytest.raises(LabelingError):
        VectorLabeling(np.array([[1.0, 1e-5, 0.0]]))
    with pytest.raises(LabelingError):
        VectorLabeling(np.ones((2, 2)))


def test_json_roundtrip(pi3):
    back = VectorLabeling.from_json(pi3.to_json())
    assert np.array_equal(back.vectors, pi3.vectors)
    assert json.loads(pi3.to_json())["n"] == 36


def test_json_reader_renormalizes_and_rejects():
    v = VectorLabeling.from_json(json.dumps({"n": 1, "vectors": [[1 + 1e-7, 0, 0]]}))
    assert v[1][0] == 1.0
    with pytest.raises(LabelingError, match="norms"):
        VectorLabeling.from_json(json.dumps({"n": 1, "vectors": [[1.001, 0, 0]]}))
    with pytest.raises(LabelingError):
        VectorLabeling.from_json('{"n": 2, "vectors": [[1, 0, 0]]}')
    with pytest.raises(LabelingError):
        VectorLabeling.from_json("not json")


def test_eps_from_environment(monkeypatch):
    monkeypatch.setenv("PSEUDOCTX_EPS", "1e-6")
    assert default_eps() == 1e-6
    monkeypatch.delenv("PSEUDOCTX_EPS")
    assert default_eps() == 1e-10


def test_heuristic_eigen(heuristic):
    m = projector_sum(heuristic, [1, 6, 11])
    dec = eigen_sym3(m)
    expected = [(7 - sqrt(21)) / 14, (7 + sqrt(21)) / 14, 2]
    assert np.allclose(dec.eigenvalues, expected, atol=1e-9)
    u = dec.eigenvectors[:, 2]
    ref = np.array([0, -2 / sqrt(5), 1 / sqrt(5)])
    assert min(np.abs(u - ref).max(), np.abs(u + ref).max()) <= 1e-8
    assert np.abs(m - projector_sum(heuristic, [5, 10, 15])).max() <= 1e-9
    assert quantum_bounds(heuristic, [1, 6, 11]) == pytest.approx(((7 - sqrt(21)) / 14, 2), abs=1e-9)


def test_combo_projectors(pi3):
    a, b = projector_sum(pi3, [4, 16, 28]), projector_sum(pi3, [10, 22, 34])
    assert np.abs(a - np.diag([0.2, 0.2, 2.6])).max() <= 1e-9
    assert np.abs(a - b).max() <= 1e-9
    assert np.allclose(pairwise_overlaps(pi3, [4, 16, 28]), 0.8, atol=1e-9)
    assert np.allclose(pairwise_overlaps(pi3, [10, 22, 34]), 0.8, atol=1e-9)


def test_born(pi3, combo, rng):
    p = born_probabilities(pi3, pi3[4])
    assert p[4] == pytest.approx(1, abs=1e-12)
    p = born_probabilities(pi3, [0, 0, 1])
    assert sum(p[v] for v in (4, 16, 28)) == pytest.approx(13 / 5, abs=1e-12)
    for _ in range(1000):
        psi = rng.normal(size=3)
        p = born_probabilities(pi3, psi / np.linalg.norm(psi))
        assert abs(sum(p[v] for v in (4, 16, 28)) - sum(p[v] for v in (10, 22, 34))) <= 1e-10
        assert all(abs(sum(p[v] for v in e) - 1) <= 1e-10 for e in combo.edges)
    with pytest.raises(LabelingError):
        born_probabilities(pi3, [1, 1, 0])


def test_gram_equivalence(pi3, pi2, rng):
    assert gram_equivalent(pi3, pi3)
    assert not gram_equivalent(pi3, pi2)
    q = random_rotation(rng)
    signs = rng.choice([-1.0, 1.0], size=(36, 1))
    moved = VectorLabeling(signs * (pi3.vectors @ q.T))
    assert gram_equivalent(pi3, moved)
    assert not gram_equivalent(pi3, load_fixture("small-for-heuristic"))


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_faithfulness_is_rotation_invariant(heuristic, small, seed):
    q = random_rotation(np.random.default_rng(seed))
    moved = VectorLabeling(heuristic.vectors @ q.T)
    assert verify_for(small, moved).ok
    assert np.allclose(
        eigen_sym3(projector_sum(moved, [1, 6, 11])).eigenvalues,
        eigen_sym3(projector_sum(heuristic, [1, 6, 11])).eigenvalues,
        atol=1e-12,
    )
