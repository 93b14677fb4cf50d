import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from pseudoctx.geometry.eigen import closed_form_sym3, eigen_sym3, jacobi_sym3

finite = st.floats(-10, 10, allow_nan=False, allow_infinity=False)


def sym(a):
    return (a + a.T) / 2


def check(dec, m, tol=1e-9):
    scale = max(1.0, np.abs(m).max())
    assert dec.residual(m) <= tol * scale
    assert np.abs(dec.eigenvectors.T @ dec.eigenvectors - np.eye(3)).max() <= tol
    assert np.all(np.diff(dec.eigenvalues) >= -1e-12)
    assert abs(dec.eigenvalues.sum() - np.trace(m)) <= tol * scale


@settings(max_examples=300, deadline=None)
@given(arrays(float, (3, 3), elements=finite))
def test_random_symmetric(a):
    m = sym(a)
    dec = eigen_sym3(m)
    check(dec, m)
    assert np.allclose(dec.eigenvalues, np.linalg.eigvalsh(m), atol=1e-9 * max(1, np.abs(m).max()))


@settings(max_examples=200, deadline=None)
@given(
    st.lists(st.sampled_from([-1.0, 0.0, 0.5, 2.0]), min_size=3, max_size=3),
    arrays(float, (3, 3), elements=st.floats(-1, 1, allow_nan=False)),
)
def test_repeated_eigenvalues(diag, a):
    q, r = np.linalg.qr(a + 3 * np.eye(3))
    m = sym(q @ np.diag(diag) @ q.T)
    check(eigen_sym3(m), m)


def test_identity_and_diagonal():
    dec = eigen_sym3(np.eye(3))
    assert np.allclose(dec.eigenvalues, 1)
    dec = eigen_sym3(np.diag([3.0, -1.0, 2.0]))
    assert np.allclose(dec.eigenvalues, [-1, 2, 3])


def test_near_degenerate_uses_fallback():
    m = np.diag([1.0, 1.0 + 1e-9, 2.0])
    m = m + 1e-12 * np.array([[0, 1, 0], [1, 0, 0], [0, 0, 0]])
    dec = eigen_sym3(m)
    assert dec.method == "jacobi"
    check(dec, m)


def test_well_separated_uses_closed_form():
    m = np.array([[2.0, 1.0, 0.0], [1.0, 2.0, 1.0], [0.0, 1.0, 2.0]])
    dec = eigen_sym3(m)
    assert dec.method == "closed-form"
    assert np.allclose(dec.eigenvalues, [2 - np.sqrt(2), 2, 2 + np.sqrt(2)], atol=1e-14)


def test_both_solvers_agree():
    rng = np.random.default_rng(7)
    for _ in range(50):
        m = sym(rng.normal(size=(3, 3)))
        a, b = closed_form_sym3(m), jacobi_sym3(m)
        assert np.allclose(a.eigenvalues, b.eigenvalues, atol=1e-12)
        assert np.allclose(np.abs(a.eigenvectors.T @ b.eigenvectors), np.eye(3), atol=1e-7)


def test_rejects_non_symmetric():
    with pytest.raises(ValueError):
        eigen_sym3(np.arange(9.0).reshape(3, 3))
    with pytest.raises(ValueError):
        eigen_sym3(np.eye(2))
