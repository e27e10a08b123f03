import math

import numpy as np
import pytest

from circulant_energy.energy import energy_direct
from circulant_energy.oracle import (
    JacobiConvergenceError,
    OracleSizeError,
    adjacency_matrix,
    energy_oracle,
    jacobi_eigenvalues,
)
from circulant_energy.spectrum import GraphSpec, full_spectrum


def test_adjacency_cycle():
    a = adjacency_matrix(GraphSpec(1, 4))
    expected = np.array([[0, 1, 0, 1], [1, 0, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0]], dtype=float)
    assert np.array_equal(a, expected)


def test_adjacency_complete():
    assert np.array_equal(adjacency_matrix(GraphSpec(2, 5)), np.ones((5, 5)) - np.eye(5))


def test_adjacency_matching_complement():
    a = adjacency_matrix(GraphSpec(2, 6))
    expected = np.ones((6, 6)) - np.eye(6)
    for i in range(6):
        expected[i, (i + 3) % 6] = 0
    assert np.array_equal(a, expected)


def test_adjacency_structure_grid():
    for r in range(1, 9):
        for N in list(range(2 * r + 1, 60)) + [511, 512]:
            a = adjacency_matrix(GraphSpec(r, N))
            assert np.array_equal(a, a.T)
            assert not a.diagonal().any()
            assert set(np.unique(a)) <= {0.0, 1.0}
            assert np.all(a.sum(axis=1) == 2 * r)


def test_adjacency_matches_edge_definition():
    # i ~ j iff |i - j + xN| <= r has an integer solution x (with i != j)
    r, N = 3, 11
    a = adjacency_matrix(GraphSpec(r, N))
    for i in range(N):
        for j in range(N):
            edge = i != j and any(abs(i - j + x * N) <= r for x in (-1, 0, 1))
            assert a[i, j] == float(edge)


def test_jacobi_diagonal_input():
    d = np.diag([3.0, -1.5, 0.25, 7.0])
    np.testing.assert_array_equal(jacobi_eigenvalues(d), np.sort(d.diagonal()))


def test_jacobi_k5():
    vals = jacobi_eigenvalues(adjacency_matrix(GraphSpec(2, 5)))
    np.testing.assert_allclose(vals, [-1, -1, -1, -1, 4], atol=1e-8)


def test_jacobi_does_not_modify_input():
    a = adjacency_matrix(GraphSpec(3, 16))
    before = a.copy()
    jacobi_eigenvalues(a)
    assert np.array_equal(a, before)


def test_jacobi_random_symmetric_matches_eigvalsh():
    rng = np.random.default_rng(7)
    for n in (2, 5, 31, 90):
        x = rng.normal(size=(n, n))
        m = x + x.T
        np.testing.assert_allclose(jacobi_eigenvalues(m), np.linalg.eigvalsh(m), atol=1e-8)


def test_jacobi_clustered_spectrum():
    rng = np.random.default_rng(11)
    q, _ = np.linalg.qr(rng.normal(size=(40, 40)))
    true = np.repeat([1.0, 1.0 + 1e-9, -2.0, 5.0], 10)
    m = q @ np.diag(true) @ q.T
    m = 0.5 * (m + m.T)
    np.testing.assert_allclose(jacobi_eigenvalues(m), np.sort(true), atol=1e-8)


def test_jacobi_preserves_trace_and_frobenius():
    for r, N in [(1, 7), (3, 16), (6, 77), (4, 128)]:
        a = adjacency_matrix(GraphSpec(r, N))
        vals = jacobi_eigenvalues(a)
        trace, frob2 = np.trace(a), np.sum(a * a)
        assert abs(math.fsum(vals) - trace) <= 1e-9 * max(1.0, frob2)
        assert abs(math.fsum(vals * vals) - frob2) <= 1e-9 * frob2


def test_jacobi_non_convergence_is_reported():
    a = adjacency_matrix(GraphSpec(3, 40))
    with pytest.raises(JacobiConvergenceError) as info:
        jacobi_eigenvalues(a, off_diag_tol=1e-300, max_sweeps=1)
    assert info.value.sweeps == 1


@pytest.mark.parametrize(
    "m, kwargs",
    [
        (np.array([[0.0, 1.0], [2.0, 0.0]]), {}),
        (np.zeros((2, 3)), {}),
        (np.eye(3), {"off_diag_tol": 0.0}),
        (np.eye(3), {"max_sweeps": 0}),
    ],
)
def test_jacobi_rejects_bad_input(m, kwargs):
    with pytest.raises(ValueError):
        jacobi_eigenvalues(m, **kwargs)


def test_spectrum_multiset_grid():
    for r in range(1, 7):
        for N in range(2 * r + 1, 129):
            spec = GraphSpec(r, N)
            ours = np.sort(full_spectrum(spec).values)
            ref = jacobi_eigenvalues(adjacency_matrix(spec))
            assert np.max(np.abs(ours - ref)) <= 1e-8, (r, N)


@pytest.mark.parametrize("r, N, expected", [(2, 5, 8.0), (1, 6, 8.0)])
def test_energy_oracle_examples(r, N, expected):
    assert energy_oracle(GraphSpec(r, N)) == pytest.approx(expected, abs=1e-9)


def test_energy_oracle_vs_direct():
    spec = GraphSpec(3, 8)
    assert abs(energy_oracle(spec) - energy_direct(spec).energy) <= 1e-6


def test_energy_oracle_cap():
    with pytest.raises(OracleSizeError):
        energy_oracle(GraphSpec(1, 513))
    with pytest.raises(OracleSizeError):
        energy_oracle(GraphSpec(1, 40), cap=39)


def test_energy_oracle_at_cap():
    spec = GraphSpec(2, 512)
    assert abs(energy_oracle(spec) - energy_direct(spec).energy) <= 1e-6
