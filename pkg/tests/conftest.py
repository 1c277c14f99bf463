"""Shared state constructors for the test suite."""

import numpy as np
import pytest

from qcorr import DensityMatrix, PureState, StochasticMap, density_from_pure


def bell_state() -> PureState:
    return PureState(np.array([1.0, 0.0, 0.0, 1.0]) / np.sqrt(2.0), (2, 2))


def bell_density() -> DensityMatrix:
    return density_from_pure(bell_state())


def entangled_state(theta: float) -> PureState:
    amp = np.array([np.cos(theta / 2.0), 0.0, 0.0, np.sin(theta / 2.0)], dtype=complex)
    return PureState(amp, (2, 2))


def werner_state(weight: float) -> DensityMatrix:
    bell = bell_density().elements
    return DensityMatrix(weight * bell + (1.0 - weight) * np.eye(4) / 4.0, (2, 2))


def random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    raw = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(raw)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_channel(dim: int, n_kraus: int, rng: np.random.Generator) -> StochasticMap:
    """Random CPTP map from a Haar-ish isometry, sliced into Kraus blocks."""
    raw = rng.standard_normal((dim * n_kraus, dim)) + 1j * rng.standard_normal((dim * n_kraus, dim))
    isometry, _ = np.linalg.qr(raw)
    return StochasticMap(tuple(isometry[k * dim : (k + 1) * dim, :] for k in range(n_kraus)))


def random_classical_state(rng: np.random.Generator) -> DensityMatrix:
    """Mixture of products of orthogonal projectors on each qubit."""
    basis_a = random_unitary(2, rng)
    basis_b = random_unitary(2, rng)
    weights = rng.random((2, 2))
    weights /= weights.sum()
    mat = np.zeros((4, 4), dtype=complex)
    for i in range(2):
        for j in range(2):
            proj_a = np.outer(basis_a[:, i], basis_a[:, i].conj())
            proj_b = np.outer(basis_b[:, j], basis_b[:, j].conj())
            mat += weights[i, j] * np.kron(proj_a, proj_b)
    return DensityMatrix(mat, (2, 2))


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
