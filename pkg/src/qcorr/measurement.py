"""Observables, Born-rule statistics, pointer-basis measurement models,
POVMs and local stochastic (Kraus) maps.

Measurement outcomes are always ordered by ascending eigenvalue, and
projectors onto degenerate eigenspaces are merged into a single outcome,
so the distributions produced here are reproducible.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .probability import Distribution, JointDistribution, mutual_information
from .states import DensityMatrix, PureState, eigh_phase_fixed

HERMITICITY_TOL = 1e-10
COMPLETENESS_TOL = 1e-10
PSD_TOL = 1e-10
ZERO_OUTCOME = 1e-14


def _merge_degenerate(vals: np.ndarray, vecs: np.ndarray):
    """Group eigenvectors whose eigenvalues coincide within tolerance.

    Returns (outcome_values, projectors) ordered by ascending eigenvalue.
    """
    gap_tol = 1e-9 * max(1.0, float(np.max(np.abs(vals))))
    outcomes, projectors = [], []
    start = 0
    for k in range(1, len(vals) + 1):
        if k == len(vals) or vals[k] - vals[k - 1] > gap_tol:
            block = vecs[:, start:k]
            projectors.append(block @ block.conj().T)
            outcomes.append(float(np.mean(vals[start:k])))
            start = k
    return np.array(outcomes), projectors


@dataclass(frozen=True, eq=False)
class Observable:
    """A Hermitian operator with cached spectral data.

    The eigenprojectors (merged over degenerate eigenvalues) resolve the
    identity and define the measurement outcomes.
    """

    matrix: np.ndarray

    def __post_init__(self):
        mat = np.asarray(self.matrix, dtype=complex)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise ValidationError(f"observable must be square; got shape {mat.shape}")
        defect = float(np.max(np.abs(mat - mat.conj().T)))
        if defect > HERMITICITY_TOL:
            raise ValidationError(f"observable is not Hermitian: defect {defect!r}")
        mat = (mat + mat.conj().T) / 2.0
        vals, vecs = eigh_phase_fixed(mat)
        outcomes, projectors = _merge_degenerate(vals, vecs)
        resolution = sum(projectors)
        res_defect = float(np.max(np.abs(resolution - np.eye(mat.shape[0]))))
        if res_defect > COMPLETENESS_TOL:
            raise ValidationError(f"eigenprojectors fail to resolve identity: {res_defect!r}")
        mat.flags.writeable = False
        object.__setattr__(self, "matrix", mat)
        object.__setattr__(self, "_outcomes", outcomes)
        object.__setattr__(self, "_projectors", projectors)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def outcome_values(self) -> np.ndarray:
        return self._outcomes

    @property
    def projectors(self) -> list:
        return list(self._projectors)


def computational_basis_observable(dim: int) -> Observable:
    """Observable whose eigenbasis is the computational basis, with
    outcome k carrying eigenvalue k."""
    return Observable(np.diag(np.arange(dim, dtype=float)))


@dataclass(frozen=True, eq=False)
class Povm:
    """A positive operator-valued measure: PSD elements summing to identity."""

    elements: tuple

    def __post_init__(self):
        mats = tuple(np.asarray(e, dtype=complex) for e in self.elements)
        if not mats:
            raise ValidationError("a POVM needs at least one element")
        dim = mats[0].shape[0]
        for idx, e in enumerate(mats):
            if e.ndim != 2 or e.shape != (dim, dim):
                raise ValidationError(f"element {idx} has shape {e.shape}; expected ({dim}, {dim})")
            if float(np.max(np.abs(e - e.conj().T))) > HERMITICITY_TOL:
                raise ValidationError(f"element {idx} is not Hermitian")
            low = float(np.linalg.eigvalsh((e + e.conj().T) / 2).min())
            if low < -PSD_TOL:
                raise ValidationError(f"element {idx} is not PSD: eigenvalue {low!r}")
        defect = float(np.max(np.abs(sum(mats) - np.eye(dim))))
        if defect > COMPLETENESS_TOL:
            raise ValidationError(f"elements do not sum to identity: defect {defect!r}")
        object.__setattr__(self, "elements", mats)

    @property
    def dim(self) -> int:
        return self.elements[0].shape[0]

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True, eq=False)
class StochasticMap:
    """A trace-preserving quantum operation given by Kraus operators."""

    kraus_ops: tuple

    def __post_init__(self):
        ops = tuple(np.asarray(k, dtype=complex) for k in self.kraus_ops)
        if not ops:
            raise ValidationError("a stochastic map needs at least one Kraus operator")
        dim = ops[0].shape[1]
        total = sum(k.conj().T @ k for k in ops)
        defect = float(np.max(np.abs(total - np.eye(dim))))
        if defect > COMPLETENESS_TOL:
            raise ValidationError(f"Kraus operators are not trace preserving: defect {defect!r}")
        object.__setattr__(self, "kraus_ops", ops)

    @property
    def dim(self) -> int:
        return self.kraus_ops[0].shape[1]


def everett_state(alpha: complex, beta: complex, eps: float) -> PureState:
    """Post-measurement system-pointer state with pointer overlap eps.

    Builds ``alpha |0>|m1> + beta |1>|m2>`` where the pointer states live
    in a two-dimensional device space with ``|m1> = |0>`` and
    ``|m2> = eps |0> + sqrt(1 - eps^2) |1>``, so ``<m1|m2> = eps``.
    ``eps = 0`` gives perfectly distinguishable pointers and ``eps = 1``
    a product state. The output is normalized automatically because the
    system kets are orthogonal.
    """
    alpha = complex(alpha)
    beta = complex(beta)
    weight = abs(alpha) ** 2 + abs(beta) ** 2
    if abs(weight - 1.0) > 1e-12:
        raise ValidationError(f"|alpha|^2 + |beta|^2 = {weight!r}; expected 1 within 1e-12")
    if not 0.0 <= eps <= 1.0:
        raise ValidationError(f"pointer overlap must lie in [0, 1]; got {eps!r}")
    amplitudes = np.array(
        [alpha, 0.0, beta * eps, beta * math.sqrt(max(1.0 - eps * eps, 0.0))],
        dtype=complex,
    )
    return PureState(amplitudes, (2, 2))


def born_distribution(rho: DensityMatrix, obs: Observable) -> Distribution:
    """Outcome distribution Tr[rho P_i] over the observable's
    eigenprojectors, ordered by ascending eigenvalue.

    The computed probabilities inherit the state's trace defect (up to
    1e-10 by construction), so they are renormalized rather than
    rejected; anything worse signals a broken projector resolution.
    """
    if rho.dim != obs.dim:
        raise ValidationError(f"dimension mismatch: state {rho.dim} vs observable {obs.dim}")
    probs = np.array(
        [float(np.real(np.trace(rho.elements @ proj))) for proj in obs.projectors]
    )
    probs = np.clip(probs, 0.0, None)
    if abs(probs.sum() - 1.0) > 1e-9:
        raise ValidationError(f"outcome probabilities sum to {probs.sum()!r}")
    return Distribution.normalized(probs)


def joint_born_distribution(
    rho: DensityMatrix, obs_a: Observable, obs_b: Observable
) -> JointDistribution:
    """Joint outcome table Tr[rho (P_i (x) Q_j)] for local observables.

    Marginals reproduce the Born distributions of the reduced states.
    """
    if not rho.is_bipartite:
        raise ValidationError("joint distribution requires a bipartite state")
    d_a, d_b = rho.dims
    if obs_a.dim != d_a or obs_b.dim != d_b:
        raise ValidationError(
            f"observables of dimensions ({obs_a.dim}, {obs_b.dim}) do not match dims {rho.dims}"
        )
    table = np.empty((len(obs_a.projectors), len(obs_b.projectors)))
    for i, p in enumerate(obs_a.projectors):
        for j, q in enumerate(obs_b.projectors):
            table[i, j] = float(np.real(np.trace(rho.elements @ np.kron(p, q))))
    table = np.clip(table, 0.0, None)
    if abs(table.sum() - 1.0) > 1e-9:
        raise ValidationError(f"joint outcome probabilities sum to {table.sum()!r}")
    return JointDistribution.normalized(table)


def measurement_mutual_information(
    rho: DensityMatrix, obs_a: Observable, obs_b: Observable
) -> float:
    """Shannon mutual information of the joint Born table, in nats."""
    return mutual_information(joint_born_distribution(rho, obs_a, obs_b))


def apply_local_map(rho: DensityMatrix, channel: StochasticMap, side: str) -> DensityMatrix:
    """Apply a stochastic map to one subsystem: sum_k (K (x) I) rho (K (x) I)^dagger."""
    if not rho.is_bipartite:
        raise ValidationError("local maps act on bipartite states")
    d_a, d_b = rho.dims
    if side == "A":
        if channel.dim != d_a:
            raise ValidationError(f"Kraus dimension {channel.dim} does not match d_a = {d_a}")
        embedded = [np.kron(k, np.eye(d_b)) for k in channel.kraus_ops]
    elif side == "B":
        if channel.dim != d_b:
            raise ValidationError(f"Kraus dimension {channel.dim} does not match d_b = {d_b}")
        embedded = [np.kron(np.eye(d_a), k) for k in channel.kraus_ops]
    else:
        raise ValidationError(f"side must be 'A' or 'B'; got {side!r}")
    out = sum(k @ rho.elements @ k.conj().T for k in embedded)
    return DensityMatrix(out, rho.dims)


def povm_outcome(rho: DensityMatrix, povm: Povm, j: int):
    """Probability and conditional state of B for POVM outcome j on A.

    The POVM acts on subsystem A (elements are d_a x d_a, embedded as
    ``E_j (x) I``). Returns ``(p_j, rho_B_given_j)``. Raises when the
    requested outcome has probability below ``ZERO_OUTCOME``, since the
    conditional state is then undefined.
    """
    if not rho.is_bipartite:
        raise ValidationError("POVM conditioning requires a bipartite state")
    d_a, d_b = rho.dims
    if povm.dim != d_a:
        raise ValidationError(f"POVM dimension {povm.dim} does not match d_a = {d_a}")
    if not 0 <= j < len(povm):
        raise ValidationError(f"outcome index {j} out of range for {len(povm)} elements")
    effect = povm.elements[j]
    four = rho.elements.reshape(d_a, d_b, d_a, d_b)
    # Tr_A[(E_j (x) I) rho], a d_b x d_b block
    block = np.einsum("ab,bcad->cd", effect, four)
    prob = float(np.real(np.trace(block)))
    if prob <= ZERO_OUTCOME:
        raise ValidationError(
            f"outcome {j} has probability {prob!r}; conditional state undefined"
        )
    conditional = DensityMatrix(block / prob, (d_b, 1))
    return prob, conditional


# -- JSON serialization -------------------------------------------------

def _matrix_to_pairs(mat: np.ndarray) -> list:
    return [[float(z.real), float(z.imag)] for z in mat.ravel()]


def _pairs_to_matrix(pairs) -> np.ndarray:
    flat = np.array([complex(re, im) for re, im in pairs])
    dim = math.isqrt(flat.size)
    if dim * dim != flat.size:
        raise ValidationError(f"matrix length {flat.size} is not a perfect square")
    return flat.reshape(dim, dim)


def observable_to_json(obs: Observable) -> str:
    return json.dumps({"matrix": _matrix_to_pairs(obs.matrix)})


def observable_from_json(text: str) -> Observable:
    payload = json.loads(text)
    return Observable(_pairs_to_matrix(payload["matrix"]))


def povm_to_json(povm: Povm) -> str:
    return json.dumps({"elements": [_matrix_to_pairs(e) for e in povm.elements]})


def povm_from_json(text: str) -> Povm:
    payload = json.loads(text)
    return Povm(tuple(_pairs_to_matrix(e) for e in payload["elements"]))
