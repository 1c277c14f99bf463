"""Two-mode Gaussian states in covariance-matrix form.

Conventions
-----------
Quadratures are dimensionless, ``x = sqrt(m w / hbar) q`` and
``p~ = p / sqrt(m w hbar)``, ordered ``(x1, p1, x2, p2)``. The vacuum
has quadrature variance 1/2, so physical covariance matrices have every
symplectic eigenvalue at least 1/2. All entropies are in nats.

The closed-form Gaussian discord below is stated in the doubled
(vacuum = identity) convention internally; its agreement with the
measurement-minimization search is part of the acceptance suite, which
makes any convention slip detectable.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm
from scipy.optimize import minimize

from .errors import ValidationError

SYMMETRY_TOL = 1e-10
# Construction admits nu_min >= 1/2 - PHYSICALITY_SLACK; operations on a
# wilder matrix fail with the looser OPERATION_SLACK bound.
PHYSICALITY_SLACK = 1e-9
OPERATION_SLACK = 1e-6
VACUUM_VARIANCE = 0.5

_MEASUREMENT_GRID_S = 24
_MEASUREMENT_GRID_PHI = 16
_LOG_S_RANGE = (math.log(1e-3), math.log(1e3))


def symplectic_form(n_modes: int) -> np.ndarray:
    """The block-diagonal symplectic form for quadrature order (x1, p1, ...)."""
    w = np.array([[0.0, 1.0], [-1.0, 0.0]])
    out = np.zeros((2 * n_modes, 2 * n_modes))
    for k in range(n_modes):
        out[2 * k : 2 * k + 2, 2 * k : 2 * k + 2] = w
    return out


def _symplectic_spectrum(sigma: np.ndarray) -> np.ndarray:
    eigs = np.linalg.eigvals(symplectic_form(sigma.shape[0] // 2) @ sigma)
    doubled = np.sort(np.abs(eigs.imag))
    return doubled[1::2]


@dataclass(frozen=True, eq=False)
class CovarianceMatrix:
    """Second-moment matrix of a Gaussian state (one or two modes).

    Validated to be symmetric and to satisfy the uncertainty bound: the
    smallest symplectic eigenvalue must be at least
    ``1/2 - PHYSICALITY_SLACK``.
    """

    sigma: np.ndarray

    def __post_init__(self):
        mat = np.asarray(self.sigma, dtype=float)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1] or mat.shape[0] % 2:
            raise ValidationError(f"covariance matrix must be square of even size; got {mat.shape}")
        defect = float(np.max(np.abs(mat - mat.T)))
        if defect > SYMMETRY_TOL:
            raise ValidationError(f"covariance matrix is not symmetric: defect {defect!r}")
        mat = (mat + mat.T) / 2.0
        spectrum = _symplectic_spectrum(mat)
        nu_min = float(spectrum.min())
        if nu_min < VACUUM_VARIANCE - PHYSICALITY_SLACK:
            raise ValidationError(
                f"smallest symplectic eigenvalue {nu_min!r} violates the "
                f"uncertainty bound {VACUUM_VARIANCE}"
            )
        mat.flags.writeable = False
        spectrum.flags.writeable = False
        object.__setattr__(self, "sigma", mat)
        object.__setattr__(self, "_spectrum", spectrum)

    @property
    def n_modes(self) -> int:
        return self.sigma.shape[0] // 2


@dataclass(frozen=True, eq=False)
class QuadraticHamiltonian:
    """Coefficient matrix G of a quadratic Hamiltonian H = (1/2) r^T G r."""

    matrix: np.ndarray

    def __post_init__(self):
        mat = np.asarray(self.matrix, dtype=float)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1] or mat.shape[0] % 2:
            raise ValidationError(f"Hamiltonian matrix must be square of even size; got {mat.shape}")
        defect = float(np.max(np.abs(mat - mat.T)))
        if defect > 1e-12:
            raise ValidationError(f"Hamiltonian matrix is not symmetric: defect {defect!r}")
        mat = (mat + mat.T) / 2.0
        mat.flags.writeable = False
        object.__setattr__(self, "matrix", mat)

    @property
    def n_modes(self) -> int:
        return self.matrix.shape[0] // 2


def thermal_variance(beta: float, omega: float, hbar: float = 1.0) -> float:
    """Quadrature variance (1/2) coth(beta hbar omega / 2) of a thermal mode."""
    if beta <= 0 or omega <= 0 or hbar <= 0:
        raise ValidationError("beta, omega and hbar must be positive")
    return 0.5 / math.tanh(beta * hbar * omega / 2.0)


def thermal_covariance(beta: float, omega: float, hbar: float = 1.0) -> CovarianceMatrix:
    """Single-mode thermal covariance matrix nu * I with
    nu = (1/2) coth(beta hbar omega / 2)."""
    return CovarianceMatrix(thermal_variance(beta, omega, hbar) * np.eye(2))


def direct_sum(*blocks: CovarianceMatrix) -> CovarianceMatrix:
    """Product state of independent Gaussian modes."""
    mats = [b.sigma for b in blocks]
    total = sum(m.shape[0] for m in mats)
    out = np.zeros((total, total))
    at = 0
    for m in mats:
        out[at : at + m.shape[0], at : at + m.shape[0]] = m
        at += m.shape[0]
    return CovarianceMatrix(out)


def quench_hamiltonian_matrix(
    omega: float, lam: float, mass: float = 1.0, hbar: float = 1.0
) -> QuadraticHamiltonian:
    """Two coupled oscillators in dimensionless quadratures at reference
    frequency ``omega``.

    The coupling adds ``(lam^2 / omega^2)`` to each diagonal x entry and
    ``-(lam^2 / omega^2)`` across the modes; the mass cancels in the
    dimensionless quadratures. Momentum entries are uncoupled.
    """
    if omega <= 0 or mass <= 0 or hbar <= 0 or lam < 0:
        raise ValidationError("omega, mass, hbar must be positive and lam non-negative")
    ratio = (lam / omega) ** 2
    g = np.zeros((4, 4))
    g[0, 0] = g[2, 2] = 1.0 + ratio
    g[0, 2] = g[2, 0] = -ratio
    g[1, 1] = g[3, 3] = 1.0
    return QuadraticHamiltonian(hbar * omega * g)


def normal_mode_frequencies(omega: float, lam: float):
    """Frequencies of the decoupled collective modes: the center-of-mass
    mode keeps ``omega``; the relative mode is stiffened to
    ``sqrt(omega^2 + 2 lam^2)``."""
    return omega, math.sqrt(omega * omega + 2.0 * lam * lam)


def symplectic_propagator(ham: QuadraticHamiltonian, t: float, hbar: float = 1.0) -> np.ndarray:
    """Propagator S = exp(Omega G t / hbar) for the quadrature vector."""
    omega_s = symplectic_form(ham.n_modes)
    return expm(omega_s @ ham.matrix * (t / hbar))


def quench_propagator_closed_form(omega: float, lam: float, t: float) -> np.ndarray:
    """Propagator of the coupled pair built from its normal modes.

    Rotates to the (center-of-mass, relative) mode pair, applies the
    harmonic rotation with frequency-rescaled quadratures, and rotates
    back. Agrees with :func:`symplectic_propagator` applied to
    :func:`quench_hamiltonian_matrix` to high accuracy.
    """
    w1, w2 = normal_mode_frequencies(omega, lam)

    def mode_block(wk: float) -> np.ndarray:
        c, s = math.cos(wk * t), math.sin(wk * t)
        return np.array([[c, (omega / wk) * s], [-(wk / omega) * s, c]])

    inv_sqrt2 = 1.0 / math.sqrt(2.0)
    rot = np.zeros((4, 4))
    rot[0, 0] = rot[0, 2] = inv_sqrt2   # x_com
    rot[1, 1] = rot[1, 3] = inv_sqrt2   # p_com
    rot[2, 0] = inv_sqrt2; rot[2, 2] = -inv_sqrt2  # x_rel
    rot[3, 1] = inv_sqrt2; rot[3, 3] = -inv_sqrt2  # p_rel
    block = np.zeros((4, 4))
    block[:2, :2] = mode_block(w1)
    block[2:, 2:] = mode_block(w2)
    return rot.T @ block @ rot


def symplectic_evolution(
    sigma: CovarianceMatrix, ham: QuadraticHamiltonian, t: float, hbar: float = 1.0
) -> CovarianceMatrix:
    """Evolve a covariance matrix: sigma -> S sigma S^T with
    S = exp(Omega G t / hbar)."""
    if sigma.n_modes != ham.n_modes:
        raise ValidationError(
            f"mode mismatch: state has {sigma.n_modes}, Hamiltonian {ham.n_modes}"
        )
    s = symplectic_propagator(ham, t, hbar)
    return CovarianceMatrix(s @ sigma.sigma @ s.T)


def symplectic_eigenvalues(sigma: CovarianceMatrix):
    """Symplectic spectrum (nu_minus, nu_plus) of a two-mode state, or a
    single value for one mode. Both are >= 1/2 for physical states."""
    spectrum = sigma._spectrum
    if float(spectrum.min()) < VACUUM_VARIANCE - OPERATION_SLACK:
        raise ValidationError(
            f"unphysical covariance matrix: symplectic eigenvalue {spectrum.min()!r} < 1/2"
        )
    if sigma.n_modes == 1:
        return float(spectrum[0])
    return float(spectrum[0]), float(spectrum[1])


def mode_entropy(nu: float) -> float:
    """Entropy contribution f(nu) = (nu + 1/2) ln(nu + 1/2)
    - (nu - 1/2) ln(nu - 1/2) of one symplectic eigenvalue."""
    above = nu - VACUUM_VARIANCE
    if above < -OPERATION_SLACK:
        raise ValidationError(f"symplectic eigenvalue {nu!r} below the vacuum value 1/2")
    if above <= 1e-12:
        return 0.0
    plus = nu + VACUUM_VARIANCE
    return plus * math.log(plus) - above * math.log(above)


def gaussian_entropy(sigma: CovarianceMatrix) -> float:
    """von Neumann entropy of a Gaussian state: sum of f over the
    symplectic spectrum, in nats."""
    nus = symplectic_eigenvalues(sigma)
    if sigma.n_modes == 1:
        return mode_entropy(nus)
    return sum(mode_entropy(nu) for nu in nus)


def _split_blocks(sigma: np.ndarray, measured_mode: int):
    """(measured block, unmeasured block, cross block with measured rows)."""
    if measured_mode == 1:
        return sigma[:2, :2], sigma[2:, 2:], sigma[:2, 2:]
    if measured_mode == 2:
        return sigma[2:, 2:], sigma[:2, :2], sigma[2:, :2]
    raise ValidationError(f"measured mode must be 1 or 2; got {measured_mode!r}")


def _require_two_modes(sigma: CovarianceMatrix):
    if sigma.n_modes != 2:
        raise ValidationError(f"operation requires a two-mode state; got {sigma.n_modes} mode(s)")


def gaussian_discord(sigma: CovarianceMatrix, measured_mode: int = 1) -> float:
    """Gaussian discord with Gaussian measurements on the chosen mode.

    Uses the closed form built from the four local-symplectic invariants
    (determinants of the mode blocks, the cross block, and the full
    matrix): the minimal conditional determinant has two regimes
    selected by a discriminant, one reached in the infinite-squeezing
    (homodyne) limit and one at finite squeezing. The result is clamped
    at zero.
    """
    _require_two_modes(sigma)
    doubled = 2.0 * sigma.sigma  # vacuum = identity convention
    meas, unmeas, cross = _split_blocks(doubled, measured_mode)
    inv_b = float(np.linalg.det(meas))
    inv_a = float(np.linalg.det(unmeas))
    inv_c = float(np.linalg.det(cross))
    inv_d = float(np.linalg.det(doubled))

    def finite_squeezing_branch():
        inner = max(inv_c**2 + (inv_b - 1.0) * (inv_d - inv_a), 0.0)
        return (
            2.0 * inv_c**2
            + (inv_b - 1.0) * (inv_d - inv_a)
            + 2.0 * abs(inv_c) * math.sqrt(inner)
        ) / (inv_b - 1.0) ** 2

    def homodyne_branch():
        inner = max(
            inv_c**4 + (inv_d - inv_a * inv_b) ** 2 - 2.0 * inv_c**2 * (inv_a * inv_b + inv_d),
            0.0,
        )
        return (inv_a * inv_b - inv_c**2 + inv_d - math.sqrt(inner)) / (2.0 * inv_b)

    margin = (inv_d - inv_a * inv_b) ** 2 - (1.0 + inv_b) * inv_c**2 * (inv_a + inv_d)
    if inv_b - 1.0 < 1e-9:
        e_min = inv_a  # pure measured mode: necessarily a product state
    elif abs(margin) <= 1e-9 * max(1.0, (1.0 + inv_b) * inv_c**2 * (inv_a + inv_d)):
        # on the branch boundary the two expressions coincide exactly but
        # the first loses precision to cancellation; take the smaller
        e_min = min(finite_squeezing_branch(), homodyne_branch())
    elif margin <= 0.0:
        e_min = finite_squeezing_branch()
    else:
        e_min = homodyne_branch()
    nu_minus, nu_plus = symplectic_eigenvalues(sigma)
    value = (
        mode_entropy(math.sqrt(max(inv_b, 1.0)) / 2.0)
        - mode_entropy(nu_minus)
        - mode_entropy(nu_plus)
        + mode_entropy(math.sqrt(max(e_min, 1.0)) / 2.0)
    )
    return max(value, 0.0)


def _conditional_entropy_factory(sigma: np.ndarray, measured_mode: int):
    """Conditional-entropy objectives for seeded Gaussian measurements.

    Returns ``(finite, homodyne)`` where ``finite(u, phi)`` evaluates the
    post-measurement entropy of the unmeasured mode for the seed
    covariance R(phi) diag(e^u / 2, e^-u / 2) R(phi)^T and
    ``homodyne(phi)`` evaluates the exact infinite-squeezing limit. The
    measured block is rotated first and inverted analytically so both
    stay accurate at extreme squeezing.
    """
    meas, unmeas, cross = _split_blocks(sigma, measured_mode)

    def finite(u: float, phi: float) -> float:
        u = min(max(u, -34.5), 34.5)
        s = math.exp(u)
        c, sn = math.cos(phi), math.sin(phi)
        rot = np.array([[c, -sn], [sn, c]])
        m_rot = rot.T @ meas @ rot
        cross_rot = rot.T @ cross
        m00 = m_rot[0, 0] + s / 2.0
        m11 = m_rot[1, 1] + 1.0 / (2.0 * s)
        m01 = m_rot[0, 1]
        det = m00 * m11 - m01 * m01
        inv = np.array([[m11, -m01], [-m01, m00]]) / det
        conditional = unmeas - cross_rot.T @ inv @ cross_rot
        return mode_entropy(math.sqrt(max(float(np.linalg.det(conditional)), 0.25)))

    def homodyne(phi: float) -> float:
        v = np.array([math.cos(phi), math.sin(phi)])
        w = cross.T @ v
        conditional = unmeas - np.outer(w, w) / float(v @ meas @ v)
        return mode_entropy(math.sqrt(max(float(np.linalg.det(conditional)), 0.25)))

    return finite, homodyne


def minimize_gaussian_measurement(sigma: CovarianceMatrix, measured_mode: int = 1) -> float:
    """Gaussian discord by direct minimization over seeded single-mode
    Gaussian measurements on the chosen mode.

    Scans squeezing s on a log grid over [1e-3, 1e3] crossed with the
    seed orientation phi in [0, pi), refines the best cells locally, and
    separately refines the exact homodyne limit. The discord is then
    assembled as mutual information minus the extracted classical
    correlations. Serves as the independent check of
    :func:`gaussian_discord`.
    """
    _require_two_modes(sigma)
    meas, unmeas, _ = _split_blocks(sigma.sigma, measured_mode)
    finite, homodyne = _conditional_entropy_factory(sigma.sigma, measured_mode)

    u_grid = np.linspace(_LOG_S_RANGE[0], _LOG_S_RANGE[1], _MEASUREMENT_GRID_S)
    phi_grid = np.linspace(0.0, math.pi, _MEASUREMENT_GRID_PHI, endpoint=False)
    cells = sorted(
        ((finite(u, phi), u, phi) for u in u_grid for phi in phi_grid),
        key=lambda cell: cell[0],
    )
    best = cells[0][0]
    for _, u0, phi0 in cells[:3]:
        refined = minimize(
            lambda z: finite(z[0], z[1]),
            np.array([u0, phi0]),
            method="Nelder-Mead",
            options={"xatol": 1e-10, "fatol": 1e-14, "maxiter": 4000, "maxfev": 4000},
        )
        best = min(best, float(refined.fun))
    hom_grid = [(homodyne(phi), phi) for phi in np.linspace(0.0, math.pi, 64, endpoint=False)]
    hom_best, hom_phi = min(hom_grid, key=lambda cell: cell[0])
    hom_refined = minimize(
        lambda z: homodyne(z[0]),
        np.array([hom_phi]),
        method="Nelder-Mead",
        options={"xatol": 1e-12, "fatol": 1e-15, "maxiter": 2000},
    )
    min_conditional = min(best, hom_best, float(hom_refined.fun))

    nu_minus, nu_plus = symplectic_eigenvalues(sigma)
    entropy_meas = mode_entropy(math.sqrt(max(float(np.linalg.det(meas)), 0.25)))
    entropy_unmeas = mode_entropy(math.sqrt(max(float(np.linalg.det(unmeas)), 0.25)))
    total = mode_entropy(nu_minus) + mode_entropy(nu_plus)
    info = entropy_meas + entropy_unmeas - total
    classical = entropy_unmeas - min_conditional
    return max(info - classical, 0.0)


def random_covariance(seed: int, nu_max: float = 3.0, pure_prob: float = 0.2) -> CovarianceMatrix:
    """Random physical two-mode covariance matrix.

    Conjugates a diagonal of symplectic eigenvalues (drawn uniformly
    from [1/2, nu_max], or exactly 1/2 with probability ``pure_prob``)
    by a random symplectic built from a Gaussian symmetric generator.
    Deterministic for a fixed seed.
    """
    rng = np.random.default_rng(seed)
    gen = rng.normal(0.0, 0.35, (4, 4))
    gen = (gen + gen.T) / 2.0
    s = expm(symplectic_form(2) @ gen)
    nus = np.where(
        rng.random(2) < pure_prob, VACUUM_VARIANCE, rng.uniform(VACUUM_VARIANCE, nu_max, 2)
    )
    return CovarianceMatrix(s @ np.diag(np.repeat(nus, 2)) @ s.T)


# -- JSON serialization -------------------------------------------------
#
# A covariance matrix is stored as a bare 4x4 (or 2x2) row-major nested
# array of floats.

def covariance_to_json(sigma: CovarianceMatrix) -> str:
    return json.dumps([[float(x) for x in row] for row in sigma.sigma])


def covariance_from_json(text: str) -> CovarianceMatrix:
    rows = json.loads(text)
    return CovarianceMatrix(np.asarray(rows, dtype=float))
