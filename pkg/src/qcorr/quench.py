"""Sudden-quench thermodynamics of two coupled harmonic oscillators.

Two oscillators of equal mass and frequency, initially uncoupled and
thermalized at inverse temperature beta, have their harmonic coupling
switched instantaneously from 0 to lambda0. This module provides the
closed-form classical and quantum partition functions, average work,
free-energy changes and irreversible work for that protocol, the excess
quantum dissipated work (quantum minus classical irreversible work),
the Gaussian discord generated by the quench, and a temperature sweep
collecting everything.

Independent checks (exact-Gaussian Monte-Carlo sampling, tensor-product
Gaussian quadrature, truncated Fock-basis traces) live alongside the
closed forms so the two routes can be compared in the test suite.

The work-operator route is only meaningful for a sudden quench, so no
time-dependent protocol API is exposed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import ConsistencyError, ValidationError
from .gaussian import (
    direct_sum,
    gaussian_discord,
    normal_mode_frequencies,
    quench_hamiltonian_matrix,
    symplectic_evolution,
    thermal_covariance,
)

IDENTITY_TOL = 1e-12
REPORT_TOL = 1e-12
OMEGA_FLOOR = -1e-9


@dataclass(frozen=True)
class QuenchParams:
    """Physical parameters of the quench protocol.

    ``h_ref`` is the dimensional action constant making the classical
    partition function dimensionless; it defaults to ``2 pi hbar`` and
    cancels in every reported observable.
    """

    mass: float = 1.0
    omega: float = 1.0
    lambda0: float = 1.0
    beta: float = 1.0
    hbar: float = 1.0
    kb: float = 1.0
    h_ref: float = None

    def __post_init__(self):
        if self.h_ref is None:
            object.__setattr__(self, "h_ref", 2.0 * math.pi * self.hbar)
        positives = {
            "mass": self.mass,
            "omega": self.omega,
            "beta": self.beta,
            "hbar": self.hbar,
            "kb": self.kb,
            "h_ref": self.h_ref,
        }
        for name, value in positives.items():
            if not value > 0:
                raise ValidationError(f"{name} must be strictly positive; got {value!r}")
        if self.lambda0 < 0:
            raise ValidationError(f"lambda0 must be non-negative; got {self.lambda0!r}")

    @property
    def temperature(self) -> float:
        return 1.0 / (self.kb * self.beta)

    def at_temperature(self, temperature: float) -> "QuenchParams":
        if temperature <= 0:
            raise ValidationError(f"temperature must be positive; got {temperature!r}")
        return replace(self, beta=1.0 / (self.kb * temperature))


@dataclass(frozen=True)
class QuenchReport:
    """All thermodynamic outputs of the protocol at one temperature."""

    temperature: float
    w_c_avg: float
    df_c: float
    w_c_irr: float
    w_q_avg: float
    df_q: float
    w_q_irr: float
    omega_excess: float
    gaussian_discord: float

    def __post_init__(self):
        if abs(self.w_c_irr - (self.w_c_avg - self.df_c)) > REPORT_TOL:
            raise ValidationError("w_c_irr must equal w_c_avg - df_c")
        if abs(self.w_q_irr - (self.w_q_avg - self.df_q)) > REPORT_TOL:
            raise ValidationError("w_q_irr must equal w_q_avg - df_q")
        if abs(self.omega_excess - (self.w_q_irr - self.w_c_irr)) > REPORT_TOL:
            raise ValidationError("omega_excess must equal w_q_irr - w_c_irr")
        if self.omega_excess < OMEGA_FLOOR:
            raise ValidationError(f"omega_excess = {self.omega_excess!r} is negative")


def _log_sinh(x: float) -> float:
    """ln(sinh(x)) for x > 0, stable against overflow at large x."""
    if x > 20.0:
        return x - math.log(2.0) + math.log1p(-math.exp(-2.0 * x))
    return math.log(math.sinh(x))


# -- classical branch ----------------------------------------------------

def classical_partition(params: QuenchParams, lam: float) -> float:
    """Classical partition function of the coupled pair,

        Z_C(lam) = (2 pi / (h beta omega))^2 / sqrt(1 + 2 lam^2 / omega^2).
    """
    if lam < 0:
        raise ValidationError(f"coupling must be non-negative; got {lam!r}")
    prefactor = (2.0 * math.pi / (params.h_ref * params.beta * params.omega)) ** 2
    return prefactor / math.sqrt(1.0 + 2.0 * lam * lam / params.omega**2)


def classical_partition_quadrature(params: QuenchParams, lam: float, nodes: int = 96) -> float:
    """Phase-space integral of exp(-beta H) / h^2 by tensor-product
    Gauss-Hermite quadrature; the independent check of
    :func:`classical_partition`.
    """
    x, w = np.polynomial.hermite.hermgauss(nodes)
    beta, m, omega = params.beta, params.mass, params.omega
    # momenta: p = sqrt(2 m / beta) x, two independent factors
    momentum_part = (math.sqrt(2.0 * m / beta) * w.sum()) ** 2
    # positions: q = sqrt(2 / (beta m omega^2)) x, coupled through the quench term
    coupling = (lam / omega) ** 2
    diff = x[:, None] - x[None, :]
    kernel = np.exp(-coupling * diff**2)
    position_part = (2.0 / (beta * m * omega**2)) * float(w @ kernel @ w)
    return momentum_part * position_part / params.h_ref**2


def classical_avg_work(params: QuenchParams) -> float:
    """Mean work of the sudden quench over the initial Gibbs ensemble,
    lambda0^2 / (beta omega^2). Independent of the mass and of hbar."""
    return params.lambda0**2 / (params.beta * params.omega**2)


def monte_carlo_classical_work(params: QuenchParams, n_samples: int = 1_000_000, seed: int = 0):
    """Monte-Carlo estimate of the classical average work.

    Draws exact samples from the uncoupled Gibbs distribution, whose
    position and momentum factors are independent Gaussians; the work
    (m lambda0^2 / 2)(q1 - q2)^2 involves only the positions, so the
    exact position marginal is sampled. Returns ``(mean,
    standard_error)``.
    """
    if n_samples < 2:
        raise ValidationError("need at least 2 samples for a standard error")
    rng = np.random.default_rng(seed)
    q_scale = 1.0 / math.sqrt(params.beta * params.mass) / params.omega
    q = rng.normal(0.0, q_scale, (2, n_samples))
    work = 0.5 * params.mass * params.lambda0**2 * (q[0] - q[1]) ** 2
    mean = float(work.mean())
    stderr = float(work.std(ddof=1) / math.sqrt(n_samples))
    return mean, stderr


def classical_free_energy_change(params: QuenchParams) -> float:
    """Free-energy change (1/(2 beta)) ln[1 + 2 lambda0^2 / omega^2];
    equals -(1/beta) ln[Z_C(lambda0)/Z_C(0)]."""
    return math.log1p(2.0 * params.lambda0**2 / params.omega**2) / (2.0 * params.beta)


def classical_irr_work(params: QuenchParams) -> float:
    """Irreversible (dissipated) classical work, mean work minus the
    free-energy change. Non-negative."""
    return classical_avg_work(params) - classical_free_energy_change(params)


# -- quantum branch ------------------------------------------------------

def quantum_partition(params: QuenchParams, lam: float) -> float:
    """Quantum partition function of the coupled pair,

        Z_Q(lam) = (1/4) csch(beta hbar w1 / 2) csch(beta hbar w2 / 2)

    with the normal-mode frequencies w1 = omega and
    w2 = sqrt(omega^2 + 2 lam^2).
    """
    if lam < 0:
        raise ValidationError(f"coupling must be non-negative; got {lam!r}")
    w1, w2 = normal_mode_frequencies(params.omega, lam)
    half = params.beta * params.hbar / 2.0
    return 0.25 / (math.sinh(half * w1) * math.sinh(half * w2))


def quantum_partition_fock(params: QuenchParams, lam: float, tail_tol: float = 1e-12) -> float:
    """Partition function by direct summation of the two-mode Fock
    spectrum of the decoupled normal modes, truncated adaptively until
    the geometric tail bound drops below ``tail_tol`` per mode."""
    w1, w2 = normal_mode_frequencies(params.omega, lam)
    factors = []
    for wk in (w1, w2):
        step = params.beta * params.hbar * wk
        cutoff = 8
        while True:
            levels = np.exp(-step * (np.arange(cutoff + 1) + 0.5))
            partial = float(levels.sum())
            tail = math.exp(-step * (cutoff + 1.5)) / -math.expm1(-step)
            if tail < tail_tol * partial:
                factors.append(partial)
                break
            cutoff *= 2
            if cutoff > 2**22:
                raise ConsistencyError("Fock cutoff failed to converge")
    return factors[0] * factors[1]


def quantum_avg_work(params: QuenchParams) -> float:
    """Mean quantum work of the sudden quench,
    (hbar lambda0^2 / (2 omega)) coth(beta hbar omega / 2).
    Approaches the classical value as beta*hbar*omega -> 0."""
    half = params.beta * params.hbar * params.omega / 2.0
    return params.hbar * params.lambda0**2 / (2.0 * params.omega) / math.tanh(half)


def quantum_avg_work_fock(params: QuenchParams, rel_tol: float = 1e-12) -> float:
    """Mean work as a truncated Fock-basis trace of the work operator
    (m lambda0^2 / 2)(q1 - q2)^2 against the uncoupled thermal state.

    The position operators are built numerically in the truncated basis
    and the cutoff grows until the estimate stops moving by more than
    ``rel_tol`` in relative terms.
    """
    beta_step = params.beta * params.hbar * params.omega
    cutoff = 24
    previous = None
    while True:
        n = np.arange(cutoff + 1)
        ladder = np.zeros((cutoff + 1, cutoff + 1))
        ladder[n[:-1], n[1:]] = np.sqrt(n[1:])  # annihilation operator
        q_scale = math.sqrt(params.hbar / (2.0 * params.mass * params.omega))
        q_op = q_scale * (ladder + ladder.T)
        q_sq = q_op @ q_op
        weights = np.exp(-beta_step * (n + 0.5))
        weights /= weights.sum()
        mean_q = float(weights @ np.diag(q_op))
        mean_q_sq = float(weights @ np.diag(q_sq))
        # (q1 - q2)^2 = q1^2 + q2^2 - 2 q1 q2 across the product state
        estimate = 0.5 * params.mass * params.lambda0**2 * (
            2.0 * mean_q_sq - 2.0 * mean_q * mean_q
        )
        if previous is not None and abs(estimate - previous) <= rel_tol * max(1.0, abs(estimate)):
            return estimate
        previous = estimate
        cutoff *= 2
        if cutoff > 2**14:
            raise ConsistencyError("Fock cutoff failed to converge")


def quantum_free_energy_change(params: QuenchParams) -> float:
    """Free-energy change -(1/beta) ln[Z_Q(lambda0)/Z_Q(0)], reducing to
    (1/beta) ln[sinh(beta hbar w2 / 2) / sinh(beta hbar omega / 2)]."""
    w1, w2 = normal_mode_frequencies(params.omega, params.lambda0)
    half = params.beta * params.hbar / 2.0
    if params.lambda0 == 0.0:
        return 0.0
    return (
        _log_sinh(half * w1) + _log_sinh(half * w2) - 2.0 * _log_sinh(half * params.omega)
    ) / params.beta


def quantum_irr_work(params: QuenchParams) -> float:
    """Irreversible quantum work, mean work minus the free-energy
    change. Non-negative; zero for a vanishing quench amplitude."""
    return quantum_avg_work(params) - quantum_free_energy_change(params)


def excess_dissipated_work(params: QuenchParams) -> float:
    """Excess quantum dissipated work: quantum minus classical
    irreversible work for the same quench.

    Evaluated both as that difference and through the single-line
    closed form

        (hbar lam0^2 / (2 w)) (coth(b hbar w / 2) - 2 / (b hbar w))
        + (1/b) ln[csch(b hbar w1 / 2) csch(b hbar w2 / 2) / csch^2(b hbar w / 2)]
        + (1/(2 b)) ln[1 + 2 lam0^2 / w^2];

    the two routes must agree to 1e-12. Non-negative, vanishing in the
    high-temperature limit.
    """
    difference = quantum_irr_work(params) - classical_irr_work(params)
    beta, hbar, omega, lam0 = params.beta, params.hbar, params.omega, params.lambda0
    w1, w2 = normal_mode_frequencies(omega, lam0)
    half = beta * hbar / 2.0
    kinetic = (
        hbar * lam0**2 / (2.0 * omega)
        * (1.0 / math.tanh(half * omega) - 2.0 / (beta * hbar * omega))
    )
    if lam0 == 0.0:
        spectral = 0.0
    else:
        spectral = (
            2.0 * _log_sinh(half * omega) - _log_sinh(half * w1) - _log_sinh(half * w2)
        ) / beta
    entropic = math.log1p(2.0 * lam0**2 / omega**2) / (2.0 * beta)
    closed = kinetic + spectral + entropic
    if abs(closed - difference) > IDENTITY_TOL:
        raise ConsistencyError(
            f"excess-work routes disagree: {closed!r} vs {difference!r}"
        )
    return difference


# -- correlations and the temperature sweep ------------------------------

def quench_discord(params: QuenchParams, t: float = 1.0) -> float:
    """Gaussian discord of the post-quench state.

    Both modes start in the thermal state at (beta, omega), evolve under
    the coupled Hamiltonian at amplitude lambda0 for time ``t``, and the
    discord of the resulting two-mode Gaussian state is returned.
    """
    one_mode = thermal_covariance(params.beta, params.omega, params.hbar)
    initial = direct_sum(one_mode, one_mode)
    ham = quench_hamiltonian_matrix(params.omega, params.lambda0, params.mass, params.hbar)
    final = symplectic_evolution(initial, ham, t, params.hbar)
    return gaussian_discord(final, measured_mode=1)


def report_at(params: QuenchParams, evolution_time: float = 1.0) -> QuenchReport:
    """Evaluate every report field at the parameters' temperature."""
    w_c = classical_avg_work(params)
    df_c = classical_free_energy_change(params)
    w_q = quantum_avg_work(params)
    df_q = quantum_free_energy_change(params)
    w_c_irr = w_c - df_c
    w_q_irr = w_q - df_q
    return QuenchReport(
        temperature=params.temperature,
        w_c_avg=w_c,
        df_c=df_c,
        w_c_irr=w_c_irr,
        w_q_avg=w_q,
        df_q=df_q,
        w_q_irr=w_q_irr,
        omega_excess=excess_dissipated_work(params),
        gaussian_discord=quench_discord(params, evolution_time),
    )


def sweep_temperature(
    params: QuenchParams,
    t_min: float,
    t_max: float,
    points: int,
    evolution_time: float = 1.0,
):
    """Reports on a uniform temperature grid from t_min to t_max.

    Each grid point is an independent, deterministic evaluation, so
    refining the grid leaves values at shared temperatures unchanged.
    """
    if not 0.0 < t_min < t_max:
        raise ValidationError(f"need 0 < t_min < t_max; got {t_min!r}, {t_max!r}")
    if points < 2:
        raise ValidationError(f"need at least 2 grid points; got {points!r}")
    temperatures = np.linspace(t_min, t_max, points)
    return [report_at(params.at_temperature(float(t)), evolution_time) for t in temperatures]


CSV_FIELDS = (
    "temperature",
    "w_c_avg",
    "df_c",
    "w_c_irr",
    "w_q_avg",
    "df_q",
    "w_q_irr",
    "omega_excess",
    "gaussian_discord",
)


def reports_to_csv(reports) -> str:
    """CSV rendering of a report list: header row plus one line per
    temperature, every number printed with 17 significant digits."""
    lines = [",".join(CSV_FIELDS)]
    for report in reports:
        lines.append(",".join(f"{getattr(report, field):.17g}" for field in CSV_FIELDS))
    return "\n".join(lines) + "\n"
