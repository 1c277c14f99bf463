"""Two-mode Gaussian states: covariances, symplectic invariants, discord.

Starts from two uncoupled thermal oscillators, switches on a coupling,
evolves the covariance matrix symplectically, and tracks what the
evolution preserves (symplectic spectrum, entropy) and what it creates
(cross-mode correlations, Gaussian discord). The closed-form discord is
checked live against a direct minimization over Gaussian measurements.
"""

import numpy as np

from qcorr import (
    direct_sum,
    gaussian_discord,
    gaussian_entropy,
    minimize_gaussian_measurement,
    quench_hamiltonian_matrix,
    symplectic_eigenvalues,
    symplectic_evolution,
    thermal_covariance,
    thermal_variance,
)

np.set_printoptions(precision=4, suppress=True)

beta = omega = lam = 1.0
nu = thermal_variance(beta, omega)
print(f"Thermal quadrature variance at beta = omega = 1:  nu = {nu:.6f}")
one = thermal_covariance(beta, omega)
initial = direct_sum(one, one)
print("Initial two-mode covariance (x1, p1, x2, p2 ordering):")
print(initial.sigma)

ham = quench_hamiltonian_matrix(omega, lam)
print("\nCoupling matrix of the quenched Hamiltonian:")
print(ham.matrix)

print("\nEvolution under the coupled Hamiltonian:")
print(f"{'t':>4}  {'nu_minus':>9}  {'nu_plus':>9}  {'entropy':>9}  {'discord':>9}")
for t in (0.0, 0.5, 1.0, 2.0, 4.0):
    evolved = symplectic_evolution(initial, ham, t)
    nu_minus, nu_plus = symplectic_eigenvalues(evolved)
    print(
        f"{t:4.1f}  {nu_minus:9.6f}  {nu_plus:9.6f}  "
        f"{gaussian_entropy(evolved):9.6f}  {gaussian_discord(evolved):9.6f}"
    )

print("\nThe symplectic spectrum and total entropy are invariants of the")
print("evolution; the discord oscillates as correlations slosh between")
print("the modes.")

evolved = symplectic_evolution(initial, ham, 1.0)
closed = gaussian_discord(evolved)
searched = minimize_gaussian_measurement(evolved)
print(f"\nDiscord at t = 1, closed form:          {closed:.12f}")
print(f"Discord at t = 1, measurement search:   {searched:.12f}")
print(f"Agreement: {abs(closed - searched):.2e}")
