"""Entropy of quantum states: marginals can be noisier than the whole.

Demonstrates the entropy bounds peculiar to quantum states: a pure
entangled pair has zero global entropy but maximally mixed marginals,
measured observables carry at least the state's entropy, and the
subsystem entropies obey the two-sided triangle (Araki-Lieb) bounds.
"""

import math

import numpy as np

from qcorr import (
    Observable,
    araki_lieb_check,
    born_distribution,
    density_from_pure,
    entanglement_entropy,
    quantum_mutual_information,
    random_density_matrix,
    shannon_entropy,
    von_neumann_entropy,
    PureState,
)

print("A one-parameter family of two-qubit pure states:")
print("  |psi(theta)> = cos(theta/2)|00> + sin(theta/2)|11>")
print()
print(f"{'theta/pi':>9}  {'S(global)':>10}  {'S(marginal)':>12}  {'I_N':>9}")
for frac in (0.0, 0.25, 1.0 / 3.0, 0.5):
    theta = frac * math.pi
    amp = np.array([math.cos(theta / 2), 0.0, 0.0, math.sin(theta / 2)])
    psi = PureState(amp, (2, 2))
    rho = density_from_pure(psi)
    print(
        f"{frac:9.3f}  {von_neumann_entropy(rho):10.6f}  "
        f"{entanglement_entropy(psi):12.6f}  {quantum_mutual_information(rho):9.6f}"
    )

print()
print("Araki-Lieb sandwich |S_A - S_B| <= S_AB <= S_A + S_B on random states:")
for seed in range(5):
    rho = random_density_matrix((2, 3), rank=2 + seed, seed=seed)
    lower, middle, upper = araki_lieb_check(rho)
    print(f"  seed {seed}: {lower:.6f} <= {middle:.6f} <= {upper:.6f}")

print()
print("Measuring a non-commuting observable adds uncertainty on top of")
print("the state's own mixedness (equality only for commuting ones):")
rng = np.random.default_rng(3)
rho = random_density_matrix((3, 1), rank=3, seed=14)
state_entropy = von_neumann_entropy(rho)
raw = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
generic = Observable(raw + raw.conj().T)
aligned = Observable(rho.eigenbasis() @ np.diag([0.0, 1.0, 2.0]) @ rho.eigenbasis().conj().T)
print(f"  S_N(rho)                    = {state_entropy:.6f}")
print(f"  S(generic observable)       = {shannon_entropy(born_distribution(rho, generic)):.6f}")
print(f"  S(commuting observable)     = {shannon_entropy(born_distribution(rho, aligned)):.6f}")
