"""Quantum discord: correlations beyond what any measurement extracts.

Splits the mutual information of two-qubit states into the classical
part (best projective measurement on A) and the discord. Product
states carry nothing, classical mixtures carry only classical
correlations, a Bell pair splits ln 2 / ln 2, and a Werner state keeps
discord even where it is separable. Discord is also direction
dependent: a state can be classical from one side only.
"""

import numpy as np

from qcorr import DensityMatrix, density_from_pure, discord, discord_swapped, PureState

np.set_printoptions(precision=4, suppress=True)


def show(name, rho):
    result = discord(rho)
    print(
        f"{name:<28} I = {result.mutual_info:8.6f}  C = {result.classical_corr:8.6f}  "
        f"D = {result.discord:8.6f}  basis (theta, phi) = "
        f"({result.optimal_basis.theta:.3f}, {result.optimal_basis.phi:.3f})"
    )
    return result


bell = density_from_pure(PureState(np.array([1.0, 0, 0, 1.0]) / np.sqrt(2), (2, 2)))
product = DensityMatrix(np.diag([0.36, 0.24, 0.24, 0.16]), (2, 2))
classical = DensityMatrix(np.diag([0.5, 0.0, 0.0, 0.5]), (2, 2))

show("product state", product)
show("classical diagonal mixture", classical)
show("Bell pair", bell)

print()
print("Werner family w |Bell><Bell| + (1 - w) I/4:")
for w in (0.2, 0.5, 0.8):
    rho = DensityMatrix(w * bell.elements + (1 - w) * np.eye(4) / 4.0, (2, 2))
    show(f"  Werner w = {w}", rho)

print()
print("One-way classical state: measuring A reveals everything, but the")
print("conditional states of B do not commute, so the swapped discord is")
print("strictly positive:")
plus = np.full((2, 2), 0.5)
one_way = DensityMatrix(
    0.5 * np.kron(np.diag([1.0, 0.0]), np.diag([1.0, 0.0]))
    + 0.5 * np.kron(np.diag([0.0, 1.0]), plus),
    (2, 2),
)
forward = show("one-way classical, D(B|A)", one_way)
backward = discord_swapped(one_way)
print(f"{'swapped direction, D(A|B)':<28} I = {backward.mutual_info:8.6f}  "
      f"C = {backward.classical_corr:8.6f}  D = {backward.discord:8.6f}")
