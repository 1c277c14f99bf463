"""A measurement as the build-up of system-pointer correlations.

A qubit interacts with a two-state measuring device whose pointer
states overlap by eps. At eps = 0 the pointers are perfectly
distinguishable and the device has learned one full bit; at eps = 1 the
pointers coincide and nothing was measured. The observable-level
(Shannon) correlations are capped at ln 2 while the state itself holds
up to 2 ln 2 of quantum mutual information.
"""

import math

import numpy as np

from qcorr import (
    computational_basis_observable,
    density_from_pure,
    everett_state,
    measurement_mutual_information,
    quantum_mutual_information,
)

alpha = beta = 1.0 / math.sqrt(2.0)
obs = computational_basis_observable(2)

print(f"{'eps':>5}  {'I(X:Y) observables':>20}  {'I_N state':>12}")
for eps in np.linspace(0.0, 1.0, 11):
    psi = everett_state(alpha, beta, float(eps))
    rho = density_from_pure(psi)
    shannon_info = measurement_mutual_information(rho, obs, obs)
    quantum_info = quantum_mutual_information(rho)
    bar = "#" * int(round(40 * shannon_info / math.log(2)))
    print(f"{eps:5.2f}  {shannon_info:20.6f}  {quantum_info:12.6f}  {bar}")

print()
print("ln 2  =", math.log(2))
print("2 ln2 =", 2 * math.log(2))
print()
print("Both columns decrease monotonically as the pointers blur together;")
print("the state-level correlations are exactly twice the entanglement")
print("entropy here, and exceed anything two classical bits could share.")
