"""Classical information measures on small discrete distributions.

Walks through entropy, joint and conditional entropy, and the three
equivalent routes to the mutual information, then shows that local
post-processing can only destroy correlations.
"""

import numpy as np

from qcorr import (
    Distribution,
    JointDistribution,
    conditional_entropy,
    joint_entropy,
    mutual_information,
    mutual_information_as_divergence,
    relative_entropy,
    shannon_entropy,
)

print("=" * 64)
print("Entropy of simple distributions (nats)")
print("=" * 64)
for probs in ([0.5, 0.5], [1.0, 0.0], [0.25, 0.75], [0.1, 0.2, 0.3, 0.4]):
    print(f"  S({probs}) = {shannon_entropy(Distribution(probs)):.6f}")

print()
print("A correlated joint table for two binary variables:")
table = JointDistribution([[0.4, 0.1], [0.2, 0.3]])
print(np.array(table.table))
print(f"  joint entropy        S(X,Y)  = {joint_entropy(table):.6f}")
print(f"  conditional entropy  S_X(Y)  = {conditional_entropy(table):.6f}")

print()
print("The mutual information by three routes (they agree to ~1e-15):")
entropic = mutual_information(table)
conditional = shannon_entropy(table.marginal_y()) - conditional_entropy(table)
divergence = mutual_information_as_divergence(table)
print(f"  S(X) + S(Y) - S(X,Y)      = {entropic:.15f}")
print(f"  S(Y) - S_X(Y)             = {conditional:.15f}")
print(f"  divergence to marginals   = {divergence:.15f}")

print()
print("Relative entropy is asymmetric and penalizes missing support:")
p, q = Distribution([1.0, 0.0]), Distribution([0.5, 0.5])
print(f"  D([1,0] || [1/2,1/2]) = {relative_entropy(p, q):.6f}  (= ln 2)")
print(f"  D([1/2,1/2] || [1,0]) = {relative_entropy(q, p)}")

print()
print("Post-processing Y with a random stochastic matrix never raises I:")
rng = np.random.default_rng(7)
for trial in range(5):
    stochastic = rng.random((2, 2)) + 0.1
    stochastic /= stochastic.sum(axis=0, keepdims=True)
    degraded = JointDistribution(table.table @ stochastic.T)
    print(
        f"  trial {trial}: I = {mutual_information(table):.6f} -> "
        f"{mutual_information(degraded):.6f}"
    )
