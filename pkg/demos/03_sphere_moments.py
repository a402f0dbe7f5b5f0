"""Moments of Hermitian forms on spheres and the su(n+1) invariants they produce."""

from fractions import Fraction

from symplectica.exact_arith import GaussianRational
from symplectica.moments import (
    HermitianMatrix,
    cartan_form,
    generating_series,
    killing_proportionality,
    monte_carlo_moment,
    recover_elementary,
    sphere_moment,
)

spacer = "_" * 60

eigs = [1, -1]
print("E[(Bv, v)^k] on S^3 for B = diag(1, -1):")
for k in range(5):
    print(f"  k={k}: {sphere_moment(eigs, 1, k)}")
est = monte_carlo_moment([HermitianMatrix.diagonal(eigs)] * 2, 1, samples=100_000, seed=0)
print(f"  Monte Carlo for k=2: {est.mean:.4f} +/- {est.stderr:.4f}")

print(spacer)
print("Quadratic moments are a multiple of the Killing form:")
for n in (1, 2, 3):
    print(f"  SU({n + 1}): c = {killing_proportionality(n)}")

half = Fraction(1, 2)
pauli = (
    HermitianMatrix(((0, half), (half, 0))),
    HermitianMatrix(((0, GaussianRational(0, -half)), (GaussianRational(0, half), 0))),
    HermitianMatrix(((half, 0), (0, -half))),
)
print("Cartan 3-form on the Pauli triple / 2:", cartan_form(*pauli, 1))

print(spacer)
g = generating_series([1, 2], 5)
print("Complete symmetric functions of (1, 2):", [int(h) for h in g.complete])
print("Same from 1/det(1 - xB):              ", [int(h) for h in g.det_inverse])
print("Elementary ones recovered from h1, h2:", [str(e) for e in recover_elementary(g.complete[1:3])])
