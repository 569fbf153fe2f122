"""
Reading a cascade back
======================

psi and mu encode states and generators, psi^-1 and mu^-1 decode them.
"""

from coverlemma import Transformation, emulate, theta_phi_nn1

gens = [Transformation([2, 1, 3, 3]), Transformation([1, 1, 4, 2])]
theta, phi = theta_phi_nn1(gens)
em = emulate(theta, phi, gens)

for x in range(1, 5):
    pairs = em.psi(x)
    print(x, pairs, {em.psi_inverse(q) for q in pairs})

for a in gens:
    lifts = em.mu(a)
    print(a, len(lifts), "lifts", {str(em.mu_inverse(c)) for c in lifts})
