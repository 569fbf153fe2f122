"""
The n(n-1) covering pushes groups down
======================================

theta(x) = X - {x} lifts a permutation to itself on top, but every cycle of
it shows up again among the bottom dependencies.
"""

from coverlemma import Transformation, closure, emulate, flat_oracle, theta_phi_nn1

g = Transformation([2, 3, 1, 5, 4])
theta, phi = theta_phi_nn1([g])
em = emulate(theta, phi, [g])
(c,) = em.mu(g)
print(c)
for y, u in c.dep.items():
    print(y, u)

# full T3 as a sanity check: the oracle walks all 27 elements
t3 = [Transformation([2, 3, 1]), Transformation([2, 1, 3]), Transformation([1, 1, 2])]
print(len(closure(t3)))
theta, phi = theta_phi_nn1(t3)
print(flat_oracle(emulate(theta, phi, t3), t3).render())
