"""
A two-level decomposition of a random degree-13 semigroup
==========================================================

Two random transformations, a congruence generated by two seed pairs, and
the lifted cascade generators printed in the usual listing format.
"""

from coverlemma import Transformation, closure, congruence_closure, emulate, format_cascade, theta_phi_congruence
from coverlemma import cascade_product, verify_all

g1 = Transformation([1, 6, 11, 12, 11, 10, 7, 13, 7, 1, 2, 1, 1])
g2 = Transformation([2, 10, 3, 3, 8, 7, 2, 4, 5, 6, 5, 3, 4])
S = closure([g1, g2])
print("The semigroup has", len(S), "elements")

# glue 1 with 2 and 3 with 4, then close under the action
partition = congruence_closure([g1, g2], [[1, 2], [3, 4]])
print(partition)

theta, phi = theta_phi_congruence(partition, [g1, g2])
T = closure(phi.image())
print(phi.image(), len(T), "elements, aperiodic:", T.is_aperiodic())

em = emulate(theta, phi, [g1, g2])
for a in (g2, g1):
    (c,) = em.mu(a)
    print(c)
    print("\n".join(format_cascade(c)))

product = cascade_product(em, 100_000)
print("cascade product:", len(product), "elements")
print(verify_all(em, [g1, g2]).render())
