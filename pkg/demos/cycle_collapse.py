"""
Where a collapsed cycle goes
============================

S = {123, 132, 111, 222, 333} on three states.  Merging states 2 and 3 on
top kills the transposition there, and it reappears in the bottom
component over the merged state.
"""

from coverlemma import GenRelation, StateRelation, Transformation, cascade_product, emulate, local_component

p = Transformation([1, 3, 2])
gens = [p, Transformation([1, 1, 1]), Transformation([2, 2, 2]), Transformation([3, 3, 3])]

theta = StateRelation.from_lists([[1], [2], [2]], 2)
phi = GenRelation({
    gens[0]: [Transformation([1, 2])],
    gens[1]: [Transformation([1, 1])],
    gens[2]: [Transformation([2, 2])],
    gens[3]: [Transformation([2, 2])],
}, 2)

em = emulate(theta, phi, gens)
(lift,) = em.mu(p)
print("lift of p:", lift.top, dict(lift.dep.items()))

product = cascade_product(em, 10_000)
for y in (1, 2):
    U = local_component(y, em, product)
    print(f"U_{y}:", [str(u) for u in U.elements], "trivial" if U.is_trivial else "")
