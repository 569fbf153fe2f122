import itertools
import random

import pytest

from coverlemma import (
    MorphismError,
    Partition,
    Transformation,
    check_morphism,
    closure,
    congruence_closure,
    theta_phi_congruence,
    theta_phi_constant,
    theta_phi_local_monoid,
    theta_phi_nn1,
)

from conftest import C1, C2, C3, G1, G2, P, T3_GENS


def T(*images):
    return Transformation(images)


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def brute_force_closure(gens, seed, n):
    """Finest right congruence containing the seed, by listing every partition."""
    candidates = []
    for part in set_partitions(list(range(1, n + 1))):
        p = Partition(part, n)
        if all(len({p.class_of(x) for x in c}) == 1 for c in seed) and p.is_right_congruence(gens):
            candidates.append(p)

    def refines(a, b):
        return all(len({b.class_of(x) for x in c}) == 1 for c in a.classes)

    finest = [p for p in candidates if all(refines(p, q) for q in candidates)]
    assert len(finest) == 1
    return finest[0]


def test_degree13_congruence():
    p = congruence_closure([G1, G2], [[1, 2], [3, 4]])
    assert p.as_lists() == [[1, 2, 6, 7, 10], [3, 4, 5, 8], [9], [11, 12, 13]]
    assert p == [[1, 2, 6, 7, 10], [3, 4, 5, 8], [9], [11, 12, 13]]


def test_empty_seed_gives_singletons():
    p = congruence_closure([G1, G2], [])
    assert p.as_lists() == [[x] for x in range(1, 14)]


def test_full_t3_has_only_trivial_congruence():
    assert congruence_closure(T3_GENS, [[1, 2]]).as_lists() == [[1, 2, 3]]
    assert brute_force_closure(T3_GENS, [[1, 2]], 3).as_lists() == [[1, 2, 3]]


def test_closure_matches_brute_force():
    rng = random.Random(17)
    for _ in range(150):
        n = rng.randint(1, 5)
        gens = [Transformation([rng.randint(1, n) for _ in range(n)]) for _ in range(rng.randint(1, 3))]
        pts = rng.sample(range(1, n + 1), rng.randint(0, n))
        seed = [pts[i::2] for i in range(2)]
        seed = [c for c in seed if c]
        got = congruence_closure(gens, seed, n)
        assert got == brute_force_closure(gens, seed, n)
        assert got.is_right_congruence(gens)
        # re-closing is a fixed point
        assert congruence_closure(gens, got.classes, n) == got


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition([[1, 2], [2, 3]], 3)
    with pytest.raises(ValueError):
        Partition([[1, 2]], 3)
    with pytest.raises(ValueError):
        Partition.from_seed([[1, 2], [2]], 3)
    with pytest.raises(ValueError):
        Partition.from_seed([[1, 4]], 3)
    assert Partition.from_seed([[3, 1]], 3).as_lists() == [[1, 3], [2]]


def test_congruence_quotient_degree13():
    p = congruence_closure([G1, G2], [[1, 2], [3, 4]])
    theta, phi = theta_phi_congruence(p, [G1, G2])
    assert phi[G1] == (T(1, 4, 1, 1),)
    assert phi[G2] == (T(1, 2, 2, 2),)
    assert phi.image() == (T(1, 2, 2, 2), T(1, 4, 1, 1))
    assert theta.is_function()
    image = closure(phi.image())
    assert len(image) == 5 and image.is_aperiodic()


def test_congruence_quotient_singletons():
    gens = [T(2, 3, 1, 1), T(1, 1, 2, 4)]
    theta, phi = theta_phi_congruence(congruence_closure(gens, []), gens)
    assert theta.is_bijective()
    assert all(phi[a] == (a,) for a in gens)


def test_congruence_quotient_cycle():
    gens = [P, C1, C2, C3]
    theta, phi = theta_phi_congruence(congruence_closure(gens, [[2, 3]]), gens)
    assert phi[P] == (T(1, 2),)
    assert phi[C1] == (T(1, 1),)
    assert phi[C2] == phi[C3] == (T(2, 2),)
    assert set(closure(phi.image())) == {T(1, 2), T(1, 1), T(2, 2)}


def test_congruence_quotient_rejects_non_congruence():
    with pytest.raises(ValueError):
        theta_phi_congruence(Partition([[1, 2], [3]], 3), [T(1, 3, 3)])


def test_nn1_lifts():
    g = T(2, 3, 1, 5, 4)
    _, phi = theta_phi_nn1([g])
    assert phi[g] == (g,)
    _, phi = theta_phi_nn1([T(1, 1, 2), T(1, 1, 1)])
    assert phi[T(1, 1, 2)] == (T(3, 3, 3),)
    assert phi[T(1, 1, 1)] == (T(2, 2, 2), T(3, 3, 3))
    with pytest.raises(ValueError):
        theta_phi_nn1([T(1)])


def test_nn1_is_always_a_morphism():
    rng = random.Random(23)
    for _ in range(200):
        n = rng.randint(2, 6)
        gens = [Transformation([rng.randint(1, n) for _ in range(n)]) for _ in range(rng.randint(1, 3))]
        theta, phi = theta_phi_nn1(gens)
        assert check_morphism(theta, phi, gens) is None


def test_congruence_images_are_singletons():
    rng = random.Random(29)
    for _ in range(100):
        n = rng.randint(1, 6)
        gens = [Transformation([rng.randint(1, n) for _ in range(n)]) for _ in range(rng.randint(1, 3))]
        seed = [rng.sample(range(1, n + 1), min(n, 2))]
        theta, phi = theta_phi_congruence(congruence_closure(gens, seed), gens)
        assert theta.is_function()
        assert all(len(phi[a]) == 1 for a in gens)
        assert check_morphism(theta, phi, gens) is None


def test_local_monoid_identity():
    gens = [T(2, 3, 1), T(1, 1, 2)]
    theta, phi = theta_phi_local_monoid(gens, Transformation.identity(3))
    assert theta.as_lists() == [[1], [2], [3]]
    assert all(phi[a] == (a,) for a in gens)


def test_local_monoid_commutative():
    a = T(1, 1, 2)
    e = a * a
    assert e == T(1, 1, 1)
    theta, phi = theta_phi_local_monoid([a], e)
    assert theta.as_lists() == [[1], [1], [1]]
    assert phi[a] == (T(1),)


def test_local_monoid_rejects_non_morphism():
    gens = [T(1, 1, 2), T(1, 2, 1)]
    e = T(1, 2, 1)
    assert e in closure(gens)
    with pytest.raises(MorphismError) as info:
        theta_phi_local_monoid(gens, e)
    bad = info.value.counterexample
    assert (bad.x, bad.a, bad.y) == (3, T(1, 1, 2), 1)
    with pytest.raises(ValueError):
        theta_phi_local_monoid(gens, T(2, 3, 1))


def test_local_monoid_rejections_exist_among_small_semigroups():
    # search all pairs on 3 points for an idempotent whose localization fails
    maps = [Transformation(p) for p in itertools.product(range(1, 4), repeat=3)]
    rejected = 0
    for a, b in itertools.combinations(maps, 2):
        if a * b == b * a:
            continue
        for e in closure([a, b]):
            if e * e == e:
                try:
                    theta_phi_local_monoid([a, b], e)
                except MorphismError:
                    rejected += 1
        if rejected:
            break
    assert rejected


def test_constant():
    gens = [T(2, 3, 1), T(1, 1, 2)]
    theta, phi = theta_phi_constant(gens)
    assert theta.as_lists() == [[1], [1], [1]]
    assert theta.inverse()(1) == (1, 2, 3)
    assert all(phi[a] == (T(1),) for a in gens)
    assert check_morphism(theta, phi, gens) is None
