import itertools
import random

import pytest
from hypothesis import given, strategies as st

from coverlemma import (
    CascadeProduct,
    CascadeTransformation,
    DependencyFunction,
    Transformation,
    cascade_act,
    cascade_compose,
    closure,
    flatten,
    format_cascade,
)
from coverlemma.cascade import compact_format, gap_format


def T(*images):
    return Transformation(images)


@st.composite
def cascades(draw, ny=4, nz=5):
    top = Transformation(draw(st.lists(st.integers(1, ny), min_size=ny, max_size=ny)))
    dep = {}
    for y in range(1, ny + 1):
        if draw(st.booleans()):
            dep[y] = Transformation(draw(st.lists(st.integers(1, nz), min_size=nz, max_size=nz)))
    return CascadeTransformation(top, dep, nz)


def test_act_examples():
    c = CascadeTransformation(T(1, 2, 2, 2), {1: T(2, 5, 4, 2, 3)}, 5)
    assert cascade_act((1, 2), c) == (1, 5)
    d = CascadeTransformation(T(1, 4, 1, 1), {3: T(4, 2, 3, 4, 5)}, 5)
    assert cascade_act((3, 1), d) == (1, 4)
    e = CascadeTransformation(T(2, 1, 1), {}, 3)
    assert cascade_act((1, 3), e) == (2, 3)
    with pytest.raises(ValueError):
        cascade_act((5, 1), c)
    with pytest.raises(ValueError):
        cascade_act((1, 6), c)


def test_identity_entries_are_dropped():
    d = DependencyFunction({1: T(1, 2, 3), 2: T(2, 1, 3)}, 3)
    assert len(d) == 1
    assert d(1) == T(1, 2, 3)
    assert d == DependencyFunction({2: T(2, 1, 3)}, 3)
    assert DependencyFunction(dict(d.items()), 3) == d


def test_flatten_examples():
    assert flatten(CascadeTransformation.identity(3, 4)) == Transformation.identity(12)
    assert flatten(CascadeTransformation(T(2, 1), {}, 2)) == T(3, 4, 1, 2)
    assert flatten(CascadeTransformation(T(1, 2), {2: T(2, 1)}, 2)) == T(1, 2, 4, 3)


@given(cascades(), cascades())
def test_compose_agrees_with_acting_twice(c1, c2):
    c = cascade_compose(c1, c2)
    for state in itertools.product(range(1, 5), range(1, 6)):
        assert cascade_act(state, c) == cascade_act(cascade_act(state, c1), c2)
    assert all(not u.is_identity() for _, u in c.dep.items())


@given(cascades(), cascades())
def test_flatten_is_a_homomorphism(c1, c2):
    assert flatten(c1 * c2) == flatten(c1) * flatten(c2)


@given(cascades())
def test_identity_cascade_is_neutral(c):
    e = CascadeTransformation.identity(4, 5)
    assert c * e == c == e * c


@given(cascades())
def test_flatten_agrees_with_action(c):
    f = flatten(c)
    for y, z in itertools.product(range(1, 5), range(1, 6)):
        y2, z2 = c((y, z))
        assert f((y - 1) * 5 + z) == (y2 - 1) * 5 + z2


def test_degree13_generators_compose():
    a = CascadeTransformation(T(1, 2, 2, 2), {1: T(2, 5, 4, 2, 3), 2: T(1, 1, 4, 2, 5), 3: T(3, 2, 3, 4, 5), 4: T(3, 1, 2, 4, 5)}, 5)
    b = CascadeTransformation(T(1, 4, 1, 1), {1: T(1, 3, 5, 4, 1), 2: T(1, 2, 1, 3, 5), 3: T(4, 2, 3, 4, 5), 4: T(2, 1, 1, 4, 5)}, 5)
    assert (a * b)((1, 1)) == b(a((1, 1)))
    assert (b * a)((1, 1)) == a(b((1, 1)))


def test_size_mismatch():
    with pytest.raises(ValueError):
        CascadeTransformation.identity(2, 2) * CascadeTransformation.identity(2, 3)
    with pytest.raises(ValueError):
        CascadeTransformation(T(1, 2), {3: T(2, 1)}, 2)


def test_gap_format_trims_fixed_points():
    assert gap_format(T(2, 5, 4, 2, 3)) == "Transformation( [ 2, 5, 4, 2, 3 ] )"
    assert gap_format(T(3, 2, 3, 4, 5)) == "Transformation( [ 3, 2, 3 ] )"
    assert gap_format(T(4, 2, 3, 4, 5)) == "Transformation( [ 4, 2, 3, 4 ] )"
    assert gap_format(T(2, 1, 1, 4, 5)) == "Transformation( [ 2, 1, 1 ] )"
    assert gap_format(T(1, 2, 3)) == "IdentityTransformation"
    assert compact_format(T(1, 1, 4, 2, 5)) == "Transformation([1,1,4,2])"


def test_listing():
    c = CascadeTransformation(T(1, 2, 2, 2), {1: T(2, 5, 4, 2, 3), 3: T(3, 2, 3, 4, 5)}, 5)
    assert format_cascade(c) == [
        "Dependency function of depth 1 with 1 dependencies.",
        "[  ] -> Transformation( [ 1, 2, 2, 2 ] )",
        "Dependency function of depth 2 with 2 dependencies.",
        "[ 1 ] -> Transformation( [ 2, 5, 4, 2, 3 ] )",
        "[ 3 ] -> Transformation( [ 3, 2, 3 ] )",
    ]
    assert format_cascade(c, "compact")[3] == "[1] -> Transformation([2,5,4,2,3])"
    assert repr(c) == "<trans cascade with 2 levels with (4, 5) pts, 3 dependencies>"
    assert format_cascade(CascadeTransformation.identity(2, 2)) == [
        "Dependency function of depth 1 with 0 dependencies.",
        "Dependency function of depth 2 with 0 dependencies.",
    ]


def test_product_closure_matches_flattened_closure():
    rng = random.Random(7)
    for _ in range(10):
        gens = []
        for _ in range(2):
            top = Transformation([rng.randint(1, 3) for _ in range(3)])
            dep = {y: Transformation([rng.randint(1, 3) for _ in range(3)]) for y in range(1, 4) if rng.random() < 0.6}
            gens.append(CascadeTransformation(top, dep, 3))
        native = CascadeProduct(gens)
        flat = closure([flatten(c) for c in gens])
        assert len(native) == len(flat)
        assert {flatten(c) for c in native} == set(flat)
